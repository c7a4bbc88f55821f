#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace sgb {

/// A count that is either a natural number or the countable infinity ω.
/// All infinite cardinals collapse to ω; arithmetic saturates there.
class Cardinal {
public:
  constexpr Cardinal() = default;
  constexpr Cardinal(std::uint64_t n) : value_(n) {}

  static constexpr Cardinal omega() {
    Cardinal c;
    c.infinite_ = true;
    return c;
  }

  constexpr bool is_infinite() const { return infinite_; }
  constexpr bool is_finite() const { return !infinite_; }
  constexpr bool is_zero() const { return !infinite_ && value_ == 0; }
  /// Only meaningful when finite.
  constexpr std::uint64_t value() const { return value_; }

  friend Cardinal operator+(Cardinal a, Cardinal b) {
    if (a.infinite_ || b.infinite_)
      return omega();
    return Cardinal(a.value_ + b.value_);
  }
  friend Cardinal operator*(Cardinal a, Cardinal b) {
    if (a.is_zero() || b.is_zero())
      return Cardinal(0);
    if (a.infinite_ || b.infinite_)
      return omega();
    return Cardinal(a.value_ * b.value_);
  }
  Cardinal &operator+=(Cardinal other) { return *this = *this + other; }

  friend constexpr bool operator==(Cardinal a, Cardinal b) {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
  }
  friend constexpr std::strong_ordering operator<=>(Cardinal a, Cardinal b) {
    if (a.infinite_ != b.infinite_)
      return a.infinite_ ? std::strong_ordering::greater
                         : std::strong_ordering::less;
    if (a.infinite_)
      return std::strong_ordering::equal;
    return a.value_ <=> b.value_;
  }

  /// "w" for ω, decimal otherwise.
  std::string to_string() const {
    return infinite_ ? "w" : std::to_string(value_);
  }

private:
  std::uint64_t value_ = 0;
  bool infinite_ = false;
};

} // namespace sgb
