#pragma once

#include <cmath>
#include <compare>
#include <stdexcept>
#include <string>

namespace momtun {

/// Moment value J restricted to half-integers (2J integer).  Stored as 2J so
/// equality and class arithmetic stay exact.
class HalfInt {
 public:
  HalfInt() = default;

  static HalfInt from_twice(int twice) { return HalfInt(twice); }

  /// Accepts values within 1e-9 of an exact half-integer.
  static HalfInt from_double(double v) {
    const double t = 2.0 * v;
    const double r = std::round(t);
    if (std::abs(t - r) > 1e-9 || std::abs(r) > 1e9)
      throw std::domain_error("moment must be a half-integer, got " + std::to_string(v));
    return HalfInt(static_cast<int>(r));
  }

  int twice() const { return twice_; }
  double value() const { return 0.5 * twice_; }
  bool is_integer() const { return twice_ % 2 == 0; }

  HalfInt operator+(HalfInt o) const { return HalfInt(twice_ + o.twice_); }
  friend auto operator<=>(HalfInt, HalfInt) = default;

  /// "4", "9/2", ... exact rendering.
  std::string str() const {
    if (twice_ % 2 == 0) return std::to_string(twice_ / 2);
    return std::to_string(twice_) + "/2";
  }

 private:
  explicit HalfInt(int twice) : twice_(twice) {}
  int twice_ = 0;
};

}  // namespace momtun
