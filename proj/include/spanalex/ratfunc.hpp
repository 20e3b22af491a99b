#pragma once

#include <string>

#include "spanalex/laurent.hpp"

namespace spanalex {

/// Element of Q(t) as a reduced fraction num/den.
///
/// The denominator is monic, has min degree 0 and a nonzero constant term,
/// so any power of t lives in the numerator and equality is representation
/// equality.
class RatFunc {
 public:
  RatFunc() = default;
  RatFunc(long c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  RatFunc(const BigRat& c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  RatFunc(LaurentPoly p) : num_(std::move(p)), den_(1) {}  // NOLINT(google-explicit-constructor)
  RatFunc(const LaurentPoly& num, const LaurentPoly& den);

  static RatFunc t() { return RatFunc(LaurentPoly::t_power(1)); }
  static RatFunc t_inv() { return RatFunc(LaurentPoly::t_power(-1)); }

  const LaurentPoly& numerator() const { return num_; }
  const LaurentPoly& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_laurent() const { return den_.is_one(); }
  /// Total width of numerator and denominator; pivot-selection heuristic.
  int complexity() const { return num_.width() + den_.width(); }

  RatFunc operator-() const;
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }
  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  RatFunc subst_t_inverse() const;
  /// Value at t = x; PoleAtSpecialization if the denominator vanishes.
  BigRat evaluate(const BigRat& x) const;
  /// Numerator as a Laurent polynomial; InternalInconsistency if den != 1.
  const LaurentPoly& as_laurent() const;

  std::string to_string() const;

 private:
  struct Raw {};
  RatFunc(Raw, LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {}

  LaurentPoly num_;
  LaurentPoly den_ = LaurentPoly(1);
};

}  // namespace spanalex
