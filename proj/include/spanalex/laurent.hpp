#pragma once

#include <gmpxx.h>

#include <complex>
#include <string>
#include <vector>

#include "spanalex/errors.hpp"

namespace spanalex {

using BigInt = mpz_class;
using BigRat = mpq_class;  // gmp keeps it canonical: gcd 1, positive denominator

std::string to_string(const BigRat& x);

/// Laurent polynomial in t over Q.
///
/// Stored as an exponent offset plus a dense coefficient vector, trimmed so
/// that both ends are nonzero. Zero is the empty vector with offset 0.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(long c);  // NOLINT(google-explicit-constructor)
  LaurentPoly(const BigRat& c);  // NOLINT(google-explicit-constructor)

  static LaurentPoly monomial(const BigRat& c, int exponent);
  static LaurentPoly t_power(int exponent) { return monomial(BigRat(1), exponent); }
  static LaurentPoly from_coefficients(int min_degree, std::vector<BigRat> coeffs);

  bool is_zero() const { return coeffs_.empty(); }
  bool is_monomial() const { return coeffs_.size() == 1; }
  bool is_constant() const { return is_zero() || (coeffs_.size() == 1 && min_deg_ == 0); }
  bool is_one() const;
  bool has_integer_coefficients() const;
  int min_degree() const { return min_deg_; }
  int max_degree() const { return min_deg_ + static_cast<int>(coeffs_.size()) - 1; }
  /// max_degree - min_degree; the Euclidean size used for division.
  int width() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<BigRat>& coefficients() const { return coeffs_; }
  BigRat coefficient(int exponent) const;
  const BigRat& leading_coefficient() const { return coeffs_.back(); }
  const BigRat& trailing_coefficient() const { return coeffs_.front(); }

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.min_deg_ == b.min_deg_ && a.coeffs_ == b.coeffs_;
  }

  /// Multiply by t^k.
  LaurentPoly shifted(int k) const;
  LaurentPoly scaled(const BigRat& c) const;
  /// Divide by a monomial, exact in the Laurent ring.
  LaurentPoly divided_by_monomial(const LaurentPoly& m) const;

  BigRat evaluate(const BigRat& x) const;

  template <class Real>
  std::complex<Real> evaluate(std::complex<Real> z) const;

  /// Canonical text, descending exponents: `t^4 - 3*t^3 + 1/2*t - t^-1`.
  std::string to_string() const;

 private:
  void trim();

  int min_deg_ = 0;
  std::vector<BigRat> coeffs_;
};

LaurentPoly subst_t_inverse(const LaurentPoly& p);

enum class QArg { t, neg_t, t_inv, neg_t_inv };

/// Quantum integer [n] at the requested argument; [0] = 0, [-n]_x = -x^-n [n]_x.
LaurentPoly qint(long n, QArg arg);

/// Representative with min degree 0 and positive leading coefficient.
LaurentPoly normalize_alexander(const LaurentPoly& p);

/// Representative with min degree = -max degree; requires an even width.
LaurentPoly symmetric_alexander(const LaurentPoly& p);

/// Quotient and remainder of the Euclidean division a = q*b + r in the
/// Laurent ring, with width(r) < width(b).
struct LaurentDivMod {
  LaurentPoly quotient;
  LaurentPoly remainder;
};
LaurentDivMod laurent_divmod(const LaurentPoly& a, const LaurentPoly& b);

/// Monic gcd with min degree 0 (units t^k and constants divided out).
LaurentPoly laurent_gcd(const LaurentPoly& a, const LaurentPoly& b);

/// Exact quotient a / b; throws InternalInconsistency if b does not divide a.
LaurentPoly exact_quotient(const LaurentPoly& a, const LaurentPoly& b);

/// Square-free decomposition (Yun) of the polynomial part; factor i of the
/// result has multiplicity i + 1. Factors are monic with min degree 0.
std::vector<LaurentPoly> squarefree_decomposition(const LaurentPoly& p);

LaurentPoly derivative(const LaurentPoly& p);

template <class Real>
std::complex<Real> LaurentPoly::evaluate(std::complex<Real> z) const {
  if (is_zero()) return {0, 0};
  if (z == std::complex<Real>(0, 0)) {
    if (min_deg_ < 0) fail(ErrorCode::ZeroEvaluationPoint, "evaluation at 0 with negative exponents");
    return min_deg_ == 0 ? std::complex<Real>(coeffs_.front().get_d(), 0) : std::complex<Real>(0, 0);
  }
  std::complex<Real> acc(0, 0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * z + std::complex<Real>(static_cast<Real>(it->get_d()), 0);
  }
  return acc * std::pow(z, min_deg_);
}

}  // namespace spanalex
