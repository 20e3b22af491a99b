#include "spanalex/ratfunc.hpp"

namespace spanalex {

RatFunc::RatFunc(const LaurentPoly& num, const LaurentPoly& den) {
  if (den.is_zero()) fail(ErrorCode::DivisionByZero, "rational function with zero denominator");
  if (num.is_zero()) return;
  // Move the t-power and the leading coefficient of den into num.
  LaurentPoly n = num.shifted(-den.min_degree());
  LaurentPoly d = den.shifted(-den.min_degree());
  const BigRat lead = d.leading_coefficient();
  if (lead != 1) {
    n = n.scaled(1 / lead);
    d = d.scaled(1 / lead);
  }
  if (d.width() > 0) {
    LaurentPoly g = laurent_gcd(n, d);
    if (g.width() > 0) {
      n = exact_quotient(n, g);
      d = exact_quotient(d, g);
      const BigRat l2 = d.leading_coefficient();
      if (l2 != 1) {
        n = n.scaled(1 / l2);
        d = d.scaled(1 / l2);
      }
    }
  }
  num_ = std::move(n);
  den_ = std::move(d);
}

RatFunc RatFunc::operator-() const { return RatFunc(Raw{}, -num_, den_); }

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_.is_one() && b.den_.is_one()) return RatFunc(a.num_ + b.num_);
  if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
  if (b.den_.is_one()) return RatFunc(RatFunc::Raw{}, a.num_ + b.num_ * a.den_, a.den_);
  if (a.den_.is_one()) return RatFunc(RatFunc::Raw{}, a.num_ * b.den_ + b.num_, b.den_);
  return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.den_.is_one() && b.den_.is_one()) return RatFunc(a.num_ * b.num_);
  return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
  if (b.is_zero()) fail(ErrorCode::DivisionByZero, "division by zero in Q(t)");
  if (a.is_zero()) return {};
  if (b.num_.is_monomial()) {
    return RatFunc(a.num_ * b.den_.divided_by_monomial(b.num_), a.den_);
  }
  return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

RatFunc RatFunc::subst_t_inverse() const {
  if (den_.is_one()) return RatFunc(spanalex::subst_t_inverse(num_));
  return RatFunc(spanalex::subst_t_inverse(num_), spanalex::subst_t_inverse(den_));
}

BigRat RatFunc::evaluate(const BigRat& x) const {
  const BigRat d = den_.evaluate(x);
  if (sgn(d) == 0) {
    fail(ErrorCode::PoleAtSpecialization, "pole at t = " + x.get_str() + " in " + to_string());
  }
  return num_.evaluate(x) / d;
}

const LaurentPoly& RatFunc::as_laurent() const {
  if (!den_.is_one()) {
    fail(ErrorCode::InternalInconsistency, "expected a Laurent polynomial, got " + to_string());
  }
  return num_;
}

std::string RatFunc::to_string() const {
  if (den_.is_one()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

}  // namespace spanalex
