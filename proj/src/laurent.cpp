#include "spanalex/laurent.hpp"

#include <algorithm>
#include <utility>

namespace spanalex {

std::string to_string(const BigRat& x) { return x.get_str(); }

namespace {

using Coeffs = std::vector<BigRat>;

BigRat rat_pow(const BigRat& x, unsigned e) {
  BigRat result(1), base(x);
  while (e > 0) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e > 0) base *= base;
  }
  return result;
}

void trim_poly(Coeffs& c) {
  while (!c.empty() && sgn(c.back()) == 0) c.pop_back();
}

// Dense polynomial division, index = exponent. b must be trimmed and nonzero.
void poly_divmod(const Coeffs& a, const Coeffs& b, Coeffs& q, Coeffs& r) {
  r = a;
  trim_poly(r);
  q.clear();
  if (r.size() < b.size()) return;
  q.assign(r.size() - b.size() + 1, BigRat(0));
  const BigRat inv_lead = 1 / b.back();
  BigRat factor, tmp;
  const auto bdeg = static_cast<std::ptrdiff_t>(b.size()) - 1;
  for (auto k = static_cast<std::ptrdiff_t>(r.size()) - 1; k >= bdeg; --k) {
    if (sgn(r[static_cast<std::size_t>(k)]) == 0) continue;
    factor = r[static_cast<std::size_t>(k)] * inv_lead;
    const auto shift = static_cast<std::size_t>(k - bdeg);
    q[shift] = factor;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (sgn(b[j]) == 0) continue;
      mpq_mul(tmp.get_mpq_t(), factor.get_mpq_t(), b[j].get_mpq_t());
      r[shift + j] -= tmp;
    }
  }
  trim_poly(r);
  trim_poly(q);
}

void make_monic(Coeffs& c) {
  if (c.empty()) return;
  const BigRat inv = 1 / c.back();
  if (inv == 1) return;
  for (auto& x : c) x *= inv;
}

// Coefficients of p / t^min_degree as an ordinary polynomial.
Coeffs stripped(const LaurentPoly& p) { return p.coefficients(); }

Coeffs poly_gcd(Coeffs a, Coeffs b) {
  trim_poly(a);
  trim_poly(b);
  if (a.size() < b.size()) std::swap(a, b);
  Coeffs q, r;
  while (!b.empty()) {
    poly_divmod(a, b, q, r);
    make_monic(r);
    a = std::move(b);
    b = std::move(r);
  }
  make_monic(a);
  return a;
}

}  // namespace

LaurentPoly::LaurentPoly(long c) {
  if (c != 0) coeffs_.emplace_back(c);
}

LaurentPoly::LaurentPoly(const BigRat& c) {
  if (sgn(c) != 0) coeffs_.push_back(c);
}

LaurentPoly LaurentPoly::monomial(const BigRat& c, int exponent) {
  LaurentPoly p;
  if (sgn(c) != 0) {
    p.min_deg_ = exponent;
    p.coeffs_.push_back(c);
  }
  return p;
}

LaurentPoly LaurentPoly::from_coefficients(int min_degree, std::vector<BigRat> coeffs) {
  LaurentPoly p;
  p.min_deg_ = min_degree;
  p.coeffs_ = std::move(coeffs);
  p.trim();
  return p;
}

void LaurentPoly::trim() {
  trim_poly(coeffs_);
  std::size_t lead = 0;
  while (lead < coeffs_.size() && sgn(coeffs_[lead]) == 0) ++lead;
  if (lead > 0) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
    min_deg_ += static_cast<int>(lead);
  }
  if (coeffs_.empty()) min_deg_ = 0;
}

bool LaurentPoly::is_one() const { return coeffs_.size() == 1 && min_deg_ == 0 && coeffs_[0] == 1; }

bool LaurentPoly::has_integer_coefficients() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const BigRat& c) { return c.get_den() == 1; });
}

BigRat LaurentPoly::coefficient(int exponent) const {
  const long idx = static_cast<long>(exponent) - min_deg_;
  if (idx < 0 || idx >= static_cast<long>(coeffs_.size())) return BigRat(0);
  return coeffs_[static_cast<std::size_t>(idx)];
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r(*this);
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  const int lo = std::min(min_deg_, o.min_deg_);
  const int hi = std::max(max_degree(), o.max_degree());
  if (lo < min_deg_) {
    coeffs_.insert(coeffs_.begin(), static_cast<std::size_t>(min_deg_ - lo), BigRat(0));
    min_deg_ = lo;
  }
  coeffs_.resize(static_cast<std::size_t>(hi - lo + 1));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) {
    coeffs_[static_cast<std::size_t>(o.min_deg_ - lo) + i] += o.coeffs_[i];
  }
  trim();
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  LaurentPoly r;
  r.min_deg_ = a.min_deg_ + b.min_deg_;
  r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, BigRat(0));
  BigRat tmp;
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (sgn(a.coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      if (sgn(b.coeffs_[j]) == 0) continue;
      mpq_mul(tmp.get_mpq_t(), a.coeffs_[i].get_mpq_t(), b.coeffs_[j].get_mpq_t());
      r.coeffs_[i + j] += tmp;
    }
  }
  r.trim();
  return r;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly r(*this);
  if (!r.is_zero()) r.min_deg_ += k;
  return r;
}

LaurentPoly LaurentPoly::scaled(const BigRat& c) const {
  if (sgn(c) == 0) return {};
  LaurentPoly r(*this);
  for (auto& x : r.coeffs_) x *= c;
  return r;
}

LaurentPoly LaurentPoly::divided_by_monomial(const LaurentPoly& m) const {
  if (!m.is_monomial()) fail(ErrorCode::InternalInconsistency, "divisor is not a monomial");
  return shifted(-m.min_deg_).scaled(1 / m.coeffs_[0]);
}

BigRat LaurentPoly::evaluate(const BigRat& x) const {
  if (is_zero()) return BigRat(0);
  if (sgn(x) == 0) {
    if (min_deg_ < 0) fail(ErrorCode::ZeroEvaluationPoint, "evaluation at 0 with negative exponents");
    return min_deg_ == 0 ? coeffs_.front() : BigRat(0);
  }
  BigRat acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  if (min_deg_ > 0) acc *= rat_pow(x, static_cast<unsigned>(min_deg_));
  if (min_deg_ < 0) acc /= rat_pow(x, static_cast<unsigned>(-min_deg_));
  return acc;
}

std::string LaurentPoly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (int k = max_degree(); k >= min_deg_; --k) {
    const BigRat& c = coeffs_[static_cast<std::size_t>(k - min_deg_)];
    if (sgn(c) == 0) continue;
    const bool negative = sgn(c) < 0;
    const BigRat mag = abs(c);
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    std::string mono;
    if (k == 1) mono = "t";
    else if (k != 0) mono = "t^" + std::to_string(k);
    if (mono.empty()) out += mag.get_str();
    else if (mag == 1) out += mono;
    else out += mag.get_str() + "*" + mono;
  }
  return out;
}

LaurentPoly subst_t_inverse(const LaurentPoly& p) {
  if (p.is_zero()) return {};
  std::vector<BigRat> rev(p.coefficients().rbegin(), p.coefficients().rend());
  return LaurentPoly::from_coefficients(-p.max_degree(), std::move(rev));
}

LaurentPoly qint(long n, QArg arg) {
  if (n == 0) return {};
  const BigRat c = (arg == QArg::neg_t || arg == QArg::neg_t_inv) ? BigRat(-1) : BigRat(1);
  const int e = (arg == QArg::t || arg == QArg::neg_t) ? 1 : -1;
  const long m = n > 0 ? n : -n;
  // n > 0: x^0 .. x^(m-1); n < 0: -(x^-1 .. x^-m)
  const long first = n > 0 ? 0 : -m;
  const long last = n > 0 ? m - 1 : -1;
  std::vector<BigRat> coeffs;
  coeffs.reserve(static_cast<std::size_t>(m));
  for (long i = first; i <= last; ++i) {
    BigRat ci = (i % 2 != 0 && sgn(c) < 0) ? BigRat(-1) : BigRat(1);
    if (n < 0) ci = -ci;
    coeffs.push_back(ci);
  }
  if (e == -1) std::reverse(coeffs.begin(), coeffs.end());
  const long min_deg = e == 1 ? first : -last;
  return LaurentPoly::from_coefficients(static_cast<int>(min_deg), std::move(coeffs));
}

LaurentPoly normalize_alexander(const LaurentPoly& p) {
  if (p.is_zero()) fail(ErrorCode::ZeroPolynomial, "cannot normalize the zero polynomial");
  LaurentPoly r = p.shifted(-p.min_degree());
  if (sgn(r.leading_coefficient()) < 0) r = -r;
  return r;
}

LaurentPoly symmetric_alexander(const LaurentPoly& p) {
  const LaurentPoly n = normalize_alexander(p);
  if (n.width() % 2 != 0) fail(ErrorCode::InvalidInput, "polynomial of odd width has no symmetric representative");
  return n.shifted(-n.width() / 2);
}

LaurentDivMod laurent_divmod(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) fail(ErrorCode::DivisionByZero, "division by the zero polynomial");
  if (a.is_zero()) return {};
  Coeffs q, r;
  poly_divmod(stripped(a), stripped(b), q, r);
  return {LaurentPoly::from_coefficients(a.min_degree() - b.min_degree(), std::move(q)),
          LaurentPoly::from_coefficients(a.min_degree(), std::move(r))};
}

LaurentPoly laurent_gcd(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() && b.is_zero()) return {};
  if (a.is_monomial() || b.is_monomial()) return LaurentPoly(1);
  return LaurentPoly::from_coefficients(0, poly_gcd(stripped(a), stripped(b)));
}

LaurentPoly exact_quotient(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_monomial()) return a.divided_by_monomial(b);
  auto dm = laurent_divmod(a, b);
  if (!dm.remainder.is_zero()) fail(ErrorCode::InternalInconsistency, "inexact polynomial division");
  return dm.quotient;
}

LaurentPoly derivative(const LaurentPoly& p) {
  if (p.is_zero()) return {};
  std::vector<BigRat> d;
  d.reserve(p.coefficients().size());
  for (std::size_t i = 0; i < p.coefficients().size(); ++i) {
    d.push_back(p.coefficients()[i] * (p.min_degree() + static_cast<long>(i)));
  }
  return LaurentPoly::from_coefficients(p.min_degree() - 1, std::move(d));
}

std::vector<LaurentPoly> squarefree_decomposition(const LaurentPoly& p) {
  if (p.is_zero()) fail(ErrorCode::ZeroPolynomial, "square-free decomposition of zero");
  LaurentPoly f = p.shifted(-p.min_degree());
  f = f.scaled(1 / f.leading_coefficient());
  std::vector<LaurentPoly> out;
  if (f.width() == 0) return out;
  LaurentPoly fp = derivative(f);
  LaurentPoly a = laurent_gcd(f, fp);
  LaurentPoly b = exact_quotient(f, a);
  LaurentPoly c = exact_quotient(fp, a);
  LaurentPoly d = c - derivative(b);
  while (b.width() > 0) {
    LaurentPoly ai = laurent_gcd(b, d);
    if (ai.is_zero()) ai = LaurentPoly(1);
    LaurentPoly bn = exact_quotient(b, ai);
    LaurentPoly cn = exact_quotient(d, ai);
    d = cn - derivative(bn);
    out.push_back(ai);
    b = std::move(bn);
  }
  while (!out.empty() && out.back().width() == 0) out.pop_back();
  return out;
}

}  // namespace spanalex
