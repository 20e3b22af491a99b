#pragma once

#include "spanalex/span.hpp"
#include "spanalex/tangle.hpp"

namespace spanalex {

enum class EvalMode { Fast, Generators };

/// The value of t together with its inverse, in the scalar field F.
template <class F>
struct TValue {
  F t;
  F t_inv;
  TValue inverted() const { return {t_inv, t}; }
};

inline TValue<RatFunc> symbolic_t() { return {RatFunc::t(), RatFunc::t_inv()}; }
inline TValue<BigRat> t_value(const BigRat& x) {
  if (sgn(x) == 0) fail(ErrorCode::ZeroEvaluationPoint, "t must be nonzero");
  return {x, 1 / x};
}

template <class F>
Matrix<F> f_plus(const TValue<F>& tv) {
  return {{F(1) - tv.t, tv.t}, {F(1), F(0)}};
}

template <class F>
Matrix<F> f_minus(const TValue<F>& tv) {
  return {{F(0), F(1)}, {tv.t_inv, F(1) - tv.t_inv}};
}

/// h(a1, a2) = (a1 - a2, a1 - a2)
template <class F>
Matrix<F> h_matrix() {
  return {{F(1), F(-1)}, {F(1), F(-1)}};
}

/// [n]_x from the geometric sum; x_inv must be 1/x.
template <class F>
F qint_at(long n, const F& x, const F& x_inv) {
  F sum(0), power(n > 0 ? F(1) : x_inv);
  const long m = n > 0 ? n : -n;
  for (long i = 0; i < m; ++i) {
    sum += power;
    power = power * (n > 0 ? x : x_inv);
  }
  return n < 0 ? -sum : sum;
}

/// Matrix of the n-th power of X+ (sign Plus) or X- (sign Minus), any n.
template <class F>
Matrix<F> codirected_power(long n, CrossingSign sign, const TValue<F>& tv) {
  const long m = sign == CrossingSign::Plus ? n : -n;
  const F neg_t = -tv.t, neg_t_inv = -tv.t_inv;
  const F a = qint_at<F>(-m, neg_t_inv, neg_t);
  const F b = qint_at<F>(m, neg_t, neg_t_inv);
  return {{F(1) - a, a}, {b, F(1) - b}};
}

/// Matrix of the n-fold alternating braiding; at_t_inv substitutes t -> 1/t.
template <class F>
Matrix<F> alternating_power(long n, CrossingSign sign, bool at_t_inv, const TValue<F>& tv0) {
  if (n < 0 && n % 2 != 0) return inverse(alternating_power(-n, sign, at_t_inv, tv0));
  const TValue<F> tv = at_t_inv ? tv0.inverted() : tv0;
  const long k = n >= 0 ? n / 2 : -((-n) / 2);
  const F c = (F(1) - tv.t_inv) * F(k);
  const Matrix<F> ch = h_matrix<F>().scaled(c);
  if (sign == CrossingSign::Plus) {
    return (n % 2 == 0 ? Matrix<F>::identity(2) : f_minus(tv)) - ch;
  }
  return (n % 2 == 0 ? Matrix<F>::identity(2) : f_plus(tv.inverted())) + ch;
}

/// Basic-span matrix of a crossing in rotation class k.
template <class F>
Matrix<F> crossing_matrix(CrossingSign sign, int rotation, const TValue<F>& tv) {
  const bool plus = sign == CrossingSign::Plus;
  switch (rotation) {
    case 0: return plus ? f_plus(tv) : f_minus(tv);
    case 1: return plus ? f_minus(tv) : f_plus(tv.inverted());
    case 2: return plus ? f_plus(tv.inverted()) : f_minus(tv.inverted());
    default: return plus ? f_minus(tv.inverted()) : f_plus(tv);
  }
}

template <class F>
Span<F> at_generator(const TangleExpr& g, const TValue<F>& tv) {
  switch (g.kind()) {
    case TangleExpr::Kind::Crossing: return span_from_map(crossing_matrix(g.crossing_sign(), g.rotation(), tv));
    case TangleExpr::Kind::Id: return span_identity<F>(1);
    case TangleExpr::Kind::CupCap: {
      Matrix<F> diag{{F(1)}, {F(1)}};
      const bool cup = g.cupcap_kind() == CupCapKind::CupL || g.cupcap_kind() == CupCapKind::CupR;
      if (cup) return {0, 2, 1, Matrix<F>(0, 1), diag};
      return {2, 0, 1, diag, Matrix<F>(0, 1)};
    }
    default: fail(ErrorCode::InvalidInput, "not a generator: " + g.to_string());
  }
}

/// Rotation written out with a cup, the child, and a cap.
TangleExpr expand_rotation(const TangleExpr& child);

template <class F>
Span<F> at_tangle(const TangleExpr& e, const TValue<F>& tv, EvalMode mode = EvalMode::Fast);

namespace detail {

template <class F>
Span<F> span_power(const Span<F>& base, long n) {
  Span<F> result = span_identity<F>(base.src);
  Span<F> b = base;
  while (n > 0) {
    if (n & 1) result = span_compose(result, b);
    n >>= 1;
    if (n > 0) b = span_compose(b, b);
  }
  return result;
}

template <class F>
bool closed_form_power(const TangleExpr& child, long n, const TValue<F>& tv, Span<F>& out) {
  using K = TangleExpr::Kind;
  if (child.kind() == K::Crossing && child.rotation() % 2 == 0) {
    out = span_from_map(codirected_power(n, child.crossing_sign(), child.rotation() == 0 ? tv : tv.inverted()));
    return true;
  }
  if (child.kind() == K::Compose && child.children().size() == 2) {
    const auto& a = child.children()[0];
    const auto& b = child.children()[1];
    if (a.kind() == K::Crossing && b.kind() == K::Crossing && a.crossing_sign() == b.crossing_sign()) {
      if (a.rotation() == 1 && b.rotation() == 3) {
        out = span_from_map(alternating_power(2 * n, a.crossing_sign(), false, tv));
        return true;
      }
      if (a.rotation() == 3 && b.rotation() == 1) {
        out = span_from_map(alternating_power(2 * n, a.crossing_sign(), true, tv));
        return true;
      }
    }
  }
  return false;
}

}  // namespace detail

template <class F>
Span<F> at_tangle(const TangleExpr& e, const TValue<F>& tv, EvalMode mode) {
  using K = TangleExpr::Kind;
  switch (e.kind()) {
    case K::Crossing:
    case K::Id:
    case K::CupCap: return at_generator(e, tv);
    case K::Tensor: {
      Span<F> acc{0, 0, 0, Matrix<F>(0, 0), Matrix<F>(0, 0)};
      for (const auto& c : e.children()) acc = span_tensor(acc, at_tangle(c, tv, mode));
      return acc;
    }
    case K::Compose: {
      Span<F> acc = at_tangle(e.children().front(), tv, mode);
      for (std::size_t i = 1; i < e.children().size(); ++i) acc = span_compose(acc, at_tangle(e.children()[i], tv, mode));
      return acc;
    }
    case K::Rotate:
      if (mode == EvalMode::Fast) return span_rotate2(at_tangle(e.child(), tv, mode));
      return at_tangle(expand_rotation(e.child()), tv, mode);
    case K::Pow: {
      const long n = e.exponent();
      if (mode == EvalMode::Fast) {
        Span<F> out;
        if (detail::closed_form_power(e.child(), n, tv, out)) return out;
        return detail::span_power(at_tangle(e.child(), tv, mode), n);
      }
      const Span<F> base = at_tangle(e.child(), tv, mode);
      Span<F> acc = span_identity<F>(base.src);
      for (long i = 0; i < n; ++i) acc = span_compose(acc, base);
      return acc;
    }
  }
  fail(ErrorCode::InternalInconsistency, "unknown tangle node");
}

// Symbolic convenience wrappers over Q(t).
Matrix<RatFunc> codirected_power(long n, CrossingSign sign);
Matrix<RatFunc> alternating_power(long n, CrossingSign sign, bool at_t_inv);
Span<RatFunc> at_tangle(const TangleExpr& e, EvalMode mode = EvalMode::Fast);

}  // namespace spanalex
