#include "spanalex/alexander.hpp"

#include <algorithm>

#include "spanalex/presentation.hpp"

namespace spanalex {

namespace {

LaurentPoly to_laurent(const RatFunc& x, const char* what) {
  if (!x.is_laurent()) {
    fail(ErrorCode::InternalInconsistency, std::string(what) + " did not clear denominators: " + x.to_string());
  }
  return x.as_laurent();
}

AlexanderResult finish(Route route, const LaurentPoly& raw, Matrix<RatFunc> presentation) {
  AlexanderResult r;
  r.route = route;
  r.raw = raw;
  r.delta = normalize_alexander(raw);
  r.presentation = std::move(presentation);
  r.determinant = knot_determinant(r.delta);
  return r;
}

Matrix<RatFunc> two_bridge_p(bool odd_length) {
  if (odd_length) return {{1, 0, 0, -1}, {0, 1, -1, 0}};
  return {{1, -1, 0, 0}, {0, 0, 1, -1}};
}

const Matrix<RatFunc>& two_bridge_q() {
  static const Matrix<RatFunc> q{{1, 0}, {0, 1}, {0, 1}, {1, 0}};
  return q;
}

Matrix<RatFunc> band_span_matrix(const PretzelBand& band) {
  const Span<RatFunc> s = span_to_basic(at_tangle(band.expr));
  if (s.src != 2 || s.tgt != 2) fail(ErrorCode::InternalInconsistency, "pretzel band is not a 2-tangle");
  return s.right;
}

Matrix<RatFunc> minor_11(const Matrix<RatFunc>& m) {
  const std::size_t n = m.rows();
  if (n == 0) return m;
  return m.block(1, 1, n - 1, n - 1);
}

RatFunc qint_neg_t(long long n) { return RatFunc(qint(static_cast<long>(n), QArg::neg_t)); }

}  // namespace

const char* route_name(Route r) {
  switch (r) {
    case Route::Span: return "span";
    case Route::Continuant: return "continuant";
    case Route::Closed: return "closed";
    case Route::Presentation: return "presentation";
  }
  return "unknown";
}

BigInt knot_determinant(const LaurentPoly& delta) {
  const BigRat v = delta.evaluate(BigRat(-1));
  BigInt out = v.get_num();
  if (v.get_den() != 1) fail(ErrorCode::InternalInconsistency, "non-integral value at t = -1");
  return abs(out);
}

bool routes_agree(const std::vector<AlexanderResult>& results) {
  for (const auto& r : results)
    if (!(r.delta == results.front().delta)) return false;
  return true;
}

BigInt elementary_symmetric(const std::vector<long long>& q, std::size_t k) {
  std::vector<BigInt> e(k + 1, BigInt(0));
  e[0] = 1;
  for (long long x : q)
    for (std::size_t j = k; j >= 1; --j) e[j] += e[j - 1] * BigInt(static_cast<long>(x));
  return e[k];
}

AlexanderResult alex_rational_span(long long p, long long q) {
  const TwoBridgeDecomposition d = rational_2bridge(p, q);
  const Span<RatFunc> g = span_to_basic(at_tangle(d.braid));
  const Matrix<RatFunc> gp = two_bridge_p(d.odd_length) * g.right * two_bridge_q();
  const LaurentPoly reference = to_laurent(gp(0, 0), "G' entry");
  if (reference.is_zero()) fail(ErrorCode::InternalInconsistency, "G' has a zero entry");
  const LaurentPoly norm = normalize_alexander(reference);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      const LaurentPoly e = to_laurent(gp(i, j), "G' entry");
      if (e.is_zero() || !(normalize_alexander(e) == norm)) {
        fail(ErrorCode::InternalInconsistency, "G' entries disagree: " + reference.to_string() + " vs " + e.to_string());
      }
    }
  AlexanderResult r = finish(Route::Span, reference, gp);
  r.mirror_applied = d.mirror_applied;
  r.kernel_dim = kernel_basis(gp).cols();
  return r;
}

AlexanderResult alex_rational_continuant(long long p, long long q) {
  const TwoBridgeDecomposition d = rational_2bridge(p, q);
  const std::size_t n = d.cf.size();
  const RatFunc one_minus_t = RatFunc(1) - RatFunc::t();
  const RatFunc one_minus_tinv = RatFunc(1) - RatFunc::t_inv();
  std::vector<RatFunc> a, u(n, RatFunc(1)), l(n, RatFunc(1));
  for (std::size_t i = 0; i < n; ++i) {
    const RatFunc k(static_cast<long>(d.cf[i] / 2));
    a.push_back(i % 2 == 0 ? k * one_minus_t : -(k * one_minus_tinv));
  }
  const RatFunc value = continuant(a, u, l);
  AlexanderResult r = finish(Route::Continuant, to_laurent(value, "continuant"), tridiagonal_matrix(a, u, l));
  r.mirror_applied = d.mirror_applied;
  return r;
}

AlexanderResult alex_pretzel_span(const PretzelSpec& spec) {
  const PretzelDecomposition d = pretzel_expr(spec);
  std::vector<Matrix<RatFunc>> blocks;
  for (const auto& band : d.bands) blocks.push_back(band_span_matrix(band));
  const std::size_t n = blocks.size();
  // M = P D Q with D block diagonal; boundary point 2i, 2i+1 belong to band i.
  Matrix<RatFunc> dm(2 * n, 2 * n), pm(n, 2 * n), qm(2 * n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t a = 0; a < 2; ++a)
      for (std::size_t b = 0; b < 2; ++b) dm(2 * i + a, 2 * i + b) = blocks[i](a, b);
  pm(0, 0) = RatFunc(-1);
  pm(0, 2 * n - 1) += RatFunc(1);
  qm(0, 0) = RatFunc(1);
  qm(2 * n - 1, 0) = RatFunc(1);
  for (std::size_t r = 1; r < n; ++r) {
    pm(r, 2 * r - 1) = RatFunc(1);
    pm(r, 2 * r) = RatFunc(-1);
    qm(2 * r - 1, r) = RatFunc(1);
    qm(2 * r, r) = RatFunc(1);
  }
  const Matrix<RatFunc> m = pm * dm * qm;
  if (!is_zero(determinant(m))) fail(ErrorCode::InternalInconsistency, "pretzel matrix M is nonsingular");
  const RatFunc value = determinant(minor_11(m));
  AlexanderResult r = finish(Route::Span, to_laurent(value, "minor of M"), m);
  r.kernel_dim = kernel_basis(m).cols();
  return r;
}

AlexanderResult alex_pretzel_continuant(const PretzelSpec& spec) {
  const PretzelDecomposition d = pretzel_expr(spec);
  std::vector<Matrix<RatFunc>> blocks;
  for (const auto& band : d.bands) blocks.push_back(pretzel_band_matrix(band.kind, band.q, symbolic_t()));
  const Matrix<RatFunc> m = pretzel_cyclic_matrix(blocks);
  const std::size_t n = m.rows();
  std::vector<RatFunc> a, u, l;
  for (std::size_t i = 1; i < n; ++i) {
    a.push_back(m(i, i));
    u.push_back(i + 1 < n ? m(i, i + 1) : RatFunc(0));
    l.push_back(i > 1 ? m(i, i - 1) : RatFunc(0));
  }
  const RatFunc value = continuant(a, u, l);
  return finish(Route::Continuant, to_laurent(value, "continuant"), tridiagonal_matrix(a, u, l));
}

AlexanderResult alex_pretzel_closed(const PretzelSpec& spec) {
  const PretzelDecomposition d = pretzel_expr(spec);
  const std::vector<long long>& q = d.spec.q;
  const std::size_t n = q.size();
  const RatFunc t = RatFunc::t();
  RatFunc value(0);
  switch (d.kind) {
    case PretzelCase::Odd: {
      const RatFunc tm = t - RatFunc(1), tp = t + RatFunc(1);
      for (std::size_t i = 0; 2 * i <= n - 1; ++i) {
        RatFunc term(BigRat(elementary_symmetric(q, 2 * i)));
        for (std::size_t j = 0; j < 2 * i; ++j) term = term * tm;
        for (std::size_t j = 0; j < n - 1 - 2 * i; ++j) term = term * tp;
        value += term;
      }
      value = value * RatFunc(BigRat(BigInt(1), BigInt(1) << static_cast<mp_bitcnt_t>(n - 1)));
      break;
    }
    case PretzelCase::Even2p: {
      // 1-based q_1 .. q_{2p}: odd positions enter as [-q], even as [q].
      RatFunc prod(1), sum(0);
      for (std::size_t i = 0; i < n; ++i) {
        if (i % 2 == 0) {
          const RatFunc v = qint_neg_t(-q[i]);
          prod = prod * v;
          sum -= RatFunc(1) / v;
        } else {
          const RatFunc v = qint_neg_t(q[i]);
          prod = prod * v;
          sum += RatFunc(1) / v;
        }
      }
      value = prod * sum;
      break;
    }
    case PretzelCase::Even2p1: {
      const RatFunc q1(static_cast<long>(q[0]));
      const RatFunc m2 = qint_neg_t(-2);
      RatFunc prod = q1 / RatFunc(2) * m2;
      RatFunc sum = RatFunc(2) / q1 / (t * m2);
      for (std::size_t i = 1; i < n; ++i) {
        if (i % 2 == 0) {
          const RatFunc v = qint_neg_t(-q[i]);
          prod = prod * v;
          sum -= RatFunc(1) / v;
        } else {
          const RatFunc v = qint_neg_t(q[i]);
          prod = prod * v;
          sum += RatFunc(1) / v;
        }
      }
      value = prod * sum;
      break;
    }
  }
  return finish(Route::Closed, to_laurent(value, "closed formula"), Matrix<RatFunc>{{value}});
}

AlexanderResult alex_tangle(const TangleExpr& e) {
  const ClosedInvariants inv = closed_invariants(e);
  if (inv.components != 1) {
    fail(ErrorCode::NotAKnot, "diagram has " + std::to_string(inv.components) + " components");
  }
  if (inv.order.is_zero()) fail(ErrorCode::InternalInconsistency, "presentation of a knot has zero order");
  return finish(Route::Presentation, inv.order, inv.reduced.map([](const LaurentPoly& x) { return RatFunc(x); }));
}

}  // namespace spanalex
