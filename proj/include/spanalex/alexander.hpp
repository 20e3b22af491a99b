#pragma once

#include <string>
#include <vector>

#include "spanalex/builders.hpp"
#include "spanalex/functor.hpp"

namespace spanalex {

enum class Route { Span, Continuant, Closed, Presentation };

const char* route_name(Route r);

struct AlexanderResult {
  Route route = Route::Span;
  LaurentPoly delta;  // normalized
  LaurentPoly raw;    // as produced by the route, before normalization
  /// G' for the rational span route, M for the pretzel span route, the
  /// tridiagonal minor for continuant routes, the reduced relation matrix for
  /// closed tangles; 1x1 holding the raw value for closed formulas.
  Matrix<RatFunc> presentation;
  bool mirror_applied = false;
  BigInt determinant;
  std::size_t kernel_dim = 0;  // span routes only
};

AlexanderResult alex_rational_span(long long p, long long q);
AlexanderResult alex_rational_continuant(long long p, long long q);
AlexanderResult alex_pretzel_span(const PretzelSpec& spec);
AlexanderResult alex_pretzel_continuant(const PretzelSpec& spec);
AlexanderResult alex_pretzel_closed(const PretzelSpec& spec);
/// Closed single-component diagram given as a 0 -> 0 expression.
AlexanderResult alex_tangle(const TangleExpr& e);

/// |delta(-1)| computed exactly.
BigInt knot_determinant(const LaurentPoly& delta);

/// True when every result carries the same normalized polynomial.
bool routes_agree(const std::vector<AlexanderResult>& results);

/// e_k of the integers q.
BigInt elementary_symmetric(const std::vector<long long>& q, std::size_t k);

/// Band matrix D for one pretzel band, from the closed braiding formulas.
template <class F>
Matrix<F> pretzel_band_matrix(BandKind kind, long long q, const TValue<F>& tv) {
  switch (kind) {
    case BandKind::AlternatingOdd: {
      const F k(static_cast<long>((q - 1) / 2));
      return f_plus(tv) + h_matrix<F>().scaled(k * (F(1) - tv.t));
    }
    case BandKind::AlternatingEven: {
      const F k(static_cast<long>(q / 2));
      return Matrix<F>::identity(2) - h_matrix<F>().scaled(k * (F(1) - tv.t_inv));
    }
    case BandKind::CodirectedUp: return codirected_power(static_cast<long>(q), CrossingSign::Minus, tv);
    case BandKind::CodirectedDown: return codirected_power(static_cast<long>(q), CrossingSign::Minus, tv.inverted());
  }
  fail(ErrorCode::InternalInconsistency, "unknown band kind");
}

/// Cyclic matrix M = P D Q of a pretzel closure, D = diag(D_0, ..., D_{n-1}).
/// Row r relates the arcs between bands r-1 and r.
template <class F>
Matrix<F> pretzel_cyclic_matrix(const std::vector<Matrix<F>>& d) {
  const std::size_t n = d.size();
  Matrix<F> m(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    const Matrix<F>& prev = d[(r + n - 1) % n];
    const Matrix<F>& cur = d[r];
    m(r, r) += prev(1, 1) - cur(0, 0);
    m(r, (r + n - 1) % n) += prev(1, 0);
    m(r, (r + 1) % n) -= cur(0, 1);
  }
  return m;
}

/// n x n tridiagonal matrix: diagonal a, (i, i+1) = u[i], (i+1, i) = l[i+1].
template <class F>
Matrix<F> tridiagonal_matrix(const std::vector<F>& a, const std::vector<F>& u, const std::vector<F>& l) {
  const std::size_t n = a.size();
  Matrix<F> m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i) = a[i];
    if (i + 1 < n) {
      m(i, i + 1) = u[i];
      m(i + 1, i) = l[i + 1];
    }
  }
  return m;
}

/// K_i = a_i K_{i-1} - l_i u_{i-1} K_{i-2}, K_0 = 1; returns K_n.
template <class F>
F continuant(const std::vector<F>& a, const std::vector<F>& u, const std::vector<F>& l) {
  F prev2(1), prev1(1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    F next = a[i] * prev1;
    if (i > 0) next -= l[i] * u[i - 1] * prev2;
    prev2 = prev1;
    prev1 = next;
  }
  return prev1;
}

/// Laplace expansion along the first row, skipping zero entries.
template <class F>
F cofactor_determinant(const Matrix<F>& m) {
  const std::size_t n = m.rows();
  if (n != m.cols()) fail(ErrorCode::DimensionMismatch, "determinant of a non-square matrix");
  if (n == 0) return F(1);
  if (n == 1) return m(0, 0);
  F sum(0);
  for (std::size_t j = 0; j < n; ++j) {
    if (is_zero(m(0, j))) continue;
    Matrix<F> minor(n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t c = 0, cc = 0; c < n; ++c)
        if (c != j) minor(i - 1, cc++) = m(i, c);
    const F term = m(0, j) * cofactor_determinant(minor);
    if (j % 2 == 0) sum += term;
    else sum -= term;
  }
  return sum;
}

}  // namespace spanalex
