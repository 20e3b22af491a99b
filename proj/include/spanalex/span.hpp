#pragma once

#include <cstddef>

#include "spanalex/matrix.hpp"

namespace spanalex {

/// Span X <- Z -> Y of finite-dimensional vector spaces over F.
/// left is src x apex, right is tgt x apex.
template <class F>
struct Span {
  std::size_t src = 0;
  std::size_t tgt = 0;
  std::size_t apex = 0;
  Matrix<F> left;
  Matrix<F> right;

  bool is_basic() const { return src == apex && left.is_identity(); }
};

/// Equivalence-class representative: apex dimension plus a reduced column
/// echelon basis of the image of the stacked map [left; right].
template <class F>
struct CanonicalSpan {
  std::size_t src = 0;
  std::size_t tgt = 0;
  std::size_t apex = 0;
  Matrix<F> stacked_echelon;

  friend bool operator==(const CanonicalSpan& a, const CanonicalSpan& b) {
    return a.src == b.src && a.tgt == b.tgt && a.apex == b.apex && a.stacked_echelon == b.stacked_echelon;
  }
};

template <class F>
Span<F> span_from_map(const Matrix<F>& m) {
  return {m.cols(), m.rows(), m.cols(), Matrix<F>::identity(m.cols()), m};
}

template <class F>
Span<F> span_identity(std::size_t n) {
  return span_from_map(Matrix<F>::identity(n));
}

/// Span with the given legs; shapes are checked.
template <class F>
Span<F> make_span(Matrix<F> left, Matrix<F> right) {
  if (left.cols() != right.cols()) fail(ErrorCode::DimensionMismatch, "span legs have different apex dimensions");
  const std::size_t apex = left.cols();
  return {left.rows(), right.rows(), apex, std::move(left), std::move(right)};
}

/// Pullback composition: s1 first, then s2.
template <class F>
Span<F> span_compose(const Span<F>& s1, const Span<F>& s2) {
  if (s1.tgt != s2.src) {
    fail(ErrorCode::DimensionMismatch, "span composition: target " + std::to_string(s1.tgt) +
                                           " does not match source " + std::to_string(s2.src));
  }
  if (s2.is_basic()) {
    return {s1.src, s2.tgt, s1.apex, s1.left, s2.right * s1.right};
  }
  if (s1.tgt == s1.apex && s1.right.is_identity()) {
    return {s1.src, s2.tgt, s2.apex, s1.left * s2.left, s2.right};
  }
  // apex = ker [g1 | -f2]
  Matrix<F> stacked = Matrix<F>::hstack(s1.right, s2.left.scaled(F(-1)));
  Matrix<F> k = kernel_basis(stacked);
  Matrix<F> k1 = k.block(0, 0, s1.apex, k.cols());
  Matrix<F> k2 = k.block(s1.apex, 0, s2.apex, k.cols());
  return {s1.src, s2.tgt, k.cols(), s1.left * k1, s2.right * k2};
}

template <class F>
Span<F> span_tensor(const Span<F>& a, const Span<F>& b) {
  return {a.src + b.src, a.tgt + b.tgt, a.apex + b.apex, Matrix<F>::block_diag(a.left, b.left),
          Matrix<F>::block_diag(a.right, b.right)};
}

template <class F>
CanonicalSpan<F> span_canonicalize(const Span<F>& s) {
  return {s.src, s.tgt, s.apex, column_echelon(Matrix<F>::vstack(s.left, s.right))};
}

template <class F>
bool span_equivalent(const Span<F>& a, const Span<F>& b) {
  return span_canonicalize(a) == span_canonicalize(b);
}

/// Quarter rotation of a 2-tangle span: new legs are rows (g1, f1) and (g2, f2).
template <class F>
Span<F> span_rotate2(const Span<F>& s) {
  if (s.src != 2 || s.tgt != 2) fail(ErrorCode::DimensionMismatch, "rotation needs a 2 -> 2 span");
  Matrix<F> left(2, s.apex), right(2, s.apex);
  for (std::size_t j = 0; j < s.apex; ++j) {
    left(0, j) = s.right(0, j);
    left(1, j) = s.left(0, j);
    right(0, j) = s.right(1, j);
    right(1, j) = s.left(1, j);
  }
  return {2, 2, s.apex, std::move(left), std::move(right)};
}

/// Basic form right * left^-1 when the left leg is invertible.
template <class F>
Span<F> span_to_basic(const Span<F>& s) {
  if (s.is_basic()) return s;
  if (s.src != s.apex) fail(ErrorCode::InvalidInput, "left leg is not square");
  return span_from_map(s.right * inverse(s.left));
}

template <class F, class Fn>
auto span_map(const Span<F>& s, Fn&& fn) {
  using S = std::decay_t<decltype(fn(std::declval<const F&>()))>;
  return Span<S>{s.src, s.tgt, s.apex, s.left.map(fn), s.right.map(fn)};
}

}  // namespace spanalex
