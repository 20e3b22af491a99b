#pragma once

// Random generators shared by the property tests.

#include <random>
#include <vector>

#include "spanalex/alexander.hpp"
#include "spanalex/functor.hpp"
#include "spanalex/roots.hpp"

namespace spanalex::testing {

inline long rand_int(std::mt19937_64& rng, long lo, long hi) {
  return static_cast<long>(uniform_int(rng, lo, hi));
}

inline BigRat rand_rat(std::mt19937_64& rng, long range = 5) {
  BigRat x(rand_int(rng, -range, range), rand_int(rng, 1, 3));
  x.canonicalize();
  return x;
}

inline LaurentPoly rand_laurent(std::mt19937_64& rng, int max_width = 4, int max_shift = 3) {
  const int lo = static_cast<int>(rand_int(rng, -max_shift, max_shift));
  const int w = static_cast<int>(rand_int(rng, 0, max_width));
  std::vector<BigRat> c;
  for (int i = 0; i <= w; ++i) c.push_back(rand_rat(rng));
  return LaurentPoly::from_coefficients(lo, std::move(c));
}

inline RatFunc rand_ratfunc(std::mt19937_64& rng) {
  LaurentPoly den;
  while (den.is_zero()) den = rand_laurent(rng, 2, 1);
  return RatFunc(rand_laurent(rng, 3, 2), den);
}

// Sparse-ish small matrices so that ranks vary.
inline Matrix<BigRat> rand_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c) {
  Matrix<BigRat> m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      if (rand_int(rng, 0, 2) != 0) m(i, j) = BigRat(rand_int(rng, -3, 3));
  return m;
}

inline Span<BigRat> rand_span(std::mt19937_64& rng, std::size_t src, std::size_t tgt) {
  const std::size_t apex = static_cast<std::size_t>(rand_int(rng, 0, 4));
  return make_span(rand_matrix(rng, src, apex), rand_matrix(rng, tgt, apex));
}

inline std::size_t rand_dim(std::mt19937_64& rng) { return static_cast<std::size_t>(rand_int(rng, 0, 4)); }

inline TangleExpr crossing_gen(int i) {
  return TangleExpr::crossing(i < 4 ? CrossingSign::Plus : CrossingSign::Minus, i % 4);
}

// Random composable word of crossings on two strands.
inline TangleExpr rand_braiding_word(std::mt19937_64& rng, int length) {
  std::vector<TangleExpr> word{crossing_gen(static_cast<int>(rand_int(rng, 0, 7)))};
  while (static_cast<int>(word.size()) < length) {
    std::vector<TangleExpr> next;
    for (int i = 0; i < 8; ++i)
      if (crossing_gen(i).source() == word.back().target()) next.push_back(crossing_gen(i));
    word.push_back(next[static_cast<std::size_t>(rand_int(rng, 0, static_cast<long>(next.size()) - 1))]);
  }
  return word.size() == 1 ? word.front() : TangleExpr::compose(word);
}

inline TangleExpr id_for(Sign s) { return TangleExpr::id(s == Sign::Plus ? Direction::Up : Direction::Down); }

// Random composable word on three strands: layers X (x) id or id (x) X.
inline TangleExpr rand_three_strand_word(std::mt19937_64& rng, int length) {
  auto layer = [&](const BoundarySignature* source) {
    while (true) {
      const TangleExpr x = crossing_gen(static_cast<int>(rand_int(rng, 0, 7)));
      const bool left = rand_int(rng, 0, 1) == 0;
      const Sign extra = rand_int(rng, 0, 1) == 0 ? Sign::Plus : Sign::Minus;
      TangleExpr l = left ? TangleExpr::tensor({x, id_for(extra)}) : TangleExpr::tensor({id_for(extra), x});
      if (source == nullptr || l.source() == *source) return l;
    }
  };
  std::vector<TangleExpr> word{layer(nullptr)};
  while (static_cast<int>(word.size()) < length) word.push_back(layer(&word.back().target()));
  return TangleExpr::compose(word);
}

inline Span<RatFunc> symbolic_inverted(const Span<RatFunc>& s) {
  return span_map(s, [](const RatFunc& x) { return x.subst_t_inverse(); });
}

}  // namespace spanalex::testing
