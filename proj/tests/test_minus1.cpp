#include <doctest.h>

#include "spanalex/builders.hpp"
#include "spanalex/minus1.hpp"
#include "support.hpp"

using namespace spanalex;
using namespace spanalex::testing;

namespace {

Slope S(long p, long q) { return make_slope(BigInt(p), BigInt(q)); }

const Slope inf{1, 0};

TangleExpr canonical(long long p, long long q) { return rational_canonical_expr(make_rational(p, q)); }

Slope fraction_slope(const RationalSpec& r) {
  return make_slope(BigInt(static_cast<long>(r.p)), BigInt(static_cast<long>(r.q)));
}

Matrix<BigRat> corners_plane(const ColoringMatrix& m) {
  // (SW, SE, NW, NE) stacked order, next to v0
  return Matrix<BigRat>{{BigRat(m.c), 1}, {BigRat(m.d), 1}, {BigRat(m.a), 1}, {BigRat(m.b), 1}};
}

}  // namespace

TEST_SUITE("minus1") {
  TEST_CASE("slope arithmetic") {
    CHECK(slope_compose(S(1, 1), S(1, 1)) == S(2, 1));
    CHECK(slope_compose(S(3, 4), S(-3, 4)) == S(0, 1));
    CHECK(slope_compose(S(1, 2), S(1, 3)) == S(5, 6));
    CHECK_THROWS_AS(slope_compose(inf, S(1, 1)), Error);
    for (long n = 1; n < 6; ++n) CHECK(slope_rotate(S(-1, n)) == S(n, 1));
    CHECK(slope_rotate(S(0, 1)) == inf);
    CHECK(slope_rotate(inf) == S(0, 1));
    CHECK(S(4, -6) == S(-2, 3));
    CHECK(S(-4, 0) == inf);
    CHECK(S(-2, 3).to_string() == "-2/3");
    CHECK_THROWS_AS(S(0, 0), Error);
    std::mt19937_64 rng(71);
    for (int i = 0; i < 200; ++i) {
      const long p = rand_int(rng, -40, 40), q = rand_int(rng, -40, 40);
      if (p == 0 && q == 0) continue;
      Slope s = S(p, q);
      for (int k = 0; k < 4; ++k) s = slope_rotate(s);
      REQUIRE(s == S(p, q));
      if (q != 0) {
        const Slope a = S(p, q), b = S(q + 1, 7);
        REQUIRE(fs_matrix(a) * fs_matrix(b) == fs_matrix(slope_compose(a, b)));
      }
    }
  }

  TEST_CASE("classification examples") {
    const Classification c = classify_rational(canonical(3, 2));
    CHECK(c.fraction == S(3, 2));
    CHECK(c.slope == S(-2, 3));
    CHECK(classify_rational(parse_tangle("X-@0")).fraction == S(1, 1));
    CHECK(classify_rational(parse_tangle("X+@0")).fraction == S(-1, 1));
    const Classification zero = classify_rational(canonical(0, 1));
    CHECK(zero.fraction == S(0, 1));
    CHECK(zero.slope == inf);
    const Classification vertical = classify_rational(parse_tangle("tensor(id(up), id(up))"));
    CHECK(vertical.fraction == inf);
    CHECK(vertical.slope == S(0, 1));
  }

  TEST_CASE("non-rational shapes are rejected") {
    try {
      classify_rational(parse_tangle("tensor(id(up), id(up), id(up))"));
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::NotRationalShape);
    }
  }

  TEST_CASE("coloring of the 7/16 tangle and its Pluecker point") {
    const Classification c = classify_rational(canonical(7, 16));
    CHECK(c.coloring == ColoringMatrix{16, 23, 0, 7});
    CHECK(c.fraction == S(7, 16));
    const PluckerPoint pt = plucker_point(std::array<BigInt, 4>{16, 23, 0, 7});
    CHECK(pt == PluckerPoint{{7, -16, -9, -23, -16, 7}});
    const CurveCheck k = verify_rational_curve(pt);
    CHECK(k.quadric);
    CHECK(k.lines[0]);
    CHECK(k.lines[1]);
    CHECK(k.lines[2]);
    CHECK(k.diagonal);
    CHECK(k.on_curve);
    CHECK(k.parameter == S(7, -16));
    CHECK(pt.p[0] == pt.p[5]);
    CHECK(curve_fraction(c.coloring) == S(-7, 16));
    const Coloring col = coloring_propagate(canonical(7, 16), 0, 7);
    CHECK(col.matrix == ColoringMatrix{16, 23, 0, 7});
    CHECK(col.integral);
    CHECK(col.crossings.size() == 7);
  }

  TEST_CASE("coloring formulas") {
    CHECK(fraction_from_coloring({16, 23, 0, 7}) == S(7, 16));
    CHECK(fraction_from_coloring({3, 5, 3, 5}) == inf);
    CHECK(fraction_from_coloring({3 * 16 + 2, 3 * 23 + 2, 2, 3 * 7 + 2}) == S(7, 16));
    CHECK_THROWS_AS(fraction_from_coloring({4, 4, 0, 4}), Error);
    const Coloring trivial = coloring_propagate(parse_tangle("tensor(id(up), id(up))"), 2, 9);
    CHECK(trivial.matrix == ColoringMatrix{2, 9, 2, 9});
    CHECK(plucker_point(std::array<BigInt, 4>{1, 0, 0, 0}) == PluckerPoint{{-1, -1, -1, 0, 0, 0}});
    CHECK_THROWS_AS(plucker_point(std::array<BigInt, 4>{3, 3, 3, 3}), Error);
  }

  TEST_CASE("rational curve parametrization") {
    const PluckerPoint pt = rational_curve_point(1, 2);
    CHECK(pt == PluckerPoint{{1, 2, 3, 1, 2, 1}});
    const CurveCheck c = verify_rational_curve(pt);
    CHECK(c.on_curve);
    CHECK(c.parameter == S(1, 2));
    std::mt19937_64 rng(72);
    for (int i = 0; i < 200; ++i) {
      const BigInt x = rand_int(rng, -30, 30), y = rand_int(rng, -30, 30);
      if (x == 0 && y == 0) continue;
      const auto& [p12, p13, p14, p23, p24, p34] = rational_curve_point(x, y).p;
      REQUIRE(p12 * p34 - p13 * p24 + p14 * p23 == 0);
      REQUIRE(verify_rational_curve(rational_curve_point(x, y)).on_curve);
    }
    for (long s = -5; s <= 5; ++s) {
      if (s == 0) continue;
      const PluckerPoint q = plucker_point(std::array<BigInt, 4>{1, 0, 1 + s, s});
      CHECK(make_slope(q.p[0], q.p[1]) == S(-1, s));
    }
  }

  TEST_CASE("classification of random fractions") {
    std::mt19937_64 rng(73);
    int done = 0;
    while (done < 200) {
      const long long p = uniform_int(rng, -50, 50), q = uniform_int(rng, -50, 50);
      if (p == 0 && q == 0) continue;
      ++done;
      const RationalSpec r = make_rational(p, q);
      CAPTURE(r.to_string());
      const TangleExpr e = rational_canonical_expr(r);
      const Classification c = classify_rational(e);
      REQUIRE(c.fraction == fraction_slope(r));
      REQUIRE(span_equivalent(c.span, fs_span(c.slope)));
      if (!r.is_infinite() && r.p != 0) {
        const Matrix<BigRat> m = Matrix<BigRat>::identity(2) - h_matrix<BigRat>().scaled(BigRat(static_cast<long>(r.q)) / BigRat(static_cast<long>(r.p)));
        REQUIRE(span_equivalent(span_at_minus1(e), span_from_map(m)));
      }
      REQUIRE(span_equivalent(span_at_minus1_substituted(e), c.span));
      REQUIRE(classify_rational(TangleExpr::rotate(e)).slope == slope_rotate(c.slope));
      REQUIRE(c.coloring.diagonal_sum_rule());
      REQUIRE(c.curve.on_curve);
      REQUIRE(c.curve.quadric);

      const Coloring col = coloring_propagate(e, rand_int(rng, -9, 9), rand_int(rng, -9, 9) + 20);
      REQUIRE(col.matrix.diagonal_sum_rule());
      for (const auto& x : col.crossings) REQUIRE(2 * x.over == x.under_in + x.under_out);
      // the boundary coloring and v0 span the image plane of the span at t = -1
      const Matrix<BigRat> image = column_echelon(Matrix<BigRat>::vstack(c.span.left, c.span.right));
      const Matrix<BigRat> plane = corners_plane(col.matrix);
      if (rank(plane) == 2) {
        REQUIRE(rank(Matrix<BigRat>::hstack(image, plane)) == 2);
        REQUIRE(fraction_from_coloring(col.matrix) == c.fraction);
      }
    }
  }

  TEST_CASE("affine rescaling of a coloring") {
    const Coloring c = coloring_propagate(canonical(5, 3), 1, 4);
    const ColoringMatrix m = c.matrix;
    for (long k : {2L, -3L})
      for (long l : {0L, 5L}) {
        const ColoringMatrix r{k * m.a + l, k * m.b + l, k * m.c + l, k * m.d + l};
        CHECK(r.diagonal_sum_rule());
        CHECK(fraction_from_coloring(r) == fraction_from_coloring(m));
      }
  }
}
