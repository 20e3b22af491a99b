#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "spanalex/functor.hpp"
#include "spanalex/tangle.hpp"

namespace spanalex {

/// Projective pair [p : q] standing for p/q; q = 0 is infinity, stored [1 : 0].
/// Reduced with q >= 0.
struct Slope {
  BigInt p = 0;
  BigInt q = 1;

  bool is_infinite() const { return q == 0; }
  std::string to_string() const;
  friend bool operator==(const Slope& a, const Slope& b) { return a.p == b.p && a.q == b.q; }
};

Slope make_slope(BigInt p, BigInt q);
Slope slope_from(const BigRat& x);
Slope slope_compose(const Slope& a, const Slope& b);
/// s -> -1/s, exchanging 0 and infinity.
Slope slope_rotate(const Slope& s);

/// f^s = id + s h at t = -1.
Matrix<BigRat> fs_matrix(const Slope& s);
/// Basic span of f^s; for s = infinity the rotated identity.
Span<BigRat> fs_span(const Slope& s);

/// The functor at t = -1, evaluated directly over Q.
Span<BigRat> span_at_minus1(const TangleExpr& e);
/// Same span obtained by evaluating the symbolic span entrywise at t = -1;
/// throws PoleAtSpecialization on a vanishing denominator.
Span<BigRat> span_at_minus1_substituted(const TangleExpr& e);

/// Boundary colors (a, b, c, d) = (NW, NE, SW, SE).
struct ColoringMatrix {
  BigInt a, b, c, d;
  bool diagonal_sum_rule() const { return a - b == c - d; }
  friend bool operator==(const ColoringMatrix&, const ColoringMatrix&) = default;
};

struct PluckerPoint {
  std::array<BigInt, 6> p;  // p12, p13, p14, p23, p24, p34
  friend bool operator==(const PluckerPoint&, const PluckerPoint&) = default;
};

/// p_ij = v_j - v_i, divided by the gcd.
PluckerPoint plucker_point(const std::array<BigInt, 4>& v);
inline PluckerPoint plucker_point(const ColoringMatrix& m) { return plucker_point(std::array<BigInt, 4>{m.a, m.b, m.c, m.d}); }

struct CurveCheck {
  bool quadric = false;
  std::array<bool, 3> lines{};  // p12-p13+p23, p12-p14+p24, p13-p14+p34
  bool diagonal = false;        // p12 + p13 - p14 = 0
  bool on_curve = false;
  Slope parameter;  // [p12 : p13]
};

CurveCheck verify_rational_curve(const PluckerPoint& pt);
/// [x : y] -> [x : y : x+y : y-x : y : x]
PluckerPoint rational_curve_point(const BigInt& x, const BigInt& y);

/// (b - a) / (b - d).
Slope fraction_from_coloring(const ColoringMatrix& m);
/// (v4 - v3) / (v4 - v2), reported with its own sign.
Slope curve_fraction(const ColoringMatrix& m);

struct Classification {
  Slope slope;
  Slope fraction;  // -1/slope
  ColoringMatrix coloring;
  PluckerPoint plucker;
  CurveCheck curve;
  Slope curve_fraction;
  Span<BigRat> span;
};

/// Reads the slope off the t = -1 span of a 2-tangle; NotRationalShape when
/// the span is not of f^s shape.
Classification classify_rational(const TangleExpr& e);

struct CrossingColors {
  BigRat over;
  BigRat under_in;
  BigRat under_out;
};

struct Coloring {
  ColoringMatrix matrix;
  std::vector<BigRat> boundary;  // NW, NE, SW, SE
  std::vector<CrossingColors> crossings;
  std::string seed_arcs;  // "SW,SE" or "NW,SW"
  bool integral = true;
};

/// Fox coloring extending seed values on two boundary arcs: SW and SE, or NW
/// and SW when the bottom arcs are forced equal.
Coloring coloring_propagate(const TangleExpr& e, const BigInt& x, const BigInt& y);

}  // namespace spanalex
