#include "spanalex/minus1.hpp"

#include <algorithm>
#include <map>

#include "spanalex/presentation.hpp"

namespace spanalex {

namespace {

BigInt gcd_of(const BigInt& a, const BigInt& b) {
  BigInt g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

BigInt lcm_of(const BigInt& a, const BigInt& b) {
  BigInt l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

// Stacked vector of a span column reordered to (NW, NE, SW, SE).
std::array<BigRat, 4> corners(const Matrix<BigRat>& stacked, std::size_t col) {
  return {stacked(2, col), stacked(3, col), stacked(0, col), stacked(1, col)};
}

std::array<BigInt, 4> primitive(const std::array<BigRat, 4>& v) {
  BigInt den = 1;
  for (const auto& x : v) den = lcm_of(den, x.get_den());
  std::array<BigInt, 4> out;
  BigInt g = 0;
  for (std::size_t i = 0; i < 4; ++i) {
    out[i] = v[i].get_num() * (den / v[i].get_den());
    g = gcd_of(g, out[i]);
  }
  if (g != 0)
    for (auto& x : out) x /= g;
  return out;
}

// Sparse solver: rows are reduced against earlier pivots as they arrive and
// the solution is read off by back substitution, free variables set to 0.
struct SparseSolver {
  struct Pivot {
    std::size_t var;
    SparseRow row;  // pivot coefficient 1
    BigRat rhs;
  };
  std::map<std::size_t, std::size_t> pivot_of;  // var -> index into pivots
  std::vector<Pivot> pivots;
  bool consistent = true;

  void add(SparseRow row, BigRat rhs) {
    while (true) {
      auto it = std::find_if(row.begin(), row.end(), [&](const auto& kv) { return pivot_of.count(kv.first) > 0; });
      if (it == row.end()) break;
      const BigRat factor = it->second;
      const Pivot& pv = pivots[pivot_of[it->first]];
      for (const auto& [v, c] : pv.row) {
        BigRat& slot = row[v];
        slot -= factor * c;
        if (sgn(slot) == 0) row.erase(v);
      }
      rhs -= factor * pv.rhs;
    }
    if (row.empty()) {
      if (sgn(rhs) != 0) consistent = false;
      return;
    }
    const auto [var, lead] = *row.begin();
    const BigRat inv = 1 / lead;
    for (auto& [v, c] : row) c *= inv;
    pivot_of[var] = pivots.size();
    pivots.push_back({var, std::move(row), rhs * inv});
  }

  std::vector<BigRat> solve(std::size_t vars) const {
    std::vector<BigRat> x(vars, BigRat(0));
    for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
      BigRat value = it->rhs;
      for (const auto& [v, c] : it->row)
        if (v != it->var) value -= c * x[v];
      x[it->var] = value;
    }
    return x;
  }
};

BigRat apply(const SparseRow& row, const std::vector<BigRat>& x) {
  BigRat s = 0;
  for (const auto& [v, c] : row) s += c * x[v];
  return s;
}

}  // namespace

std::string Slope::to_string() const {
  if (q == 0) return "inf";
  if (q == 1) return p.get_str();
  return p.get_str() + "/" + q.get_str();
}

Slope make_slope(BigInt p, BigInt q) {
  if (p == 0 && q == 0) fail(ErrorCode::InvalidInput, "[0 : 0] is not a slope");
  if (q == 0) return {1, 0};
  const BigInt g = gcd_of(p, q);
  p /= g;
  q /= g;
  if (q < 0) {
    p = -p;
    q = -q;
  }
  return {p, q};
}

Slope slope_from(const BigRat& x) { return make_slope(x.get_num(), x.get_den()); }

Slope slope_compose(const Slope& a, const Slope& b) {
  if (a.is_infinite() || b.is_infinite()) fail(ErrorCode::InfiniteSlope, "composition with an infinite slope");
  return make_slope(a.p * b.q + b.p * a.q, a.q * b.q);
}

Slope slope_rotate(const Slope& s) { return make_slope(-s.q, s.p); }

Matrix<BigRat> fs_matrix(const Slope& s) {
  if (s.is_infinite()) fail(ErrorCode::InfiniteSlope, "f^s needs a finite slope");
  const BigRat v(s.p, s.q);
  return Matrix<BigRat>::identity(2) + h_matrix<BigRat>().scaled(v);
}

Span<BigRat> fs_span(const Slope& s) {
  if (s.is_infinite()) return span_rotate2(span_identity<BigRat>(2));
  return span_from_map(fs_matrix(s));
}

Span<BigRat> span_at_minus1(const TangleExpr& e) { return at_tangle(e, t_value(BigRat(-1))); }

Span<BigRat> span_at_minus1_substituted(const TangleExpr& e) {
  return span_map(at_tangle(e), [](const RatFunc& x) { return x.evaluate(BigRat(-1)); });
}

PluckerPoint plucker_point(const std::array<BigInt, 4>& v) {
  if (v[0] == v[1] && v[1] == v[2] && v[2] == v[3]) {
    fail(ErrorCode::DegeneratePlane, "vector is proportional to (1,1,1,1)");
  }
  PluckerPoint pt;
  std::size_t k = 0;
  BigInt g = 0;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j) {
      pt.p[k] = v[j] - v[i];
      g = gcd_of(g, pt.p[k]);
      ++k;
    }
  for (auto& x : pt.p) x /= g;
  return pt;
}

CurveCheck verify_rational_curve(const PluckerPoint& pt) {
  const auto& [p12, p13, p14, p23, p24, p34] = pt.p;
  CurveCheck c;
  c.quadric = p12 * p34 - p13 * p24 + p14 * p23 == 0;
  c.lines = {p12 - p13 + p23 == 0, p12 - p14 + p24 == 0, p13 - p14 + p34 == 0};
  c.diagonal = p12 + p13 - p14 == 0;
  c.on_curve = c.quadric && c.lines[0] && c.lines[1] && c.lines[2] && c.diagonal;
  if (p12 != 0 || p13 != 0) c.parameter = make_slope(p12, p13);
  return c;
}

PluckerPoint rational_curve_point(const BigInt& x, const BigInt& y) {
  PluckerPoint pt{{x, y, x + y, y - x, y, x}};
  const BigInt g = gcd_of(x, y);
  if (g == 0) fail(ErrorCode::DegeneratePlane, "[0 : 0] is not a point");
  for (auto& v : pt.p) v /= g;
  return pt;
}

Slope fraction_from_coloring(const ColoringMatrix& m) {
  if (m.b == m.a && m.b == m.d) fail(ErrorCode::TrivialColoring, "coloring is constant on the boundary");
  return make_slope(m.b - m.a, m.b - m.d);
}

Slope curve_fraction(const ColoringMatrix& m) {
  if (m.d == m.c && m.d == m.b) fail(ErrorCode::TrivialColoring, "coloring is constant on the boundary");
  return make_slope(m.d - m.c, m.d - m.b);
}

Classification classify_rational(const TangleExpr& e) {
  if (e.source().size() != 2 || e.target().size() != 2) {
    fail(ErrorCode::NotRationalShape, "not a 2-tangle: " + e.source().to_string() + " -> " + e.target().to_string());
  }
  Classification out;
  out.span = span_at_minus1(e);
  const Matrix<BigRat> image = column_echelon(Matrix<BigRat>::vstack(out.span.left, out.span.right));
  if (out.span.apex != 2 || image.cols() != 2) {
    fail(ErrorCode::NotRationalShape, "span at t = -1 has apex " + std::to_string(out.span.apex) + " and rank " +
                                          std::to_string(image.cols()));
  }
  const Matrix<BigRat> with_v0 = Matrix<BigRat>::hstack(image, Matrix<BigRat>{{1}, {1}, {1}, {1}});
  if (rank(with_v0) != 2) fail(ErrorCode::NotRationalShape, "constant colorings are not in the image plane");
  // A basis column not proportional to v0, shifted so SW = 0.
  std::size_t col = 0;
  {
    const auto v = corners(image, 0);
    if (v[0] == v[1] && v[1] == v[2] && v[2] == v[3]) col = 1;
  }
  std::array<BigRat, 4> w = corners(image, col);
  const BigRat shift = w[2];
  for (auto& x : w) x -= shift;
  std::array<BigInt, 4> v = primitive(w);
  for (std::size_t i : {3u, 1u, 0u}) {
    if (v[i] == 0) continue;
    if (v[i] < 0)
      for (auto& x : v) x = -x;
    break;
  }
  out.coloring = {v[0], v[1], v[2], v[3]};
  if (!out.coloring.diagonal_sum_rule()) fail(ErrorCode::NotRationalShape, "diagonal sum rule fails");
  out.fraction = fraction_from_coloring(out.coloring);
  out.slope = slope_rotate(out.fraction);
  out.plucker = plucker_point(v);
  out.curve = verify_rational_curve(out.plucker);
  out.curve_fraction = curve_fraction(out.coloring);
  return out;
}

Coloring coloring_propagate(const TangleExpr& e, const BigInt& x, const BigInt& y) {
  const Classification cls = classify_rational(e);
  const LegSystem sys = leg_system(e, BigRat(-1));
  Coloring out;
  // Bottom arcs are forced equal exactly for horizontal (fraction 0) planes.
  const bool bottom_free = cls.coloring.c != cls.coloring.d;
  out.seed_arcs = bottom_free ? "SW,SE" : "NW,SW";
  SparseSolver solver;
  for (const auto& r : sys.relations) solver.add(r, BigRat(0));
  if (bottom_free) {
    solver.add(sys.source[0], BigRat(x));
    solver.add(sys.source[1], BigRat(y));
  } else {
    solver.add(sys.target[0], BigRat(x));
    solver.add(sys.source[0], BigRat(y));
  }
  if (!solver.consistent) fail(ErrorCode::NotRationalShape, "seed colors are inconsistent with the tangle");
  const std::vector<BigRat> sol = solver.solve(sys.vars);
  out.boundary = {apply(sys.target[0], sol), apply(sys.target[1], sol), apply(sys.source[0], sol),
                  apply(sys.source[1], sol)};
  for (const auto& site : sys.crossings) {
    const BigRat x0 = sol[site.in0], x1 = sol[site.in1];
    const BigRat y0 = site.map(0, 0) * x0 + site.map(0, 1) * x1;
    const BigRat y1 = site.map(1, 0) * x0 + site.map(1, 1) * x1;
    CrossingColors cc = site.over_first ? CrossingColors{x0, x1, y0} : CrossingColors{x1, x0, y1};
    if (2 * cc.over != cc.under_in + cc.under_out) {
      fail(ErrorCode::InternalInconsistency, "Fox rule fails at a crossing");
    }
    for (const BigRat* c : {&cc.over, &cc.under_in, &cc.under_out})
      if (c->get_den() != 1) out.integral = false;
    out.crossings.push_back(std::move(cc));
  }
  std::array<BigRat, 4> b{out.boundary[0], out.boundary[1], out.boundary[2], out.boundary[3]};
  for (const auto& c : b)
    if (c.get_den() != 1) out.integral = false;
  if (out.integral) {
    out.matrix = {b[0].get_num(), b[1].get_num(), b[2].get_num(), b[3].get_num()};
  } else {
    BigInt den = 1;
    for (const auto& c : b) den = lcm_of(den, c.get_den());
    out.matrix = {b[0].get_num() * (den / b[0].get_den()), b[1].get_num() * (den / b[1].get_den()),
                  b[2].get_num() * (den / b[2].get_den()), b[3].get_num() * (den / b[3].get_den())};
  }
  return out;
}

}  // namespace spanalex
