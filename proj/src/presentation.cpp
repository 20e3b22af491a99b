#include "spanalex/presentation.hpp"

#include <limits>
#include <map>
#include <set>

#include "spanalex/functor.hpp"

namespace spanalex {

namespace {

template <class R>
using Row = std::map<std::size_t, R>;

template <class R>
struct Site {
  std::size_t in0 = 0;
  std::size_t in1 = 0;
  Matrix<R> map;
  bool over_first = true;
};

template <class R>
struct Presented {
  std::size_t vars = 0;
  std::vector<Row<R>> rels;
  std::vector<Row<R>> left;
  std::vector<Row<R>> right;
  std::vector<Site<R>> sites;
};

struct LaurentOps {
  using R = LaurentPoly;
  static bool is_unit(const R& x) { return x.is_monomial(); }
  static R div_unit(const R& a, const R& u) { return a.divided_by_monomial(u); }
};

// Specialization at t = 1: colors are constant along strands.
struct AtOneOps {
  using R = BigRat;
  static bool is_unit(const R& x) { return sgn(x) != 0; }
  static R div_unit(const R& a, const R& u) { return a / u; }
};

template <class R>
Row<R> unit_row(std::size_t v) {
  return Row<R>{{v, R(1)}};
}

template <class R>
Row<R> shifted(const Row<R>& row, std::size_t by) {
  Row<R> out;
  for (const auto& [v, c] : row) out.emplace(v + by, c);
  return out;
}

template <class R>
void append_shifted(std::vector<Row<R>>& dst, const std::vector<Row<R>>& src, std::size_t by) {
  for (const auto& row : src) dst.push_back(shifted(row, by));
}

template <class R>
void append_sites(std::vector<Site<R>>& dst, const std::vector<Site<R>>& src, std::size_t by) {
  for (const auto& site : src) dst.push_back({site.in0 + by, site.in1 + by, site.map, site.over_first});
}

template <class R>
Presented<R> build(const TangleExpr& e, const TValue<R>& tv) {
  using K = TangleExpr::Kind;
  Presented<R> p;
  switch (e.kind()) {
    case K::Crossing: {
      const Matrix<R> a = crossing_matrix(e.crossing_sign(), e.rotation(), tv);
      // f+ type maps pass the first input over, f- type maps the second.
      const bool over_first = (e.crossing_sign() == CrossingSign::Plus) == (e.rotation() % 2 == 0);
      p.sites.push_back({0, 1, a, over_first});
      p.vars = 2;
      p.left = {unit_row<R>(0), unit_row<R>(1)};
      for (std::size_t i = 0; i < 2; ++i) {
        Row<R> row;
        for (std::size_t j = 0; j < 2; ++j)
          if (!is_zero(a(i, j))) row.emplace(j, a(i, j));
        p.right.push_back(std::move(row));
      }
      return p;
    }
    case K::Id:
      p.vars = 1;
      p.left = {unit_row<R>(0)};
      p.right = {unit_row<R>(0)};
      return p;
    case K::CupCap: {
      p.vars = 1;
      const bool cup = e.cupcap_kind() == CupCapKind::CupL || e.cupcap_kind() == CupCapKind::CupR;
      (cup ? p.right : p.left) = std::vector<Row<R>>{unit_row<R>(0), unit_row<R>(0)};
      return p;
    }
    case K::Tensor:
      for (const auto& c : e.children()) {
        Presented<R> q = build(c, tv);
        append_shifted(p.rels, q.rels, p.vars);
        append_sites(p.sites, q.sites, p.vars);
        append_shifted(p.left, q.left, p.vars);
        append_shifted(p.right, q.right, p.vars);
        p.vars += q.vars;
      }
      return p;
    case K::Compose:
    case K::Pow: {
      std::vector<TangleExpr> parts;
      if (e.kind() == K::Compose) parts = e.children();
      else parts.assign(static_cast<std::size_t>(e.exponent()), e.child());
      if (parts.empty()) return build(identity_on(e.source()), tv);
      p = build(parts.front(), tv);
      for (std::size_t i = 1; i < parts.size(); ++i) {
        Presented<R> q = build(parts[i], tv);
        append_shifted(p.rels, q.rels, p.vars);
        append_sites(p.sites, q.sites, p.vars);
        for (std::size_t j = 0; j < q.left.size(); ++j) {
          Row<R> glue = p.right[j];
          for (const auto& [v, c] : q.left[j]) {
            R& slot = glue[v + p.vars];
            slot -= c;
            if (is_zero(slot)) glue.erase(v + p.vars);
          }
          if (!glue.empty()) p.rels.push_back(std::move(glue));
        }
        p.right.clear();
        append_shifted(p.right, q.right, p.vars);
        p.vars += q.vars;
      }
      return p;
    }
    case K::Rotate: {
      Presented<R> q = build(e.child(), tv);
      p.vars = q.vars;
      p.rels = std::move(q.rels);
      p.sites = std::move(q.sites);
      p.left = {q.right[0], q.left[0]};
      p.right = {q.right[1], q.left[1]};
      return p;
    }
  }
  return p;
}

// Gaussian elimination on unit pivots (Markowitz order). Returns the
// surviving relations restricted to the surviving variables.
template <class Ops>
Matrix<typename Ops::R> eliminate_units(std::size_t nvars, std::vector<Row<typename Ops::R>> rows) {
  using R = typename Ops::R;
  std::vector<std::set<std::size_t>> col(nvars);
  std::vector<bool> alive(rows.size(), true);
  std::vector<bool> active(nvars, true);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (const auto& [v, c] : rows[r]) col[v].insert(r);

  while (true) {
    std::size_t best_r = rows.size(), best_v = 0;
    std::size_t best_score = std::numeric_limits<std::size_t>::max();
    for (std::size_t r = 0; r < rows.size() && best_score > 0; ++r) {
      if (!alive[r]) continue;
      for (const auto& [v, c] : rows[r]) {
        if (!Ops::is_unit(c)) continue;
        const std::size_t score = (rows[r].size() - 1) * (col[v].size() - 1);
        if (score < best_score) {
          best_score = score;
          best_r = r;
          best_v = v;
        }
      }
    }
    if (best_r == rows.size()) break;
    const R u = rows[best_r].at(best_v);
    const std::set<std::size_t> targets = col[best_v];
    for (std::size_t s : targets) {
      if (s == best_r) continue;
      const R factor = Ops::div_unit(rows[s].at(best_v), u);
      for (const auto& [w, c] : rows[best_r]) {
        R& slot = rows[s][w];
        slot -= factor * c;
        if (is_zero(slot)) {
          rows[s].erase(w);
          col[w].erase(s);
        } else {
          col[w].insert(s);
        }
      }
      if (rows[s].empty()) alive[s] = false;
    }
    for (const auto& [w, c] : rows[best_r]) col[w].erase(best_r);
    alive[best_r] = false;
    active[best_v] = false;
  }

  std::vector<std::size_t> var_index(nvars, 0);
  std::size_t nactive = 0;
  for (std::size_t v = 0; v < nvars; ++v)
    if (active[v]) var_index[v] = nactive++;
  std::vector<std::size_t> live_rows;
  for (std::size_t r = 0; r < rows.size(); ++r)
    if (alive[r] && !rows[r].empty()) live_rows.push_back(r);
  Matrix<R> out(live_rows.size(), nactive);
  for (std::size_t i = 0; i < live_rows.size(); ++i)
    for (const auto& [v, c] : rows[live_rows[i]]) out(i, var_index[v]) = c;
  return out;
}

// Diagonal form over the Euclidean ring Q[t, t^-1]; returns the nonzero
// diagonal entries.
std::vector<LaurentPoly> diagonalize(Matrix<LaurentPoly> a) {
  std::vector<LaurentPoly> diag;
  const std::size_t m = a.rows(), n = a.cols();
  auto swap_cols = [&](std::size_t x, std::size_t y) {
    if (x == y) return;
    for (std::size_t i = 0; i < m; ++i) std::swap(a(i, x), a(i, y));
  };
  for (std::size_t r = 0; r < std::min(m, n); ++r) {
    std::size_t bi = m, bj = n;
    int best = std::numeric_limits<int>::max();
    for (std::size_t i = r; i < m; ++i)
      for (std::size_t j = r; j < n; ++j)
        if (!a(i, j).is_zero() && a(i, j).width() < best) {
          best = a(i, j).width();
          bi = i;
          bj = j;
        }
    if (bi == m) break;
    a.swap_rows(r, bi);
    swap_cols(r, bj);
    bool again = true;
    while (again) {
      again = false;
      for (std::size_t i = r + 1; i < m && !again; ++i) {
        if (a(i, r).is_zero()) continue;
        const auto dm = laurent_divmod(a(i, r), a(r, r));
        for (std::size_t j = r; j < n; ++j)
          if (!a(r, j).is_zero()) a(i, j) -= dm.quotient * a(r, j);
        if (!a(i, r).is_zero()) {
          a.swap_rows(r, i);
          again = true;
        }
      }
      for (std::size_t j = r + 1; j < n && !again; ++j) {
        if (a(r, j).is_zero()) continue;
        const auto dm = laurent_divmod(a(r, j), a(r, r));
        for (std::size_t i = r; i < m; ++i)
          if (!a(i, r).is_zero()) a(i, j) -= dm.quotient * a(i, r);
        if (!a(r, j).is_zero()) {
          swap_cols(r, j);
          again = true;
        }
      }
    }
    diag.push_back(a(r, r));
  }
  return diag;
}

}  // namespace

ClosedInvariants closed_invariants(const TangleExpr& e) {
  if (e.source().size() != 0 || e.target().size() != 0) {
    fail(ErrorCode::InvalidInput, "expression is not closed: " + e.source().to_string() + " -> " +
                                      e.target().to_string());
  }
  ClosedInvariants out;
  {
    Presented<BigRat> at_one = build(e, TValue<BigRat>{BigRat(1), BigRat(1)});
    Matrix<BigRat> rest = eliminate_units<AtOneOps>(at_one.vars, std::move(at_one.rels));
    out.components = rest.cols();
  }
  Presented<LaurentPoly> p = build(e, TValue<LaurentPoly>{LaurentPoly::t_power(1), LaurentPoly::t_power(-1)});
  out.variables = p.vars;
  out.relations = p.rels.size();
  out.reduced = eliminate_units<LaurentOps>(p.vars, std::move(p.rels));
  const std::vector<LaurentPoly> diag = diagonalize(out.reduced);
  if (out.reduced.cols() == 0 || diag.size() + 1 < out.reduced.cols()) {
    out.order = LaurentPoly();
  } else {
    out.order = LaurentPoly(1);
    for (const auto& d : diag) out.order *= d;
  }
  return out;
}

LegSystem leg_system(const TangleExpr& e, const BigRat& t) {
  Presented<BigRat> p = build(e, t_value(t));
  LegSystem out;
  out.vars = p.vars;
  out.relations = std::move(p.rels);
  out.source = std::move(p.left);
  out.target = std::move(p.right);
  for (auto& site : p.sites) out.crossings.push_back({site.in0, site.in1, std::move(site.map), site.over_first});
  return out;
}

}  // namespace spanalex
