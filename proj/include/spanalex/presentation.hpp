#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "spanalex/matrix.hpp"
#include "spanalex/tangle.hpp"

namespace spanalex {

/// Invariants of a closed diagram (0 -> 0 tangle) read off a relation-form
/// presentation: one variable per generator leg, crossing relations, and
/// gluing relations for every composition.
struct ClosedInvariants {
  std::size_t components = 0;
  std::size_t variables = 0;  // before elimination
  std::size_t relations = 0;
  /// Matrix left after eliminating unit pivots over Z[t, t^-1].
  Matrix<LaurentPoly> reduced;
  /// Product of the diagonal after Euclidean diagonalization of `reduced`:
  /// the order of the torsion module, zero when the corank exceeds one.
  LaurentPoly order;
};

ClosedInvariants closed_invariants(const TangleExpr& e);

using SparseRow = std::map<std::size_t, BigRat>;

/// A crossing inside a relation system: its outputs are map * (in0, in1).
struct CrossingSite {
  std::size_t in0 = 0;
  std::size_t in1 = 0;
  Matrix<BigRat> map;
  bool over_first = true;  // the over-arc is input 0 (else input 1)
};

/// Relation-form presentation at a rational t, keeping the boundary: the
/// value on source point i is source[i] applied to a solution vector.
struct LegSystem {
  std::size_t vars = 0;
  std::vector<SparseRow> relations;
  std::vector<SparseRow> source;
  std::vector<SparseRow> target;
  std::vector<CrossingSite> crossings;
};

LegSystem leg_system(const TangleExpr& e, const BigRat& t);

}  // namespace spanalex
