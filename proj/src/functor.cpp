#include "spanalex/functor.hpp"

namespace spanalex {

TangleExpr expand_rotation(const TangleExpr& child) {
  if (child.source().size() != 2 || child.target().size() != 2) {
    fail(ErrorCode::BoundaryMismatch, "rotation needs a 2-tangle");
  }
  const Sign s2 = child.source().signs[1];
  const Sign t1 = child.target().signs[0];
  const Sign t2 = child.target().signs[1];
  auto id = [](Sign s) { return TangleExpr::id(s == Sign::Plus ? Direction::Up : Direction::Down); };
  // (-t1, s1) -> (-t1, s1, s2, -s2) -> (-t1, t1, t2, -s2) -> (t2, -s2)
  TangleExpr cup = TangleExpr::cupcap(s2 == Sign::Plus ? CupCapKind::CupL : CupCapKind::CupR);
  TangleExpr cap = TangleExpr::cupcap(flip(t1) == Sign::Plus ? CupCapKind::CapR : CupCapKind::CapL);
  TangleExpr step1 = TangleExpr::tensor({id(flip(t1)), id(child.source().signs[0]), cup});
  TangleExpr step2 = TangleExpr::tensor({id(flip(t1)), child, id(flip(s2))});
  TangleExpr step3 = TangleExpr::tensor({cap, id(t2), id(flip(s2))});
  return TangleExpr::compose({step1, step2, step3});
}

Matrix<RatFunc> codirected_power(long n, CrossingSign sign) { return codirected_power(n, sign, symbolic_t()); }

Matrix<RatFunc> alternating_power(long n, CrossingSign sign, bool at_t_inv) {
  return alternating_power(n, sign, at_t_inv, symbolic_t());
}

Span<RatFunc> at_tangle(const TangleExpr& e, EvalMode mode) { return at_tangle(e, symbolic_t(), mode); }

}  // namespace spanalex
