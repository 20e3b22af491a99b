#include "spanalex/tangle.hpp"

#include <utility>

namespace spanalex {

struct TangleExpr::Node {
  Kind kind = Kind::Id;
  BoundarySignature src;
  BoundarySignature tgt;
  CrossingSign crossing_sign = CrossingSign::Plus;
  int rotation = 0;
  CupCapKind cupcap = CupCapKind::CupL;
  Direction dir = Direction::Up;
  std::vector<TangleExpr> kids;
  long exponent = 0;
};

std::string BoundarySignature::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < signs.size(); ++i) {
    if (i > 0) out += ",";
    out += signs[i] == Sign::Plus ? "+" : "-";
  }
  return out + ")";
}

namespace {

const Sign P = Sign::Plus;
const Sign M = Sign::Minus;

// Same for both crossing signs.
std::pair<BoundarySignature, BoundarySignature> crossing_boundary(int rotation) {
  switch (rotation) {
    case 0: return {{{P, P}}, {{P, P}}};
    case 1: return {{{M, P}}, {{P, M}}};
    case 2: return {{{M, M}}, {{M, M}}};
    default: return {{{P, M}}, {{M, P}}};
  }
}

const char* cupcap_name(CupCapKind k) {
  switch (k) {
    case CupCapKind::CupL: return "cupL";
    case CupCapKind::CupR: return "cupR";
    case CupCapKind::CapL: return "capL";
    default: return "capR";
  }
}

}  // namespace

TangleExpr TangleExpr::crossing(CrossingSign sign, int rotation) {
  if (rotation < 0 || rotation > 3) fail(ErrorCode::InvalidInput, "rotation class must be in 0..3");
  auto n = std::make_shared<Node>();
  n->kind = Kind::Crossing;
  n->crossing_sign = sign;
  n->rotation = rotation;
  std::tie(n->src, n->tgt) = crossing_boundary(rotation);
  return TangleExpr(std::move(n));
}

TangleExpr TangleExpr::cupcap(CupCapKind kind) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::CupCap;
  n->cupcap = kind;
  switch (kind) {
    case CupCapKind::CupL: n->tgt = {{P, M}}; break;
    case CupCapKind::CupR: n->tgt = {{M, P}}; break;
    case CupCapKind::CapR: n->src = {{P, M}}; break;
    case CupCapKind::CapL: n->src = {{M, P}}; break;
  }
  return TangleExpr(std::move(n));
}

TangleExpr TangleExpr::id(Direction dir) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Id;
  n->dir = dir;
  n->src = n->tgt = {{dir == Direction::Up ? P : M}};
  return TangleExpr(std::move(n));
}

TangleExpr TangleExpr::tensor(std::vector<TangleExpr> children) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Tensor;
  for (const auto& c : children) {
    n->src.signs.insert(n->src.signs.end(), c.source().signs.begin(), c.source().signs.end());
    n->tgt.signs.insert(n->tgt.signs.end(), c.target().signs.begin(), c.target().signs.end());
  }
  n->kids = std::move(children);
  return TangleExpr(std::move(n));
}

TangleExpr TangleExpr::compose(std::vector<TangleExpr> children) {
  if (children.empty()) fail(ErrorCode::InvalidInput, "compose needs at least one argument");
  for (std::size_t i = 1; i < children.size(); ++i) {
    if (!(children[i - 1].target() == children[i].source())) {
      fail(ErrorCode::BoundaryMismatch,
           "compose argument " + std::to_string(i) + " has target " + children[i - 1].target().to_string() +
               " but argument " + std::to_string(i + 1) + " has source " + children[i].source().to_string());
    }
  }
  auto n = std::make_shared<Node>();
  n->kind = Kind::Compose;
  n->src = children.front().source();
  n->tgt = children.back().target();
  n->kids = std::move(children);
  return TangleExpr(std::move(n));
}

TangleExpr TangleExpr::rotate(const TangleExpr& child) {
  if (child.source().size() != 2 || child.target().size() != 2) {
    fail(ErrorCode::BoundaryMismatch, "rot needs a 2-tangle, got " + child.source().to_string() + " -> " +
                                          child.target().to_string());
  }
  if (child.kind() == Kind::Crossing) return crossing(child.crossing_sign(), (child.rotation() + 1) % 4);
  auto n = std::make_shared<Node>();
  n->kind = Kind::Rotate;
  const auto& s = child.source().signs;
  const auto& t = child.target().signs;
  n->src = {{flip(t[0]), s[0]}};
  n->tgt = {{t[1], flip(s[1])}};
  n->kids = {child};
  return TangleExpr(std::move(n));
}

TangleExpr TangleExpr::pow(const TangleExpr& child, long k) {
  if (!(child.source() == child.target())) {
    fail(ErrorCode::BoundaryMismatch, "pow needs an endomorphism, got " + child.source().to_string() + " -> " +
                                          child.target().to_string());
  }
  auto n = std::make_shared<Node>();
  n->kind = Kind::Pow;
  n->src = n->tgt = child.source();
  n->kids = {k < 0 ? inverse_tangle(child) : child};
  n->exponent = k < 0 ? -k : k;
  return TangleExpr(std::move(n));
}

TangleExpr::Kind TangleExpr::kind() const { return node_->kind; }
const BoundarySignature& TangleExpr::source() const { return node_->src; }
const BoundarySignature& TangleExpr::target() const { return node_->tgt; }
CrossingSign TangleExpr::crossing_sign() const { return node_->crossing_sign; }
int TangleExpr::rotation() const { return node_->rotation; }
CupCapKind TangleExpr::cupcap_kind() const { return node_->cupcap; }
Direction TangleExpr::direction() const { return node_->dir; }
const std::vector<TangleExpr>& TangleExpr::children() const { return node_->kids; }
const TangleExpr& TangleExpr::child() const { return node_->kids.front(); }
long TangleExpr::exponent() const { return node_->exponent; }

std::size_t TangleExpr::crossing_count() const {
  switch (kind()) {
    case Kind::Crossing: return 1;
    case Kind::CupCap:
    case Kind::Id: return 0;
    case Kind::Pow: return static_cast<std::size_t>(exponent()) * child().crossing_count();
    default: {
      std::size_t total = 0;
      for (const auto& c : children()) total += c.crossing_count();
      return total;
    }
  }
}

std::string TangleExpr::to_string() const {
  auto join = [](const std::vector<TangleExpr>& kids) {
    std::string out;
    for (std::size_t i = 0; i < kids.size(); ++i) {
      if (i > 0) out += ", ";
      out += kids[i].to_string();
    }
    return out;
  };
  switch (kind()) {
    case Kind::Crossing:
      return std::string(crossing_sign() == CrossingSign::Plus ? "X+@" : "X-@") + std::to_string(rotation());
    case Kind::CupCap: return cupcap_name(cupcap_kind());
    case Kind::Id: return direction() == Direction::Up ? "id(up)" : "id(down)";
    case Kind::Tensor: return "tensor(" + join(children()) + ")";
    case Kind::Compose: return "compose(" + join(children()) + ")";
    case Kind::Rotate: return "rot(" + child().to_string() + ")";
    case Kind::Pow: return "pow(" + child().to_string() + ", " + std::to_string(exponent()) + ")";
  }
  return {};
}

bool operator==(const TangleExpr& a, const TangleExpr& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case TangleExpr::Kind::Crossing:
      return a.crossing_sign() == b.crossing_sign() && a.rotation() == b.rotation();
    case TangleExpr::Kind::CupCap: return a.cupcap_kind() == b.cupcap_kind();
    case TangleExpr::Kind::Id: return a.direction() == b.direction();
    case TangleExpr::Kind::Pow: return a.exponent() == b.exponent() && a.child() == b.child();
    default: return a.children() == b.children();
  }
}

TangleExpr identity_on(const BoundarySignature& sig) {
  std::vector<TangleExpr> ids;
  for (Sign s : sig.signs) ids.push_back(TangleExpr::id(s == Sign::Plus ? Direction::Up : Direction::Down));
  if (ids.size() == 1) return ids.front();
  return TangleExpr::tensor(std::move(ids));
}

TangleExpr inverse_tangle(const TangleExpr& e) {
  using K = TangleExpr::Kind;
  switch (e.kind()) {
    case K::Crossing:
      return TangleExpr::crossing(e.crossing_sign() == CrossingSign::Plus ? CrossingSign::Minus : CrossingSign::Plus,
                                  (4 - e.rotation()) % 4);
    case K::Id: return e;
    case K::Tensor: {
      std::vector<TangleExpr> kids;
      for (const auto& c : e.children()) kids.push_back(inverse_tangle(c));
      return TangleExpr::tensor(std::move(kids));
    }
    case K::Compose: {
      std::vector<TangleExpr> kids;
      for (auto it = e.children().rbegin(); it != e.children().rend(); ++it) kids.push_back(inverse_tangle(*it));
      return TangleExpr::compose(std::move(kids));
    }
    case K::Pow: return TangleExpr::pow(inverse_tangle(e.child()), e.exponent());
    default:
      fail(ErrorCode::InvalidInput, "no inverse available for " + e.to_string());
  }
}

TangleExpr reverse_tangle(const TangleExpr& e) {
  using K = TangleExpr::Kind;
  switch (e.kind()) {
    case K::Crossing: return TangleExpr::crossing(e.crossing_sign(), (e.rotation() + 2) % 4);
    case K::CupCap: {
      static const CupCapKind swapped[] = {CupCapKind::CupR, CupCapKind::CupL, CupCapKind::CapR, CupCapKind::CapL};
      return TangleExpr::cupcap(swapped[static_cast<int>(e.cupcap_kind())]);
    }
    case K::Id: return TangleExpr::id(e.direction() == Direction::Up ? Direction::Down : Direction::Up);
    case K::Tensor:
    case K::Compose: {
      std::vector<TangleExpr> kids;
      for (const auto& c : e.children()) kids.push_back(reverse_tangle(c));
      return e.kind() == K::Tensor ? TangleExpr::tensor(std::move(kids)) : TangleExpr::compose(std::move(kids));
    }
    case K::Rotate: return TangleExpr::rotate(reverse_tangle(e.child()));
    case K::Pow: return TangleExpr::pow(reverse_tangle(e.child()), e.exponent());
  }
  return e;
}

}  // namespace spanalex
