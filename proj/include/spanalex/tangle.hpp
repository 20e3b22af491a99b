#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "spanalex/errors.hpp"

namespace spanalex {

enum class Sign : std::uint8_t { Plus, Minus };

inline Sign flip(Sign s) { return s == Sign::Plus ? Sign::Minus : Sign::Plus; }

/// Ordered boundary points of a tangle, + for a strand oriented upwards.
struct BoundarySignature {
  std::vector<Sign> signs;

  std::size_t size() const { return signs.size(); }
  std::string to_string() const;
  friend bool operator==(const BoundarySignature&, const BoundarySignature&) = default;
};

enum class CrossingSign : std::uint8_t { Plus, Minus };
enum class CupCapKind : std::uint8_t { CupL, CupR, CapL, CapR };
enum class Direction : std::uint8_t { Up, Down };

/// Immutable oriented tangle expression with typechecked boundaries.
///
/// Crossings are X+ / X- in rotation class 0..3. cupL and cupR create a pair
/// (+,-) and (-,+) respectively; capR and capL close (+,-) and (-,+).
class TangleExpr {
 public:
  enum class Kind : std::uint8_t { Crossing, CupCap, Id, Tensor, Compose, Rotate, Pow };

  static TangleExpr crossing(CrossingSign sign, int rotation);
  static TangleExpr cupcap(CupCapKind kind);
  static TangleExpr id(Direction dir);
  static TangleExpr tensor(std::vector<TangleExpr> children);
  /// children[0] is applied first.
  static TangleExpr compose(std::vector<TangleExpr> children);
  /// Rotation of a 2-tangle; rotating a crossing folds into its rotation class.
  static TangleExpr rotate(const TangleExpr& child);
  /// n-fold composite of an endomorphism; n < 0 requires an invertible child.
  static TangleExpr pow(const TangleExpr& child, long n);

  Kind kind() const;
  const BoundarySignature& source() const;
  const BoundarySignature& target() const;

  CrossingSign crossing_sign() const;
  int rotation() const;
  CupCapKind cupcap_kind() const;
  Direction direction() const;
  const std::vector<TangleExpr>& children() const;
  const TangleExpr& child() const;
  long exponent() const;

  std::size_t crossing_count() const;
  std::string to_string() const;

  friend bool operator==(const TangleExpr& a, const TangleExpr& b);

 private:
  struct Node;
  explicit TangleExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// Identity on a given signature (empty tensor for the empty signature).
TangleExpr identity_on(const BoundarySignature& sig);

/// Inverse of an expression built from crossings, identities, tensors,
/// compositions and powers; InvalidInput otherwise.
TangleExpr inverse_tangle(const TangleExpr& e);

TangleExpr reverse_tangle(const TangleExpr& e);

/// Text grammar:
///   expr := gen | id(dir) | tensor(expr, ...) | compose(expr, ...) | rot(expr) | pow(expr, int)
///   gen  := X+@k | X-@k | cup | cap | cupL | cupR | capL | capR
TangleExpr parse_tangle(const std::string& text);

}  // namespace spanalex
