#pragma once

#include <string>
#include <vector>

#include "spanalex/tangle.hpp"

namespace spanalex {

/// Extended rational p/q: reduced, q >= 0, infinity stored as 1/0.
struct RationalSpec {
  long long p = 0;
  long long q = 1;

  bool is_infinite() const { return q == 0; }
  std::string to_string() const;
  friend bool operator==(const RationalSpec&, const RationalSpec&) = default;
};

RationalSpec make_rational(long long p, long long q);
/// "P/Q" or "P", optional sign on either part.
RationalSpec parse_fraction(const std::string& text);

/// Continued fraction with even nonzero entries; p odd, q even, p > 0.
std::vector<long long> even_cf(long long p, long long q);
RationalSpec cf_eval(const std::vector<long long>& a);
/// Regular continued fraction of p/q >= 0 with positive entries after the
/// first (which may be 0) and odd length.
std::vector<long long> odd_positive_cf(long long p, long long q);

/// Rational tangle in the nested rotate/compose form, orientations
/// propagated outward from the innermost twist.
TangleExpr rational_canonical_expr(const RationalSpec& spec);

/// Layer decomposition of the 2-bridge knot b(p, q) on the strand signature
/// (+,-,+,-). Layer i is an alternating twist on strands (3,4) for odd i and
/// (2,3) for even i.
struct TwoBridgeDecomposition {
  long long p = 1;
  long long q = 0;  // after mirroring: even, 0 <= q < p
  bool mirror_applied = false;
  std::vector<long long> cf;  // even_cf(p, q), entries 2 k_i
  std::vector<TangleExpr> layers;
  TangleExpr braid = identity_on({});
  TangleExpr knot = identity_on({});
  bool odd_length = false;
};

TwoBridgeDecomposition rational_2bridge(long long p, long long q);

struct PretzelSpec {
  std::vector<long long> q;
  std::string to_string() const;
};

PretzelSpec parse_pretzel(const std::string& text);

struct KnotCheck {
  bool is_knot = false;
  std::string reason;
};

KnotCheck is_pretzel_knot(const PretzelSpec& spec);

enum class PretzelCase { Odd, Even2p, Even2p1 };

const char* pretzel_case_name(PretzelCase c);

enum class BandKind {
  AlternatingOdd,   // D = f+(t) + k (1-t) h, q = 2k + 1
  AlternatingEven,  // D = I - k (1-t^-1) h, q = 2k
  CodirectedUp,     // D = X-^q at t
  CodirectedDown,   // D = X-^q at t^-1
};

struct PretzelBand {
  long long q = 0;
  BandKind kind = BandKind::AlternatingOdd;
  TangleExpr expr = identity_on({});
};

struct PretzelDecomposition {
  PretzelSpec spec;  // cyclically rotated so an even entry comes first
  PretzelCase kind = PretzelCase::Odd;
  std::vector<PretzelBand> bands;
  TangleExpr bands_expr = identity_on({});
  TangleExpr knot = identity_on({});
};

PretzelDecomposition pretzel_expr(const PretzelSpec& spec);

/// Closure of a tangle whose boundary pairs are given as (i, j), 0-based,
/// listed innermost first; they must be nested or disjoint.
TangleExpr cup_layer(const BoundarySignature& target, const std::vector<std::pair<int, int>>& pairs);
TangleExpr cap_layer(const BoundarySignature& source, const std::vector<std::pair<int, int>>& pairs);

}  // namespace spanalex
