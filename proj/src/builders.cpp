#include "spanalex/builders.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <sstream>

namespace spanalex {

namespace {

using i128 = __int128;

long long checked_ll(i128 v) {
  if (v > static_cast<i128>(std::numeric_limits<long long>::max()) ||
      v < -static_cast<i128>(std::numeric_limits<long long>::max())) {
    fail(ErrorCode::InvalidInput, "integer overflow in continued fraction arithmetic");
  }
  return static_cast<long long>(v);
}

long long parse_ll(const std::string& s, const std::string& what) {
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(s, &used);
  } catch (const std::exception&) {
    fail(ErrorCode::InvalidInput, "cannot parse " + what + " '" + s + "'");
  }
  if (used != s.size()) fail(ErrorCode::InvalidInput, "cannot parse " + what + " '" + s + "'");
  return v;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

TangleExpr X(CrossingSign s, int k) { return TangleExpr::crossing(s, k); }
const CrossingSign Pl = CrossingSign::Plus;
const CrossingSign Mi = CrossingSign::Minus;

// Crossing of the given unoriented shape compatible with the incoming pair.
TangleExpr shaped_crossing(bool plus_shape, Sign a, Sign b) {
  const CrossingSign same = plus_shape ? Pl : Mi;
  const CrossingSign other = plus_shape ? Mi : Pl;
  if (a == Sign::Plus && b == Sign::Plus) return X(same, 0);
  if (a == Sign::Minus && b == Sign::Minus) return X(same, 2);
  if (a == Sign::Minus) return X(other, 1);
  return X(other, 3);
}

TangleExpr twist(bool plus_shape, long long a, const BoundarySignature& sig) {
  if (a == 0) return identity_on(sig);
  TangleExpr c1 = shaped_crossing(plus_shape, sig.signs[0], sig.signs[1]);
  if (c1.rotation() % 2 == 0) return TangleExpr::pow(c1, a);
  TangleExpr c2 = shaped_crossing(plus_shape, c1.target().signs[0], c1.target().signs[1]);
  std::vector<TangleExpr> parts;
  if (a / 2 > 0) parts.push_back(TangleExpr::pow(TangleExpr::compose({c1, c2}), a / 2));
  if (a % 2 == 1) parts.push_back(c1);
  return parts.size() == 1 ? parts.front() : TangleExpr::compose(std::move(parts));
}

TangleExpr rot_inverse(const TangleExpr& e) {
  return TangleExpr::rotate(TangleExpr::rotate(TangleExpr::rotate(e)));
}

TangleExpr id_sign(Sign s) { return TangleExpr::id(s == Sign::Plus ? Direction::Up : Direction::Down); }

// Alternating twist blocks used by the 2-bridge layers.
TangleExpr strands34_block(long long k) {
  if (k > 0) return TangleExpr::pow(TangleExpr::compose({X(Mi, 3), X(Mi, 1)}), k);
  return TangleExpr::pow(TangleExpr::compose({X(Pl, 3), X(Pl, 1)}), -k);
}

TangleExpr strands23_block(long long k) {
  if (k > 0) return TangleExpr::pow(TangleExpr::compose({X(Pl, 1), X(Pl, 3)}), k);
  return TangleExpr::pow(TangleExpr::compose({X(Mi, 1), X(Mi, 3)}), -k);
}

std::vector<std::pair<int, int>> pretzel_pairs(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 1; i + 1 < 2 * n; i += 2) pairs.emplace_back(i, i + 1);
  pairs.emplace_back(0, 2 * n - 1);
  return pairs;
}

}  // namespace

std::string RationalSpec::to_string() const {
  if (q == 0) return "inf";
  if (q == 1) return std::to_string(p);
  return std::to_string(p) + "/" + std::to_string(q);
}

RationalSpec make_rational(long long p, long long q) {
  if (p == 0 && q == 0) fail(ErrorCode::InvalidInput, "0/0 is not an extended rational");
  if (q == 0) return {1, 0};
  const long long g = std::gcd(p, q);
  p /= g;
  q /= g;
  if (q < 0) {
    p = -p;
    q = -q;
  }
  return {p, q};
}

RationalSpec parse_fraction(const std::string& text) {
  const std::string s = trim(text);
  if (s == "inf" || s == "infinity") return {1, 0};
  const auto slash = s.find('/');
  if (slash == std::string::npos) return make_rational(parse_ll(s, "fraction"), 1);
  return make_rational(parse_ll(trim(s.substr(0, slash)), "numerator"),
                       parse_ll(trim(s.substr(slash + 1)), "denominator"));
}

std::vector<long long> even_cf(long long p, long long q) {
  if (p <= 0 || p % 2 == 0 || q % 2 != 0 || std::gcd(p, q) != 1 || (q >= p || -q >= p)) {
    fail(ErrorCode::InvalidInput, "even continued fraction needs p > 0 odd, q even, |q| < p, gcd 1; got " +
                                      std::to_string(p) + "/" + std::to_string(q));
  }
  std::vector<long long> out;
  i128 a = p, b = q;
  while (b != 0) {
    // even quotient 2k with |a - 2k b| < |b|
    i128 k = a / (2 * b);
    i128 best_r = 0, best_k = 0;
    bool found = false;
    for (i128 cand = k - 1; cand <= k + 1; ++cand) {
      const i128 r = a - 2 * cand * b;
      if ((r < 0 ? -r : r) < (b < 0 ? -b : b)) {
        best_r = r;
        best_k = cand;
        found = true;
        break;
      }
    }
    if (!found || best_k == 0) fail(ErrorCode::InternalInconsistency, "even continued fraction step failed");
    out.push_back(checked_ll(2 * best_k));
    a = b;
    b = best_r;
  }
  return out;
}

RationalSpec cf_eval(const std::vector<long long>& a) {
  i128 num = 1, den = 0;  // infinity
  for (auto it = a.rbegin(); it != a.rend(); ++it) {
    const i128 n = static_cast<i128>(*it) * num + den;
    den = num;
    num = n;
    checked_ll(num);
    checked_ll(den);
  }
  return make_rational(static_cast<long long>(num), static_cast<long long>(den));
}

std::vector<long long> odd_positive_cf(long long p, long long q) {
  if (q <= 0 || p < 0) fail(ErrorCode::InvalidInput, "odd_positive_cf needs p >= 0, q > 0");
  std::vector<long long> out;
  long long a = p, b = q;
  while (b != 0) {
    out.push_back(a / b);
    const long long r = a % b;
    a = b;
    b = r;
  }
  if (out.size() % 2 == 0) {
    // [.., a_n] = [.., a_n - 1, 1]; a_n >= 2 here since the last quotient of
    // a length >= 2 expansion is never 1
    out.back() -= 1;
    out.push_back(1);
  }
  return out;
}

TangleExpr rational_canonical_expr(const RationalSpec& spec) {
  const BoundarySignature up2{{Sign::Plus, Sign::Plus}};
  if (spec.is_infinite()) return identity_on(up2);
  const bool negative = spec.p < 0;
  std::vector<long long> a = odd_positive_cf(negative ? -spec.p : spec.p, spec.q);
  // shape of a_i: [X+] for odd i (1-based), [X-] for even i; swapped for p/q < 0
  auto plus_shape = [&](std::size_t i) { return (i % 2 == 0) != negative; };
  const std::size_t n = a.size();
  TangleExpr t = rot_inverse(twist(plus_shape(n - 1), a[n - 1], up2));
  for (std::size_t i = n - 1; i >= 2; i -= 2) {
    TangleExpr inner = TangleExpr::compose({t, twist(plus_shape(i - 1), a[i - 1], t.target())});
    TangleExpr r = TangleExpr::rotate(inner);
    TangleExpr outer = TangleExpr::compose({r, twist(plus_shape(i - 2), a[i - 2], r.target())});
    t = rot_inverse(outer);
  }
  return t;
}

TangleExpr cup_layer(const BoundarySignature& target, const std::vector<std::pair<int, int>>& pairs) {
  auto order = pairs;
  std::sort(order.begin(), order.end(),
            [](const auto& x, const auto& y) { return x.second - x.first > y.second - y.first; });
  std::vector<int> present;
  std::vector<TangleExpr> steps;
  for (const auto& [i, j] : order) {
    const Sign si = target.signs[static_cast<std::size_t>(i)];
    if (si == target.signs[static_cast<std::size_t>(j)]) {
      fail(ErrorCode::InternalInconsistency, "cup joins points of equal orientation");
    }
    const auto pos = std::lower_bound(present.begin(), present.end(), i) - present.begin();
    std::vector<TangleExpr> parts;
    for (std::ptrdiff_t k = 0; k < pos; ++k) parts.push_back(id_sign(target.signs[static_cast<std::size_t>(present[static_cast<std::size_t>(k)])]));
    parts.push_back(TangleExpr::cupcap(si == Sign::Plus ? CupCapKind::CupL : CupCapKind::CupR));
    for (std::size_t k = static_cast<std::size_t>(pos); k < present.size(); ++k) parts.push_back(id_sign(target.signs[static_cast<std::size_t>(present[k])]));
    steps.push_back(parts.size() == 1 ? parts.front() : TangleExpr::tensor(std::move(parts)));
    present.insert(present.begin() + pos, {i, j});
  }
  return steps.size() == 1 ? steps.front() : TangleExpr::compose(std::move(steps));
}

TangleExpr cap_layer(const BoundarySignature& source, const std::vector<std::pair<int, int>>& pairs) {
  auto order = pairs;
  std::sort(order.begin(), order.end(),
            [](const auto& x, const auto& y) { return x.second - x.first < y.second - y.first; });
  std::vector<int> present(source.size());
  std::iota(present.begin(), present.end(), 0);
  std::vector<TangleExpr> steps;
  for (const auto& [i, j] : order) {
    const Sign si = source.signs[static_cast<std::size_t>(i)];
    if (si == source.signs[static_cast<std::size_t>(j)]) {
      fail(ErrorCode::InternalInconsistency, "cap joins points of equal orientation");
    }
    const auto pos = std::find(present.begin(), present.end(), i) - present.begin();
    if (static_cast<std::size_t>(pos + 1) >= present.size() || present[static_cast<std::size_t>(pos + 1)] != j) {
      fail(ErrorCode::InternalInconsistency, "cap pairs are not nested");
    }
    std::vector<TangleExpr> parts;
    for (std::ptrdiff_t k = 0; k < pos; ++k) parts.push_back(id_sign(source.signs[static_cast<std::size_t>(present[static_cast<std::size_t>(k)])]));
    parts.push_back(TangleExpr::cupcap(si == Sign::Plus ? CupCapKind::CapR : CupCapKind::CapL));
    for (std::size_t k = static_cast<std::size_t>(pos + 2); k < present.size(); ++k) parts.push_back(id_sign(source.signs[static_cast<std::size_t>(present[k])]));
    steps.push_back(parts.size() == 1 ? parts.front() : TangleExpr::tensor(std::move(parts)));
    present.erase(present.begin() + pos, present.begin() + pos + 2);
  }
  return steps.size() == 1 ? steps.front() : TangleExpr::compose(std::move(steps));
}

TwoBridgeDecomposition rational_2bridge(long long p, long long q) {
  if (p < 0) {
    p = -p;
    q = -q;
  }
  if (p == 0) fail(ErrorCode::NotAKnot, "b(0, q) is a 2-component link");
  if (std::gcd(p, q) != 1) fail(ErrorCode::InvalidInput, "p and q must be coprime");
  if (p % 2 == 0) fail(ErrorCode::NotAKnot, "b(p, q) with p even is a 2-component link");
  TwoBridgeDecomposition d;
  d.p = p;
  long long r = ((q % p) + p) % p;
  if (r % 2 != 0) {
    r = p - r;
    d.mirror_applied = true;
  }
  d.q = r;
  if (r != 0) d.cf = even_cf(p, r);
  d.odd_length = d.cf.size() % 2 == 1;
  if (d.odd_length) fail(ErrorCode::NotAKnot, "odd-length even continued fraction: 2-component link");
  const TangleExpr up = TangleExpr::id(Direction::Up);
  const TangleExpr down = TangleExpr::id(Direction::Down);
  for (std::size_t i = 0; i < d.cf.size(); ++i) {
    const long long k = d.cf[i] / 2;
    if (i % 2 == 0) d.layers.push_back(TangleExpr::tensor({up, down, strands34_block(k)}));
    else d.layers.push_back(TangleExpr::tensor({up, strands23_block(k), down}));
  }
  const BoundarySignature sig{{Sign::Plus, Sign::Minus, Sign::Plus, Sign::Minus}};
  d.braid = d.layers.empty() ? identity_on(sig) : TangleExpr::compose(d.layers);
  TangleExpr bottom = cup_layer(sig, {{0, 3}, {1, 2}});
  TangleExpr top = d.odd_length ? cap_layer(sig, {{1, 2}, {0, 3}}) : cap_layer(sig, {{0, 1}, {2, 3}});
  d.knot = TangleExpr::compose({bottom, d.braid, top});
  return d;
}

std::string PretzelSpec::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(q[i]);
  }
  return out;
}

PretzelSpec parse_pretzel(const std::string& text) {
  PretzelSpec spec;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) spec.q.push_back(parse_ll(trim(item), "pretzel entry"));
  if (spec.q.empty()) fail(ErrorCode::InvalidInput, "empty pretzel specification");
  for (long long v : spec.q)
    if (v == 0) fail(ErrorCode::InvalidInput, "pretzel entries must be nonzero");
  return spec;
}

KnotCheck is_pretzel_knot(const PretzelSpec& spec) {
  if (spec.q.empty()) return {false, "empty specification"};
  const auto evens = std::count_if(spec.q.begin(), spec.q.end(), [](long long v) { return v % 2 == 0; });
  if (evens == 1) return {true, "exactly one entry is even"};
  if (evens > 1) return {false, "more than one entry is even"};
  if (spec.q.size() % 2 == 1) return {true, "all entries odd and n odd"};
  return {false, "all entries odd and n even"};
}

const char* pretzel_case_name(PretzelCase c) {
  switch (c) {
    case PretzelCase::Odd: return "odd";
    case PretzelCase::Even2p: return "even-2p";
    default: return "even-2p+1";
  }
}

PretzelDecomposition pretzel_expr(const PretzelSpec& input) {
  for (long long v : input.q)
    if (v == 0) fail(ErrorCode::InvalidInput, "pretzel entries must be nonzero");
  const KnotCheck check = is_pretzel_knot(input);
  if (!check.is_knot) fail(ErrorCode::NotAKnot, "P(" + input.to_string() + ") is not a knot: " + check.reason);
  PretzelDecomposition d;
  d.spec = input;
  auto even_it = std::find_if(d.spec.q.begin(), d.spec.q.end(), [](long long v) { return v % 2 == 0; });
  const int n = static_cast<int>(d.spec.q.size());
  if (even_it == d.spec.q.end()) {
    d.kind = PretzelCase::Odd;
  } else {
    std::rotate(d.spec.q.begin(), even_it, d.spec.q.end());
    d.kind = n % 2 == 0 ? PretzelCase::Even2p : PretzelCase::Even2p1;
  }
  std::vector<TangleExpr> exprs;
  for (int i = 0; i < n; ++i) {
    const long long q = d.spec.q[static_cast<std::size_t>(i)];
    PretzelBand band;
    band.q = q;
    if (d.kind == PretzelCase::Odd) {
      band.kind = BandKind::AlternatingOdd;
      const CrossingSign s = q > 0 ? Mi : Pl;
      const long long m = ((q > 0 ? q : -q) - 1) / 2;
      band.expr = m == 0 ? X(s, 3)
                         : TangleExpr::compose({X(s, 3), TangleExpr::pow(TangleExpr::compose({X(s, 1), X(s, 3)}), m)});
    } else if (d.kind == PretzelCase::Even2p1 && i == 0) {
      band.kind = BandKind::AlternatingEven;
      band.expr = strands23_block(q / 2);
    } else {
      const bool up = d.kind == PretzelCase::Even2p ? i % 2 == 0 : i % 2 == 0 && i > 0;
      band.kind = up ? BandKind::CodirectedUp : BandKind::CodirectedDown;
      const CrossingSign s = q > 0 ? Mi : Pl;
      band.expr = TangleExpr::pow(X(s, up ? 0 : 2), q > 0 ? q : -q);
    }
    exprs.push_back(band.expr);
    d.bands.push_back(std::move(band));
  }
  d.bands_expr = TangleExpr::tensor(std::move(exprs));
  const auto pairs = pretzel_pairs(n);
  d.knot = TangleExpr::compose({cup_layer(d.bands_expr.source(), pairs), d.bands_expr,
                                cap_layer(d.bands_expr.target(), pairs)});
  return d;
}

}  // namespace spanalex
