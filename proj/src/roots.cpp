#include "spanalex/roots.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numeric>
#include <numbers>
#include <thread>

#include "spanalex/alexander.hpp"

namespace spanalex {

namespace {

using cd = std::complex<double>;
using cld = std::complex<long double>;

// Ascending coefficients of the polynomial part (min degree shifted to 0).
std::vector<long double> ascending(const LaurentPoly& p) {
  std::vector<long double> c;
  for (const auto& x : p.coefficients()) c.push_back(static_cast<long double>(x.get_d()));
  return c;
}

template <class C, class V>
void horner(const std::vector<V>& c, C z, C& p, C& dp) {
  p = C(0);
  dp = C(0);
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    dp = dp * z + p;
    p = p * z + C(*it);
  }
}

double relative_residual(const std::vector<long double>& c, cld z) {
  cld p(0);
  long double scale = 0, az = std::abs(z), pw = 1;
  for (auto it = c.rbegin(); it != c.rend(); ++it) p = p * z + cld(*it);
  for (long double x : c) {
    scale += std::fabs(x) * pw;
    pw *= az;
  }
  return scale == 0 ? 0.0 : static_cast<double>(std::abs(p) / scale);
}

struct AberthOut {
  std::vector<cld> z;
  int iterations = 0;
};

AberthOut aberth(const std::vector<long double>& c, double tol, int max_iter) {
  const std::size_t d = c.size() - 1;
  AberthOut out;
  if (d == 0) return out;
  std::vector<long double> a(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) a[i] = c[i] / c.back();
  if (d == 1) {
    out.z.push_back(cld(-a[0], 0));
    return out;
  }
  const long double radius = std::pow(std::fabs(a[0]), 1.0L / static_cast<long double>(d));
  for (std::size_t k = 0; k < d; ++k) {
    const long double angle =
        2 * std::numbers::pi_v<long double> * static_cast<long double>(k) / static_cast<long double>(d) + 0.4L;
    out.z.push_back(std::polar(radius * (1 + 0.01L * static_cast<long double>(k % 3)), angle));
  }
  long double worst = 0;
  for (int iter = 1; iter <= max_iter; ++iter) {
    worst = 0;
    for (std::size_t k = 0; k < d; ++k) {
      cld p, dp;
      horner(a, out.z[k], p, dp);
      if (p == cld(0)) continue;
      const cld ratio = p / dp;
      cld sum(0);
      for (std::size_t j = 0; j < d; ++j)
        if (j != k) sum += cld(1) / (out.z[k] - out.z[j]);
      const cld w = ratio / (cld(1) - ratio * sum);
      out.z[k] -= w;
      worst = std::max(worst, std::abs(w) / (1 + std::abs(out.z[k])));
    }
    out.iterations = iter;
    if (worst < tol) return out;
  }
  char buf[160];
  std::snprintf(buf, sizeof buf, "Aberth iteration on degree %zu did not converge in %d steps (last correction %.3Le)", d,
                max_iter, worst);
  fail(ErrorCode::ConvergenceFailure, buf);
}

cld polish(const std::vector<long double>& c, cld z) {
  for (int i = 0; i < 3; ++i) {
    cld p, dp;
    horner(c, z, p, dp);
    if (dp == cld(0)) break;
    const cld next = z - p / dp;
    if (relative_residual(c, next) > relative_residual(c, z)) break;
    z = next;
  }
  return z;
}

}  // namespace

RootReport find_roots(const LaurentPoly& delta, double tol, int max_iter) {
  if (delta.is_zero()) fail(ErrorCode::ZeroPolynomial, "no roots for the zero polynomial");
  const LaurentPoly p = normalize_alexander(delta);
  const std::vector<long double> full = ascending(p);
  RootReport r;
  r.tolerance = tol;
  const auto factors = squarefree_decomposition(p);
  for (std::size_t m = 0; m < factors.size(); ++m) {
    if (factors[m].width() <= 0) continue;
    const std::vector<long double> c = ascending(factors[m]);
    const AberthOut a = aberth(c, tol, max_iter);
    r.iterations = std::max(r.iterations, a.iterations);
    for (const cld& z0 : a.z) {
      const cld z = polish(c, z0);
      Root root;
      root.z = cd(static_cast<double>(z.real()), static_cast<double>(z.imag()));
      root.residual = relative_residual(full, z);
      root.multiplicity = static_cast<int>(m + 1);
      for (std::size_t k = 0; k <= m; ++k) r.roots.push_back(root);
    }
  }
  std::sort(r.roots.begin(), r.roots.end(), [](const Root& x, const Root& y) {
    if (x.z.real() != y.z.real()) return x.z.real() < y.z.real();
    return x.z.imag() < y.z.imag();
  });
  for (const auto& root : r.roots) r.max_residual = std::max(r.max_residual, root.residual);
  return r;
}

CircleCheck check_unit_circle(const RootReport& r, double eps) {
  CircleCheck c;
  for (const auto& root : r.roots) c.worst_margin = std::max(c.worst_margin, std::fabs(std::abs(root.z) - 1));
  c.pass = c.worst_margin < eps;
  return c;
}

HalfPlaneCheck check_halfplane(const RootReport& r, const LaurentPoly& delta, double guard) {
  HalfPlaneCheck h;
  h.min_re = r.roots.empty() ? 0 : r.roots.front().z.real();
  for (const auto& root : r.roots) h.min_re = std::min(h.min_re, root.z.real());
  h.nonzero_at_minus_one = sgn(delta.evaluate(BigRat(-1))) != 0;
  h.pass = h.nonzero_at_minus_one && (r.roots.empty() || h.min_re > -1 + guard);
  return h;
}

void write_roots_csv(std::ostream& out, const std::string& id, const RootReport& r, bool header) {
  if (header) out << "knot,re,im,abs,residual\n";
  char buf[256];
  for (const auto& root : r.roots) {
    std::snprintf(buf, sizeof buf, ",%.17g,%.17g,%.17g,%.3e\n", root.z.real(), root.z.imag(), std::abs(root.z),
                  root.residual);
    out << '"' << id << '"' << buf;
  }
}

const char* family_name(Family f) {
  switch (f) {
    case Family::OddPretzel: return "odd-pretzel";
    case Family::EvenPretzel2p: return "even-pretzel-2p";
    case Family::EvenPretzel2p1: return "even-pretzel-2p1";
    case Family::Rational: return "rational";
  }
  return "unknown";
}

Family parse_family(const std::string& text) {
  std::string t = text;
  std::replace(t.begin(), t.end(), '_', '-');
  for (Family f : {Family::OddPretzel, Family::EvenPretzel2p, Family::EvenPretzel2p1, Family::Rational})
    if (t == family_name(f)) return f;
  if (t == "even-2p") return Family::EvenPretzel2p;
  if (t == "even-2p1") return Family::EvenPretzel2p1;
  fail(ErrorCode::InvalidInput, "unknown family '" + text + "'");
}

long long uniform_int(std::mt19937_64& rng, long long lo, long long hi) {
  if (hi < lo) fail(ErrorCode::InvalidInput, "empty sampling range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return static_cast<long long>(rng());
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t x;
  do x = rng();
  while (x >= limit);
  return lo + static_cast<long long>(x % span);
}

std::vector<long long> sample_pretzel(Family family, std::mt19937_64& rng, long long bound) {
  auto odd = [&] { return 2 * uniform_int(rng, 0, (bound - 1) / 2) + 1; };
  auto even = [&] { return 2 * uniform_int(rng, 1, std::max(1LL, bound / 2)); };
  std::vector<long long> q;
  switch (family) {
    case Family::OddPretzel: {
      const long long n = 2 * uniform_int(rng, 1, 3) + 1;
      for (long long i = 0; i < n; ++i) q.push_back(odd());
      break;
    }
    case Family::EvenPretzel2p:
    case Family::EvenPretzel2p1: {
      const long long n = family == Family::EvenPretzel2p ? 2 * uniform_int(rng, 1, 3) : 2 * uniform_int(rng, 1, 3) + 1;
      q.push_back(even());
      for (long long i = 1; i < n; ++i) q.push_back(odd());
      break;
    }
    case Family::Rational: fail(ErrorCode::InvalidInput, "not a pretzel family");
  }
  return q;
}

std::pair<long long, long long> sample_rational(std::mt19937_64& rng, long long bound) {
  const long long p = 2 * uniform_int(rng, 1, std::max(1LL, (bound - 1) / 2)) + 1;
  while (true) {
    const long long q = uniform_int(rng, 1, p - 1);
    if (std::gcd(p, q) == 1) return {p, q};
  }
}

FamilyReport family_verify(Family family, std::size_t samples, std::uint64_t seed, long long bound,
                           const VerifyOptions& opts) {
  FamilyReport rep;
  rep.family = family;
  rep.seed = seed;
  rep.bound = bound;
  const bool circle = family == Family::OddPretzel || family == Family::EvenPretzel2p;
  rep.check = circle ? "unit-circle" : "half-plane";
  if (bound < 3) fail(ErrorCode::InvalidInput, "sampling bound must be at least 3");

  std::mt19937_64 rng(seed);
  std::vector<std::vector<long long>> specs;
  for (std::size_t i = 0; i < samples; ++i) {
    if (family == Family::Rational) {
      const auto [p, q] = sample_rational(rng, bound);
      specs.push_back({p, q});
    } else {
      specs.push_back(sample_pretzel(family, rng, bound));
    }
  }

  rep.samples.resize(samples);
  auto work = [&](std::size_t i) {
    FamilySample& s = rep.samples[i];
    const auto& spec = specs[i];
    try {
      LaurentPoly delta;
      if (family == Family::Rational) {
        s.id = "b(" + std::to_string(spec[0]) + "," + std::to_string(spec[1]) + ")";
        delta = alex_rational_continuant(spec[0], spec[1]).delta;
      } else {
        PretzelSpec ps{spec};
        s.id = "P(" + ps.to_string() + ")";
        delta = alex_pretzel_continuant(ps).delta;
      }
      s.delta = delta.to_string();
      const RootReport roots = find_roots(delta, opts.tol);
      if (circle) {
        const CircleCheck c = check_unit_circle(roots, opts.circle_eps);
        s.pass = c.pass;
        s.margin = c.worst_margin;
      } else {
        const HalfPlaneCheck h = check_halfplane(roots, delta, opts.guard);
        s.pass = h.pass;
        s.margin = h.min_re;
      }
    } catch (const Error& e) {
      s.pass = false;
      s.error = e.what();
    }
  };

  const unsigned jobs = std::max(1u, opts.jobs);
  if (jobs == 1) {
    for (std::size_t i = 0; i < samples; ++i) work(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned j = 0; j < jobs; ++j)
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < samples; i = next++) work(i);
      });
    for (auto& th : pool) th.join();
  }

  rep.worst = circle ? 0.0 : std::numeric_limits<double>::infinity();
  for (const auto& s : rep.samples) {
    if (s.pass) ++rep.passes;
    if (!s.error.empty()) continue;
    rep.worst = circle ? std::max(rep.worst, s.margin) : std::min(rep.worst, s.margin);
  }
  if (samples == 0) rep.worst = 0;
  return rep;
}

}  // namespace spanalex
