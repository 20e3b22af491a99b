#pragma once

#include <complex>
#include <cstdint>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "spanalex/laurent.hpp"

namespace spanalex {

struct Root {
  std::complex<double> z;
  double residual = 0;  // |p(z)| / sum |c_i| |z|^i
  int multiplicity = 1;
};

struct RootReport {
  std::vector<Root> roots;  // one entry per root counted with multiplicity
  double tolerance = 1e-12;
  int iterations = 0;  // worst over square-free factors
  double max_residual = 0;
};

/// Aberth-Ehrlich iteration on each square-free factor of the normalized
/// polynomial. Deterministic in its inputs.
RootReport find_roots(const LaurentPoly& delta, double tol = 1e-12, int max_iter = 200);

struct CircleCheck {
  bool pass = true;
  double worst_margin = 0;  // max | |t| - 1 |
};

CircleCheck check_unit_circle(const RootReport& r, double eps = 1e-8);

struct HalfPlaneCheck {
  bool pass = true;
  double min_re = 0;
  bool nonzero_at_minus_one = true;  // exact, from delta(-1)
};

/// Every root has Re(t) > -1 + guard, and delta(-1) != 0 exactly.
HalfPlaneCheck check_halfplane(const RootReport& r, const LaurentPoly& delta, double guard = 1e-9);

/// One CSV row per root: id, re, im, abs, residual.
void write_roots_csv(std::ostream& out, const std::string& id, const RootReport& r, bool header);

enum class Family { OddPretzel, EvenPretzel2p, EvenPretzel2p1, Rational };

const char* family_name(Family f);
Family parse_family(const std::string& text);

struct FamilySample {
  std::string id;
  std::string delta;
  bool pass = false;
  double margin = 0;  // circle: worst | |t| - 1 |; half-plane: min Re(t)
  std::string error;
};

struct FamilyReport {
  Family family = Family::OddPretzel;
  std::string check;  // "unit-circle" or "half-plane"
  std::uint64_t seed = 0;
  long long bound = 0;
  std::size_t passes = 0;
  double worst = 0;
  std::vector<FamilySample> samples;  // in sampling order
};

struct VerifyOptions {
  double tol = 1e-12;
  double circle_eps = 1e-8;
  double guard = 1e-9;
  unsigned jobs = 1;
};

/// Samples knots satisfying the hypotheses of the root-location theorem
/// attached to the family and runs its check.
FamilyReport family_verify(Family family, std::size_t samples, std::uint64_t seed, long long bound,
                           const VerifyOptions& opts = {});

/// Uniform integer in [lo, hi] by rejection sampling, so the stream is the
/// same on every standard library.
long long uniform_int(std::mt19937_64& rng, long long lo, long long hi);

/// Sampled specifications; exposed for tests and acceptance runs.
std::vector<long long> sample_pretzel(Family family, std::mt19937_64& rng, long long bound);
std::pair<long long, long long> sample_rational(std::mt19937_64& rng, long long bound);

}  // namespace spanalex
