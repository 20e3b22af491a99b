#include <doctest.h>

#include <cmath>
#include <sstream>

#include "spanalex/alexander.hpp"
#include "spanalex/roots.hpp"
#include "support.hpp"

using namespace spanalex;
using namespace spanalex::testing;

namespace {

LaurentPoly P(std::vector<long> c) {
  std::vector<BigRat> q;
  for (long x : c) q.emplace_back(x);
  return LaurentPoly::from_coefficients(0, std::move(q));
}

const LaurentPoly nine11 = P({1, -5, 7, -7, 7, -5, 1});

}  // namespace

TEST_SUITE("roots") {
  TEST_CASE("trefoil") {
    const RootReport r = find_roots(P({1, -1, 1}));
    REQUIRE(r.roots.size() == 2);
    for (const auto& z : r.roots) {
      CHECK(std::abs(std::abs(z.z) - 1) < 1e-12);
      CHECK(std::abs(z.z.real() - 0.5) < 1e-12);
    }
    CHECK(check_unit_circle(r).pass);
    CHECK(check_halfplane(r, P({1, -1, 1})).pass);
  }

  TEST_CASE("figure eight") {
    const LaurentPoly d = P({1, -3, 1});
    const RootReport r = find_roots(d);
    REQUIRE(r.roots.size() == 2);
    CHECK(std::abs(r.roots[0].z.real() - (3 - std::sqrt(5.0)) / 2) < 1e-12);
    CHECK(std::abs(r.roots[1].z.real() - (3 + std::sqrt(5.0)) / 2) < 1e-12);
    CHECK(std::abs(std::abs(r.roots[0].z * r.roots[1].z) - 1) < 1e-12);
    CHECK_FALSE(check_unit_circle(r).pass);
  }

  TEST_CASE("9_11 has a real root between 3 and 4") {
    const RootReport r = find_roots(nine11);
    bool found = false;
    for (const auto& z : r.roots) found = found || (std::abs(z.z.imag()) < 1e-9 && z.z.real() > 3 && z.z.real() < 4);
    CHECK(found);
    CHECK(check_halfplane(r, nine11).pass);
    CHECK_FALSE(check_unit_circle(r).pass);
  }

  TEST_CASE("half-plane boundary") {
    const LaurentPoly d = P({1, 1});
    const HalfPlaneCheck h = check_halfplane(find_roots(d), d);
    CHECK_FALSE(h.pass);
    CHECK_FALSE(h.nonzero_at_minus_one);
  }

  TEST_CASE("P(3,5,7) roots lie on the unit circle") {
    const LaurentPoly d = alex_pretzel_closed({{3, 5, 7}}).delta;
    CHECK(check_unit_circle(find_roots(d)).pass);
  }

  TEST_CASE("repeated roots") {
    const LaurentPoly f = P({1, -1, 1});
    const RootReport r = find_roots(f * f * P({-2, 1}));
    REQUIRE(r.roots.size() == 5);
    int doubles = 0;
    for (const auto& z : r.roots) doubles += z.multiplicity == 2;
    CHECK(doubles == 4);
    CHECK(r.max_residual < 1e-12);
  }

  TEST_CASE("zero polynomial") { CHECK_THROWS_AS(find_roots(LaurentPoly()), Error); }

  TEST_CASE("root count, product and reciprocal pairs") {
    std::mt19937_64 rng(61);
    for (int i = 0; i < 100; ++i) {
      const auto [p, q] = sample_rational(rng, 999);
      const LaurentPoly d = alex_rational_continuant(p, q).delta;
      const RootReport r = find_roots(d);
      REQUIRE(static_cast<int>(r.roots.size()) == d.max_degree());
      std::complex<long double> prod(1, 0);
      for (const auto& z : r.roots) prod *= std::complex<long double>(z.z);
      const double want = d.coefficient(0).get_d() / d.leading_coefficient().get_d();
      const double sign = d.max_degree() % 2 == 0 ? 1.0 : -1.0;
      REQUIRE(std::abs(static_cast<double>(prod.real()) - sign * want) < 1e-9 * std::abs(want));
      for (const auto& z : r.roots) {
        const std::complex<double> inv = 1.0 / z.z;
        double best = 1e300;
        for (const auto& w : r.roots) best = std::min(best, std::abs(w.z - inv));
        REQUIRE(best < 1e-8 * std::max(1.0, std::abs(inv)));
      }
    }
  }

  TEST_CASE("samplers respect the hypotheses") {
    std::mt19937_64 rng(62);
    for (int i = 0; i < 200; ++i) {
      const auto odd = sample_pretzel(Family::OddPretzel, rng, 15);
      REQUIRE(odd.size() % 2 == 1);
      for (long long q : odd) REQUIRE((q % 2 != 0 && q >= 1 && q <= 15));
      const auto even = sample_pretzel(Family::EvenPretzel2p, rng, 15);
      REQUIRE(even.size() % 2 == 0);
      REQUIRE(even[0] % 2 == 0);
      for (std::size_t k = 1; k < even.size(); ++k) REQUIRE(even[k] % 2 != 0);
      const auto e21 = sample_pretzel(Family::EvenPretzel2p1, rng, 15);
      REQUIRE(e21.size() % 2 == 1);
      for (long long q : e21) REQUIRE(q > 0);
      const auto [p, q] = sample_rational(rng, 9999);
      REQUIRE((p % 2 == 1 && q >= 1 && q < p));
    }
    std::mt19937_64 a(5), b(5);
    for (int i = 0; i < 1000; ++i) REQUIRE(uniform_int(a, -3, 11) == uniform_int(b, -3, 11));
  }

  TEST_CASE("family verification is deterministic across worker counts") {
    VerifyOptions one;
    VerifyOptions four;
    four.jobs = 4;
    const FamilyReport a = family_verify(Family::EvenPretzel2p1, 40, 9, 15, one);
    const FamilyReport b = family_verify(Family::EvenPretzel2p1, 40, 9, 15, four);
    CHECK(a.passes == 40);
    REQUIRE(a.samples.size() == b.samples.size());
    for (std::size_t i = 0; i < a.samples.size(); ++i) {
      CHECK(a.samples[i].id == b.samples[i].id);
      CHECK(a.samples[i].delta == b.samples[i].delta);
      CHECK(a.samples[i].margin == b.samples[i].margin);
    }
    CHECK(a.worst == b.worst);
  }

  TEST_CASE("csv output") {
    std::ostringstream out;
    write_roots_csv(out, "K", find_roots(P({1, -1, 1})), true);
    const std::string s = out.str();
    CHECK(s.rfind("knot,re,im,abs,residual\n", 0) == 0);
    CHECK(std::count(s.begin(), s.end(), '\n') == 3);
  }

  TEST_CASE("family names") {
    CHECK(parse_family("odd_pretzel") == Family::OddPretzel);
    CHECK(parse_family("even-2p1") == Family::EvenPretzel2p1);
    CHECK_THROWS_AS(parse_family("knots"), Error);
  }
}
