#include <doctest.h>

#include <numeric>

#include "spanalex/alexander.hpp"
#include "spanalex/presentation.hpp"
#include "support.hpp"

using namespace spanalex;
using namespace spanalex::testing;

namespace {

LaurentPoly P(std::vector<long> c) {
  std::vector<BigRat> q;
  for (long x : c) q.emplace_back(x);
  return LaurentPoly::from_coefficients(0, std::move(q));
}

// ascending coefficients
const LaurentPoly trefoil = P({1, -1, 1});
const LaurentPoly figure8 = P({1, -3, 1});
const LaurentPoly six2 = P({1, -3, 3, -3, 1});
const LaurentPoly nine11 = P({1, -5, 7, -7, 7, -5, 1});

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::InternalInconsistency;
}

PretzelSpec random_pretzel(std::mt19937_64& rng) {
  while (true) {
    PretzelSpec s;
    const long n = rand_int(rng, 1, 7);
    for (long i = 0; i < n; ++i) {
      long q = 0;
      while (q == 0) q = rand_int(rng, -9, 9);
      s.q.push_back(q);
    }
    if (is_pretzel_knot(s).is_knot) return s;
  }
}

std::pair<long long, long long> random_rational(std::mt19937_64& rng) {
  while (true) {
    const long long p = 2 * uniform_int(rng, 1, 4999) + 1;
    const long long q = uniform_int(rng, 1, p - 1);
    if (std::gcd(p, q) == 1) return {p, q};
  }
}

}  // namespace

TEST_SUITE("alexander") {
  TEST_CASE("rational examples") {
    CHECK(alex_rational_span(11, 3).delta == six2);
    CHECK(alex_rational_continuant(11, 3).delta == six2);
    CHECK(alex_rational_span(11, 3).mirror_applied);
    CHECK(alex_rational_span(11, 3).determinant == 11);
    CHECK(alex_rational_span(3, 2).delta == trefoil);
    CHECK(alex_rational_continuant(3, 2).delta == trefoil);
    CHECK(alex_rational_span(5, 2).delta == figure8);
    CHECK(alex_rational_continuant(5, 2).delta == figure8);
    CHECK(alex_rational_span(11, 3).kernel_dim == 1);
    CHECK(code_of([] { alex_rational_span(8, 3); }) == ErrorCode::NotAKnot);
    CHECK(code_of([] { alex_rational_continuant(6, 1); }) == ErrorCode::NotAKnot);
  }

  TEST_CASE("span route G' has all entries equal to the polynomial up to sign") {
    const AlexanderResult r = alex_rational_span(11, 3);
    REQUIRE(r.presentation.rows() == 2);
    REQUIRE(r.presentation.cols() == 2);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) CHECK(normalize_alexander(r.presentation(i, j).as_laurent()) == six2);
  }

  TEST_CASE("continuant of the 6_2 fraction") {
    const RatFunc t = RatFunc::t(), ti = RatFunc::t_inv();
    const RatFunc k = continuant<RatFunc>({1 - t, 1 - ti, 1 - t, -1 + ti}, {1, 1, 1, 1}, {1, 1, 1, 1});
    CHECK(normalize_alexander(k.as_laurent()) == six2);
  }

  TEST_CASE("pretzel examples") {
    const PretzelSpec p111{{1, 1, 1}}, p23{{2, 3}}, p911{{2, 1, 1, 1, -5}}, p357{{3, 5, 7}};
    using Route = AlexanderResult (*)(const PretzelSpec&);
    for (Route fn : {Route(&alex_pretzel_span), Route(&alex_pretzel_continuant), Route(&alex_pretzel_closed)}) {
      CHECK(fn(p111).delta == trefoil);
      CHECK(fn(p23).delta == P({1, -1, 1, -1, 1}));
      CHECK(fn(p23).determinant == 5);
      CHECK(fn(p911).delta == nine11);
      CHECK(fn(p357).determinant == 71);
    }
    CHECK(alex_pretzel_closed(p357).delta == P({18, -35, 18}));
    CHECK(code_of([] { alex_pretzel_span({{1, 1}}); }) == ErrorCode::NotAKnot);
  }

  TEST_CASE("determinants") {
    CHECK(knot_determinant(six2) == 11);
    CHECK(knot_determinant(LaurentPoly(1)) == 1);
    CHECK(knot_determinant(nine11) == 33);
    CHECK(elementary_symmetric({3, 5, 7}, 2) == 71);
    CHECK(elementary_symmetric({3, 5, 7}, 0) == 1);
    CHECK(elementary_symmetric({3, 5, 7}, 3) == 105);
  }

  TEST_CASE("route agreement and determinant oracle on random rational knots") {
    std::mt19937_64 rng(51);
    for (int i = 0; i < 200; ++i) {
      const auto [p, q] = random_rational(rng);
      CAPTURE(p);
      CAPTURE(q);
      const AlexanderResult a = alex_rational_span(p, q);
      const AlexanderResult b = alex_rational_continuant(p, q);
      REQUIRE(a.delta == b.delta);
      REQUIRE(a.determinant == BigInt(static_cast<long>(p)));
      REQUIRE(b.determinant == BigInt(static_cast<long>(p)));
      // mirror invariance
      REQUIRE(alex_rational_continuant(p, p - q).delta == b.delta);
    }
  }

  TEST_CASE("route agreement on random pretzel knots") {
    std::mt19937_64 rng(52);
    for (int i = 0; i < 200; ++i) {
      const PretzelSpec s = random_pretzel(rng);
      CAPTURE(s.to_string());
      const std::vector<AlexanderResult> rs{alex_pretzel_span(s), alex_pretzel_continuant(s), alex_pretzel_closed(s)};
      REQUIRE(routes_agree(rs));
      bool all_odd = true;
      for (long long q : s.q) all_odd = all_odd && q % 2 != 0;
      if (all_odd) {
        BigInt e = elementary_symmetric(s.q, s.q.size() - 1);
        if (e < 0) e = -e;
        REQUIRE(rs[0].determinant == e);
      }
    }
  }

  TEST_CASE("presentation route on closed diagrams") {
    std::mt19937_64 rng(53);
    for (int i = 0; i < 25; ++i) {
      const auto [p, q] = random_rational(rng);
      if (p > 200) continue;
      REQUIRE(alex_tangle(rational_2bridge(p, q).knot).delta == alex_rational_continuant(p, q).delta);
    }
    for (int i = 0; i < 25; ++i) {
      const PretzelSpec s = random_pretzel(rng);
      REQUIRE(alex_tangle(pretzel_expr(s).knot).delta == alex_pretzel_continuant(s).delta);
    }
    CHECK(alex_tangle(parse_tangle("compose(cupL, capR)")).delta == LaurentPoly(1));
    const TangleExpr two = parse_tangle("tensor(compose(cupL, capR), compose(cupL, capR))");
    CHECK(closed_invariants(two).components == 2);
    CHECK(code_of([&] { alex_tangle(two); }) == ErrorCode::NotAKnot);
  }

  TEST_CASE("symmetry and cyclic invariance") {
    std::mt19937_64 rng(54);
    for (int i = 0; i < 100; ++i) {
      const PretzelSpec s = random_pretzel(rng);
      const LaurentPoly d = alex_pretzel_continuant(s).delta;
      REQUIRE(subst_t_inverse(d).shifted(d.max_degree()) == d);
      PretzelSpec r = s;
      std::rotate(r.q.begin(), r.q.begin() + 1, r.q.end());
      REQUIRE(alex_pretzel_continuant(r).delta == d);
      REQUIRE(alex_pretzel_closed(r).delta == d);
    }
  }

  TEST_CASE("continuant equals tridiagonal determinant") {
    std::mt19937_64 rng(55);
    for (int i = 0; i < 100; ++i) {
      const std::size_t n = static_cast<std::size_t>(rand_int(rng, 1, 8));
      std::vector<RatFunc> a, u, l;
      for (std::size_t k = 0; k < n; ++k) {
        a.push_back(rand_ratfunc(rng));
        u.push_back(rand_ratfunc(rng));
        l.push_back(rand_ratfunc(rng));
      }
      const Matrix<RatFunc> m = tridiagonal_matrix(a, u, l);
      REQUIRE(continuant(a, u, l) == cofactor_determinant(m));
      REQUIRE(continuant(a, u, l) == determinant(m));
    }
  }

  TEST_CASE("pretzel cyclic matrix is singular and its minor gives the polynomial") {
    for (const PretzelSpec& s : {PretzelSpec{{3, 5, 7}}, PretzelSpec{{2, 1, 1, 1, -5}}, PretzelSpec{{4, 3, -5, 7}}}) {
      const AlexanderResult r = alex_pretzel_span(s);
      CHECK(r.delta == alex_pretzel_continuant(s).delta);
      CHECK(r.presentation.rows() == s.q.size());
      CHECK(determinant(r.presentation).is_zero());
    }
    CHECK(alex_pretzel_continuant({{4, 3, -5, 7}}).determinant == 221);
  }
}
