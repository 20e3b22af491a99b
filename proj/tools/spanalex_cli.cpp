#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <string>
#include <thread>

#include "spanalex/spanalex.h"

namespace {

struct Globals {
  bool json = false;
  double tol = 1e-12;
  double circle_eps = 1e-8;
  double guard = 1e-9;
  unsigned jobs = 0;
  std::string csv;
};

int exit_code(sa_status s) {
  switch (s) {
    case SA_OK: return 0;
    case SA_VERIFICATION_FAILED:
    case SA_INTERNAL_INCONSISTENCY:
    case SA_CONVERGENCE_FAILURE:
    case SA_INTERNAL: return 2;
    default: return 1;
  }
}

int emit(const Globals& g, sa_status s, sa_result* r) {
  if (r == nullptr) {
    std::cerr << "error [" << sa_status_name(s) << "]: " << sa_last_error_message() << "\n";
    return exit_code(s);
  }
  if (g.json) std::cout << sa_result_json(r) << "\n";
  else std::cout << sa_result_text(r);
  if (!g.csv.empty()) {
    std::ofstream f(g.csv, std::ios::binary);
    if (!f) {
      std::cerr << "error: cannot write " << g.csv << "\n";
      sa_result_free(r);
      return 1;
    }
    f << sa_result_csv(r);
  }
  if (s == SA_VERIFICATION_FAILED) std::cerr << "verification failed\n";
  sa_result_free(r);
  return exit_code(s);
}

sa_options options(const Globals& g) {
  sa_options o = sa_options_default();
  o.tol = g.tol;
  o.circle_eps = g.circle_eps;
  o.guard = g.guard;
  o.jobs = g.jobs != 0 ? g.jobs : std::max(1u, std::thread::hardware_concurrency());
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Alexander polynomials and rational tangles from the span functor"};
  app.require_subcommand(1);
  app.set_version_flag("--version", sa_version());

  Globals g;
  app.add_flag("--json", g.json, "print the JSON report");
  app.add_option("--tol", g.tol, "root-finder tolerance")->check(CLI::PositiveNumber);
  app.add_option("--circle-eps", g.circle_eps, "allowed distance of roots from the unit circle")
      ->check(CLI::PositiveNumber);
  app.add_option("--guard", g.guard, "margin for Re(t) > -1")->check(CLI::NonNegativeNumber);
  app.add_option("--jobs", g.jobs, "worker threads (0 = all cores)");
  app.add_option("--csv", g.csv, "write CSV (roots, verify) to FILE");

  std::function<int()> action;
  std::string route = "all";
  std::string arg;

  auto* alex = app.add_subcommand("alex", "Alexander polynomial")->require_subcommand(1);
  auto* rational = alex->add_subcommand("rational", "2-bridge knot b(p, q)");
  rational->add_option("fraction", arg, "P/Q")->required();
  rational->add_option("--route", route, "span | continuant | presentation | all")
      ->check(CLI::IsMember({"span", "continuant", "presentation", "all"}));
  rational->callback([&] {
    action = [&] {
      sa_result* r = nullptr;
      const sa_status s = sa_alex_rational(arg.c_str(), route.c_str(), &r);
      return emit(g, s, r);
    };
  });
  auto* pretzel = alex->add_subcommand("pretzel", "pretzel knot P(q1, ..., qn)");
  pretzel->add_option("spec", arg, "q1,q2,...")->required();
  pretzel->add_option("--route", route, "span | continuant | closed | presentation | all")
      ->check(CLI::IsMember({"span", "continuant", "closed", "presentation", "all"}));
  pretzel->callback([&] {
    action = [&] {
      sa_result* r = nullptr;
      const sa_status s = sa_alex_pretzel(arg.c_str(), route.c_str(), &r);
      return emit(g, s, r);
    };
  });
  auto* tangle = alex->add_subcommand("tangle", "closed tangle expression");
  tangle->add_option("expr", arg, "tangle expression")->required();
  tangle->callback([&] {
    action = [&] {
      sa_result* r = nullptr;
      const sa_status s = sa_alex_tangle(arg.c_str(), &r);
      return emit(g, s, r);
    };
  });

  std::string kind, check;
  auto* roots = app.add_subcommand("roots", "roots of the Alexander polynomial");
  roots->add_option("kind", kind, "rational | pretzel")->required()->check(CLI::IsMember({"rational", "pretzel"}));
  roots->add_option("spec", arg, "P/Q or q1,q2,...")->required();
  roots->add_option("--check", check, "circle | hoste")->check(CLI::IsMember({"circle", "hoste"}));
  roots->callback([&] {
    action = [&] {
      sa_result* r = nullptr;
      const sa_options o = options(g);
      const sa_status s = sa_roots(kind.c_str(), arg.c_str(), check.c_str(), &o, &r);
      return emit(g, s, r);
    };
  });

  auto* classify = app.add_subcommand("classify", "fraction of a rational tangle from its t = -1 span");
  classify->add_option("expr", arg, "tangle expression or P/Q")->required();
  classify->callback([&] {
    action = [&] {
      sa_result* r = nullptr;
      const sa_status s = sa_classify(arg.c_str(), &r);
      return emit(g, s, r);
    };
  });

  long long cx = 0, cy = 1;
  auto* color = app.add_subcommand("color", "Fox coloring from two seed colors");
  color->add_option("expr", arg, "tangle expression")->required();
  color->add_option("x", cx, "first seed color")->required();
  color->add_option("y", cy, "second seed color")->required();
  color->callback([&] {
    action = [&] {
      sa_result* r = nullptr;
      const sa_status s = sa_coloring(arg.c_str(), cx, cy, &r);
      return emit(g, s, r);
    };
  });

  auto* cf = app.add_subcommand("cf", "even continued fraction");
  cf->add_option("fraction", arg, "P/Q")->required();
  cf->callback([&] {
    action = [&] {
      sa_result* r = nullptr;
      const sa_status s = sa_even_cf(arg.c_str(), &r);
      return emit(g, s, r);
    };
  });

  std::string family;
  std::size_t samples = 100;
  std::uint64_t seed = 0;
  long long bound = 0;
  auto* verify = app.add_subcommand("verify", "root-location check on a seeded sample");
  verify->add_option("--family", family, "odd-pretzel | even-pretzel-2p | even-pretzel-2p1 | rational")->required();
  verify->add_option("--samples", samples, "number of knots")->check(CLI::PositiveNumber);
  verify->add_option("--seed", seed, "RNG seed");
  verify->add_option("--bound", bound, "largest |q_i| (pretzel, default 15) or p (rational, default 9999)")
      ->check(CLI::Range(1LL, 1000000LL));
  verify->callback([&] {
    action = [&] {
      sa_result* r = nullptr;
      const sa_options o = options(g);
      const sa_status s = sa_verify(family.c_str(), samples, seed, bound, &o, &r);
      return emit(g, s, r);
    };
  });

  for (CLI::App* sub : {alex, rational, pretzel, tangle, roots, classify, color, cf, verify}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }
  return action ? action() : 1;
}
