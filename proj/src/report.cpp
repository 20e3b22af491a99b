#include "spanalex/report.hpp"

#include <cstdio>
#include <regex>
#include <sstream>

#include "spanalex/alexander.hpp"
#include "spanalex/minus1.hpp"

namespace spanalex {

using nlohmann::json;

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::BoundaryMismatch: return "BoundaryMismatch";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::ZeroEvaluationPoint: return "ZeroEvaluationPoint";
    case ErrorCode::PoleAtSpecialization: return "PoleAtSpecialization";
    case ErrorCode::NotAKnot: return "NotAKnot";
    case ErrorCode::InternalInconsistency: return "InternalInconsistency";
    case ErrorCode::ConvergenceFailure: return "ConvergenceFailure";
    case ErrorCode::InfiniteSlope: return "InfiniteSlope";
    case ErrorCode::NotRationalShape: return "NotRationalShape";
    case ErrorCode::TrivialColoring: return "TrivialColoring";
    case ErrorCode::DegeneratePlane: return "DegeneratePlane";
  }
  return "Unknown";
}

namespace {

json integer(const BigInt& x) {
  if (x.fits_slong_p()) return x.get_si();
  return x.get_str();
}

json rational(const BigRat& x) {
  if (x.get_den() == 1) return integer(x.get_num());
  return to_string(x);
}

json coefficients(const LaurentPoly& p) {
  json out = json::array();
  for (int k = p.max_degree(); k >= p.min_degree(); --k) out.push_back(rational(p.coefficient(k)));
  return out;
}

template <class F>
json matrix_json(const Matrix<F>& m) {
  json out = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(entry_string(m(i, j)));
    out.push_back(std::move(row));
  }
  return out;
}

json header(const std::string& command) { return json{{"schema", kSchemaVersion}, {"command", command}}; }

std::string pad(const std::string& s, std::size_t width) {
  return s.size() >= width ? s + " " : s + std::string(width - s.size(), ' ');
}

json route_json(const AlexanderResult& r) {
  json j{{"route", route_name(r.route)},
         {"delta", r.delta.to_string()},
         {"raw", r.raw.to_string()},
         {"coefficients", coefficients(r.delta)},
         {"determinant", integer(r.determinant)},
         {"presentation", matrix_json(r.presentation)}};
  if (r.route == Route::Span) j["kernel_dim"] = r.kernel_dim;
  return j;
}

Report alex_report(const std::string& family, const std::string& input, const std::vector<AlexanderResult>& results,
                   bool mirror, const std::string& note) {
  Report rep;
  rep.passed = routes_agree(results);
  rep.json = header("alex");
  rep.json["family"] = family;
  rep.json["input"] = input;
  rep.json["agree"] = rep.passed;
  json routes = json::array();
  for (const auto& r : results) routes.push_back(route_json(r));
  rep.json["routes"] = std::move(routes);
  const AlexanderResult& first = results.front();
  rep.json["delta"] = first.delta.to_string();
  rep.json["coefficients"] = coefficients(first.delta);
  rep.json["determinant"] = integer(first.determinant);
  if (family == "rational") rep.json["mirror_applied"] = mirror;

  std::ostringstream out;
  out << input;
  if (!note.empty()) out << "  (" << note << ")";
  out << "\n";
  for (const auto& r : results) out << "  " << pad(route_name(r.route), 14) << r.delta.to_string() << "\n";
  out << "determinant " << first.determinant.get_str() << "\n";
  out << (rep.passed ? "routes agree" : "ROUTE MISMATCH") << "\n";
  rep.text = out.str();
  return rep;
}

std::vector<Route> parse_routes(const std::string& route, bool pretzel) {
  if (route == "all") {
    if (pretzel) return {Route::Span, Route::Continuant, Route::Closed};
    return {Route::Span, Route::Continuant};
  }
  if (route == "span") return {Route::Span};
  if (route == "continuant") return {Route::Continuant};
  if (route == "presentation") return {Route::Presentation};
  if (route == "closed" && pretzel) return {Route::Closed};
  fail(ErrorCode::InvalidInput, "unknown route '" + route + "'" + (pretzel ? "" : " for rational knots"));
}

LaurentPoly delta_for(const std::string& kind, const std::string& spec, std::string& id) {
  if (kind == "rational") {
    const RationalSpec r = parse_fraction(spec);
    id = "b(" + std::to_string(r.p) + "," + std::to_string(r.q) + ")";
    return alex_rational_continuant(r.p, r.q).delta;
  }
  if (kind == "pretzel") {
    const PretzelSpec p = parse_pretzel(spec);
    id = "P(" + p.to_string() + ")";
    return alex_pretzel_continuant(p).delta;
  }
  fail(ErrorCode::InvalidInput, "roots need 'rational' or 'pretzel', got '" + kind + "'");
}

json slope_json(const Slope& s) { return s.to_string(); }

json coloring_json(const ColoringMatrix& m) {
  return json::array({json::array({integer(m.a), integer(m.b)}), json::array({integer(m.c), integer(m.d)})});
}

// A bare fraction stands for its canonical rational tangle.
TangleExpr expr_or_fraction(const std::string& text, bool& canonical) {
  static const std::regex fraction_re(R"(\s*[+-]?\d+\s*(/\s*[+-]?\d+\s*)?)");
  canonical = std::regex_match(text, fraction_re);
  return canonical ? rational_canonical_expr(parse_fraction(text)) : parse_tangle(text);
}

std::string fmt(const char* f, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, x);
  return buf;
}

}  // namespace

Report report_alex_rational(const std::string& fraction, const std::string& route) {
  const RationalSpec r = parse_fraction(fraction);
  if (r.is_infinite()) fail(ErrorCode::NotAKnot, "b(1, 0) has no 2-bridge knot form here");
  std::vector<AlexanderResult> results;
  const TwoBridgeDecomposition d = rational_2bridge(r.p, r.q);
  for (Route rt : parse_routes(route, false)) {
    switch (rt) {
      case Route::Span: results.push_back(alex_rational_span(r.p, r.q)); break;
      case Route::Continuant: results.push_back(alex_rational_continuant(r.p, r.q)); break;
      default: results.push_back(alex_tangle(d.knot)); break;
    }
  }
  std::string note;
  if (d.mirror_applied) note = "mirror b(" + std::to_string(d.p) + "," + std::to_string(d.q) + ")";
  if (!d.cf.empty()) {
    note += note.empty() ? "" : ", ";
    note += "even cf [";
    for (std::size_t i = 0; i < d.cf.size(); ++i) note += (i ? "," : "") + std::to_string(d.cf[i]);
    note += "]";
  }
  Report rep = alex_report("rational", r.to_string(), results, d.mirror_applied, note);
  rep.json["mirror_q"] = d.q;
  rep.json["even_cf"] = d.cf;
  return rep;
}

Report report_alex_pretzel(const std::string& spec, const std::string& route) {
  const PretzelSpec p = parse_pretzel(spec);
  const PretzelDecomposition d = pretzel_expr(p);
  std::vector<AlexanderResult> results;
  for (Route rt : parse_routes(route, true)) {
    switch (rt) {
      case Route::Span: results.push_back(alex_pretzel_span(p)); break;
      case Route::Continuant: results.push_back(alex_pretzel_continuant(p)); break;
      case Route::Closed: results.push_back(alex_pretzel_closed(p)); break;
      case Route::Presentation: results.push_back(alex_tangle(d.knot)); break;
    }
  }
  Report rep = alex_report("pretzel", "P(" + p.to_string() + ")", results, false,
                           std::string(pretzel_case_name(d.kind)) + " case, bands P(" + d.spec.to_string() + ")");
  rep.json["case"] = pretzel_case_name(d.kind);
  rep.json["rotated"] = d.spec.q;
  return rep;
}

Report report_alex_tangle(const std::string& expr) {
  const TangleExpr e = parse_tangle(expr);
  return alex_report("tangle", e.to_string(), {alex_tangle(e)}, false, "");
}

Report report_roots(const std::string& kind, const std::string& spec, const std::string& check,
                    const VerifyOptions& opts) {
  std::string id;
  const LaurentPoly delta = delta_for(kind, spec, id);
  const RootReport roots = find_roots(delta, opts.tol);
  Report rep;
  rep.json = header("roots");
  rep.json["knot"] = id;
  rep.json["delta"] = delta.to_string();
  rep.json["tolerance"] = roots.tolerance;
  rep.json["iterations"] = roots.iterations;
  rep.json["max_residual"] = roots.max_residual;
  json list = json::array();
  for (const auto& r : roots.roots) {
    list.push_back(json{{"re", r.z.real()},
                        {"im", r.z.imag()},
                        {"abs", std::abs(r.z)},
                        {"residual", r.residual},
                        {"multiplicity", r.multiplicity}});
  }
  rep.json["roots"] = std::move(list);
  std::ostringstream text;
  text << id << ": " << delta.to_string() << "\n";
  for (const auto& r : roots.roots) {
    text << "  " << fmt("%+.12f", r.z.real()) << " " << fmt("%+.12f", r.z.imag()) << "i   |t| = " << fmt("%.12f", std::abs(r.z))
         << "\n";
  }
  const CircleCheck circle = check_unit_circle(roots, opts.circle_eps);
  const HalfPlaneCheck half = check_halfplane(roots, delta, opts.guard);
  rep.json["checks"] = json{
      {"unit_circle", json{{"pass", circle.pass}, {"worst_margin", circle.worst_margin}, {"eps", opts.circle_eps}}},
      {"half_plane", json{{"pass", half.pass},
                          {"min_re", half.min_re},
                          {"guard", opts.guard},
                          {"nonzero_at_minus_one", half.nonzero_at_minus_one}}}};
  if (check == "circle") {
    rep.passed = circle.pass;
    text << "unit circle: " << (circle.pass ? "pass" : "FAIL") << " (worst | |t|-1 | = " << fmt("%.3e", circle.worst_margin)
         << ")\n";
  } else if (check == "hoste") {
    rep.passed = half.pass;
    text << "Re(t) > -1: " << (half.pass ? "pass" : "FAIL") << " (min Re = " << fmt("%.12f", half.min_re) << ")\n";
  } else if (!check.empty()) {
    fail(ErrorCode::InvalidInput, "unknown check '" + check + "'");
  }
  rep.json["check"] = check.empty() ? json(nullptr) : json(check);
  rep.json["passed"] = rep.passed;
  rep.text = text.str();
  std::ostringstream csv;
  write_roots_csv(csv, id, roots, true);
  rep.csv = csv.str();
  return rep;
}

Report report_classify(const std::string& expr) {
  bool canonical = false;
  const TangleExpr e = expr_or_fraction(expr, canonical);
  const Classification c = classify_rational(e);
  Report rep;
  rep.json = header("classify");
  rep.json["expr"] = e.to_string();
  rep.json["fraction"] = slope_json(c.fraction);
  rep.json["slope"] = slope_json(c.slope);
  rep.json["curve_fraction"] = slope_json(c.curve_fraction);
  json pl = json::array();
  for (const auto& x : c.plucker.p) pl.push_back(integer(x));
  rep.json["plucker"] = std::move(pl);
  rep.json["on_curve"] = c.curve.on_curve;
  // only claimed for expressions built as rational tangles
  rep.json["experimental"] = !canonical;
  rep.json["curve_parameter"] = slope_json(c.curve.parameter);
  rep.json["coloring_matrix"] = coloring_json(c.coloring);
  rep.passed = c.curve.on_curve;
  std::ostringstream out;
  out << "fraction " << c.fraction.to_string() << "   slope " << c.slope.to_string() << "\n";
  out << "coloring [[" << c.coloring.a << ", " << c.coloring.b << "], [" << c.coloring.c << ", " << c.coloring.d << "]]\n";
  out << "plucker (";
  for (std::size_t i = 0; i < 6; ++i) out << (i ? ", " : "") << c.plucker.p[i];
  out << ")  " << (c.curve.on_curve ? "on the rational curve" : "NOT on the rational curve") << ", [p12 : p13] = "
      << c.curve.parameter.to_string() << "\n";
  out << "(v4 - v3)/(v4 - v2) = " << c.curve_fraction.to_string() << "\n";
  rep.text = out.str();
  return rep;
}

Report report_coloring(const std::string& expr, long long x, long long y) {
  bool canonical = false;
  const TangleExpr e = expr_or_fraction(expr, canonical);
  const Coloring c = coloring_propagate(e, BigInt(static_cast<long>(x)), BigInt(static_cast<long>(y)));
  Report rep;
  rep.json = header("coloring");
  rep.json["expr"] = e.to_string();
  rep.json["seed"] = json::array({x, y});
  rep.json["seed_arcs"] = c.seed_arcs;
  rep.json["integral"] = c.integral;
  rep.json["coloring_matrix"] = coloring_json(c.matrix);
  rep.json["fraction"] = slope_json(fraction_from_coloring(c.matrix));
  json crossings = json::array();
  for (const auto& cc : c.crossings)
    crossings.push_back(json{{"over", rational(cc.over)}, {"under_in", rational(cc.under_in)}, {"under_out", rational(cc.under_out)}});
  rep.json["crossings"] = std::move(crossings);
  std::ostringstream out;
  out << "seed on " << c.seed_arcs << ": " << x << ", " << y << "\n";
  out << "coloring [[" << c.matrix.a << ", " << c.matrix.b << "], [" << c.matrix.c << ", " << c.matrix.d << "]]"
      << (c.integral ? "" : " (scaled to integers)") << "\n";
  out << "fraction " << fraction_from_coloring(c.matrix).to_string() << "\n";
  rep.text = out.str();
  return rep;
}

Report report_even_cf(const std::string& fraction) {
  const RationalSpec r = parse_fraction(fraction);
  const std::vector<long long> cf = even_cf(r.p, r.q);
  const RationalSpec back = cf_eval(cf);
  Report rep;
  rep.json = header("cf");
  rep.json["input"] = r.to_string();
  rep.json["even_cf"] = cf;
  rep.json["value"] = back.to_string();
  rep.json["length_even"] = cf.size() % 2 == 0;
  rep.passed = back == r;
  std::ostringstream out;
  out << r.to_string() << " = [";
  for (std::size_t i = 0; i < cf.size(); ++i) out << (i ? ", " : "") << cf[i];
  out << "]\n";
  rep.text = out.str();
  return rep;
}

Report report_verify(const std::string& family, std::size_t samples, std::uint64_t seed, long long bound,
                     const VerifyOptions& opts) {
  const Family fam = parse_family(family);
  if (bound <= 0) bound = fam == Family::Rational ? 9999 : 15;
  const FamilyReport f = family_verify(fam, samples, seed, bound, opts);
  Report rep;
  rep.passed = f.passes == f.samples.size();
  rep.json = header("verify");
  rep.json["family"] = family_name(f.family);
  rep.json["check"] = f.check;
  rep.json["seed"] = f.seed;
  rep.json["bound"] = f.bound;
  rep.json["samples"] = f.samples.size();
  rep.json["passes"] = f.passes;
  rep.json["worst"] = f.worst;
  json failures = json::array();
  for (const auto& s : f.samples) {
    if (s.pass) continue;
    json j{{"knot", s.id}, {"delta", s.delta}, {"margin", s.margin}};
    if (!s.error.empty()) j["error"] = s.error;
    failures.push_back(std::move(j));
  }
  rep.json["failures"] = std::move(failures);
  std::ostringstream out;
  out << family_name(f.family) << ": " << f.passes << "/" << f.samples.size() << " " << f.check << "\n";
  out << (f.check == "unit-circle" ? "worst | |t|-1 | = " + fmt("%.3e", f.worst) : "min Re(t) = " + fmt("%.12f", f.worst))
      << "\n";
  for (const auto& s : f.samples)
    if (!s.pass) out << "  FAIL " << s.id << (s.error.empty() ? "" : ": " + s.error) << "\n";
  rep.text = out.str();
  std::ostringstream csv;
  csv << "knot,pass,margin,delta\n";
  for (const auto& s : f.samples) csv << '"' << s.id << "\"," << (s.pass ? 1 : 0) << "," << fmt("%.17g", s.margin) << ",\"" << s.delta << "\"\n";
  rep.csv = csv.str();
  return rep;
}

}  // namespace spanalex
