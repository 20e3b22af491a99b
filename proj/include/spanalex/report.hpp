#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "spanalex/roots.hpp"

namespace spanalex {

inline constexpr int kSchemaVersion = 1;

/// Output of one command: machine-readable JSON, a human summary, optional
/// CSV, and the verification verdict (false maps to exit code 2).
struct Report {
  nlohmann::json json;
  std::string text;
  std::string csv;
  bool passed = true;
};

Report report_alex_rational(const std::string& fraction, const std::string& route);
Report report_alex_pretzel(const std::string& spec, const std::string& route);
Report report_alex_tangle(const std::string& expr);
/// kind is "rational" or "pretzel"; check is "", "circle" or "hoste".
Report report_roots(const std::string& kind, const std::string& spec, const std::string& check,
                    const VerifyOptions& opts);
Report report_classify(const std::string& expr);
Report report_coloring(const std::string& expr, long long x, long long y);
Report report_even_cf(const std::string& fraction);
Report report_verify(const std::string& family, std::size_t samples, std::uint64_t seed, long long bound,
                     const VerifyOptions& opts);

}  // namespace spanalex
