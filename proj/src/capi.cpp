#include "spanalex/spanalex.h"

#include <exception>
#include <new>
#include <string>

#include "spanalex/report.hpp"

struct sa_result {
  std::string json;
  std::string text;
  std::string csv;
  bool passed = true;
};

namespace {

thread_local std::string last_error;

sa_status status_of(spanalex::ErrorCode code) {
  // Enumerators share their order with ErrorCode.
  return static_cast<sa_status>(static_cast<int>(code) + 1);
}

spanalex::VerifyOptions options_of(const sa_options* o) {
  spanalex::VerifyOptions v;
  if (o == nullptr) return v;
  v.tol = o->tol;
  v.circle_eps = o->circle_eps;
  v.guard = o->guard;
  v.jobs = o->jobs == 0 ? 1 : o->jobs;
  return v;
}

template <class Fn>
sa_status run(sa_result** out, Fn&& fn) {
  if (out == nullptr) {
    last_error = "output pointer is NULL";
    return SA_NULL_ARGUMENT;
  }
  *out = nullptr;
  last_error.clear();
  try {
    spanalex::Report rep = fn();
    auto* r = new sa_result{rep.json.dump(), std::move(rep.text), std::move(rep.csv), rep.passed};
    *out = r;
    if (!rep.passed) {
      last_error = "verification failed";
      return SA_VERIFICATION_FAILED;
    }
    return SA_OK;
  } catch (const spanalex::Error& e) {
    last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return SA_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return SA_INTERNAL;
  }
}

bool missing(const char* s) {
  if (s != nullptr) return false;
  last_error = "string argument is NULL";
  return true;
}

}  // namespace

extern "C" {

sa_options sa_options_default(void) {
  const spanalex::VerifyOptions v;
  return sa_options{v.tol, v.circle_eps, v.guard, v.jobs};
}

sa_status sa_alex_rational(const char* fraction, const char* route, sa_result** out) {
  if (missing(fraction)) return SA_NULL_ARGUMENT;
  const std::string rt = route ? route : "all";
  return run(out, [&] { return spanalex::report_alex_rational(fraction, rt); });
}

sa_status sa_alex_pretzel(const char* spec, const char* route, sa_result** out) {
  if (missing(spec)) return SA_NULL_ARGUMENT;
  const std::string rt = route ? route : "all";
  return run(out, [&] { return spanalex::report_alex_pretzel(spec, rt); });
}

sa_status sa_alex_tangle(const char* expr, sa_result** out) {
  if (missing(expr)) return SA_NULL_ARGUMENT;
  return run(out, [&] { return spanalex::report_alex_tangle(expr); });
}

sa_status sa_roots(const char* kind, const char* spec, const char* check, const sa_options* opts, sa_result** out) {
  if (missing(kind) || missing(spec)) return SA_NULL_ARGUMENT;
  const std::string ck = check ? check : "";
  return run(out, [&] { return spanalex::report_roots(kind, spec, ck, options_of(opts)); });
}

sa_status sa_classify(const char* expr, sa_result** out) {
  if (missing(expr)) return SA_NULL_ARGUMENT;
  return run(out, [&] { return spanalex::report_classify(expr); });
}

sa_status sa_coloring(const char* expr, long long x, long long y, sa_result** out) {
  if (missing(expr)) return SA_NULL_ARGUMENT;
  return run(out, [&] { return spanalex::report_coloring(expr, x, y); });
}

sa_status sa_even_cf(const char* fraction, sa_result** out) {
  if (missing(fraction)) return SA_NULL_ARGUMENT;
  return run(out, [&] { return spanalex::report_even_cf(fraction); });
}

sa_status sa_verify(const char* family, size_t samples, uint64_t seed, long long bound, const sa_options* opts,
                    sa_result** out) {
  if (missing(family)) return SA_NULL_ARGUMENT;
  return run(out, [&] { return spanalex::report_verify(family, samples, seed, bound, options_of(opts)); });
}

const char* sa_result_json(const sa_result* r) { return r ? r->json.c_str() : ""; }
const char* sa_result_text(const sa_result* r) { return r ? r->text.c_str() : ""; }
const char* sa_result_csv(const sa_result* r) { return r ? r->csv.c_str() : ""; }
int sa_result_passed(const sa_result* r) { return r && r->passed ? 1 : 0; }
void sa_result_free(sa_result* r) { delete r; }

const char* sa_last_error_message(void) { return last_error.c_str(); }

const char* sa_status_name(sa_status s) {
  switch (s) {
    case SA_OK: return "OK";
    case SA_VERIFICATION_FAILED: return "VerificationFailed";
    case SA_NULL_ARGUMENT: return "NullArgument";
    case SA_INTERNAL: return "Internal";
    default: break;
  }
  const int k = static_cast<int>(s) - 1;
  if (k >= 0 && k <= static_cast<int>(spanalex::ErrorCode::DegeneratePlane)) {
    return spanalex::error_code_name(static_cast<spanalex::ErrorCode>(k));
  }
  return "Unknown";
}

const char* sa_version(void) { return "0.1.0"; }

}  // extern "C"
