#include "ncgeo.h"

#include <cstring>
#include <string>

#include "ncgeo/error.hpp"
#include "ncgeo/pipeline.hpp"

using nlohmann::ordered_json;

struct ncg_engine {
  ncg::AlgebraId target;
  std::string last_error;
};

namespace {

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

ncg_status status_of(ncg::ErrorCode code) {
  using ncg::ErrorCode;
  switch (code) {
    case ErrorCode::invalid_argument: return NCG_ERR_INVALID_ARGUMENT;
    case ErrorCode::parse_error: return NCG_ERR_PARSE;
    case ErrorCode::mixed_algebra: return NCG_ERR_MIXED_ALGEBRA;
    case ErrorCode::rank_mismatch: return NCG_ERR_RANK_MISMATCH;
    case ErrorCode::not_divisible: return NCG_ERR_NOT_DIVISIBLE;
    case ErrorCode::not_liftable: return NCG_ERR_NOT_LIFTABLE;
    case ErrorCode::not_pseudo_inverse: return NCG_ERR_NOT_PSEUDO_INVERSE;
    case ErrorCode::irregular_denominator: return NCG_ERR_IRREGULAR_DENOMINATOR;
    case ErrorCode::koszul_unsatisfied: return NCG_ERR_KOSZUL_UNSATISFIED;
    case ErrorCode::not_in_tangent_module: return NCG_ERR_NOT_IN_TANGENT_MODULE;
    case ErrorCode::not_expandable: return NCG_ERR_NOT_EXPANDABLE;
  }
  return NCG_ERR_INTERNAL;
}

template <typename Fn>
ncg_status guarded(ncg_engine* engine, Fn&& fn) {
  try {
    fn();
    if (engine != nullptr) engine->last_error.clear();
    return NCG_OK;
  } catch (const ncg::Error& e) {
    if (engine != nullptr) engine->last_error = e.what();
    return status_of(e.code());
  } catch (const std::exception& e) {
    if (engine != nullptr) engine->last_error = e.what();
    return NCG_ERR_INTERNAL;
  }
}

std::pair<long, long> parse_fraction(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) {
    ncg::raise(ncg::ErrorCode::invalid_argument, "expected a fraction p/N: " + text);
  }
  try {
    return {std::stol(text.substr(0, slash)), std::stol(text.substr(slash + 1))};
  } catch (const std::exception&) {
    ncg::raise(ncg::ErrorCode::invalid_argument, "bad fraction: " + text);
  }
}

// shared option keys for eval and verify
void fill_oracle_options(const ordered_json& j, ncg::OracleOptions& oracle, bool& numeric) {
  if (j.contains("theta")) {
    for (const auto& t : j["theta"]) {
      oracle.thetas.push_back(parse_fraction(t.get<std::string>()));
    }
    numeric = true;
  }
  if (j.contains("lambda2")) {
    for (const auto& l : j["lambda2"]) {
      const auto [num, den] = parse_fraction(l.get<std::string>());
      oracle.lambda2s.push_back(ncg::make_rational(num, den));
    }
    numeric = true;
  }
  if (j.contains("dim")) {
    oracle.dim = j["dim"].get<int>();
    numeric = true;
  }
  if (j.contains("tol")) oracle.tol = j["tol"].get<double>();
  if (j.contains("numeric")) numeric = j["numeric"].get<bool>();
}

ordered_json parse_opts(const char* opts_json) {
  if (opts_json == nullptr || *opts_json == '\0') return ordered_json::object();
  ordered_json j = ordered_json::parse(opts_json, nullptr, false);
  if (j.is_discarded() || !j.is_object()) {
    ncg::raise(ncg::ErrorCode::invalid_argument, "options must be a JSON object");
  }
  return j;
}

}  // namespace

extern "C" {

const char* ncg_version(void) { return "1.0.0"; }

const char* ncg_status_name(ncg_status status) {
  switch (status) {
    case NCG_OK: return "OK";
    case NCG_ERR_INVALID_ARGUMENT: return "InvalidArgument";
    case NCG_ERR_PARSE: return "ParseError";
    case NCG_ERR_MIXED_ALGEBRA: return "MixedAlgebra";
    case NCG_ERR_RANK_MISMATCH: return "RankMismatch";
    case NCG_ERR_NOT_DIVISIBLE: return "NotDivisible";
    case NCG_ERR_NOT_LIFTABLE: return "NotLiftable";
    case NCG_ERR_NOT_PSEUDO_INVERSE: return "NotPseudoInverse";
    case NCG_ERR_IRREGULAR_DENOMINATOR: return "IrregularDenominator";
    case NCG_ERR_KOSZUL_UNSATISFIED: return "KoszulUnsatisfied";
    case NCG_ERR_NOT_IN_TANGENT_MODULE: return "NotInTangentModule";
    case NCG_ERR_NOT_EXPANDABLE: return "NotExpandable";
    case NCG_ERR_INTERNAL: return "Internal";
  }
  return "Unknown";
}

ncg_status ncg_engine_create(const char* target, ncg_engine** out_engine) {
  if (out_engine == nullptr || target == nullptr) return NCG_ERR_INVALID_ARGUMENT;
  const std::string name(target);
  ncg::AlgebraId id;
  if (name == "torus") {
    id = ncg::AlgebraId::torus;
  } else if (name == "sphere") {
    id = ncg::AlgebraId::sphere;
  } else {
    return NCG_ERR_INVALID_ARGUMENT;
  }
  *out_engine = new ncg_engine{id, {}};
  return NCG_OK;
}

void ncg_engine_destroy(ncg_engine* engine) { delete engine; }

const char* ncg_engine_last_error(const ncg_engine* engine) {
  return engine == nullptr ? "" : engine->last_error.c_str();
}

ncg_status ncg_eval(ncg_engine* engine, const char* expression, const char* opts_json,
                    char** out_json) {
  if (engine == nullptr || expression == nullptr || out_json == nullptr) {
    return NCG_ERR_INVALID_ARGUMENT;
  }
  return guarded(engine, [&] {
    const ordered_json opts = parse_opts(opts_json);
    ncg::OracleOptions oracle;
    bool numeric = false;
    fill_oracle_options(opts, oracle, numeric);
    const ordered_json result =
        ncg::run_eval(engine->target, expression, numeric ? &oracle : nullptr);
    *out_json = dup_string(result.dump(2));
  });
}

ncg_status ncg_verify(ncg_engine* engine, const char* opts_json, int* out_all_pass,
                      char** out_report_json) {
  if (engine == nullptr || out_report_json == nullptr) return NCG_ERR_INVALID_ARGUMENT;
  return guarded(engine, [&] {
    const ordered_json opts = parse_opts(opts_json);
    ncg::VerifyOptions vopts;
    vopts.target = engine->target;
    bool numeric_unused = false;
    fill_oracle_options(opts, vopts.oracle, numeric_unused);
    if (opts.contains("inject_fault")) vopts.fault = opts["inject_fault"].get<std::string>();
    const ncg::Report report = ncg::run_verify(vopts);
    if (out_all_pass != nullptr) *out_all_pass = report.all_pass ? 1 : 0;
    *out_report_json = dup_string(report.json.dump(2));
  });
}

ncg_status ncg_report_to_markdown(const char* report_json, char** out_markdown) {
  if (report_json == nullptr || out_markdown == nullptr) return NCG_ERR_INVALID_ARGUMENT;
  return guarded(nullptr, [&] {
    const ordered_json j = ordered_json::parse(report_json, nullptr, false);
    if (j.is_discarded()) {
      ncg::raise(ncg::ErrorCode::invalid_argument, "malformed report JSON");
    }
    *out_markdown = dup_string(ncg::report_to_markdown(j));
  });
}

void ncg_string_free(char* s) { delete[] s; }

}  // extern "C"
