#pragma once

#include <json.hpp>

#include <string>
#include <utility>
#include <vector>

#include "ncgeo/oracle.hpp"

namespace ncg {

struct OracleOptions {
  std::vector<std::pair<long, long>> thetas;  // empty -> default sample set
  std::vector<Rational> lambda2s;             // empty -> default sample set
  double tol{1e-10};
  int dim{0};  // 0 -> the theta denominator

  std::vector<MatrixRep> reps(AlgebraId id) const;
};

struct VerifyOptions {
  AlgebraId target{AlgebraId::sphere};
  std::string fault;  // empty, or one of the registered fault names
  OracleOptions oracle;
  int homomorphism_pairs{100};
};

/// The registered fault-injection names.
const std::vector<std::string>& known_faults();

struct Report {
  nlohmann::ordered_json json;
  bool all_pass{false};
};

/// Runs the full pipeline: axiom validation, connection solve and verifiers,
/// curvature, symmetry suite, scalar curvature, tangent and localization
/// checks (sphere), and the oracle cross-check of every symbolic identity
/// asserted along the way.
Report run_verify(const VerifyOptions& opts);

/// Parses and normalizes an expression; with a non-null oracle options
/// pointer the result also carries numeric matrices for every sample rep.
nlohmann::ordered_json run_eval(AlgebraId target, const std::string& expression,
                                const OracleOptions* numeric);

std::string report_to_markdown(const nlohmann::ordered_json& report);

}  // namespace ncg
