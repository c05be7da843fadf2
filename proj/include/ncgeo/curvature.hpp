#pragma once

#include <string>
#include <vector>

#include "ncgeo/connection.hpp"

namespace ncg {

/// R(d_p, d_q) U = nabla_p nabla_q U - nabla_q nabla_p U - nabla_{[d_p,d_q]} U.
LocModuleElement curvature_op(const RealMetricCalculus& calc, const Connection& conn,
                              std::size_t p, std::size_t q, const LocModuleElement& u);

/// Operator values on the basis and all n^4 components
/// R_abpq = h(E_a, R(d_p, d_q) E_b), lifted to the base algebra.
class CurvatureTable {
 public:
  CurvatureTable(const RealMetricCalculus& calc, const Connection& conn);

  std::size_t rank() const { return rank_; }
  AlgebraId algebra() const { return id_; }

  /// R(d_p, d_q) E_b in basis coordinates.
  const ModuleElement& op_value(std::size_t p, std::size_t q, std::size_t b) const {
    return op_values_[p][q][b];
  }
  const AlgebraElement& component(std::size_t a, std::size_t b, std::size_t p,
                                  std::size_t q) const {
    return comps_[a][b][p][q];
  }
  void set_component(std::size_t a, std::size_t b, std::size_t p, std::size_t q,
                     AlgebraElement v) {
    comps_[a][b][p][q] = std::move(v);
  }

  /// Count and list of nonzero components.
  std::size_t nonzero_count() const;

 private:
  AlgebraId id_;
  std::size_t rank_;
  std::vector<std::vector<std::vector<ModuleElement>>> op_values_;
  std::vector<std::vector<std::vector<std::vector<AlgebraElement>>>> comps_;
};

struct SymmetryViolation {
  std::string family;
  std::vector<std::size_t> indices;
  std::string residual;
};

/// Verdicts for the four component-symmetry families.
struct SymmetryReport {
  bool antisymmetry_last_pair{true};    // R_abpq = -R_abqp
  bool antisymmetry_first_pair{true};   // R_abpq = -R_bapq
  bool pair_interchange{true};          // R_abpq = R_pqab
  bool first_bianchi{true};             // R_apqr + R_aqrp + R_arpq = 0
  bool components_hermitian{true};      // (R_abpq)* = R_abpq
  std::vector<SymmetryViolation> violations;

  bool all_pass() const {
    return antisymmetry_last_pair && antisymmetry_first_pair && pair_interchange &&
           first_bianchi && components_hermitian;
  }
};

SymmetryReport symmetry_suite(const CurvatureTable& table);

struct ScalarCurvature {
  AlgebraElement S;
  /// The contraction hhat^{ab} R_{apbq} hhat^{pq} before dividing by H twice.
  AlgebraElement contraction;
};

/// Solves hhat^{ab} R_{apbq} hhat^{pq} = H S H exactly and lifts S to the
/// base algebra; verifies S* = S and the defining identity.
ScalarCurvature scalar_curvature(const CurvatureTable& table, const PseudoInverse& pinv);

}  // namespace ncg
