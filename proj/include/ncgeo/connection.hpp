#pragma once

#include <cstdint>
#include <vector>

#include "ncgeo/metric.hpp"

namespace ncg {

/// Connection coefficients: nabla_{d_a} E_b = E_c Gamma^c_{ab}, possibly over
/// the localization. base_flag is set when every coefficient lifts to the
/// base algebra.
class Connection {
 public:
  Connection(AlgebraId id, std::size_t rank);

  std::size_t rank() const { return rank_; }
  AlgebraId algebra() const { return id_; }

  const LocalizedElement& gamma(std::size_t a, std::size_t b, std::size_t c) const {
    return gamma_[a][b][c];
  }
  void set_gamma(std::size_t a, std::size_t b, std::size_t c, LocalizedElement value);

  /// Coordinates of nabla_{d_a} E_b.
  LocModuleElement nabla_basis(std::size_t a, std::size_t b) const;

  /// nabla_{d_a} U for U with localized coordinates (Leibniz extension).
  LocModuleElement nabla(const RealMetricCalculus& calc, std::size_t a,
                         const LocModuleElement& u) const;

  bool base_flag() const { return base_flag_; }

  bool operator==(const Connection& o) const;

 private:
  void refresh_base_flag();

  AlgebraId id_;
  std::size_t rank_;
  std::vector<std::vector<std::vector<LocalizedElement>>> gamma_;
  bool base_flag_{true};
};

/// The six-term Koszul right-hand side K_abc with
/// 2 h(nabla_{d_a} E_b, E_c) = K_abc.
AlgebraElement koszul_rhs(const RealMetricCalculus& calc, std::size_t a, std::size_t b,
                          std::size_t c);

/// Solves for the connection coefficients over the localization, verifies the
/// Koszul equation exactly, then verifies the metric, torsion-free and
/// hermiticity conditions. Raises KoszulUnsatisfied if the candidate fails.
Connection solve_connection(const RealMetricCalculus& calc, const PseudoInverse& pinv);

/// d(h(U,V)) = h(nabla_d U, V) + h(U, nabla_d V) on all basis pairs and on
/// pseudo-randomly generated module elements.
bool verify_metric(const RealMetricCalculus& calc, const Connection& conn,
                   int random_cases = 8, std::uint64_t seed = 0x5eed01);

/// nabla_{d_a} phi(d_b) - nabla_{d_b} phi(d_a) - phi([d_a, d_b]) = 0.
bool verify_torsion_free(const RealMetricCalculus& calc, const Connection& conn);

/// h(nabla_d E, E') hermitian on all triples (the real connection condition).
bool verify_first_order_real(const RealMetricCalculus& calc, const Connection& conn);

/// h(nabla_a nabla_b E_p, E_q) hermitian on all quadruples.
bool verify_real_calculus(const RealMetricCalculus& calc, const Connection& conn);

/// The equivalent second-symmetry form: h(nabla_a E_p, nabla_b E_q) hermitian.
bool verify_real_calculus_alt(const RealMetricCalculus& calc, const Connection& conn);

/// Full Koszul formula check 2h(nabla_{d_a}E_b, E_c) = K_abc on all triples.
bool verify_koszul(const RealMetricCalculus& calc, const Connection& conn);

/// d(h(E,E)) = 2 h(E, nabla_d E) for all basis pairs.
bool verify_h_e_nabla_e(const RealMetricCalculus& calc, const Connection& conn);

}  // namespace ncg
