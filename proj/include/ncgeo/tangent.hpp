#pragma once

#include <vector>

#include "ncgeo/connection.hpp"
#include "ncgeo/metric.hpp"

namespace ncg {

/// Element of the ambient free module (S3)^4: U = e_i U^i.
struct AmbientElement {
  std::vector<AlgebraElement> comps;  // four components

  bool is_zero() const;
  bool operator==(const AmbientElement& o) const { return comps == o.comps; }

  AmbientElement operator+(const AmbientElement& o) const;
  AmbientElement operator-(const AmbientElement& o) const;
  AmbientElement operator*(const AlgebraElement& a) const;
  AmbientElement operator*(const Scalar& c) const;
};

AmbientElement ambient_zero();
AmbientElement make_ambient(AlgebraElement u1, AlgebraElement u2, AlgebraElement u3,
                            AlgebraElement u4);

/// X^i in the sphere algebra, i = 1..4.
AlgebraElement x_coord(int i);

/// P(U)^i = sum_j (delta^{ij} - X^i X^j) U^j; idempotent.
AmbientElement project(const AmbientElement& u);

/// sum_i X^i U^i, the scalar whose vanishing puts U in the tangent module.
AlgebraElement tangency_defect(const AmbientElement& u);

enum class FrameKind { E, F };

/// The Hopf frame E_1, E_2, E_3 as ambient elements.
std::vector<AmbientElement> e_frame();
/// The parallelizing frame F_1, F_2, F_3.
std::vector<AmbientElement> f_frame();

/// True iff X^i member_a^i = 0 for every member.
bool verify_frame_tangency(const std::vector<AmbientElement>& frame);

/// The four X-identities plus the commutators [X1,X2] = [X3,X4] = 0.
std::vector<CheckResult> lemma_x_identities();

/// Coordinates c^a with U = sum_a frame_a c^a; base-algebra coordinates for
/// the F-frame, localized for the E-frame. Requires P(U) = U
/// (NotInTangentModule) and verifies the recombination exactly
/// (NotExpandable).
std::vector<LocalizedElement> expand_in_frame(const AmbientElement& u, FrameKind kind);

/// The projected connection P(e_i d(U^i)) on the ambient module.
AmbientElement canonical_connection(const Derivation& d, const AmbientElement& u);

/// nabla-hat_{d_a} E_b expanded in the E-frame, for comparison with the
/// solved connection coefficients.
std::vector<LocalizedElement> canonical_connection_in_e_frame(const RealMetricCalculus& calc,
                                                              std::size_t a, std::size_t b);

/// The metric induced from the ambient module: h_ab = sum_i (E_a^i)* E_b^i.
AlgebraElement induced_metric_entry(std::size_t a, std::size_t b);

}  // namespace ncg
