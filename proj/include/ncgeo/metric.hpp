#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ncgeo/algebra.hpp"
#include "ncgeo/derivation.hpp"
#include "ncgeo/localization.hpp"

namespace ncg {

/// Element of the free right module in basis coordinates: U = E_a U^a.
struct ModuleElement {
  std::vector<AlgebraElement> coords;

  std::size_t rank() const { return coords.size(); }
  bool is_zero() const;
  bool operator==(const ModuleElement& o) const { return coords == o.coords; }

  ModuleElement operator+(const ModuleElement& o) const;
  ModuleElement operator-(const ModuleElement& o) const;
  /// Right module action, componentwise.
  ModuleElement operator*(const AlgebraElement& a) const;
};

ModuleElement zero_module_element(AlgebraId id, std::size_t rank);
/// The a-th basis vector E_a (unit coordinate in slot a).
ModuleElement basis_module_element(AlgebraId id, std::size_t rank, std::size_t a);

/// Module element with coordinates in the localization, used wherever
/// connection coefficients leave the base algebra.
struct LocModuleElement {
  std::vector<LocalizedElement> coords;

  std::size_t rank() const { return coords.size(); }
  bool is_zero() const;
  bool operator==(const LocModuleElement& o) const;

  LocModuleElement operator+(const LocModuleElement& o) const;
  LocModuleElement operator-(const LocModuleElement& o) const;
  LocModuleElement operator*(const LocalizedElement& x) const;

  /// Lifts every coordinate, or raises NotLiftable.
  ModuleElement lift_to_base() const;
};

LocModuleElement to_localized(const ModuleElement& u);
LocModuleElement zero_loc_module_element(AlgebraId id, std::size_t rank);

/// An n x n matrix of algebra elements with h_ab* = h_ba, defining
/// h(U, V) = sum_ab (U^a)* h_ab V^b.
class HermitianForm {
 public:
  HermitianForm(AlgebraId id, std::vector<std::vector<AlgebraElement>> entries);

  AlgebraId algebra() const { return id_; }
  std::size_t rank() const { return entries_.size(); }
  const AlgebraElement& entry(std::size_t a, std::size_t b) const { return entries_[a][b]; }

  AlgebraElement eval(const ModuleElement& u, const ModuleElement& v) const;
  LocalizedElement eval(const LocModuleElement& u, const LocModuleElement& v) const;

 private:
  AlgebraId id_;
  std::vector<std::vector<AlgebraElement>> entries_;
};

/// phi on a basis of the Lie algebra: phi(basis derivation a) = images[a],
/// extended rationally-linearly.
struct AnchorMap {
  std::vector<ModuleElement> images;
};

/// The data of Definition-3.1-style structure: a metric module, a Lie algebra
/// of hermitian derivations, and the anchor map.
struct RealMetricCalculus {
  AlgebraId algebra;
  std::size_t rank;
  HermitianForm form;
  LieAlgebra lie;
  AnchorMap anchor;

  const Derivation& d(std::size_t a) const { return lie.basis(a); }
  const ModuleElement& e(std::size_t a) const { return anchor.images[a]; }
  /// h(E_a, E_b).
  AlgebraElement metric_entry(std::size_t a, std::size_t b) const;
  /// phi applied to the bracket [d_a, d_b] via the structure constants.
  ModuleElement anchor_of_bracket(std::size_t a, std::size_t b) const;
};

struct CheckResult {
  std::string name;
  bool pass;
  std::string detail;
};

struct ValidationReport {
  std::vector<CheckResult> checks;
  bool all_pass() const;
};

/// Validates the axioms: anchor images span, metric hermitian on the image,
/// derivations hermitian and well-defined, Lie bracket closure.
ValidationReport validate_real_metric_calculus(const RealMetricCalculus& c);

/// A pseudo-inverse (hhat, H) of the metric: hhat^{ab} h_{bc} = h_{cb} hhat^{ba}
/// = delta^a_c H with H hermitian and regular.
struct PseudoInverse {
  std::vector<std::vector<AlgebraElement>> hhat;
  AlgebraElement H;
  /// Regularity certificate: H = scale * |Z|^2m |W|^2n.
  Scalar scale;
  std::int64_t m{0};
  std::int64_t n{0};

  const AlgebraElement& entry(std::size_t a, std::size_t b) const { return hhat[a][b]; }
  /// x / H over the localization.
  LocalizedElement divide_by_H(const LocalizedElement& x) const;
};

/// Verifies the defining identities, hermiticity and regularity of H, and the
/// commutation/star properties; raises NotPseudoInverse or
/// IrregularDenominator on failure.
PseudoInverse make_pseudo_inverse(const HermitianForm& form,
                                  std::vector<std::vector<AlgebraElement>> hhat,
                                  AlgebraElement H);

/// Writes H as scale * |Z|^2m |W|^2n if it lies in the certified regular set
/// (nonzero scalars for the torus); raises IrregularDenominator otherwise.
void certify_regular(const AlgebraElement& H, Scalar& scale, std::int64_t& m, std::int64_t& n);

}  // namespace ncg
