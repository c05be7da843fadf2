#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ncgeo/algebra.hpp"

namespace ncg {

/// A defining relation L = 0, stored as a formal linear combination of words
/// in the free algebra on the generators (an empty word is the unit).
struct Relation {
  std::string name;
  std::vector<std::pair<Scalar, std::vector<Gen>>> terms;
};

/// The defining relations of the presented algebra.
const std::vector<Relation>& defining_relations(AlgebraId id);

/// A derivation given by its values on the four generators, extended to the
/// whole algebra by Leibniz's rule.
class Derivation {
 public:
  Derivation(AlgebraId id, std::string label, AlgebraElement on_z, AlgebraElement on_zs,
             AlgebraElement on_w, AlgebraElement on_ws);

  static Derivation zero(AlgebraId id);
  /// d with d(Z) = vz and d(W) = vw, closed up hermitianly:
  /// d(Z*) = (d(Z))*, d(W*) = (d(W))*.
  static Derivation hermitian_from(AlgebraId id, std::string label, const AlgebraElement& vz,
                                   const AlgebraElement& vw);

  AlgebraId algebra() const { return id_; }
  const std::string& label() const { return label_; }
  const AlgebraElement& on(Gen g) const;

  /// Leibniz extension over each normal-form monomial.
  AlgebraElement apply(const AlgebraElement& a) const;

  /// Leibniz applied to an unreduced word of generators.
  AlgebraElement apply_to_word(const std::vector<Gen>& word) const;

  /// True iff the Leibniz extension annihilates every defining relation.
  bool is_well_defined() const;
  /// The residual of one relation under this derivation (zero iff respected).
  AlgebraElement relation_residual(const Relation& rel) const;

  /// d* with d*(a) = (d(a*))*.
  Derivation hermitian_conjugate() const;
  bool is_hermitian() const;

  bool is_zero() const;
  bool operator==(const Derivation& o) const;

  Derivation operator+(const Derivation& o) const;
  Derivation operator-(const Derivation& o) const;
  /// Rational rescaling (the Lie algebras here have rational coefficients).
  Derivation scaled(const Rational& c) const;

  /// [d1, d2] on generators: d1(d2(g)) - d2(d1(g)).
  Derivation bracket(const Derivation& o) const;

 private:
  AlgebraId id_;
  std::string label_;
  std::map<Gen, AlgebraElement> values_;
};

/// A finite-dimensional real Lie algebra of derivations presented by a basis
/// and rational structure constants: [b_a, b_b] = sum_r c[a][b][r] b_r.
class LieAlgebra {
 public:
  /// Abelian case: all structure constants zero.
  explicit LieAlgebra(std::vector<Derivation> basis);
  LieAlgebra(std::vector<Derivation> basis,
             std::vector<std::vector<std::vector<Rational>>> structure);

  std::size_t dim() const { return basis_.size(); }
  const Derivation& basis(std::size_t a) const { return basis_[a]; }
  const std::vector<Derivation>& basis() const { return basis_; }
  const Rational& structure_constant(std::size_t a, std::size_t b, std::size_t r) const {
    return structure_[a][b][r];
  }

  /// Checks that every basis bracket equals its declared expansion.
  bool verify_closure() const;

 private:
  std::vector<Derivation> basis_;
  std::vector<std::vector<std::vector<Rational>>> structure_;
};

/// The standard hermitian derivations: d1, d2 for the torus; d1, d2, d3 for
/// the sphere.
std::vector<Derivation> standard_derivations(AlgebraId id);

}  // namespace ncg
