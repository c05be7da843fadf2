#include "ncgeo/derivation.hpp"

#include "ncgeo/error.hpp"

namespace ncg {

namespace {

std::vector<Relation> build_relations(AlgebraId id) {
  const Scalar one = Scalar::one();
  const Scalar q = Scalar::q();
  const Scalar qbar = Scalar::q_inv();
  using Word = std::vector<Gen>;
  std::vector<Relation> rels;
  auto rel = [&](std::string name, std::vector<std::pair<Scalar, Word>> terms) {
    rels.push_back({std::move(name), std::move(terms)});
  };
  if (id == AlgebraId::sphere) {
    rel("WZ - q ZW", {{one, {Gen::W, Gen::Z}}, {-q, {Gen::Z, Gen::W}}});
    rel("WsZ - qb ZWs", {{one, {Gen::Ws, Gen::Z}}, {-qbar, {Gen::Z, Gen::Ws}}});
    rel("WZs - qb ZsW", {{one, {Gen::W, Gen::Zs}}, {-qbar, {Gen::Zs, Gen::W}}});
    rel("WsZs - q ZsWs", {{one, {Gen::Ws, Gen::Zs}}, {-q, {Gen::Zs, Gen::Ws}}});
    rel("ZsZ - ZZs", {{one, {Gen::Zs, Gen::Z}}, {-one, {Gen::Z, Gen::Zs}}});
    rel("WsW - WWs", {{one, {Gen::Ws, Gen::W}}, {-one, {Gen::W, Gen::Ws}}});
    rel("WWs - 1 + ZZs", {{one, {Gen::W, Gen::Ws}}, {-one, {}}, {one, {Gen::Z, Gen::Zs}}});
  } else {
    rel("WZ - q ZW", {{one, {Gen::W, Gen::Z}}, {-q, {Gen::Z, Gen::W}}});
    rel("ZZs - 1", {{one, {Gen::Z, Gen::Zs}}, {-one, {}}});
    rel("ZsZ - 1", {{one, {Gen::Zs, Gen::Z}}, {-one, {}}});
    rel("WWs - 1", {{one, {Gen::W, Gen::Ws}}, {-one, {}}});
    rel("WsW - 1", {{one, {Gen::Ws, Gen::W}}, {-one, {}}});
  }
  return rels;
}

}  // namespace

const std::vector<Relation>& defining_relations(AlgebraId id) {
  static const std::vector<Relation> torus = build_relations(AlgebraId::torus);
  static const std::vector<Relation> sphere = build_relations(AlgebraId::sphere);
  return id == AlgebraId::torus ? torus : sphere;
}

Derivation::Derivation(AlgebraId id, std::string label, AlgebraElement on_z,
                       AlgebraElement on_zs, AlgebraElement on_w, AlgebraElement on_ws)
    : id_(id), label_(std::move(label)) {
  for (const AlgebraElement* v : {&on_z, &on_zs, &on_w, &on_ws}) {
    if (v->algebra() != id_) {
      raise(ErrorCode::mixed_algebra, "derivation generator values in the wrong algebra");
    }
  }
  values_.emplace(Gen::Z, std::move(on_z));
  values_.emplace(Gen::Zs, std::move(on_zs));
  values_.emplace(Gen::W, std::move(on_w));
  values_.emplace(Gen::Ws, std::move(on_ws));
}

Derivation Derivation::zero(AlgebraId id) {
  AlgebraElement z = AlgebraElement::zero(id);
  return Derivation(id, "0", z, z, z, z);
}

Derivation Derivation::hermitian_from(AlgebraId id, std::string label, const AlgebraElement& vz,
                                      const AlgebraElement& vw) {
  return Derivation(id, std::move(label), vz, vz.star(), vw, vw.star());
}

const AlgebraElement& Derivation::on(Gen g) const { return values_.at(g); }

AlgebraElement Derivation::apply_to_word(const std::vector<Gen>& word) const {
  AlgebraElement prefix = AlgebraElement::unit(id_);
  AlgebraElement deriv = AlgebraElement::zero(id_);
  for (Gen g : word) {
    const AlgebraElement gen = AlgebraElement::generator(id_, g);
    deriv = deriv * gen + prefix * values_.at(g);
    prefix = prefix * gen;
  }
  return deriv;
}

AlgebraElement Derivation::apply(const AlgebraElement& a) const {
  if (a.algebra() != id_) raise(ErrorCode::mixed_algebra, "derivation applied across algebras");
  AlgebraElement out = AlgebraElement::zero(id_);
  for (const auto& [m, c] : a.terms()) {
    out += apply_to_word(monomial_word(id_, m)) * c;
  }
  return out;
}

AlgebraElement Derivation::relation_residual(const Relation& rel) const {
  AlgebraElement out = AlgebraElement::zero(id_);
  for (const auto& [c, word] : rel.terms) {
    out += apply_to_word(word) * c;
  }
  return out;
}

bool Derivation::is_well_defined() const {
  for (const Relation& rel : defining_relations(id_)) {
    if (!relation_residual(rel).is_zero()) return false;
  }
  return true;
}

Derivation Derivation::hermitian_conjugate() const {
  auto conj_value = [&](Gen g) { return values_.at(star_gen(g)).star(); };
  return Derivation(id_, label_ + "*", conj_value(Gen::Z), conj_value(Gen::Zs),
                    conj_value(Gen::W), conj_value(Gen::Ws));
}

bool Derivation::is_hermitian() const {
  return values_.at(Gen::Zs) == values_.at(Gen::Z).star() &&
         values_.at(Gen::Ws) == values_.at(Gen::W).star();
}

bool Derivation::is_zero() const {
  for (const auto& [g, v] : values_) {
    if (!v.is_zero()) return false;
  }
  return true;
}

bool Derivation::operator==(const Derivation& o) const {
  return id_ == o.id_ && values_ == o.values_;
}

Derivation Derivation::operator+(const Derivation& o) const {
  return Derivation(id_, label_ + "+" + o.label_, values_.at(Gen::Z) + o.values_.at(Gen::Z),
                    values_.at(Gen::Zs) + o.values_.at(Gen::Zs),
                    values_.at(Gen::W) + o.values_.at(Gen::W),
                    values_.at(Gen::Ws) + o.values_.at(Gen::Ws));
}

Derivation Derivation::operator-(const Derivation& o) const {
  return Derivation(id_, label_ + "-" + o.label_, values_.at(Gen::Z) - o.values_.at(Gen::Z),
                    values_.at(Gen::Zs) - o.values_.at(Gen::Zs),
                    values_.at(Gen::W) - o.values_.at(Gen::W),
                    values_.at(Gen::Ws) - o.values_.at(Gen::Ws));
}

Derivation Derivation::scaled(const Rational& c) const {
  const Scalar s(c);
  return Derivation(id_, label_, values_.at(Gen::Z) * s, values_.at(Gen::Zs) * s,
                    values_.at(Gen::W) * s, values_.at(Gen::Ws) * s);
}

Derivation Derivation::bracket(const Derivation& o) const {
  if (id_ != o.id_) raise(ErrorCode::mixed_algebra, "bracket of derivations on different algebras");
  auto value = [&](Gen g) {
    return apply(o.values_.at(g)) - o.apply(values_.at(g));
  };
  return Derivation(id_, "[" + label_ + "," + o.label_ + "]", value(Gen::Z), value(Gen::Zs),
                    value(Gen::W), value(Gen::Ws));
}

LieAlgebra::LieAlgebra(std::vector<Derivation> basis) : basis_(std::move(basis)) {
  const std::size_t n = basis_.size();
  structure_.assign(n, std::vector<std::vector<Rational>>(n, std::vector<Rational>(n, Rational(0))));
}

LieAlgebra::LieAlgebra(std::vector<Derivation> basis,
                       std::vector<std::vector<std::vector<Rational>>> structure)
    : basis_(std::move(basis)), structure_(std::move(structure)) {
  if (structure_.size() != basis_.size()) {
    raise(ErrorCode::invalid_argument, "structure constant table has wrong dimension");
  }
}

bool LieAlgebra::verify_closure() const {
  const std::size_t n = basis_.size();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      Derivation expected = Derivation::zero(basis_[a].algebra());
      for (std::size_t r = 0; r < n; ++r) {
        expected = expected + basis_[r].scaled(structure_[a][b][r]);
      }
      if (!(basis_[a].bracket(basis_[b]) == expected)) return false;
    }
  }
  return true;
}

std::vector<Derivation> standard_derivations(AlgebraId id) {
  const Scalar iu = Scalar::imaginary_unit();
  const AlgebraElement Z = AlgebraElement::generator(id, Gen::Z);
  const AlgebraElement W = AlgebraElement::generator(id, Gen::W);
  const AlgebraElement zero = AlgebraElement::zero(id);
  std::vector<Derivation> out;
  out.push_back(Derivation::hermitian_from(id, "d1", Z * iu, zero));
  out.push_back(Derivation::hermitian_from(id, "d2", zero, W * iu));
  if (id == AlgebraId::sphere) {
    const AlgebraElement abs_z2 = AlgebraElement::abs_z2(id);
    const AlgebraElement abs_w2 = AlgebraElement::abs_w2(id);
    out.push_back(Derivation::hermitian_from(id, "d3", Z * abs_w2, -(W * abs_z2)));
  }
  return out;
}

}  // namespace ncg
