#include "ncgeo/metric.hpp"

#include "ncgeo/error.hpp"

namespace ncg {

bool ModuleElement::is_zero() const {
  for (const auto& c : coords) {
    if (!c.is_zero()) return false;
  }
  return true;
}

ModuleElement ModuleElement::operator+(const ModuleElement& o) const {
  if (coords.size() != o.coords.size()) raise(ErrorCode::rank_mismatch, "module rank mismatch");
  ModuleElement out;
  for (std::size_t a = 0; a < coords.size(); ++a) out.coords.push_back(coords[a] + o.coords[a]);
  return out;
}

ModuleElement ModuleElement::operator-(const ModuleElement& o) const {
  if (coords.size() != o.coords.size()) raise(ErrorCode::rank_mismatch, "module rank mismatch");
  ModuleElement out;
  for (std::size_t a = 0; a < coords.size(); ++a) out.coords.push_back(coords[a] - o.coords[a]);
  return out;
}

ModuleElement ModuleElement::operator*(const AlgebraElement& a) const {
  ModuleElement out;
  for (const auto& c : coords) out.coords.push_back(c * a);
  return out;
}

ModuleElement zero_module_element(AlgebraId id, std::size_t rank) {
  ModuleElement u;
  u.coords.assign(rank, AlgebraElement::zero(id));
  return u;
}

ModuleElement basis_module_element(AlgebraId id, std::size_t rank, std::size_t a) {
  ModuleElement u = zero_module_element(id, rank);
  u.coords[a] = AlgebraElement::unit(id);
  return u;
}

bool LocModuleElement::is_zero() const {
  for (const auto& c : coords) {
    if (!c.is_zero()) return false;
  }
  return true;
}

bool LocModuleElement::operator==(const LocModuleElement& o) const {
  if (coords.size() != o.coords.size()) return false;
  for (std::size_t a = 0; a < coords.size(); ++a) {
    if (coords[a] != o.coords[a]) return false;
  }
  return true;
}

LocModuleElement LocModuleElement::operator+(const LocModuleElement& o) const {
  if (coords.size() != o.coords.size()) raise(ErrorCode::rank_mismatch, "module rank mismatch");
  LocModuleElement out;
  for (std::size_t a = 0; a < coords.size(); ++a) out.coords.push_back(coords[a] + o.coords[a]);
  return out;
}

LocModuleElement LocModuleElement::operator-(const LocModuleElement& o) const {
  if (coords.size() != o.coords.size()) raise(ErrorCode::rank_mismatch, "module rank mismatch");
  LocModuleElement out;
  for (std::size_t a = 0; a < coords.size(); ++a) out.coords.push_back(coords[a] - o.coords[a]);
  return out;
}

LocModuleElement LocModuleElement::operator*(const LocalizedElement& x) const {
  LocModuleElement out;
  for (const auto& c : coords) out.coords.push_back(c * x);
  return out;
}

ModuleElement LocModuleElement::lift_to_base() const {
  ModuleElement out;
  for (const auto& c : coords) out.coords.push_back(c.lift_to_base());
  return out;
}

LocModuleElement to_localized(const ModuleElement& u) {
  LocModuleElement out;
  for (const auto& c : u.coords) out.coords.emplace_back(c);
  return out;
}

LocModuleElement zero_loc_module_element(AlgebraId id, std::size_t rank) {
  LocModuleElement out;
  out.coords.assign(rank, LocalizedElement::zero(id));
  return out;
}

HermitianForm::HermitianForm(AlgebraId id, std::vector<std::vector<AlgebraElement>> entries)
    : id_(id), entries_(std::move(entries)) {
  const std::size_t n = entries_.size();
  for (const auto& row : entries_) {
    if (row.size() != n) raise(ErrorCode::rank_mismatch, "hermitian form matrix not square");
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (entries_[a][b].algebra() != id_) {
        raise(ErrorCode::mixed_algebra, "form entry in the wrong algebra");
      }
      if (entries_[a][b].star() != entries_[b][a]) {
        raise(ErrorCode::invalid_argument, "form matrix violates h_ab* = h_ba");
      }
    }
  }
}

AlgebraElement HermitianForm::eval(const ModuleElement& u, const ModuleElement& v) const {
  if (u.rank() != rank() || v.rank() != rank()) {
    raise(ErrorCode::rank_mismatch, "h_eval rank mismatch");
  }
  AlgebraElement out = AlgebraElement::zero(id_);
  for (std::size_t a = 0; a < rank(); ++a) {
    for (std::size_t b = 0; b < rank(); ++b) {
      out += u.coords[a].star() * entries_[a][b] * v.coords[b];
    }
  }
  return out;
}

LocalizedElement HermitianForm::eval(const LocModuleElement& u, const LocModuleElement& v) const {
  if (u.rank() != rank() || v.rank() != rank()) {
    raise(ErrorCode::rank_mismatch, "h_eval rank mismatch");
  }
  LocalizedElement out = LocalizedElement::zero(id_);
  for (std::size_t a = 0; a < rank(); ++a) {
    for (std::size_t b = 0; b < rank(); ++b) {
      out += u.coords[a].star() * entries_[a][b] * v.coords[b];
    }
  }
  return out;
}

AlgebraElement RealMetricCalculus::metric_entry(std::size_t a, std::size_t b) const {
  return form.eval(anchor.images[a], anchor.images[b]);
}

ModuleElement RealMetricCalculus::anchor_of_bracket(std::size_t a, std::size_t b) const {
  ModuleElement out = zero_module_element(algebra, rank);
  for (std::size_t r = 0; r < lie.dim(); ++r) {
    const Rational& c = lie.structure_constant(a, b, r);
    if (c != 0) out = out + anchor.images[r] * (AlgebraElement::unit(algebra) * Scalar(c));
  }
  return out;
}

bool ValidationReport::all_pass() const {
  for (const auto& c : checks) {
    if (!c.pass) return false;
  }
  return true;
}

ValidationReport validate_real_metric_calculus(const RealMetricCalculus& c) {
  ValidationReport report;
  auto add = [&](std::string name, bool pass, std::string detail = "") {
    report.checks.push_back({std::move(name), pass, std::move(detail)});
  };

  bool ranks_ok = c.anchor.images.size() == c.lie.dim() && c.form.rank() == c.rank;
  for (const auto& img : c.anchor.images) ranks_ok = ranks_ok && img.rank() == c.rank;
  add("anchor and form ranks consistent", ranks_ok);
  if (!ranks_ok) return report;

  // The anchor images are the declared module basis, so they generate; the
  // spot check is that nontrivial coordinate combinations are nonzero.
  bool generates = c.anchor.images.size() >= c.rank;
  ModuleElement combo = zero_module_element(c.algebra, c.rank);
  for (std::size_t a = 0; a < c.lie.dim(); ++a) {
    combo = combo + c.anchor.images[a] * (AlgebraElement::unit(c.algebra) * Scalar(long(a) + 1));
  }
  generates = generates && !combo.is_zero();
  add("anchor image generates the module", generates);

  bool hermitian_metric = true;
  std::string witness;
  for (std::size_t a = 0; a < c.lie.dim() && hermitian_metric; ++a) {
    for (std::size_t b = 0; b < c.lie.dim() && hermitian_metric; ++b) {
      const AlgebraElement hab = c.metric_entry(a, b);
      if (!hab.is_hermitian()) {
        hermitian_metric = false;
        witness = "h(E_" + std::to_string(a + 1) + ",E_" + std::to_string(b + 1) +
                  ") = " + hab.str();
      }
    }
  }
  add("h(E,E') hermitian on the anchor image", hermitian_metric, witness);

  bool derivations_hermitian = true;
  for (std::size_t a = 0; a < c.lie.dim(); ++a) {
    derivations_hermitian = derivations_hermitian && c.d(a).is_hermitian();
  }
  add("basis derivations hermitian", derivations_hermitian);

  bool well_defined = true;
  for (std::size_t a = 0; a < c.lie.dim(); ++a) {
    well_defined = well_defined && c.d(a).is_well_defined();
  }
  add("basis derivations respect the defining relations", well_defined);

  add("Lie algebra closed under bracket", c.lie.verify_closure());
  return report;
}

void certify_regular(const AlgebraElement& H, Scalar& scale, std::int64_t& m, std::int64_t& n) {
  AlgebraElement rest = H;
  std::int64_t mm = 0, nn = 0;
  if (H.algebra() == AlgebraId::sphere) {
    for (;;) {
      auto d = try_divide_exact(rest, Divisor::abs_z2);
      if (!d || d->is_zero()) break;
      rest = *d;
      ++mm;
    }
    for (;;) {
      auto d = try_divide_exact(rest, Divisor::abs_w2);
      if (!d || d->is_zero()) break;
      rest = *d;
      ++nn;
    }
  }
  if (!rest.is_scalar() || rest.scalar_part().is_zero()) {
    raise(ErrorCode::irregular_denominator,
          "H is not in the certified regular set: " + H.str());
  }
  scale = rest.scalar_part();
  m = mm;
  n = nn;
}

LocalizedElement PseudoInverse::divide_by_H(const LocalizedElement& x) const {
  // H = scale * |Z|^2m |W|^2n with scale a nonzero scalar; invertible scales
  // are single terms c q^k with inverse (1/c) q^-k.
  if (scale.term_count() != 1) {
    raise(ErrorCode::irregular_denominator, "H scale is not a unit: " + scale.str());
  }
  const auto& [k, c] = *scale.terms().begin();
  const Rational norm = c.re * c.re + c.im * c.im;
  const Scalar inv_scale = Scalar(GaussianRational{c.re / norm, -c.im / norm}) * Scalar::q_power(-k);
  return x * inv_scale * LocalizedElement::inverse_denominator(x.algebra(), m, n);
}

PseudoInverse make_pseudo_inverse(const HermitianForm& form,
                                  std::vector<std::vector<AlgebraElement>> hhat,
                                  AlgebraElement H) {
  const std::size_t nrank = form.rank();
  if (hhat.size() != nrank) raise(ErrorCode::rank_mismatch, "hhat has wrong rank");
  for (const auto& row : hhat) {
    if (row.size() != nrank) raise(ErrorCode::rank_mismatch, "hhat not square");
  }
  const AlgebraId id = form.algebra();
  const AlgebraElement zero = AlgebraElement::zero(id);

  if (!H.is_hermitian()) {
    raise(ErrorCode::not_pseudo_inverse, "H is not hermitian: " + H.str());
  }

  // hhat^{ab} h_{bc} = h_{cb} hhat^{ba} = delta^a_c H
  for (std::size_t a = 0; a < nrank; ++a) {
    for (std::size_t c = 0; c < nrank; ++c) {
      AlgebraElement left = zero;
      AlgebraElement right = zero;
      for (std::size_t b = 0; b < nrank; ++b) {
        left += hhat[a][b] * form.entry(b, c);
        right += form.entry(c, b) * hhat[b][a];
      }
      const AlgebraElement expected = (a == c) ? H : zero;
      if (left != expected || right != expected) {
        raise(ErrorCode::not_pseudo_inverse,
              "pseudo-inverse identity fails at (" + std::to_string(a + 1) + "," +
                  std::to_string(c + 1) + ")");
      }
    }
  }

  // Lemma consequences, verified rather than assumed: [h_ab, H] = [hhat^{ab}, H] = 0
  // and (hhat^{ab})* = hhat^{ba}.
  for (std::size_t a = 0; a < nrank; ++a) {
    for (std::size_t b = 0; b < nrank; ++b) {
      if (!form.entry(a, b).commutator(H).is_zero() || !hhat[a][b].commutator(H).is_zero()) {
        raise(ErrorCode::not_pseudo_inverse, "H fails to commute with the form or hhat");
      }
      if (hhat[a][b].star() != hhat[b][a]) {
        raise(ErrorCode::not_pseudo_inverse, "(hhat^{ab})* != hhat^{ba}");
      }
    }
  }

  PseudoInverse out{std::move(hhat), std::move(H), Scalar::one(), 0, 0};
  certify_regular(out.H, out.scale, out.m, out.n);
  return out;
}

}  // namespace ncg
