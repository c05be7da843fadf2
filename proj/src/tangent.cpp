#include "ncgeo/tangent.hpp"

#include "ncgeo/error.hpp"

namespace ncg {

namespace {
constexpr AlgebraId kSphere = AlgebraId::sphere;
}

bool AmbientElement::is_zero() const {
  for (const auto& c : comps) {
    if (!c.is_zero()) return false;
  }
  return true;
}

AmbientElement AmbientElement::operator+(const AmbientElement& o) const {
  AmbientElement out;
  for (std::size_t i = 0; i < comps.size(); ++i) out.comps.push_back(comps[i] + o.comps[i]);
  return out;
}

AmbientElement AmbientElement::operator-(const AmbientElement& o) const {
  AmbientElement out;
  for (std::size_t i = 0; i < comps.size(); ++i) out.comps.push_back(comps[i] - o.comps[i]);
  return out;
}

AmbientElement AmbientElement::operator*(const AlgebraElement& a) const {
  AmbientElement out;
  for (const auto& c : comps) out.comps.push_back(c * a);
  return out;
}

AmbientElement AmbientElement::operator*(const Scalar& c) const {
  AmbientElement out;
  for (const auto& v : comps) out.comps.push_back(v * c);
  return out;
}

AmbientElement ambient_zero() {
  AmbientElement out;
  out.comps.assign(4, AlgebraElement::zero(kSphere));
  return out;
}

AmbientElement make_ambient(AlgebraElement u1, AlgebraElement u2, AlgebraElement u3,
                            AlgebraElement u4) {
  AmbientElement out;
  out.comps = {std::move(u1), std::move(u2), std::move(u3), std::move(u4)};
  return out;
}

AlgebraElement x_coord(int i) { return AlgebraElement::x(kSphere, i); }

AmbientElement project(const AmbientElement& u) {
  AmbientElement out = ambient_zero();
  for (int i = 1; i <= 4; ++i) {
    AlgebraElement acc = u.comps[i - 1];
    for (int j = 1; j <= 4; ++j) {
      acc -= x_coord(i) * x_coord(j) * u.comps[j - 1];
    }
    out.comps[i - 1] = acc;
  }
  return out;
}

AlgebraElement tangency_defect(const AmbientElement& u) {
  AlgebraElement out = AlgebraElement::zero(kSphere);
  for (int i = 1; i <= 4; ++i) out += x_coord(i) * u.comps[i - 1];
  return out;
}

std::vector<AmbientElement> e_frame() {
  const AlgebraElement zero = AlgebraElement::zero(kSphere);
  const AlgebraElement az = AlgebraElement::abs_z2(kSphere);
  const AlgebraElement aw = AlgebraElement::abs_w2(kSphere);
  return {
      make_ambient(-x_coord(2), x_coord(1), zero, zero),
      make_ambient(zero, zero, -x_coord(4), x_coord(3)),
      make_ambient(x_coord(1) * aw, x_coord(2) * aw, -(x_coord(3) * az), -(x_coord(4) * az)),
  };
}

std::vector<AmbientElement> f_frame() {
  const Scalar q = Scalar::q();
  return {
      make_ambient(-x_coord(4), x_coord(3), -(x_coord(2) * q), x_coord(1) * q),
      make_ambient(-x_coord(3), -x_coord(4), x_coord(1) * q, x_coord(2) * q),
      make_ambient(-x_coord(2), x_coord(1), x_coord(4), -x_coord(3)),
  };
}

bool verify_frame_tangency(const std::vector<AmbientElement>& frame) {
  for (const auto& member : frame) {
    if (!tangency_defect(member).is_zero()) return false;
  }
  return true;
}

std::vector<CheckResult> lemma_x_identities() {
  std::vector<CheckResult> out;
  const Scalar q = Scalar::q();
  const Scalar qbar = Scalar::q_inv();
  auto x = [](int i) { return x_coord(i); };
  auto check = [&](const char* name, const AlgebraElement& lhs, const AlgebraElement& rhs) {
    const AlgebraElement res = lhs - rhs;
    out.push_back({name, res.is_zero(), res.is_zero() ? "" : res.str()});
  };
  check("X2X4 + X1X3 = q(X4X2 + X3X1)", x(2) * x(4) + x(1) * x(3),
        (x(4) * x(2) + x(3) * x(1)) * q);
  check("X2X4 - X1X3 = qb(X4X2 - X3X1)", x(2) * x(4) - x(1) * x(3),
        (x(4) * x(2) - x(3) * x(1)) * qbar);
  check("X2X3 + X1X4 = qb(X3X2 + X4X1)", x(2) * x(3) + x(1) * x(4),
        (x(3) * x(2) + x(4) * x(1)) * qbar);
  check("X2X3 - X1X4 = q(X3X2 - X4X1)", x(2) * x(3) - x(1) * x(4),
        (x(3) * x(2) - x(4) * x(1)) * q);
  check("[X1,X2] = 0", x(1).commutator(x(2)), AlgebraElement::zero(kSphere));
  check("[X3,X4] = 0", x(3).commutator(x(4)), AlgebraElement::zero(kSphere));
  return out;
}

namespace {

using LocAmbient = std::vector<LocalizedElement>;

LocAmbient recombine(const std::vector<AmbientElement>& frame,
                     const std::vector<LocalizedElement>& coords) {
  LocAmbient out(4, LocalizedElement::zero(kSphere));
  for (std::size_t a = 0; a < frame.size(); ++a) {
    for (std::size_t i = 0; i < 4; ++i) {
      out[i] += frame[a].comps[i] * coords[a];
    }
  }
  return out;
}

}  // namespace

std::vector<LocalizedElement> expand_in_frame(const AmbientElement& u, FrameKind kind) {
  if (!(project(u) == u)) {
    raise(ErrorCode::not_in_tangent_module, "element is not fixed by the tangent projection");
  }
  std::vector<LocalizedElement> coords;
  if (kind == FrameKind::E) {
    // Row operations with central pivots |Z|^2 and |W|^2, read off from the
    // freeness argument for the E-frame.
    const AlgebraElement c1 = -(x_coord(2) * u.comps[0]) + x_coord(1) * u.comps[1];
    const AlgebraElement c2 = -(x_coord(4) * u.comps[2]) + x_coord(3) * u.comps[3];
    const AlgebraElement c3 = x_coord(1) * u.comps[0] + x_coord(2) * u.comps[1];
    coords = {LocalizedElement(c1, 1, 0), LocalizedElement(c2, 0, 1), LocalizedElement(c3, 1, 1)};
  } else {
    // U = sum_i P(e_i) U^i and each P(e_i) expands in the F-frame with the
    // fixed coefficient table G^a_i.
    const Scalar qbar = Scalar::q_inv();
    const std::vector<std::vector<AlgebraElement>> g = {
        {-x_coord(4), x_coord(3), -(x_coord(2) * qbar), x_coord(1) * qbar},
        {-x_coord(3), -x_coord(4), x_coord(1) * qbar, x_coord(2) * qbar},
        {-x_coord(2), x_coord(1), x_coord(4), -x_coord(3)},
    };
    for (std::size_t a = 0; a < 3; ++a) {
      AlgebraElement c = AlgebraElement::zero(kSphere);
      for (std::size_t i = 0; i < 4; ++i) c += g[a][i] * u.comps[i];
      coords.emplace_back(c);
    }
  }
  const std::vector<AmbientElement> frame = kind == FrameKind::E ? e_frame() : f_frame();
  const LocAmbient recombined = recombine(frame, coords);
  for (std::size_t i = 0; i < 4; ++i) {
    if (recombined[i] != LocalizedElement(u.comps[i])) {
      raise(ErrorCode::not_expandable, "frame expansion does not reproduce the element");
    }
  }
  return coords;
}

AmbientElement canonical_connection(const Derivation& d, const AmbientElement& u) {
  AmbientElement derived;
  for (const auto& c : u.comps) derived.comps.push_back(d.apply(c));
  return project(derived);
}

std::vector<LocalizedElement> canonical_connection_in_e_frame(const RealMetricCalculus& calc,
                                                              std::size_t a, std::size_t b) {
  const std::vector<AmbientElement> frame = e_frame();
  return expand_in_frame(canonical_connection(calc.d(a), frame[b]), FrameKind::E);
}

AlgebraElement induced_metric_entry(std::size_t a, std::size_t b) {
  const std::vector<AmbientElement> frame = e_frame();
  AlgebraElement out = AlgebraElement::zero(kSphere);
  for (std::size_t i = 0; i < 4; ++i) {
    out += frame[a].comps[i].star() * frame[b].comps[i];
  }
  return out;
}

}  // namespace ncg
