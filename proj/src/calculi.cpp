#include "ncgeo/calculi.hpp"

#include "ncgeo/error.hpp"

namespace ncg {

RealMetricCalculus make_torus_calculus() {
  const AlgebraId id = AlgebraId::torus;
  const AlgebraElement one = AlgebraElement::unit(id);
  const AlgebraElement zero = AlgebraElement::zero(id);
  HermitianForm form(id, {{one, zero}, {zero, one}});
  LieAlgebra lie(standard_derivations(id));
  AnchorMap anchor{{basis_module_element(id, 2, 0), basis_module_element(id, 2, 1)}};
  return RealMetricCalculus{id, 2, std::move(form), std::move(lie), std::move(anchor)};
}

RealMetricCalculus make_sphere_calculus() {
  const AlgebraId id = AlgebraId::sphere;
  const AlgebraElement zero = AlgebraElement::zero(id);
  const AlgebraElement az = AlgebraElement::abs_z2(id);
  const AlgebraElement aw = AlgebraElement::abs_w2(id);
  HermitianForm form(id, {{az, zero, zero}, {zero, aw, zero}, {zero, zero, az * aw}});
  LieAlgebra lie(standard_derivations(id));
  AnchorMap anchor{{basis_module_element(id, 3, 0), basis_module_element(id, 3, 1),
                    basis_module_element(id, 3, 2)}};
  return RealMetricCalculus{id, 3, std::move(form), std::move(lie), std::move(anchor)};
}

RealMetricCalculus make_calculus(AlgebraId id) {
  return id == AlgebraId::torus ? make_torus_calculus() : make_sphere_calculus();
}

PseudoInverse standard_pseudo_inverse(const RealMetricCalculus& calc) {
  const AlgebraId id = calc.algebra;
  const AlgebraElement one = AlgebraElement::unit(id);
  const AlgebraElement zero = AlgebraElement::zero(id);
  if (id == AlgebraId::torus) {
    return make_pseudo_inverse(calc.form, {{one, zero}, {zero, one}}, one);
  }
  const AlgebraElement az = AlgebraElement::abs_z2(id);
  const AlgebraElement aw = AlgebraElement::abs_w2(id);
  return make_pseudo_inverse(
      calc.form, {{aw, zero, zero}, {zero, az, zero}, {zero, zero, one}}, az * aw);
}

PseudoInverse alternative_pseudo_inverse(const RealMetricCalculus& calc) {
  const PseudoInverse base = standard_pseudo_inverse(calc);
  const std::size_t n = calc.rank;
  AlgebraElement H = base.H;
  if (calc.algebra == AlgebraId::torus) {
    H = H * Scalar(2);
  } else {
    H = H * base.H;
  }
  std::vector<std::vector<AlgebraElement>> hhat = base.hhat;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      hhat[a][b] = calc.algebra == AlgebraId::torus ? hhat[a][b] * Scalar(2)
                                                    : hhat[a][b] * base.H;
    }
  }
  return make_pseudo_inverse(calc.form, std::move(hhat), std::move(H));
}

}  // namespace ncg
