#pragma once

#include "ncgeo/metric.hpp"

namespace ncg {

/// The flat calculus on the noncommutative torus: rank 2, identity metric,
/// derivations d1, d2.
RealMetricCalculus make_torus_calculus();

/// The round calculus on the noncommutative 3-sphere: rank 3, metric
/// diag(|Z|^2, |W|^2, |Z|^2 |W|^2), derivations d1, d2, d3.
RealMetricCalculus make_sphere_calculus();

RealMetricCalculus make_calculus(AlgebraId id);

/// The standard pseudo-inverse: identity/1 for the torus,
/// diag(|W|^2, |Z|^2, 1) with H = |Z|^2 |W|^2 for the sphere.
PseudoInverse standard_pseudo_inverse(const RealMetricCalculus& calc);

/// A second validated pseudo-inverse (hhat*H, H^2) for uniqueness checks
/// (2*identity/2 for the torus).
PseudoInverse alternative_pseudo_inverse(const RealMetricCalculus& calc);

}  // namespace ncg
