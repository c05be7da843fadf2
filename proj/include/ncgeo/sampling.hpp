#pragma once

#include <random>

#include "ncgeo/algebra.hpp"

namespace ncg {

/// Pseudo-random scalar with small exponents and coefficients.
Scalar random_scalar(std::mt19937_64& rng);

/// Pseudo-random normal-form element with a handful of low-degree monomials.
AlgebraElement random_element(AlgebraId id, std::mt19937_64& rng);

/// Nonzero variant.
AlgebraElement random_nonzero_element(AlgebraId id, std::mt19937_64& rng);

}  // namespace ncg
