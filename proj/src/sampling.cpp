#include "ncgeo/sampling.hpp"

namespace ncg {

Scalar random_scalar(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> nterms(1, 2);
  std::uniform_int_distribution<std::int64_t> qexp(-2, 2);
  std::uniform_int_distribution<long> coeff(-4, 4);
  std::uniform_int_distribution<long> den(1, 3);
  Scalar out;
  const int count = nterms(rng);
  for (int t = 0; t < count; ++t) {
    GaussianRational c{make_rational(coeff(rng), den(rng)), make_rational(coeff(rng), den(rng))};
    out += Scalar(c) * Scalar::q_power(qexp(rng));
  }
  return out;
}

AlgebraElement random_element(AlgebraId id, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> nterms(1, 3);
  std::uniform_int_distribution<std::int64_t> small(0, 2);
  std::uniform_int_distribution<std::int64_t> signed_small(-2, 2);
  AlgebraElement out = AlgebraElement::zero(id);
  const int count = nterms(rng);
  for (int t = 0; t < count; ++t) {
    Monomial m;
    if (id == AlgebraId::sphere) {
      m = {small(rng), small(rng), signed_small(rng)};
    } else {
      m = {signed_small(rng), 0, signed_small(rng)};
    }
    out.add_term(m, random_scalar(rng));
  }
  return out;
}

AlgebraElement random_nonzero_element(AlgebraId id, std::mt19937_64& rng) {
  for (;;) {
    AlgebraElement a = random_element(id, rng);
    if (!a.is_zero()) return a;
  }
}

}  // namespace ncg
