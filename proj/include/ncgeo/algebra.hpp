#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ncgeo/scalar.hpp"

namespace ncg {

enum class AlgebraId { torus, sphere };

const char* algebra_name(AlgebraId id);

/// The four generator letters of either presented algebra.
enum class Gen { Z, Zs, W, Ws };

Gen star_gen(Gen g);
const char* gen_name(Gen g);

/// Basis monomial.
///
/// sphere: Z^z (Z*)^zs W^(w) with z, zs >= 0 and w the signed W-power
///         (w < 0 means (W*)^{-w}).
/// torus:  Z^(z) W^(w) with both powers signed; zs is always 0.
struct Monomial {
  std::int64_t z{0};
  std::int64_t zs{0};
  std::int64_t w{0};

  auto operator<=>(const Monomial&) const = default;
};

/// Element of one of the two presented *-algebras in normal form: a finite
/// Scalar-linear combination of basis monomials. Canonical: no zero
/// coefficients; map order fixes rendering and iteration order.
class AlgebraElement {
 public:
  explicit AlgebraElement(AlgebraId id) : id_(id) {}

  static AlgebraElement zero(AlgebraId id) { return AlgebraElement(id); }
  static AlgebraElement unit(AlgebraId id);
  static AlgebraElement monomial(AlgebraId id, const Monomial& m, const Scalar& c = Scalar::one());
  static AlgebraElement generator(AlgebraId id, Gen g);
  /// X^i for i in 1..4: X1 = (Z+Z*)/2, X2 = (Z-Z*)/2i, similarly for W.
  static AlgebraElement x(AlgebraId id, int i);
  /// |Z|^2 = ZZ* (the unit for the torus).
  static AlgebraElement abs_z2(AlgebraId id);
  /// |W|^2 = WW* in normal form (1 - ZZ* for the sphere).
  static AlgebraElement abs_w2(AlgebraId id);

  AlgebraId algebra() const { return id_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_unit() const;
  /// True when the element is c*1 for some scalar c.
  bool is_scalar() const;
  Scalar scalar_part() const;

  const std::map<Monomial, Scalar>& terms() const { return terms_; }

  AlgebraElement operator-() const;
  AlgebraElement operator+(const AlgebraElement& o) const;
  AlgebraElement operator-(const AlgebraElement& o) const;
  /// Normal-form product (the rewrite engine).
  AlgebraElement operator*(const AlgebraElement& o) const;
  AlgebraElement operator*(const Scalar& c) const;
  AlgebraElement& operator+=(const AlgebraElement& o) { return *this = *this + o; }
  AlgebraElement& operator-=(const AlgebraElement& o) { return *this = *this - o; }
  AlgebraElement& operator*=(const AlgebraElement& o) { return *this = *this * o; }

  bool operator==(const AlgebraElement& o) const;
  bool operator!=(const AlgebraElement& o) const { return !(*this == o); }

  /// Anti-linear anti-multiplicative involution, in normal form.
  AlgebraElement star() const;

  /// a^n for n >= 0.
  AlgebraElement pow(std::int64_t n) const;

  /// True iff [a, g] = 0 in normal form for every generator g.
  bool is_central() const;
  /// True iff star(a) = a.
  bool is_hermitian() const;

  /// Commutator [a, b] = ab - ba.
  AlgebraElement commutator(const AlgebraElement& o) const;

  std::string str() const;

  void add_term(const Monomial& m, const Scalar& c);

 private:
  void check_same_algebra(const AlgebraElement& o) const;

  AlgebraId id_;
  std::map<Monomial, Scalar> terms_;
};

AlgebraElement operator*(const Scalar& c, const AlgebraElement& a);
AlgebraElement operator*(long c, const AlgebraElement& a);

std::string monomial_str(AlgebraId id, const Monomial& m);

/// Letters of a monomial read left to right, e.g. Z Z Zs W W for Z^2 Z* W^2.
std::vector<Gen> monomial_word(AlgebraId id, const Monomial& m);

}  // namespace ncg
