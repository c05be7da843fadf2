#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "ncgeo/algebra.hpp"
#include "ncgeo/derivation.hpp"

namespace ncg {

/// The two central regular denominators the localization is taken at.
enum class Divisor { abs_z2, abs_w2 };

/// The divisor as a normal-form element (the unit for the torus, where both
/// |Z|^2 and |W|^2 equal 1).
AlgebraElement divisor_element(AlgebraId id, Divisor d);

/// Exact division: returns b with divisor * b = a, or nullopt.
std::optional<AlgebraElement> try_divide_exact(const AlgebraElement& a, Divisor d);

/// Throwing variant; the error message carries a witness monomial or diagonal.
AlgebraElement divide_exact(const AlgebraElement& a, Divisor d);

/// Element of the Ore localization at the central multiplicative set
/// generated by |Z|^2 and |W|^2: num * |Z|^-2m * |W|^-2n.
///
/// Kept reduced: no common |Z|^2 or |W|^2 factor divides out of num.
class LocalizedElement {
 public:
  explicit LocalizedElement(AlgebraElement num, std::int64_t m = 0, std::int64_t n = 0);

  static LocalizedElement zero(AlgebraId id) { return LocalizedElement(AlgebraElement::zero(id)); }
  static LocalizedElement unit(AlgebraId id) { return LocalizedElement(AlgebraElement::unit(id)); }
  /// 1 / (|Z|^2m |W|^2n)
  static LocalizedElement inverse_denominator(AlgebraId id, std::int64_t m, std::int64_t n) {
    return LocalizedElement(AlgebraElement::unit(id), m, n);
  }

  AlgebraId algebra() const { return num_.algebra(); }
  const AlgebraElement& numerator() const { return num_; }
  std::int64_t z_exponent() const { return m_; }
  std::int64_t w_exponent() const { return n_; }

  bool is_zero() const { return num_.is_zero(); }
  /// True once reduced with m = n = 0.
  bool is_base() const { return m_ == 0 && n_ == 0; }

  LocalizedElement operator-() const;
  LocalizedElement operator+(const LocalizedElement& o) const;
  LocalizedElement operator-(const LocalizedElement& o) const;
  LocalizedElement operator*(const LocalizedElement& o) const;
  LocalizedElement operator*(const Scalar& c) const;
  LocalizedElement& operator+=(const LocalizedElement& o) { return *this = *this + o; }
  LocalizedElement& operator-=(const LocalizedElement& o) { return *this = *this - o; }
  LocalizedElement& operator*=(const LocalizedElement& o) { return *this = *this * o; }

  /// Denominators are hermitian and central, so star acts on the numerator.
  LocalizedElement star() const;
  bool is_hermitian() const { return star() == *this; }

  /// Equality by cross-multiplication with the central regular denominators.
  bool operator==(const LocalizedElement& o) const;
  bool operator!=(const LocalizedElement& o) const { return !(*this == o); }

  /// Returns the base-algebra representative, or raises NotLiftable.
  AlgebraElement lift_to_base() const;

  std::string str() const;

 private:
  void reduce();

  AlgebraElement num_;
  std::int64_t m_{0};
  std::int64_t n_{0};
};

LocalizedElement operator*(const AlgebraElement& a, const LocalizedElement& x);
LocalizedElement operator*(const LocalizedElement& x, const AlgebraElement& a);
LocalizedElement operator*(const Scalar& c, const LocalizedElement& x);

/// d extended to the localization:
/// d(a D^-1) = (d(a) D - a d(D)) D^-2 for the central denominator D.
LocalizedElement apply(const Derivation& d, const LocalizedElement& x);

}  // namespace ncg
