#pragma once

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <map>
#include <string>

namespace ncg {

using Rational = mpq_class;

/// Builds a canonicalized rational n/d.
Rational make_rational(long num, long den = 1);

/// Element of Q(i), exact real and imaginary rational parts.
struct GaussianRational {
  Rational re{0};
  Rational im{0};

  GaussianRational() = default;
  GaussianRational(Rational r) : re(std::move(r)) {}
  GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  static GaussianRational imaginary_unit() { return {Rational(0), Rational(1)}; }

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }

  GaussianRational conj() const { return {re, -im}; }

  GaussianRational operator-() const { return {-re, -im}; }
  GaussianRational operator+(const GaussianRational& o) const { return {re + o.re, im + o.im}; }
  GaussianRational operator-(const GaussianRational& o) const { return {re - o.re, im - o.im}; }
  GaussianRational operator*(const GaussianRational& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }

  bool operator==(const GaussianRational& o) const { return re == o.re && im == o.im; }
  bool operator!=(const GaussianRational& o) const { return !(*this == o); }

  std::complex<double> to_complex() const { return {re.get_d(), im.get_d()}; }

  std::string str() const;
};

/// Laurent polynomial in the deformation parameter q over Q(i).
///
/// q is a formal unit-modulus parameter: conjugation maps coefficients to
/// their complex conjugates and q^k to q^-k. The zero polynomial stores no
/// terms; no stored coefficient is zero (canonical form).
class Scalar {
 public:
  Scalar() = default;
  Scalar(long value) { set_term(0, GaussianRational(Rational(value))); }
  Scalar(const Rational& value) { set_term(0, GaussianRational(value)); }
  Scalar(const GaussianRational& value) { set_term(0, value); }

  static Scalar zero() { return Scalar(); }
  static Scalar one() { return Scalar(1); }
  static Scalar imaginary_unit() { return Scalar(GaussianRational::imaginary_unit()); }
  /// q^k
  static Scalar q_power(std::int64_t k);
  static Scalar q() { return q_power(1); }
  static Scalar q_inv() { return q_power(-1); }

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  /// True when the polynomial is a single constant term.
  bool is_constant() const;
  /// Constant term (zero if absent).
  GaussianRational constant_term() const;

  Scalar operator-() const;
  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  /// Conjugation: i -> -i, q^k -> q^-k. An involution.
  Scalar conj() const;

  bool operator==(const Scalar& o) const { return terms_ == o.terms_; }
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  const std::map<std::int64_t, GaussianRational>& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  /// Numeric value at q = exp(2*pi*i*p/N).
  std::complex<double> eval_at_root_of_unity(long p, long N) const;

  /// Text form, e.g. "1/2", "i q^-2", "q + q^-1".
  /// With as_factor=true a multi-term sum is parenthesized.
  std::string str(bool as_factor = false) const;

 private:
  void set_term(std::int64_t k, const GaussianRational& c);
  void add_term(std::int64_t k, const GaussianRational& c);

  std::map<std::int64_t, GaussianRational> terms_;
};

Scalar operator*(long lhs, const Scalar& rhs);

}  // namespace ncg
