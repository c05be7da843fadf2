#include "ncgeo/localization.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "ncgeo/error.hpp"

namespace ncg {

AlgebraElement divisor_element(AlgebraId id, Divisor d) {
  if (id == AlgebraId::torus) return AlgebraElement::unit(id);
  return d == Divisor::abs_z2 ? AlgebraElement::abs_z2(id) : AlgebraElement::abs_w2(id);
}

namespace {

// |Z|^2 b = a: every monomial of a must carry both a Z and a Z* letter.
std::optional<AlgebraElement> divide_abs_z2(const AlgebraElement& a) {
  AlgebraElement out = AlgebraElement::zero(a.algebra());
  for (const auto& [m, c] : a.terms()) {
    if (m.z < 1 || m.zs < 1) return std::nullopt;
    out.add_term({m.z - 1, m.zs - 1, m.w}, c);
  }
  return out;
}

// |W|^2 b = (1 - ZZ*) b = a: along each diagonal {(i0+t, j0+t)} of fixed
// W-power and fixed i-j, the coefficients satisfy a_t = b_t - b_{t-1}.
// b is finite iff the full diagonal sum of a vanishes, and then
// b_{s-1} = b_s - a_s walking down from the top of the diagonal.
std::optional<AlgebraElement> divide_abs_w2(const AlgebraElement& a) {
  using DiagKey = std::pair<std::int64_t, std::int64_t>;  // (w power, i - j)
  std::map<DiagKey, std::map<std::int64_t, Scalar>> diagonals;
  for (const auto& [m, c] : a.terms()) {
    const std::int64_t t = std::min(m.z, m.zs);
    diagonals[{m.w, m.z - m.zs}][t] = c;
  }
  AlgebraElement out = AlgebraElement::zero(a.algebra());
  for (const auto& [key, diag] : diagonals) {
    const auto& [w, d] = key;
    const std::int64_t i0 = std::max<std::int64_t>(d, 0);
    const std::int64_t j0 = std::max<std::int64_t>(-d, 0);
    Scalar total = Scalar::zero();
    for (const auto& [t, c] : diag) total += c;
    if (!total.is_zero()) return std::nullopt;  // full diagonal sum must vanish
    Scalar b = Scalar::zero();
    for (std::int64_t s = diag.rbegin()->first; s >= 1; --s) {
      auto it = diag.find(s);
      if (it != diag.end()) b -= it->second;
      if (!b.is_zero()) out.add_term({i0 + s - 1, j0 + s - 1, w}, b);
    }
  }
  return out;
}

}  // namespace

std::optional<AlgebraElement> try_divide_exact(const AlgebraElement& a, Divisor d) {
  if (a.algebra() == AlgebraId::torus) return a;  // both divisors are the unit
  if (a.is_zero()) return a;
  return d == Divisor::abs_z2 ? divide_abs_z2(a) : divide_abs_w2(a);
}

AlgebraElement divide_exact(const AlgebraElement& a, Divisor d) {
  auto out = try_divide_exact(a, d);
  if (!out) {
    raise(ErrorCode::not_divisible,
          std::string("element not divisible by ") +
              (d == Divisor::abs_z2 ? "|Z|^2" : "|W|^2") + ": " + a.str());
  }
  return *out;
}

LocalizedElement::LocalizedElement(AlgebraElement num, std::int64_t m, std::int64_t n)
    : num_(std::move(num)), m_(m), n_(n) {
  if (m_ < 0 || n_ < 0) raise(ErrorCode::invalid_argument, "negative denominator exponent");
  reduce();
}

void LocalizedElement::reduce() {
  if (num_.is_zero()) {
    m_ = n_ = 0;
    return;
  }
  if (num_.algebra() == AlgebraId::torus) {
    m_ = n_ = 0;
    return;
  }
  while (m_ > 0) {
    auto d = try_divide_exact(num_, Divisor::abs_z2);
    if (!d) break;
    num_ = std::move(*d);
    --m_;
  }
  while (n_ > 0) {
    auto d = try_divide_exact(num_, Divisor::abs_w2);
    if (!d) break;
    num_ = std::move(*d);
    --n_;
  }
}

namespace {

AlgebraElement denominator_power(AlgebraId id, std::int64_t m, std::int64_t n) {
  return divisor_element(id, Divisor::abs_z2).pow(m) * divisor_element(id, Divisor::abs_w2).pow(n);
}

}  // namespace

LocalizedElement LocalizedElement::operator-() const {
  return LocalizedElement(-num_, m_, n_);
}

LocalizedElement LocalizedElement::operator+(const LocalizedElement& o) const {
  const std::int64_t m = std::max(m_, o.m_);
  const std::int64_t n = std::max(n_, o.n_);
  AlgebraElement lhs = num_ * denominator_power(algebra(), m - m_, n - n_);
  AlgebraElement rhs = o.num_ * denominator_power(algebra(), m - o.m_, n - o.n_);
  return LocalizedElement(lhs + rhs, m, n);
}

LocalizedElement LocalizedElement::operator-(const LocalizedElement& o) const {
  return *this + (-o);
}

LocalizedElement LocalizedElement::operator*(const LocalizedElement& o) const {
  return LocalizedElement(num_ * o.num_, m_ + o.m_, n_ + o.n_);
}

LocalizedElement LocalizedElement::operator*(const Scalar& c) const {
  return LocalizedElement(num_ * c, m_, n_);
}

LocalizedElement LocalizedElement::star() const {
  return LocalizedElement(num_.star(), m_, n_);
}

bool LocalizedElement::operator==(const LocalizedElement& o) const {
  if (algebra() != o.algebra()) {
    raise(ErrorCode::mixed_algebra, "localized comparison across algebras");
  }
  return num_ * denominator_power(algebra(), o.m_, o.n_) ==
         o.num_ * denominator_power(algebra(), m_, n_);
}

AlgebraElement LocalizedElement::lift_to_base() const {
  if (!is_base()) {
    raise(ErrorCode::not_liftable, "no base-algebra representative: " + str());
  }
  return num_;
}

std::string LocalizedElement::str() const {
  if (is_base()) return num_.str();
  std::string den;
  if (m_ > 0) den += m_ == 1 ? "AbsZ2" : "AbsZ2^" + std::to_string(m_);
  if (n_ > 0) {
    if (!den.empty()) den += " ";
    den += n_ == 1 ? "AbsW2" : "AbsW2^" + std::to_string(n_);
  }
  return "(" + num_.str() + ") / (" + den + ")";
}

LocalizedElement operator*(const AlgebraElement& a, const LocalizedElement& x) {
  return LocalizedElement(a * x.numerator(), x.z_exponent(), x.w_exponent());
}

LocalizedElement operator*(const LocalizedElement& x, const AlgebraElement& a) {
  return LocalizedElement(x.numerator() * a, x.z_exponent(), x.w_exponent());
}

LocalizedElement operator*(const Scalar& c, const LocalizedElement& x) { return x * c; }

LocalizedElement apply(const Derivation& d, const LocalizedElement& x) {
  if (x.is_base()) return LocalizedElement(d.apply(x.numerator()));
  const AlgebraId id = x.algebra();
  const AlgebraElement den = divisor_element(id, Divisor::abs_z2).pow(x.z_exponent()) *
                             divisor_element(id, Divisor::abs_w2).pow(x.w_exponent());
  const AlgebraElement num = d.apply(x.numerator()) * den - x.numerator() * d.apply(den);
  return LocalizedElement(num, 2 * x.z_exponent(), 2 * x.w_exponent());
}

}  // namespace ncg
