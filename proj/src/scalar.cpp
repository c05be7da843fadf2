#include "ncgeo/scalar.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "ncgeo/error.hpp"

namespace ncg {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::invalid_argument: return "InvalidArgument";
    case ErrorCode::parse_error: return "ParseError";
    case ErrorCode::mixed_algebra: return "MixedAlgebra";
    case ErrorCode::rank_mismatch: return "RankMismatch";
    case ErrorCode::not_divisible: return "NotDivisible";
    case ErrorCode::not_liftable: return "NotLiftable";
    case ErrorCode::not_pseudo_inverse: return "NotPseudoInverse";
    case ErrorCode::irregular_denominator: return "IrregularDenominator";
    case ErrorCode::koszul_unsatisfied: return "KoszulUnsatisfied";
    case ErrorCode::not_in_tangent_module: return "NotInTangentModule";
    case ErrorCode::not_expandable: return "NotExpandable";
  }
  return "Unknown";
}

Rational make_rational(long num, long den) {
  if (den == 0) raise(ErrorCode::invalid_argument, "rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

namespace {

std::string rational_str(const Rational& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

}  // namespace

std::string GaussianRational::str() const {
  if (is_zero()) return "0";
  if (im == 0) return rational_str(re);
  std::string imag;
  if (im == 1) {
    imag = "i";
  } else if (im == -1) {
    imag = "-i";
  } else {
    imag = rational_str(im) + " i";
  }
  if (re == 0) return imag;
  std::string out = "(" + rational_str(re);
  if (imag[0] == '-') {
    out += " - " + imag.substr(1);
  } else {
    out += " + " + imag;
  }
  return out + ")";
}

Scalar Scalar::q_power(std::int64_t k) {
  Scalar s;
  s.set_term(k, GaussianRational(Rational(1)));
  return s;
}

bool Scalar::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first == 0 &&
         terms_.begin()->second == GaussianRational(Rational(1));
}

bool Scalar::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
}

GaussianRational Scalar::constant_term() const {
  auto it = terms_.find(0);
  return it == terms_.end() ? GaussianRational() : it->second;
}

void Scalar::set_term(std::int64_t k, const GaussianRational& c) {
  if (c.is_zero()) {
    terms_.erase(k);
  } else {
    terms_[k] = c;
  }
}

void Scalar::add_term(std::int64_t k, const GaussianRational& c) {
  auto it = terms_.find(k);
  if (it == terms_.end()) {
    if (!c.is_zero()) terms_.emplace(k, c);
    return;
  }
  it->second = it->second + c;
  if (it->second.is_zero()) terms_.erase(it);
}

Scalar Scalar::operator-() const {
  Scalar out;
  for (const auto& [k, c] : terms_) out.terms_.emplace(k, -c);
  return out;
}

Scalar Scalar::operator+(const Scalar& o) const {
  Scalar out = *this;
  for (const auto& [k, c] : o.terms_) out.add_term(k, c);
  return out;
}

Scalar Scalar::operator-(const Scalar& o) const {
  Scalar out = *this;
  for (const auto& [k, c] : o.terms_) out.add_term(k, -c);
  return out;
}

Scalar Scalar::operator*(const Scalar& o) const {
  Scalar out;
  for (const auto& [k1, c1] : terms_) {
    for (const auto& [k2, c2] : o.terms_) {
      out.add_term(k1 + k2, c1 * c2);
    }
  }
  return out;
}

Scalar Scalar::conj() const {
  Scalar out;
  for (const auto& [k, c] : terms_) out.terms_.emplace(-k, c.conj());
  return out;
}

std::complex<double> Scalar::eval_at_root_of_unity(long p, long N) const {
  std::complex<double> sum{0.0, 0.0};
  for (const auto& [k, c] : terms_) {
    // q^k = exp(2*pi*i*p*k/N); reduce the exponent first to keep the angle small
    long e = static_cast<long>(((p * k) % N + N) % N);
    double angle = 2.0 * std::numbers::pi * static_cast<double>(e) / static_cast<double>(N);
    sum += c.to_complex() * std::complex<double>(std::cos(angle), std::sin(angle));
  }
  return sum;
}

std::string Scalar::str(bool as_factor) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  // render high powers of q first, constants in the middle, q^-k last
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [k, c] = *it;
    std::string coeff = c.str();
    std::string term;
    if (k == 0) {
      term = coeff;
    } else {
      std::string qpart = (k == 1) ? "q" : "q^" + std::to_string(k);
      if (coeff == "1") {
        term = qpart;
      } else if (coeff == "-1") {
        term = "-" + qpart;
      } else {
        term = coeff + " " + qpart;
      }
    }
    if (first) {
      out = term;
      first = false;
    } else if (!term.empty() && term[0] == '-') {
      out += " - " + term.substr(1);
    } else {
      out += " + " + term;
    }
  }
  if (as_factor && terms_.size() > 1) return "(" + out + ")";
  return out;
}

Scalar operator*(long lhs, const Scalar& rhs) { return Scalar(lhs) * rhs; }

}  // namespace ncg
