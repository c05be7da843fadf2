#include "ncgeo/algebra.hpp"

#include <cstdlib>

#include "ncgeo/error.hpp"

namespace ncg {

const char* algebra_name(AlgebraId id) {
  return id == AlgebraId::torus ? "torus" : "sphere";
}

Gen star_gen(Gen g) {
  switch (g) {
    case Gen::Z: return Gen::Zs;
    case Gen::Zs: return Gen::Z;
    case Gen::W: return Gen::Ws;
    case Gen::Ws: return Gen::W;
  }
  std::abort();
}

const char* gen_name(Gen g) {
  switch (g) {
    case Gen::Z: return "Z";
    case Gen::Zs: return "Zs";
    case Gen::W: return "W";
    case Gen::Ws: return "Ws";
  }
  std::abort();
}

AlgebraElement AlgebraElement::unit(AlgebraId id) {
  return monomial(id, Monomial{});
}

AlgebraElement AlgebraElement::monomial(AlgebraId id, const Monomial& m, const Scalar& c) {
  AlgebraElement a(id);
  a.add_term(m, c);
  return a;
}

AlgebraElement AlgebraElement::generator(AlgebraId id, Gen g) {
  Monomial m;
  if (id == AlgebraId::sphere) {
    switch (g) {
      case Gen::Z: m = {1, 0, 0}; break;
      case Gen::Zs: m = {0, 1, 0}; break;
      case Gen::W: m = {0, 0, 1}; break;
      case Gen::Ws: m = {0, 0, -1}; break;
    }
  } else {
    switch (g) {
      case Gen::Z: m = {1, 0, 0}; break;
      case Gen::Zs: m = {-1, 0, 0}; break;
      case Gen::W: m = {0, 0, 1}; break;
      case Gen::Ws: m = {0, 0, -1}; break;
    }
  }
  return monomial(id, m);
}

AlgebraElement AlgebraElement::x(AlgebraId id, int i) {
  const Scalar half(make_rational(1, 2));
  const Scalar half_over_i = Scalar(GaussianRational(Rational(0), make_rational(-1, 2)));  // 1/(2i)
  AlgebraElement Z = generator(id, Gen::Z);
  AlgebraElement Zst = generator(id, Gen::Zs);
  AlgebraElement Wg = generator(id, Gen::W);
  AlgebraElement Wst = generator(id, Gen::Ws);
  switch (i) {
    case 1: return (Z + Zst) * half;
    case 2: return (Z - Zst) * half_over_i;
    case 3: return (Wg + Wst) * half;
    case 4: return (Wg - Wst) * half_over_i;
    default: raise(ErrorCode::invalid_argument, "X index must be 1..4");
  }
}

AlgebraElement AlgebraElement::abs_z2(AlgebraId id) {
  return generator(id, Gen::Z) * generator(id, Gen::Zs);
}

AlgebraElement AlgebraElement::abs_w2(AlgebraId id) {
  return generator(id, Gen::W) * generator(id, Gen::Ws);
}

bool AlgebraElement::is_unit() const {
  return terms_.size() == 1 && terms_.begin()->first == Monomial{} &&
         terms_.begin()->second.is_one();
}

bool AlgebraElement::is_scalar() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Monomial{});
}

Scalar AlgebraElement::scalar_part() const {
  auto it = terms_.find(Monomial{});
  return it == terms_.end() ? Scalar::zero() : it->second;
}

void AlgebraElement::add_term(const Monomial& m, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

void AlgebraElement::check_same_algebra(const AlgebraElement& o) const {
  if (id_ != o.id_) {
    raise(ErrorCode::mixed_algebra, "mixed-algebra arithmetic between torus and sphere elements");
  }
}

AlgebraElement AlgebraElement::operator-() const {
  AlgebraElement out(id_);
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
  return out;
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& o) const {
  check_same_algebra(o);
  AlgebraElement out = *this;
  for (const auto& [m, c] : o.terms_) out.add_term(m, c);
  return out;
}

AlgebraElement AlgebraElement::operator-(const AlgebraElement& o) const {
  check_same_algebra(o);
  AlgebraElement out = *this;
  for (const auto& [m, c] : o.terms_) out.add_term(m, -c);
  return out;
}

AlgebraElement AlgebraElement::operator*(const Scalar& c) const {
  AlgebraElement out(id_);
  for (const auto& [m, coeff] : terms_) out.add_term(m, coeff * c);
  return out;
}

namespace {

Rational binomial(std::int64_t n, std::int64_t k) {
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(b);
}

// (Z^i1 Zs^j1 W^(k1)) * (Z^i2 Zs^j2 W^(k2)) in the sphere algebra.
//
// Moving W^(k1) right past Z^i2 Zs^j2 picks up q^{k1*(i2-j2)}; Z and Z*
// commute; an opposite-sign W/W* meeting collapses min(|k1|,|k2|) adjacent
// pairs via WW* = W*W = 1 - ZZ* (central), expanded binomially.
void sphere_monomial_product(const Monomial& a, const Monomial& b, const Scalar& c,
                             AlgebraElement& out) {
  Scalar coeff = c * Scalar::q_power(a.w * (b.z - b.zs));
  const std::int64_t zi = a.z + b.z;
  const std::int64_t zj = a.zs + b.zs;
  const std::int64_t k1 = a.w, k2 = b.w;
  if (k1 == 0 || k2 == 0 || (k1 > 0) == (k2 > 0)) {
    out.add_term({zi, zj, k1 + k2}, coeff);
    return;
  }
  const std::int64_t t = std::min(std::llabs(k1), std::llabs(k2));
  const std::int64_t k = k1 + k2;
  for (std::int64_t s = 0; s <= t; ++s) {
    Scalar term = coeff * Scalar(binomial(t, s));
    if (s % 2 != 0) term = -term;
    out.add_term({zi + s, zj + s, k}, term);
  }
}

void torus_monomial_product(const Monomial& a, const Monomial& b, const Scalar& c,
                            AlgebraElement& out) {
  // W^(n) Z^(m) = q^{nm} Z^(m) W^(n)
  Scalar coeff = c * Scalar::q_power(a.w * b.z);
  out.add_term({a.z + b.z, 0, a.w + b.w}, coeff);
}

}  // namespace

AlgebraElement AlgebraElement::operator*(const AlgebraElement& o) const {
  check_same_algebra(o);
  AlgebraElement out(id_);
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : o.terms_) {
      if (id_ == AlgebraId::sphere) {
        sphere_monomial_product(ma, mb, ca * cb, out);
      } else {
        torus_monomial_product(ma, mb, ca * cb, out);
      }
    }
  }
  return out;
}

bool AlgebraElement::operator==(const AlgebraElement& o) const {
  return id_ == o.id_ && terms_ == o.terms_;
}

AlgebraElement AlgebraElement::star() const {
  AlgebraElement out(id_);
  for (const auto& [m, c] : terms_) {
    if (id_ == AlgebraId::sphere) {
      // (Z^i Zs^j W^(k))* = W^(-k) Z^j Zs^i = q^{k(i-j)} Z^j Zs^i W^(-k)
      out.add_term({m.zs, m.z, -m.w}, c.conj() * Scalar::q_power(m.w * (m.z - m.zs)));
    } else {
      // (Z^(m) W^(n))* = W^(-n) Z^(-m) = q^{mn} Z^(-m) W^(-n)
      out.add_term({-m.z, 0, -m.w}, c.conj() * Scalar::q_power(m.z * m.w));
    }
  }
  return out;
}

AlgebraElement AlgebraElement::pow(std::int64_t n) const {
  if (n < 0) raise(ErrorCode::invalid_argument, "negative power of an algebra element");
  AlgebraElement acc = unit(id_);
  for (std::int64_t i = 0; i < n; ++i) acc *= *this;
  return acc;
}

bool AlgebraElement::is_central() const {
  for (Gen g : {Gen::Z, Gen::Zs, Gen::W, Gen::Ws}) {
    if (!commutator(generator(id_, g)).is_zero()) return false;
  }
  return true;
}

bool AlgebraElement::is_hermitian() const { return star() == *this; }

AlgebraElement AlgebraElement::commutator(const AlgebraElement& o) const {
  return *this * o - o * *this;
}

std::vector<Gen> monomial_word(AlgebraId id, const Monomial& m) {
  std::vector<Gen> word;
  auto push = [&](Gen g, std::int64_t count) {
    for (std::int64_t i = 0; i < count; ++i) word.push_back(g);
  };
  if (id == AlgebraId::sphere) {
    push(Gen::Z, m.z);
    push(Gen::Zs, m.zs);
    push(m.w >= 0 ? Gen::W : Gen::Ws, std::llabs(m.w));
  } else {
    push(m.z >= 0 ? Gen::Z : Gen::Zs, std::llabs(m.z));
    push(m.w >= 0 ? Gen::W : Gen::Ws, std::llabs(m.w));
  }
  return word;
}

std::string monomial_str(AlgebraId id, const Monomial& m) {
  std::string out;
  auto append = [&](const char* name, std::int64_t e) {
    if (e == 0) return;
    if (!out.empty()) out += " ";
    out += name;
    if (e != 1) out += "^" + std::to_string(e);
  };
  if (id == AlgebraId::sphere) {
    append("Z", m.z);
    append("Zs", m.zs);
    if (m.w >= 0) {
      append("W", m.w);
    } else {
      append("Ws", -m.w);
    }
  } else {
    append("Z", m.z);
    append("W", m.w);
  }
  return out.empty() ? "1" : out;
}

std::string AlgebraElement::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    std::string mono = monomial_str(id_, m);
    std::string term;
    if (mono == "1") {
      term = c.str(false);
    } else if (c.is_one()) {
      term = mono;
    } else if ((-c).is_one()) {
      term = "-" + mono;
    } else {
      term = c.str(true) + " " + mono;
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
  return out;
}

AlgebraElement operator*(const Scalar& c, const AlgebraElement& a) { return a * c; }

AlgebraElement operator*(long c, const AlgebraElement& a) { return a * Scalar(c); }

}  // namespace ncg
