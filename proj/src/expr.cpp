#include "ncgeo/expr.hpp"

#include <cctype>
#include <optional>

#include "ncgeo/error.hpp"

namespace ncg {

namespace {

class Parser {
 public:
  Parser(const std::string& text, AlgebraId id) : text_(text), id_(id) {}

  AlgebraElement parse() {
    AlgebraElement out = parse_expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const {
    raise(ErrorCode::parse_error,
          message + " at position " + std::to_string(pos_) + " in \"" + text_ + "\"");
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  AlgebraElement parse_expr() {
    AlgebraElement out = parse_term();
    for (;;) {
      if (eat('+')) {
        out += parse_term();
      } else if (eat('-')) {
        out -= parse_term();
      } else {
        return out;
      }
    }
  }

  AlgebraElement parse_term() {
    AlgebraElement out = parse_factor();
    while (eat('*')) out *= parse_factor();
    return out;
  }

  AlgebraElement parse_factor() {
    bool negate = false;
    for (;;) {
      if (eat('-')) {
        negate = !negate;
      } else if (eat('+')) {
        // no-op
      } else {
        break;
      }
    }
    AlgebraElement out = parse_power();
    return negate ? -out : out;
  }

  std::int64_t parse_int() {
    skip_ws();
    bool negative = false;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      negative = text_[pos_] == '-';
      ++pos_;
    }
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      fail("expected an integer");
    }
    std::int64_t value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + (text_[pos_] - '0');
      ++pos_;
    }
    return negative ? -value : value;
  }

  AlgebraElement parse_power() {
    const std::size_t at = pos_;
    Primary base = parse_primary();
    if (!eat('^')) return to_element(base);
    const std::int64_t e = parse_int();
    if (e >= 0) {
      if (base.scalar) return AlgebraElement::unit(id_) * power_scalar(*base.scalar, e);
      return base.element->pow(e);
    }
    // negative exponents: q and i invert as scalars; torus generators are
    // unitary so g^-1 = g*
    if (base.scalar) {
      const Scalar inv = invert_scalar(*base.scalar, at);
      return AlgebraElement::unit(id_) * power_scalar(inv, -e);
    }
    if (base.gen && id_ == AlgebraId::torus) {
      return AlgebraElement::generator(id_, star_gen(*base.gen)).pow(-e);
    }
    pos_ = at;
    fail("negative power of a non-invertible element");
  }

  static Scalar power_scalar(const Scalar& s, std::int64_t e) {
    Scalar acc = Scalar::one();
    for (std::int64_t i = 0; i < e; ++i) acc *= s;
    return acc;
  }

  Scalar invert_scalar(const Scalar& s, std::size_t at) {
    if (s.term_count() != 1) {
      pos_ = at;
      fail("scalar is not invertible");
    }
    const auto& [k, c] = *s.terms().begin();
    const Rational norm = c.re * c.re + c.im * c.im;
    if (norm == 0) {
      pos_ = at;
      fail("division by zero");
    }
    return Scalar(GaussianRational{c.re / norm, -c.im / norm}) * Scalar::q_power(-k);
  }

  struct Primary {
    std::optional<Scalar> scalar;
    std::optional<Gen> gen;  // set when the element is a bare generator
    std::optional<AlgebraElement> element;
  };

  AlgebraElement to_element(const Primary& p) {
    if (p.scalar) return AlgebraElement::unit(id_) * *p.scalar;
    return *p.element;
  }

  Primary parse_primary() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::int64_t num = parse_int();
      if (eat('/')) {
        const std::int64_t den = parse_int();
        if (den == 0) fail("division by zero");
        return {Scalar(make_rational(num, den)), std::nullopt, std::nullopt};
      }
      return {Scalar(num), std::nullopt, std::nullopt};
    }
    if (c == '(') {
      ++pos_;
      AlgebraElement inner = parse_expr();
      if (!eat(')')) fail("expected ')'");
      return {std::nullopt, std::nullopt, inner};
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t end = pos_;
      while (end < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[end])))) {
        ++end;
      }
      const std::string name = text_.substr(pos_, end - pos_);
      pos_ = end;
      if (name == "i") return {Scalar::imaginary_unit(), std::nullopt, std::nullopt};
      if (name == "q") return {Scalar::q(), std::nullopt, std::nullopt};
      if (name == "Z") return gen_primary(Gen::Z);
      if (name == "Zs") return gen_primary(Gen::Zs);
      if (name == "W") return gen_primary(Gen::W);
      if (name == "Ws") return gen_primary(Gen::Ws);
      if (name == "X1") return {std::nullopt, std::nullopt, AlgebraElement::x(id_, 1)};
      if (name == "X2") return {std::nullopt, std::nullopt, AlgebraElement::x(id_, 2)};
      if (name == "X3") return {std::nullopt, std::nullopt, AlgebraElement::x(id_, 3)};
      if (name == "X4") return {std::nullopt, std::nullopt, AlgebraElement::x(id_, 4)};
      if (name == "AbsZ2") return {std::nullopt, std::nullopt, AlgebraElement::abs_z2(id_)};
      if (name == "AbsW2") return {std::nullopt, std::nullopt, AlgebraElement::abs_w2(id_)};
      pos_ -= name.size();
      fail("unknown identifier '" + name + "'");
    }
    fail("unexpected character");
  }

  Primary gen_primary(Gen g) {
    return {std::nullopt, g, AlgebraElement::generator(id_, g)};
  }

  const std::string& text_;
  AlgebraId id_;
  std::size_t pos_{0};
};

}  // namespace

AlgebraElement parse_expression(const std::string& text, AlgebraId id) {
  return Parser(text, id).parse();
}

}  // namespace ncg
