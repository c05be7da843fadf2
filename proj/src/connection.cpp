#include "ncgeo/connection.hpp"

#include <random>

#include "ncgeo/error.hpp"
#include "ncgeo/sampling.hpp"

namespace ncg {

Connection::Connection(AlgebraId id, std::size_t rank) : id_(id), rank_(rank) {
  gamma_.assign(rank, std::vector<std::vector<LocalizedElement>>(
                          rank, std::vector<LocalizedElement>(rank, LocalizedElement::zero(id))));
}

void Connection::set_gamma(std::size_t a, std::size_t b, std::size_t c, LocalizedElement value) {
  gamma_[a][b][c] = std::move(value);
  refresh_base_flag();
}

void Connection::refresh_base_flag() {
  base_flag_ = true;
  for (const auto& plane : gamma_) {
    for (const auto& row : plane) {
      for (const auto& g : row) base_flag_ = base_flag_ && g.is_base();
    }
  }
}

LocModuleElement Connection::nabla_basis(std::size_t a, std::size_t b) const {
  LocModuleElement out;
  for (std::size_t c = 0; c < rank_; ++c) out.coords.push_back(gamma_[a][b][c]);
  return out;
}

LocModuleElement Connection::nabla(const RealMetricCalculus& calc, std::size_t a,
                                   const LocModuleElement& u) const {
  if (u.rank() != rank_) raise(ErrorCode::rank_mismatch, "nabla rank mismatch");
  LocModuleElement out = zero_loc_module_element(id_, rank_);
  for (std::size_t b = 0; b < rank_; ++b) {
    // (nabla_a E_b) U^b + E_b d_a(U^b)
    out = out + nabla_basis(a, b) * u.coords[b];
    out.coords[b] += apply(calc.d(a), u.coords[b]);
  }
  return out;
}

bool Connection::operator==(const Connection& o) const {
  if (rank_ != o.rank_ || id_ != o.id_) return false;
  for (std::size_t a = 0; a < rank_; ++a) {
    for (std::size_t b = 0; b < rank_; ++b) {
      for (std::size_t c = 0; c < rank_; ++c) {
        if (gamma_[a][b][c] != o.gamma_[a][b][c]) return false;
      }
    }
  }
  return true;
}

AlgebraElement koszul_rhs(const RealMetricCalculus& calc, std::size_t a, std::size_t b,
                          std::size_t c) {
  AlgebraElement out = calc.d(a).apply(calc.metric_entry(b, c));
  out += calc.d(b).apply(calc.metric_entry(a, c));
  out -= calc.d(c).apply(calc.metric_entry(a, b));
  out -= calc.form.eval(calc.e(a), calc.anchor_of_bracket(b, c));
  out += calc.form.eval(calc.e(b), calc.anchor_of_bracket(c, a));
  out += calc.form.eval(calc.e(c), calc.anchor_of_bracket(a, b));
  return out;
}

bool verify_koszul(const RealMetricCalculus& calc, const Connection& conn) {
  const std::size_t n = calc.rank;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        LocalizedElement lhs = LocalizedElement::zero(calc.algebra);
        for (std::size_t s = 0; s < n; ++s) {
          lhs += conn.gamma(a, b, s).star() * calc.metric_entry(s, c);
        }
        lhs = lhs * Scalar(2);
        if (lhs != LocalizedElement(koszul_rhs(calc, a, b, c))) return false;
      }
    }
  }
  return true;
}

Connection solve_connection(const RealMetricCalculus& calc, const PseudoInverse& pinv) {
  const std::size_t n = calc.rank;
  Connection conn(calc.algebra, n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      // 2 (Gamma^s_ab)* h_sc = K_abc; right-multiply by hhat^{cp} to isolate
      // 2 (Gamma^p_ab)* H, divide by the central regular H, then star.
      for (std::size_t p = 0; p < n; ++p) {
        AlgebraElement contracted = AlgebraElement::zero(calc.algebra);
        for (std::size_t c = 0; c < n; ++c) {
          contracted += koszul_rhs(calc, a, b, c) * pinv.entry(c, p);
        }
        LocalizedElement gamma_star =
            pinv.divide_by_H(LocalizedElement(contracted)) * Scalar(make_rational(1, 2));
        conn.set_gamma(a, b, p, gamma_star.star());
      }
    }
  }
  if (!verify_koszul(calc, conn)) {
    raise(ErrorCode::koszul_unsatisfied,
          "no connection satisfies the Koszul equation for this calculus");
  }
  if (!verify_metric(calc, conn)) {
    raise(ErrorCode::koszul_unsatisfied, "solved candidate is not a metric connection");
  }
  if (!verify_torsion_free(calc, conn)) {
    raise(ErrorCode::koszul_unsatisfied, "solved candidate is not torsion-free");
  }
  if (!verify_first_order_real(calc, conn)) {
    raise(ErrorCode::koszul_unsatisfied, "solved candidate violates h(nabla E, E') hermiticity");
  }
  return conn;
}

namespace {

LocModuleElement random_module_element(const RealMetricCalculus& calc, std::mt19937_64& rng) {
  LocModuleElement u;
  for (std::size_t a = 0; a < calc.rank; ++a) {
    u.coords.emplace_back(random_element(calc.algebra, rng));
  }
  return u;
}

}  // namespace

bool verify_metric(const RealMetricCalculus& calc, const Connection& conn, int random_cases,
                   std::uint64_t seed) {
  const std::size_t n = calc.rank;
  // basis pairs
  for (std::size_t d = 0; d < n; ++d) {
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        LocalizedElement lhs(calc.d(d).apply(calc.metric_entry(a, b)));
        LocalizedElement rhs = LocalizedElement::zero(calc.algebra);
        for (std::size_t s = 0; s < n; ++s) {
          rhs += conn.gamma(d, a, s).star() * calc.metric_entry(s, b);
          rhs += LocalizedElement(calc.metric_entry(a, s)) * conn.gamma(d, b, s);
        }
        if (lhs != rhs) return false;
      }
    }
  }
  // pseudo-random module elements through the Leibniz extension
  std::mt19937_64 rng(seed);
  for (int it = 0; it < random_cases; ++it) {
    LocModuleElement u = random_module_element(calc, rng);
    LocModuleElement v = random_module_element(calc, rng);
    for (std::size_t d = 0; d < n; ++d) {
      LocalizedElement lhs = apply(calc.d(d), calc.form.eval(u, v));
      LocalizedElement rhs =
          calc.form.eval(conn.nabla(calc, d, u), v) + calc.form.eval(u, conn.nabla(calc, d, v));
      if (lhs != rhs) return false;
    }
  }
  return true;
}

bool verify_torsion_free(const RealMetricCalculus& calc, const Connection& conn) {
  const std::size_t n = calc.rank;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const LocModuleElement bracket_image = to_localized(calc.anchor_of_bracket(a, b));
      LocModuleElement residual = conn.nabla_basis(a, b) - conn.nabla_basis(b, a) - bracket_image;
      if (!residual.is_zero()) return false;
    }
  }
  return true;
}

bool verify_first_order_real(const RealMetricCalculus& calc, const Connection& conn) {
  const std::size_t n = calc.rank;
  for (std::size_t d = 0; d < n; ++d) {
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        const LocalizedElement v =
            calc.form.eval(conn.nabla_basis(d, a), to_localized(calc.e(b)));
        if (!v.is_hermitian()) return false;
      }
    }
  }
  return true;
}

bool verify_real_calculus(const RealMetricCalculus& calc, const Connection& conn) {
  const std::size_t n = calc.rank;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t p = 0; p < n; ++p) {
        const LocModuleElement second = conn.nabla(calc, a, conn.nabla_basis(b, p));
        for (std::size_t q = 0; q < n; ++q) {
          const LocalizedElement v = calc.form.eval(second, to_localized(calc.e(q)));
          if (!v.is_hermitian()) return false;
        }
      }
    }
  }
  return true;
}

bool verify_real_calculus_alt(const RealMetricCalculus& calc, const Connection& conn) {
  const std::size_t n = calc.rank;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t p = 0; p < n; ++p) {
        for (std::size_t q = 0; q < n; ++q) {
          const LocalizedElement v =
              calc.form.eval(conn.nabla_basis(a, p), conn.nabla_basis(b, q));
          if (!v.is_hermitian()) return false;
        }
      }
    }
  }
  return true;
}

bool verify_h_e_nabla_e(const RealMetricCalculus& calc, const Connection& conn) {
  const std::size_t n = calc.rank;
  for (std::size_t d = 0; d < n; ++d) {
    for (std::size_t a = 0; a < n; ++a) {
      const LocalizedElement lhs(calc.d(d).apply(calc.metric_entry(a, a)));
      const LocalizedElement rhs =
          calc.form.eval(to_localized(calc.e(a)), conn.nabla_basis(d, a)) * Scalar(2);
      if (lhs != rhs) return false;
    }
  }
  return true;
}

}  // namespace ncg
