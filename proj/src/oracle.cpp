#include "ncgeo/oracle.hpp"

#include <cmath>
#include <numbers>

#include "ncgeo/error.hpp"

namespace ncg {

CMatrix CMatrix::identity(int dim) {
  CMatrix m(dim);
  for (int i = 0; i < dim; ++i) m.at(i, i) = 1.0;
  return m;
}

CMatrix CMatrix::operator+(const CMatrix& o) const {
  CMatrix out(dim_);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] + o.data_[i];
  return out;
}

CMatrix CMatrix::operator-(const CMatrix& o) const {
  CMatrix out(dim_);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] - o.data_[i];
  return out;
}

CMatrix CMatrix::operator*(const CMatrix& o) const {
  CMatrix out(dim_);
  for (int r = 0; r < dim_; ++r) {
    for (int k = 0; k < dim_; ++k) {
      const std::complex<double> v = at(r, k);
      if (v == std::complex<double>{}) continue;
      for (int c = 0; c < dim_; ++c) out.at(r, c) += v * o.at(k, c);
    }
  }
  return out;
}

CMatrix CMatrix::operator*(std::complex<double> s) const {
  CMatrix out(dim_);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] * s;
  return out;
}

CMatrix CMatrix::dagger() const {
  CMatrix out(dim_);
  for (int r = 0; r < dim_; ++r) {
    for (int c = 0; c < dim_; ++c) out.at(c, r) = std::conj(at(r, c));
  }
  return out;
}

CMatrix CMatrix::pow(long e) const {
  CMatrix acc = identity(dim_);
  for (long i = 0; i < e; ++i) acc = acc * *this;
  return acc;
}

double CMatrix::frobenius_norm() const {
  double sum = 0.0;
  for (const auto& v : data_) sum += std::norm(v);
  return std::sqrt(sum);
}

double CMatrix::op_norm() const {
  if (dim_ == 0) return 0.0;
  const double fro = frobenius_norm();
  if (fro == 0.0) return 0.0;
  // power iteration on A^H A with a deterministic start vector
  const CMatrix gram = dagger() * *this;
  std::vector<std::complex<double>> v(dim_);
  for (int i = 0; i < dim_; ++i) v[i] = {1.0 + 0.1 * i, 0.25 * ((i % 3) - 1)};
  double lambda = 0.0;
  for (int iter = 0; iter < 200; ++iter) {
    std::vector<std::complex<double>> w(dim_);
    for (int r = 0; r < dim_; ++r) {
      std::complex<double> acc{};
      for (int c = 0; c < dim_; ++c) acc += gram.at(r, c) * v[c];
      w[r] = acc;
    }
    double norm = 0.0;
    for (const auto& x : w) norm += std::norm(x);
    norm = std::sqrt(norm);
    if (norm == 0.0) return 0.0;
    lambda = norm;
    for (auto& x : w) x /= norm;
    v = std::move(w);
  }
  return std::sqrt(lambda);
}

std::string MatrixRep::label() const {
  std::string out = std::string(algebra_name(algebra)) + " theta=" + std::to_string(p) + "/" +
                    std::to_string(N) + " dim=" + std::to_string(dim);
  if (algebra == AlgebraId::sphere) {
    out += " lambda2=" + lambda2.get_str();
  }
  return out;
}

namespace {

long gcd_long(long a, long b) { return b == 0 ? (a < 0 ? -a : a) : gcd_long(b, a % b); }

void check_rep_args(long p, long N, int dim) {
  if (N <= 0 || gcd_long(p, N) != 1) {
    raise(ErrorCode::invalid_argument, "theta must be p/N with gcd(p, N) = 1 and N > 0");
  }
  if (dim <= 0 || dim % N != 0) {
    raise(ErrorCode::invalid_argument, "representation dimension must be a positive multiple of N");
  }
}

// clock: diag(1, w, w^2, ...) with w = exp(2 pi i p / N)
CMatrix clock_matrix(long p, long N, int dim) {
  CMatrix m(dim);
  for (int j = 0; j < dim; ++j) {
    const double angle =
        2.0 * std::numbers::pi * static_cast<double>((p * (j % N)) % N) / static_cast<double>(N);
    m.at(j, j) = {std::cos(angle), std::sin(angle)};
  }
  return m;
}

// down-shift: e_j -> e_{j-1 (mod dim)}; then W Z = q Z W with q = w.
CMatrix shift_matrix(int dim) {
  CMatrix m(dim);
  for (int j = 0; j < dim; ++j) m.at((j + dim - 1) % dim, j) = 1.0;
  return m;
}

}  // namespace

MatrixRep make_torus_rep(long p, long N, int dim) {
  if (dim == 0) dim = static_cast<int>(N);
  check_rep_args(p, N, dim);
  MatrixRep rep;
  rep.algebra = AlgebraId::torus;
  rep.p = p;
  rep.N = N;
  rep.dim = dim;
  rep.Z = clock_matrix(p, N, dim);
  rep.W = shift_matrix(dim);
  return rep;
}

MatrixRep make_sphere_rep(long p, long N, const Rational& lambda2, int dim) {
  if (dim == 0) dim = static_cast<int>(N);
  check_rep_args(p, N, dim);
  if (lambda2 <= 0 || lambda2 >= 1) {
    raise(ErrorCode::invalid_argument, "lambda2 must lie strictly between 0 and 1");
  }
  MatrixRep rep;
  rep.algebra = AlgebraId::sphere;
  rep.p = p;
  rep.N = N;
  rep.dim = dim;
  rep.lambda2 = lambda2;
  const double lambda = std::sqrt(lambda2.get_d());
  const double mu = std::sqrt(1.0 - lambda2.get_d());
  rep.Z = clock_matrix(p, N, dim) * std::complex<double>(lambda);
  rep.W = shift_matrix(dim) * std::complex<double>(mu);
  return rep;
}

std::vector<MatrixRep> default_reps(AlgebraId id) {
  const std::vector<std::pair<long, long>> thetas = {{1, 5}, {2, 7}};
  std::vector<MatrixRep> reps;
  if (id == AlgebraId::torus) {
    for (auto [p, N] : thetas) reps.push_back(make_torus_rep(p, N));
  } else {
    const std::vector<Rational> lambdas = {make_rational(1, 2), make_rational(1, 3),
                                           make_rational(3, 4)};
    for (auto [p, N] : thetas) {
      for (const auto& l2 : lambdas) reps.push_back(make_sphere_rep(p, N, l2));
    }
  }
  return reps;
}

CMatrix evaluate(const AlgebraElement& a, const MatrixRep& rep) {
  if (a.algebra() != rep.algebra) {
    raise(ErrorCode::mixed_algebra, "element evaluated in a representation of the other algebra");
  }
  CMatrix out(rep.dim);
  const CMatrix zs = rep.Z.dagger();
  const CMatrix ws = rep.W.dagger();
  for (const auto& [m, c] : a.terms()) {
    CMatrix mono = CMatrix::identity(rep.dim);
    if (rep.algebra == AlgebraId::sphere) {
      mono = rep.Z.pow(m.z) * zs.pow(m.zs);
    } else {
      mono = m.z >= 0 ? rep.Z.pow(m.z) : zs.pow(-m.z);
    }
    mono = mono * (m.w >= 0 ? rep.W.pow(m.w) : ws.pow(-m.w));
    out = out + mono * c.eval_at_root_of_unity(rep.p, rep.N);
  }
  return out;
}

bool check_identity(const AlgebraElement& a, const AlgebraElement& b,
                    const std::vector<MatrixRep>& reps, double tol) {
  for (const auto& rep : reps) {
    if ((evaluate(a, rep) - evaluate(b, rep)).op_norm() > tol) return false;
  }
  return true;
}

double identity_residual(const AlgebraElement& a, const AlgebraElement& b,
                         const std::vector<MatrixRep>& reps) {
  double worst = 0.0;
  for (const auto& rep : reps) {
    worst = std::max(worst, (evaluate(a, rep) - evaluate(b, rep)).op_norm());
  }
  return worst;
}

}  // namespace ncg
