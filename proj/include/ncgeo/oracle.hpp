#pragma once

#include <complex>
#include <string>
#include <vector>

#include "ncgeo/algebra.hpp"

namespace ncg {

/// Small dense complex matrix, just enough for the representation checks.
class CMatrix {
 public:
  CMatrix() = default;
  explicit CMatrix(int dim) : dim_(dim), data_(static_cast<std::size_t>(dim) * dim) {}

  static CMatrix identity(int dim);

  int dim() const { return dim_; }
  std::complex<double>& at(int r, int c) { return data_[static_cast<std::size_t>(r) * dim_ + c]; }
  const std::complex<double>& at(int r, int c) const {
    return data_[static_cast<std::size_t>(r) * dim_ + c];
  }

  CMatrix operator+(const CMatrix& o) const;
  CMatrix operator-(const CMatrix& o) const;
  CMatrix operator*(const CMatrix& o) const;
  CMatrix operator*(std::complex<double> s) const;

  /// Conjugate transpose.
  CMatrix dagger() const;
  CMatrix pow(long e) const;  // e >= 0

  double frobenius_norm() const;
  /// Spectral norm via power iteration on A^H A.
  double op_norm() const;

 private:
  int dim_{0};
  std::vector<std::complex<double>> data_;
};

/// Finite-dimensional clock-and-shift representation at rational theta = p/N
/// (q maps to exp(2 pi i p / N)); for the sphere Z -> lambda * clock and
/// W -> mu * shift with lambda^2 + mu^2 = 1, so that WW* = 1 - ZZ* holds
/// exactly.
struct MatrixRep {
  AlgebraId algebra;
  long p{1};
  long N{5};
  int dim{5};
  Rational lambda2{make_rational(1, 2)};  // sphere only
  CMatrix Z;
  CMatrix W;

  std::string label() const;
};

/// dim must be a positive multiple of N; defaults to N.
MatrixRep make_torus_rep(long p, long N, int dim = 0);
MatrixRep make_sphere_rep(long p, long N, const Rational& lambda2, int dim = 0);

/// The default sample set: (p,N) in {(1,5), (2,7)}; lambda^2 in
/// {1/2, 1/3, 3/4} for the sphere.
std::vector<MatrixRep> default_reps(AlgebraId id);

/// Evaluation homomorphism.
CMatrix evaluate(const AlgebraElement& a, const MatrixRep& rep);

/// True iff ||evaluate(a,r) - evaluate(b,r)||_op <= tol for every rep.
bool check_identity(const AlgebraElement& a, const AlgebraElement& b,
                    const std::vector<MatrixRep>& reps, double tol = 1e-10);

/// Largest residual over the reps (for reporting).
double identity_residual(const AlgebraElement& a, const AlgebraElement& b,
                         const std::vector<MatrixRep>& reps);

}  // namespace ncg
