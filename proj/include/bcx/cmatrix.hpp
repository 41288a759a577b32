/// @file cmatrix.hpp
/// @brief Small dense matrices over C(i) with the factorizations the
///        spectral reductions need: eigenvalues by Hessenberg + shifted QR,
///        singular values and null spaces by one-sided Jacobi.
///
/// Everything here targets desk-scale problems (dimension <= 16 by
/// default); the algorithms are chosen for robustness at that size, not
/// for asymptotics.
#pragma once

#include <complex>
#include <stdexcept>
#include <vector>

#include "bcx/bicomplex.hpp"

namespace bcx {

/// Thrown when the QR iteration exceeds its iteration cap.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Dense row-major complex matrix.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("ComplexMatrix: negative dimension");
  }
  static ComplexMatrix identity(int n) {
    ComplexMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }
  static ComplexMatrix diagonal(const std::vector<Complex>& d) {
    ComplexMatrix m(static_cast<int>(d.size()), static_cast<int>(d.size()));
    for (int i = 0; i < m.rows(); ++i) m(i, i) = d[static_cast<std::size_t>(i)];
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Complex& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
  Complex operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

  ComplexMatrix operator+(const ComplexMatrix& o) const;
  ComplexMatrix operator-(const ComplexMatrix& o) const;
  ComplexMatrix operator*(const ComplexMatrix& o) const;
  ComplexMatrix operator*(Complex s) const;
  std::vector<Complex> apply(const std::vector<Complex>& x) const;

  ComplexMatrix conjTranspose() const;
  /// this - s*I (square only).
  ComplexMatrix shifted(Complex s) const;

  double frobeniusNorm() const;
  std::vector<Complex> column(int j) const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Complex> a_;
};

struct EigenOptions {
  int max_dim = 16;        ///< refuse larger problems
  int iter_cap_per_dim = 500;  ///< total QR iterations allowed = cap * n
};

/// All eigenvalues with multiplicity, sorted by (re, im). Shifted complex
/// QR on the Hessenberg form; throws ConvergenceError past the iteration
/// cap and std::invalid_argument for non-square or oversized input.
std::vector<Complex> eigenvalues(const ComplexMatrix& a, const EigenOptions& opt = {});

/// Thin SVD a = U * diag(sigma) * V^H for rows >= cols. sigma is sorted
/// descending; V is unitary (cols x cols); columns of U with sigma_j = 0
/// are left zero.
struct Svd {
  std::vector<double> sigma;
  ComplexMatrix u;
  ComplexMatrix v;
};

Svd svd(const ComplexMatrix& a);

double largestSingularValue(const ComplexMatrix& a);
double smallestSingularValue(const ComplexMatrix& a);

/// Orthonormal basis (columns of V at negligible sigma) of the null space,
/// with "negligible" meaning sigma <= tol.
std::vector<std::vector<Complex>> nullspaceBasis(const ComplexMatrix& a, double tol);

/// Unit vector minimizing ||a x|| over unit x, with the attained minimum
/// (the smallest singular pair).
std::pair<std::vector<Complex>, double> minSingularVector(const ComplexMatrix& a);

double vectorNorm(const std::vector<Complex>& x);

}  // namespace bcx
