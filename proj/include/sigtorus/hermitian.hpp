#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "sigtorus/angle.hpp"
#include "sigtorus/matrix.hpp"

namespace sigtorus {

using CMatrix = Matrix<Complex>;

inline constexpr double kDefaultTolerance = 1e-9;
inline constexpr double kHermitianCheck = 1e-12;
inline constexpr int kJacobiSweeps = 50;

/// A complex Hermitian matrix. Construction checks conjugate symmetry to 1e-12
/// (absolute) and stores the symmetrized matrix, so entries(i,j) is exactly
/// conj(entries(j,i)) and the diagonal is exactly real.
class HermitianMatrix {
 public:
  HermitianMatrix() = default;
  explicit HermitianMatrix(CMatrix entries);

  static HermitianMatrix zero(std::size_t n) { return HermitianMatrix(CMatrix(n, n)); }
  static HermitianMatrix diagonal(const std::vector<double>& d);
  /// Build from the upper triangle of m, mirroring it. No symmetry check.
  static HermitianMatrix from_upper(const CMatrix& m);

  std::size_t size() const { return entries_.rows(); }
  const Complex& operator()(std::size_t i, std::size_t j) const { return entries_(i, j); }
  const CMatrix& entries() const { return entries_; }

  double frobenius_norm() const;
  HermitianMatrix scaled(double factor) const;

 private:
  CMatrix entries_;
};

/// Eigenvalue counts (n+, n-, n0) of a Hermitian matrix.
struct Inertia {
  int n_plus = 0;
  int n_minus = 0;
  int n_zero = 0;

  int signature() const { return n_plus - n_minus; }
  int nullity() const { return n_zero; }
  int dimension() const { return n_plus + n_minus + n_zero; }

  friend bool operator==(const Inertia&, const Inertia&) = default;
};

/// Eigenvalues by cyclic complex Jacobi rotations, sorted ascending.
/// Throws NonConvergence after kJacobiSweeps sweeps.
std::vector<double> eigenvalues(const HermitianMatrix& h);

/// An eigenvalue counts as zero iff |lambda| <= tol * max(1, ||H||_F).
Inertia inertia(const HermitianMatrix& h, double tol = kDefaultTolerance);

/// Exact inertia of a symmetric integer matrix by symmetric Gaussian
/// elimination over the rationals (2x2 hyperbolic pivots when the remaining
/// diagonal is zero).
Inertia inertia_exact_integer(const IntMatrix& s);

/// inertia(P^* H P). Throws SingularP when |det P| <= 1e-9.
Inertia conjugate_inertia_check(const HermitianMatrix& h, const CMatrix& p, double tol = kDefaultTolerance);

Complex determinant(const CMatrix& m);
CMatrix multiply(const CMatrix& a, const CMatrix& b);
CMatrix adjoint(const CMatrix& a);

}  // namespace sigtorus
