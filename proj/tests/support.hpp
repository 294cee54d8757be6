// Generators and independent oracles shared by the unit and acceptance tests.
#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include <Eigen/Eigenvalues>

#include "sigtorus/clink.hpp"
#include "sigtorus/hermitian.hpp"
#include "sigtorus/laurent.hpp"

namespace testing_support {

using namespace sigtorus;

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : engine_(seed) {}

  std::int64_t range(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(engine_() % static_cast<std::uint64_t>(hi - lo + 1));
  }
  double uniform(double lo, double hi) { return lo + (hi - lo) * (static_cast<double>(engine_() >> 11) * 0x1.0p-53); }
  bool coin() { return engine_() & 1U; }

  /// Rational in (0, 1) with denominator in [2, 97].
  Rational open_angle() {
    const auto q = range(2, 97);
    return Rational(range(1, q - 1), q);
  }
  Angle angle() { return Angle(open_angle()); }
  TorusPoint point(std::size_t dim) {
    std::vector<Angle> a;
    for (std::size_t j = 0; j < dim; ++j) a.push_back(angle());
    return TorusPoint(std::move(a));
  }

  Complex nonzero_complex() {
    for (;;) {
      const Complex z{uniform(-2, 2), uniform(-2, 2)};
      if (std::abs(z) > 0.3) return z;
    }
  }

  LaurentPoly poly(std::size_t nvars, int max_terms = 4, int max_exp = 2, int max_coeff = 5) {
    LaurentPoly p(nvars);
    const auto terms = range(1, max_terms);
    for (std::int64_t t = 0; t < terms; ++t) {
      Exponent e(nvars);
      for (auto& x : e) x = static_cast<int>(range(-max_exp, max_exp));
      std::int64_t c = range(-max_coeff, max_coeff);
      if (c == 0) c = 1;
      p.add_term(e, c);
    }
    if (p.is_zero()) p.add_term(Exponent(nvars, 0), 1);
    return p;
  }

  CMatrix complex_matrix(std::size_t n, double scale = 1.0) {
    CMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = Complex{uniform(-scale, scale), uniform(-scale, scale)};
    return m;
  }

  HermitianMatrix hermitian(std::size_t n) {
    const CMatrix m = complex_matrix(n);
    CMatrix h(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) h(i, j) = m(i, j) + std::conj(m(j, i));
    return HermitianMatrix(h);
  }

  /// B^* diag(d) B for a random invertible B: a Hermitian matrix with known inertia,
  /// zero eigenvalues included.
  std::pair<HermitianMatrix, Inertia> hermitian_with_inertia(std::size_t n) {
    std::vector<double> d(n);
    Inertia in;
    for (auto& x : d) {
      const auto pick = range(-1, 1);
      x = pick == 0 ? 0.0 : static_cast<double>(pick) * uniform(0.5, 3.0);
      (pick > 0 ? in.n_plus : pick < 0 ? in.n_minus : in.n_zero) += 1;
    }
    const CMatrix b = well_conditioned(n);
    CMatrix dm(n, n);
    for (std::size_t i = 0; i < n; ++i) dm(i, i) = d[i];
    return {HermitianMatrix::from_upper(multiply(adjoint(b), multiply(dm, b))), in};
  }

  /// 3 I + E with |E_ij| <= 1/2: diagonally dominant, condition number well below 1e4 for n <= 6.
  CMatrix well_conditioned(std::size_t n) {
    CMatrix p = complex_matrix(n, 0.5 / static_cast<double>(n));
    for (std::size_t i = 0; i < n; ++i) p(i, i) += 3.0;
    return p;
  }

  IntMatrix symmetric_int(std::size_t n, int bound) {
    IntMatrix s(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) s(i, j) = s(j, i) = range(-bound, bound);
    return s;
  }

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

/// Inertia by Eigen's self-adjoint solver, zero threshold relative to max(1, ||H||_F).
inline Inertia eigen_inertia(const CMatrix& h, double tol = 1e-9) {
  const auto n = static_cast<Eigen::Index>(h.rows());
  Eigen::MatrixXcd m(n, n);
  double norm = 0.0;
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) {
      m(i, j) = h(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
      norm += std::norm(m(i, j));
    }
  Inertia in;
  if (n == 0) return in;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m, Eigen::EigenvaluesOnly);
  const double thr = tol * std::max(1.0, std::sqrt(norm));
  for (Eigen::Index i = 0; i < n; ++i) {
    const double l = solver.eigenvalues()(i);
    (l > thr ? in.n_plus : l < -thr ? in.n_minus : in.n_zero) += 1;
  }
  return in;
}

inline CMatrix to_complex(const IntMatrix& s) {
  CMatrix m(s.rows(), s.cols());
  for (std::size_t i = 0; i < s.rows(); ++i)
    for (std::size_t j = 0; j < s.cols(); ++j) m(i, j) = static_cast<double>(s(i, j));
  return m;
}

}  // namespace testing_support
