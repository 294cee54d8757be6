#include "sigtorus/hermitian.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "sigtorus/errors.hpp"

namespace sigtorus {

HermitianMatrix::HermitianMatrix(CMatrix entries) : entries_(std::move(entries)) {
  if (!entries_.square()) throw DimensionMismatch("Hermitian matrix must be square");
  const std::size_t n = entries_.rows();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      Complex a = entries_(i, j), b = std::conj(entries_(j, i));
      if (std::abs(a - b) > kHermitianCheck)
        throw NotHermitian("entry (" + std::to_string(i) + "," + std::to_string(j) +
                           ") is not the conjugate of its transpose");
      Complex avg = 0.5 * (a + b);
      if (i == j) avg = {avg.real(), 0.0};
      entries_(i, j) = avg;
      entries_(j, i) = std::conj(avg);
    }
  }
}

HermitianMatrix HermitianMatrix::diagonal(const std::vector<double>& d) {
  CMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return HermitianMatrix(std::move(m));
}

HermitianMatrix HermitianMatrix::from_upper(const CMatrix& m) {
  if (!m.square()) throw DimensionMismatch("Hermitian matrix must be square");
  HermitianMatrix h;
  h.entries_ = CMatrix(m.rows(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    h.entries_(i, i) = m(i, i).real();
    for (std::size_t j = i + 1; j < m.rows(); ++j) {
      h.entries_(i, j) = m(i, j);
      h.entries_(j, i) = std::conj(m(i, j));
    }
  }
  return h;
}

double HermitianMatrix::frobenius_norm() const {
  double s = 0.0;
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = 0; j < size(); ++j) s += std::norm(entries_(i, j));
  return std::sqrt(s);
}

HermitianMatrix HermitianMatrix::scaled(double factor) const {
  HermitianMatrix h = *this;
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = 0; j < size(); ++j) h.entries_(i, j) *= factor;
  return h;
}

namespace {

double off_diagonal_norm(const CMatrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.rows(); ++j)
      if (i != j) s += std::norm(a(i, j));
  return std::sqrt(s);
}

// One unitary rotation in the (p, q) plane zeroing a(p, q).
// U = D R with D = diag(1, conj(e)) making a(p,q) real and R the classical
// real Jacobi rotation; A <- U^* A U.
void rotate(CMatrix& a, std::size_t p, std::size_t q) {
  const Complex apq = a(p, q);
  const double r = std::abs(apq);
  if (r < std::numeric_limits<double>::min()) {
    // Subnormal phases are not unit-modulus after division; the entry is negligible anyway.
    a(p, q) = 0.0;
    a(q, p) = 0.0;
    return;
  }
  Complex e = apq / r;
  e /= std::abs(e);
  const double app = a(p, p).real(), aqq = a(q, q).real();
  const double theta = (aqq - app) / (2.0 * r);
  const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;
  const Complex ce = std::conj(e);
  const std::size_t n = a.rows();

  // Columns: A U
  for (std::size_t k = 0; k < n; ++k) {
    Complex akp = a(k, p), akq = a(k, q);
    a(k, p) = c * akp - s * ce * akq;
    a(k, q) = s * akp + c * ce * akq;
  }
  // Rows: U^* (A U)
  for (std::size_t k = 0; k < n; ++k) {
    Complex apk = a(p, k), aqk = a(q, k);
    a(p, k) = c * apk - s * e * aqk;
    a(q, k) = s * apk + c * e * aqk;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = a(p, p).real();
  a(q, q) = a(q, q).real();
}

}  // namespace

std::vector<double> eigenvalues(const HermitianMatrix& h) {
  const std::size_t n = h.size();
  CMatrix a = h.entries();
  const double norm = h.frobenius_norm();
  std::vector<double> out(n, 0.0);
  if (n == 0) return out;
  if (norm > 0.0) {
    const double target = 1e-13 * norm;
    int sweep = 0;
    while (off_diagonal_norm(a) > target) {
      if (++sweep > kJacobiSweeps)
        throw NonConvergence("Jacobi eigenvalue iteration did not converge in " +
                             std::to_string(kJacobiSweeps) + " sweeps");
      for (std::size_t p = 0; p + 1 < n; ++p)
        for (std::size_t q = p + 1; q < n; ++q) rotate(a, p, q);
    }
    // Quadratic convergence: two more sweeps push the residual to rounding level.
    for (int extra = 0; extra < 2 && off_diagonal_norm(a) > 0.0; ++extra)
      for (std::size_t p = 0; p + 1 < n; ++p)
        for (std::size_t q = p + 1; q < n; ++q) rotate(a, p, q);
  }
  for (std::size_t i = 0; i < n; ++i) out[i] = a(i, i).real();
  std::sort(out.begin(), out.end());
  return out;
}

Inertia inertia(const HermitianMatrix& h, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("inertia tolerance must be positive");
  Inertia in;
  const double threshold = tol * std::max(1.0, h.frobenius_norm());
  for (double lambda : eigenvalues(h)) {
    if (std::abs(lambda) <= threshold)
      ++in.n_zero;
    else if (lambda > 0)
      ++in.n_plus;
    else
      ++in.n_minus;
  }
  return in;
}

Inertia inertia_exact_integer(const IntMatrix& s) {
  if (!s.square()) throw DimensionMismatch("linking matrix must be square");
  const std::size_t n = s.rows();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (s(i, j) != s(j, i)) throw SymmetryViolation("inertia_exact_integer: matrix is not symmetric");

  Matrix<Rational> a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = Rational(s(i, j));

  std::vector<std::size_t> live(n);
  for (std::size_t i = 0; i < n; ++i) live[i] = i;

  Inertia in;
  auto count = [&in](const Rational& pivot) {
    if (pivot > 0)
      ++in.n_plus;
    else
      ++in.n_minus;
  };

  while (!live.empty()) {
    // 1x1 pivot on any nonzero diagonal entry.
    auto diag = std::find_if(live.begin(), live.end(), [&](std::size_t i) { return a(i, i) != 0; });
    if (diag != live.end()) {
      std::size_t p = *diag;
      live.erase(diag);
      const Rational pivot = a(p, p);
      count(pivot);
      for (std::size_t i : live) {
        if (a(i, p) == 0) continue;
        const Rational f = a(i, p) / pivot;
        for (std::size_t j : live) a(i, j) -= f * a(p, j);
      }
      continue;
    }
    // Zero diagonal: use a 2x2 block [[0, b], [b, 0]], inertia (1, 1, 0).
    std::size_t p = n, q = n;
    for (std::size_t i : live) {
      for (std::size_t j : live) {
        if (i != j && a(i, j) != 0) {
          p = i;
          q = j;
          break;
        }
      }
      if (p != n) break;
    }
    if (p == n) {
      in.n_zero += static_cast<int>(live.size());
      break;
    }
    live.erase(std::remove_if(live.begin(), live.end(), [&](std::size_t i) { return i == p || i == q; }),
               live.end());
    ++in.n_plus;
    ++in.n_minus;
    // Schur complement: A_rr -= A_rB * B^{-1} * A_Br, with B = [[0,b],[b,0]],
    // B^{-1} = [[0, 1/b], [1/b, 0]].
    const Rational b = a(p, q);
    for (std::size_t i : live) {
      const Rational xp = a(i, p), xq = a(i, q);
      if (xp == 0 && xq == 0) continue;
      for (std::size_t j : live) a(i, j) -= (xp * a(q, j) + xq * a(p, j)) / b;
    }
  }
  return in;
}

CMatrix multiply(const CMatrix& a, const CMatrix& b) {
  if (a.cols() != b.rows()) throw DimensionMismatch("matrix product dimension mismatch");
  CMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex{}) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

CMatrix adjoint(const CMatrix& a) {
  CMatrix t(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = std::conj(a(i, j));
  return t;
}

Complex determinant(const CMatrix& m) {
  if (!m.square()) throw DimensionMismatch("determinant of a non-square matrix");
  CMatrix a = m;
  const std::size_t n = a.rows();
  Complex det{1.0, 0.0};
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::abs(a(r, col)) > std::abs(a(piv, col))) piv = r;
    if (a(piv, col) == Complex{}) return {0.0, 0.0};
    if (piv != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(piv, j), a(col, j));
      det = -det;
    }
    det *= a(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      const Complex f = a(r, col) / a(col, col);
      for (std::size_t j = col; j < n; ++j) a(r, j) -= f * a(col, j);
    }
  }
  return det;
}

Inertia conjugate_inertia_check(const HermitianMatrix& h, const CMatrix& p, double tol) {
  if (!p.square() || p.rows() != h.size()) throw DimensionMismatch("P must be square of the size of H");
  if (std::abs(determinant(p)) <= 1e-9) throw SingularP("conjugating matrix is singular");
  CMatrix conj = multiply(adjoint(p), multiply(h.entries(), p));
  return inertia(HermitianMatrix::from_upper(conj), tol);
}

}  // namespace sigtorus
