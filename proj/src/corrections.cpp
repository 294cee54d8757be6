#include "sigtorus/corrections.hpp"

#include <cmath>
#include <string>

#include "sigtorus/errors.hpp"

namespace sigtorus {

namespace {

Rational floor_rational(const Rational& r) { return r - frac(r); }

}  // namespace

int rho2(Complex z1, Complex z2) {
  const Complex i{0.0, 1.0};
  const Complex v = i * (z1 * z2 - 1.0) * (std::conj(z1) - 1.0) * (std::conj(z2) - 1.0);
  if (std::abs(v.imag()) > 1e-10) throw std::logic_error("rho2: bracket is not real; inputs are not unit complex");
  if (v.real() > 0) return 1;
  if (v.real() < 0) return -1;
  return 0;
}

int rho2(const Angle& z1, const Angle& z2) {
  if (z1.is_exact() && z2.is_exact()) {
    const Rational& a = z1.exact();
    const Rational& b = z2.exact();
    if (a == 0 || b == 0) return 0;
    const Rational s = a + b;  // in (0, 2)
    if (s == 1) return 0;
    return s < 1 ? 1 : -1;
  }
  return rho2(z1.unit(), z2.unit());
}

int rho_n(std::span<const Angle> z) {
  if (z.size() <= 1) return 0;
  // suffix[j] = z_j ... z_n as an angle
  std::vector<Angle> suffix(z.size());
  suffix.back() = z.back();
  for (std::size_t j = z.size() - 1; j-- > 0;) suffix[j] = z[j] + suffix[j + 1];
  int total = 0;
  for (std::size_t j = 0; j + 1 < z.size(); ++j) total += rho2(z[j], suffix[j + 1]);
  return total;
}

std::int64_t LinkingVector::abs_sum() const {
  std::int64_t s = 0;
  for (auto l : ell) s += l < 0 ? -l : l;
  return s;
}

namespace {

void check_rest(const LinkingVector& ell, const TorusPoint& omega_rest) {
  if (ell.size() != omega_rest.size())
    throw DimensionMismatch("linking vector has " + std::to_string(ell.size()) + " entries, point has " +
                            std::to_string(omega_rest.size()));
}

}  // namespace

int rho_ell(const LinkingVector& ell, const TorusPoint& omega_rest) {
  check_rest(ell, omega_rest);
  if (ell.abs_sum() == 0) return 0;
  std::vector<Angle> block;
  block.reserve(static_cast<std::size_t>(ell.abs_sum()));
  for (std::size_t j = 0; j < ell.size(); ++j) {
    const Angle zj = omega_rest[j].power(ell.sign(j));
    for (std::int64_t r = 0; r < std::abs(ell.ell[j]); ++r) block.push_back(zj);
  }
  return rho_n(block);
}

int rho_ell_geometric(const LinkingVector& ell, const TorusPoint& omega_rest) {
  check_rest(ell, omega_rest);
  const std::int64_t total = ell.abs_sum();
  if (total == 0) throw ZeroLinking("rho_ell_geometric needs a nonzero linking vector");
  // Position along the path from the corner 1^s: reparametrize each coordinate
  // by the angle of omega_j^{s_j}, so the corner sits at 0 and walls at integers.
  Rational x = 0;
  for (std::size_t j = 0; j < ell.size(); ++j) {
    if (ell.ell[j] == 0) continue;
    const Rational& theta = omega_rest[j].exact();
    if (theta == 0) throw BoundaryPoint("rho_ell_geometric: omega' has a coordinate equal to 1");
    const Rational along = ell.sign(j) > 0 ? theta : Rational(1) - theta;
    x += along * std::abs(ell.ell[j]);
  }
  const Rational k = floor_rational(x);
  const auto kk = static_cast<std::int64_t>(numerator(k));
  if (x == k) return static_cast<int>(total - 2 * kk);  // on the kk-th wall
  return static_cast<int>(total - 1 - 2 * kk);
}

int tau_ell(const LinkingVector& ell, const TorusPoint& omega_rest) {
  check_rest(ell, omega_rest);
  return omega_rest.power_is_one(ell.ell) ? 1 : 0;
}

int torus_step_function(int n, const Rational& theta) {
  if (n < 1) throw DomainError("f_n needs n >= 1");
  if (theta <= 0 || theta >= 2) throw DomainError("f_n is defined on (0, 2)");
  Rational t = theta > 1 ? Rational(2) - theta : theta;
  if (t == 1) return 1 - n;
  const Rational nt = t * n;
  const auto k = static_cast<int>(numerator(floor_rational(nt)));
  if (denominator(nt) == 1) return n - 2 * k;
  return n - 2 * k - 1;
}

HermitianMatrix build_Gn(std::span<const Angle> z) {
  for (std::size_t k = 0; k < z.size(); ++k)
    if (z[k].is_zero()) throw UnitOne("G_n: z_" + std::to_string(k + 1) + " = 1");
  if (z.size() <= 1) return HermitianMatrix::zero(0);
  const std::size_t m = z.size() - 1;
  const Complex i{0.0, 1.0};
  std::vector<Complex> w(z.size()), one_minus(z.size());
  for (std::size_t k = 0; k < z.size(); ++k) {
    w[k] = z[k].unit();
    one_minus[k] = 1.0 - w[k];
  }
  CMatrix g(m, m);
  for (std::size_t r = 0; r < m; ++r) {
    // z_r z_{r+1} - 1, using the exact product angle when available
    const Complex prod_minus_one = (z[r] + z[r + 1]).unit() - 1.0;
    g(r, r) = i * prod_minus_one / (one_minus[r] * one_minus[r + 1]);
    if (r > 0) g(r - 1, r) = std::conj(i / one_minus[r]);
  }
  return HermitianMatrix::from_upper(g);
}

HermitianMatrix build_clasp_matrix(const ClaspSequence& clasps, const TorusPoint& omega_rest) {
  if (clasps.empty()) throw DomainError("a clasp sequence around the first surface is never empty");
  std::vector<Angle> z;
  z.reserve(clasps.size());
  for (const auto& c : clasps) {
    if (c.color == 0 || c.color > omega_rest.size())
      throw DomainError("clasp color " + std::to_string(c.color + 1) + " is out of range");
    if (c.sign != 1 && c.sign != -1) throw DomainError("clasp sign must be +1 or -1");
    z.push_back(omega_rest[c.color - 1].power(c.sign));
  }
  return build_Gn(z);
}

}  // namespace sigtorus
