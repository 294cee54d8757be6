#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "sigtorus/angle.hpp"
#include "sigtorus/hermitian.hpp"

namespace sigtorus {

/// rho(z1, z2) = sgn[i (z1 z2 - 1)(conj z1 - 1)(conj z2 - 1)].
///
/// On exact angles every case is decided in rational arithmetic: the bracket
/// equals 8 sin(pi(t1+t2)) sin(pi t1) sin(pi t2). Float angles fall back to
/// the complex expression.
int rho2(const Angle& z1, const Angle& z2);
/// Same, from unit complex numbers. Asserts the bracket is real to 1e-10.
int rho2(Complex z1, Complex z2);

/// rho(z_1, ..., z_n) = sum_{j<n} rho(z_j, z_{j+1} ... z_n). Zero for n <= 1.
int rho_n(std::span<const Angle> z);

/// Linking numbers l_j = lk(L_1, L_j) of the first color with each other color.
struct LinkingVector {
  std::vector<std::int64_t> ell;

  std::int64_t abs_sum() const;
  int sign(std::size_t j) const { return ell[j] > 0 ? 1 : (ell[j] < 0 ? -1 : 0); }
  std::size_t size() const { return ell.size(); }
};

/// rho_ell(omega') from the block vector (omega_2^{s_2} x |l_2|, ..., omega_mu^{s_mu} x |l_mu|).
int rho_ell(const LinkingVector& ell, const TorusPoint& omega_rest);

/// The same function described by walls: along the foliation by
/// prod omega_j^{l_j} = const, start at |l| - 1 near the corner 1^s and drop by
/// one on entering and one on leaving each wall. Needs exact angles; throws
/// ZeroLinking when |l| = 0.
int rho_ell_geometric(const LinkingVector& ell, const TorusPoint& omega_rest);

/// 1 iff prod omega_j^{l_j} = 1. Throws InexactAngles on float angles.
int tau_ell(const LinkingVector& ell, const TorusPoint& omega_rest);

/// Step function f_n on (0, 2) giving the signature of T(2, 2n) at theta_1 + theta_2.
/// Throws DomainError outside (0, 2).
int torus_step_function(int n, const Rational& theta);

/// Tridiagonal (n-1)x(n-1) matrix G_n(z). Throws UnitOne if some z_k = 1.
HermitianMatrix build_Gn(std::span<const Angle> z);

struct Clasp {
  std::size_t color = 1;  ///< 0-based link color, never 0 (the first color carries the disc)
  int sign = 1;
};
using ClaspSequence = std::vector<Clasp>;

/// G_n evaluated at z_k = omega_{c(k)}^{s(k)}; omega_rest[c - 1] is the angle of color c.
HermitianMatrix build_clasp_matrix(const ClaspSequence& clasps, const TorusPoint& omega_rest);

}  // namespace sigtorus
