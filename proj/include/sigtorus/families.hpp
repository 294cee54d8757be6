#pragma once

#include <cstdint>
#include <string>

#include "sigtorus/clink.hpp"

namespace sigtorus {

/// Twist link L(k): two unknots with |k| full twists between them; every A^eps = (k).
ColoredLink make_twist(std::int64_t k);

/// Torus link T(2, 2l) colored by its two components, with its oriented Seifert
/// data attached. l = 0 gives the 2-component unlink.
ColoredLink make_torus(std::int64_t ell);

/// Unlink of mu unknots, one per color.
ColoredLink make_unlink(std::size_t mu);

/// Hopf link T(2, 2).
ColoredLink make_hopf();

/// Seifert matrix of the oriented torus link T(2, 2l): (2|l|-1)-square, -sgn(l)
/// on the diagonal, sgn(l) above it.
IntMatrix torus_oriented_seifert(std::int64_t ell);

struct FamilySpec {
  std::string name;  ///< "twist", "torus", "unlink" or "hopf"
  std::int64_t parameter = 0;
};
ColoredLink make_family(const FamilySpec& spec);

struct SigmaEta {
  int sigma = 0;
  int eta = 0;
  friend bool operator==(const SigmaEta&, const SigmaEta&) = default;
};

/// Closed form for T(2, 2l) at (theta_1, theta_2) in (0,1)^2:
/// sigma = sgn(l) f_|l|(theta_1 + theta_2), eta = [l(theta_1 + theta_2) in Z and theta_1 + theta_2 != 1].
/// Throws ZeroParameter for l = 0 and DomainError off the open square.
SigmaEta oracle_torus(std::int64_t ell, const Rational& theta1, const Rational& theta2);

/// (sgn k, [k = 0]) at every point of the open torus.
SigmaEta oracle_twist(std::int64_t k);

}  // namespace sigtorus
