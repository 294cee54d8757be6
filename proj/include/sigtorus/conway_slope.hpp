#pragma once

#include <optional>

#include "sigtorus/clink.hpp"
#include "sigtorus/laurent.hpp"

namespace sigtorus {

/// A real number or infinity.
struct SlopeValue {
  bool infinite = false;
  double value = 0.0;

  static SlopeValue infinity() { return {true, 0.0}; }
  static SlopeValue real(double v) { return {false, v}; }
  bool is_zero() const { return !infinite && value == 0.0; }
  std::string str() const;
};

/// Numerator -(d nabla_L / d t_1)(1, sqrt omega') and denominator 2 nabla_L'(sqrt omega')
/// of the slope, before dividing. Zero tests are relative to the largest term.
struct SlopeQuotient {
  Complex numerator;
  Complex denominator;
  bool numerator_zero = false;
  bool denominator_zero = false;
};

/// Throws PoleEncountered when a denominator of the Conway data vanishes.
SlopeQuotient slope_quotient(const RationalFunction& nabla_l, const RationalFunction& nabla_lp,
                             const TorusPoint& omega_rest);

/// -(d nabla_L / d t_1)(1, sqrt omega') / (2 nabla_L'(sqrt omega')), with
/// sqrt(exp(2 pi i theta)) = exp(pi i theta).
/// Throws Indeterminate (0/0), PoleEncountered, NonRealSlope.
SlopeValue slope(const RationalFunction& nabla_l, const RationalFunction& nabla_lp, const TorusPoint& omega_rest);

/// Slope of the first color of a link carrying Conway data for itself and L'.
/// Throws MissingSublink, MissingConwayData.
SlopeValue slope(const ColoredLink& link, const TorusPoint& omega_rest);

/// Sign with sgn(infinity) = 0.
int extended_sign(const SlopeValue& v);

struct SlopeClass {
  int s = 0;
  int epsilon = 0;
  friend bool operator==(const SlopeClass&, const SlopeClass&) = default;
};

/// s = sign (0 at 0 and infinity); epsilon = +1 at 0, -1 at infinity, 0 otherwise.
SlopeClass classify_slope(const SlopeValue& v);

/// Linking numbers of the first color with each of the other colors.
std::vector<std::int64_t> first_color_linking(const ColoredLink& link);

/// Delta_L(1, omega') != 0, decided as tau_ell(omega') = 0 and nabla_L'(sqrt omega') != 0.
/// Throws MissingSublink, MissingConwayData, InexactAngles.
bool torres_generic(const ColoredLink& link, const TorusPoint& omega_rest);

/// f with nabla = (t1 - 1/t1)(t2 - 1/t2) f. Throws NotDivisible.
LaurentPoly factor_2comp(const RationalFunction& nabla);

}  // namespace sigtorus
