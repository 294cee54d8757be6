#include "sigtorus/conway_slope.hpp"

#include <cmath>
#include <sstream>

#include "sigtorus/corrections.hpp"
#include "sigtorus/errors.hpp"

namespace sigtorus {

std::string SlopeValue::str() const {
  if (infinite) return "inf";
  std::ostringstream os;
  os.precision(17);
  os << value;
  return os.str();
}

namespace {

struct Evaluated {
  Complex value;
  bool zero = false;
};

Evaluated evaluate(const RationalFunction& f, std::span<const Complex> point, const char* what) {
  const ScaledValue den = f.den().eval_scaled(point);
  if (den.is_zero()) throw PoleEncountered(std::string(what) + ": denominator vanishes at the evaluation point");
  const ScaledValue num = f.num().eval_scaled(point);
  if (num.is_zero()) return {Complex{0.0, 0.0}, true};
  return {num.value / den.value, false};
}

const ColoredLink& require_sublink(const ColoredLink& link) {
  const ColoredLink* sub = link.sublink_without_first();
  if (!sub) throw MissingSublink("the sublink without the first color is required");
  return *sub;
}

}  // namespace

SlopeQuotient slope_quotient(const RationalFunction& nabla_l, const RationalFunction& nabla_lp,
                             const TorusPoint& omega_rest) {
  if (nabla_l.nvars() != omega_rest.size() + 1 || nabla_lp.nvars() != omega_rest.size())
    throw DimensionMismatch("Conway data does not match the number of colors");
  const std::vector<Complex> roots = omega_rest.half_units();
  std::vector<Complex> full{Complex{1.0, 0.0}};
  full.insert(full.end(), roots.begin(), roots.end());

  const Evaluated d1 = evaluate(partial_derivative(nabla_l, 0), full, "d nabla_L / d t_1");
  const Evaluated lp = evaluate(nabla_lp, roots, "nabla_L'");
  return {-d1.value, 2.0 * lp.value, d1.zero, lp.zero};
}

SlopeValue slope(const RationalFunction& nabla_l, const RationalFunction& nabla_lp, const TorusPoint& omega_rest) {
  const SlopeQuotient q = slope_quotient(nabla_l, nabla_lp, omega_rest);
  if (q.numerator_zero && q.denominator_zero)
    throw Indeterminate("slope reads 0/0 at omega' = " + omega_rest.str());
  if (q.numerator_zero) return SlopeValue::real(0.0);
  if (q.denominator_zero) return SlopeValue::infinity();
  const Complex v = q.numerator / q.denominator;
  if (std::abs(v.imag()) > 1e-8 * std::abs(v)) {
    std::ostringstream os;
    os << "slope quotient " << v << " at omega' = " << omega_rest.str() << " is not real";
    throw NonRealSlope(os.str());
  }
  return SlopeValue::real(v.real());
}

SlopeValue slope(const ColoredLink& link, const TorusPoint& omega_rest) {
  const ColoredLink& sub = require_sublink(link);
  if (!link.conway()) throw MissingConwayData("link has no conway function");
  if (!sub.conway()) throw MissingConwayData("sublink L' has no conway function");
  return slope(*link.conway(), *sub.conway(), omega_rest);
}

int extended_sign(const SlopeValue& v) {
  if (v.infinite) return 0;
  return v.value > 0 ? 1 : (v.value < 0 ? -1 : 0);
}

SlopeClass classify_slope(const SlopeValue& v) {
  if (v.infinite) return {0, -1};
  if (v.value == 0.0) return {0, 1};
  return {extended_sign(v), 0};
}

std::vector<std::int64_t> first_color_linking(const ColoredLink& link) {
  std::vector<std::int64_t> ell;
  for (std::size_t j = 1; j < link.colors(); ++j) ell.push_back(link.color_linking(0, j));
  return ell;
}

bool torres_generic(const ColoredLink& link, const TorusPoint& omega_rest) {
  const ColoredLink& sub = require_sublink(link);
  if (!sub.conway()) throw MissingConwayData("sublink L' has no conway function");
  if (tau_ell(LinkingVector{first_color_linking(link)}, omega_rest) == 1) return false;
  const std::vector<Complex> roots = omega_rest.half_units();
  const RationalFunction& f = *sub.conway();
  // A pole of nabla_L' cannot be a zero of Delta_L'.
  if (f.den().eval_scaled(roots).is_zero()) return true;
  return !f.num().eval_scaled(roots).is_zero();
}

LaurentPoly factor_2comp(const RationalFunction& nabla) {
  if (nabla.nvars() != 2) throw DimensionMismatch("factor_2comp expects a function of two variables");
  if (nabla.is_zero()) return LaurentPoly(2);
  const LaurentPoly poly = divide_exact(nabla.num(), nabla.den());
  return divide_exact(poly, LaurentPoly::skew(2, 0) * LaurentPoly::skew(2, 1));
}

}  // namespace sigtorus
