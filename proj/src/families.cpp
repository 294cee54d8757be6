#include "sigtorus/families.hpp"

#include "sigtorus/corrections.hpp"
#include "sigtorus/errors.hpp"

namespace sigtorus {

namespace {

int sgn(std::int64_t x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

ColoredLink unknot() {
  ColoredLink k({1}, SeifertSystem::zero(1, 0));
  k.set_conway(RationalFunction(LaurentPoly::constant(1, 1), LaurentPoly::skew(1, 0)));
  k.set_underlying_oriented(ColoredLink({1}, SeifertSystem::zero(1, 0)));
  return k;
}

/// mu = 1 link whose Seifert matrix (as a single oriented surface) is v.
ColoredLink oriented_link(std::size_t components, const IntMatrix& v) {
  std::map<SignVector, IntMatrix> m;
  m[{-1}] = v;
  m[{1}] = v.transpose();
  return ColoredLink({components}, SeifertSystem(1, std::move(m)));
}

/// ((t1 t2)^l - (t1 t2)^-l) / (t1 t2 - (t1 t2)^-1), a Laurent polynomial.
LaurentPoly torus_conway(std::int64_t ell) {
  const int e = static_cast<int>(ell);
  const LaurentPoly num = LaurentPoly::monomial(2, {e, e}) - LaurentPoly::monomial(2, {-e, -e});
  const LaurentPoly den = LaurentPoly::monomial(2, {1, 1}) - LaurentPoly::monomial(2, {-1, -1});
  return divide_exact(num, den);
}

void check_open_unit(const Rational& t) {
  if (t <= 0 || t >= 1) throw DomainError("oracle angles must lie in (0, 1)");
}

}  // namespace

ColoredLink make_twist(std::int64_t k) {
  ColoredLink link({1, 1}, SeifertSystem::constant(2, IntMatrix{{k}}));
  link.set_conway(RationalFunction(LaurentPoly::constant(2, BigInt(k)) * LaurentPoly::skew(2, 0) *
                                   LaurentPoly::skew(2, 1)));
  link.set_sublink({0}, unknot());
  link.set_sublink({1}, unknot());
  return link;
}

IntMatrix torus_oriented_seifert(std::int64_t ell) {
  if (ell == 0) return IntMatrix(1, 1);
  const auto n = static_cast<std::size_t>(2 * std::abs(ell) - 1);
  const int s = sgn(ell);
  IntMatrix v(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    v(i, i) = -s;
    if (i + 1 < n) v(i, i + 1) = s;
  }
  return v;
}

ColoredLink make_torus(std::int64_t ell) {
  if (ell == 0) {
    // Two split unknots: the C-complex is two discs joined by a pair of clasps.
    ColoredLink link = make_unlink(2);
    return link;
  }
  const auto n = static_cast<std::size_t>(std::abs(ell) - 1);
  IntMatrix t(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    t(i, i) = -sgn(ell);
    if (i > 0) t(i, i - 1) = -sgn(ell);
  }
  std::map<SignVector, IntMatrix> m;
  m[{1, 1}] = t;
  m[{-1, -1}] = t.transpose();
  m[{1, -1}] = IntMatrix(n, n);
  m[{-1, 1}] = IntMatrix(n, n);
  ColoredLink link({1, 1}, SeifertSystem(2, std::move(m)));
  link.set_linking(ComponentId{0, 0}, ComponentId{1, 0}, ell);
  link.set_conway(RationalFunction(torus_conway(ell)));
  link.set_sublink({0}, unknot());
  link.set_sublink({1}, unknot());

  ColoredLink oriented = oriented_link(2, torus_oriented_seifert(ell));
  oriented.set_linking(ComponentId{0, 0}, ComponentId{0, 1}, ell);
  link.set_underlying_oriented(std::move(oriented));
  return link;
}

ColoredLink make_unlink(std::size_t mu) {
  if (mu == 0) throw DomainError("an unlink needs at least one component");
  if (mu == 1) return unknot();
  // mu discs chained by clasp pairs; each pair contributes a loop with zero forms.
  ColoredLink link(std::vector<std::size_t>(mu, 1), SeifertSystem::zero(mu, mu - 1));
  link.set_conway(RationalFunction(LaurentPoly(mu)));
  std::vector<std::size_t> rest;
  for (std::size_t c = 1; c < mu; ++c) rest.push_back(c);
  link.set_sublink(rest, make_unlink(mu - 1));
  link.set_underlying_oriented(oriented_link(mu, IntMatrix(mu - 1, mu - 1)));
  return link;
}

ColoredLink make_hopf() { return make_torus(1); }

ColoredLink make_family(const FamilySpec& spec) {
  if (spec.name == "twist") return make_twist(spec.parameter);
  if (spec.name == "torus") return make_torus(spec.parameter);
  if (spec.name == "hopf") return make_hopf();
  if (spec.name == "unlink") {
    if (spec.parameter < 1 || spec.parameter > 16) throw DomainError("unlink needs 1 <= mu <= 16");
    return make_unlink(static_cast<std::size_t>(spec.parameter));
  }
  throw SchemaError("unknown family '" + spec.name + "'");
}

SigmaEta oracle_torus(std::int64_t ell, const Rational& theta1, const Rational& theta2) {
  if (ell == 0) throw ZeroParameter("l = 0 is the unlink: sigma = 0, eta = 1");
  check_open_unit(theta1);
  check_open_unit(theta2);
  const Rational sum = theta1 + theta2;
  const Rational scaled = sum * ell;
  SigmaEta out;
  out.sigma = sgn(ell) * torus_step_function(static_cast<int>(std::abs(ell)), sum);
  out.eta = (denominator(scaled) == 1 && sum != 1) ? 1 : 0;
  return out;
}

SigmaEta oracle_twist(std::int64_t k) { return {sgn(k), k == 0 ? 1 : 0}; }

}  // namespace sigtorus
