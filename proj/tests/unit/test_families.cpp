#include "doctest.h"
#include "sigtorus/corrections.hpp"
#include "sigtorus/errors.hpp"
#include "sigtorus/families.hpp"
#include "sigtorus/link_io.hpp"
#include "support.hpp"

using namespace sigtorus;

TEST_CASE("twist link data") {
  const ColoredLink l2 = make_twist(2);
  CHECK(l2.colors() == 2);
  CHECK(l2.color_linking(0, 1) == 0);
  for (const auto& [eps, a] : l2.seifert().matrices()) CHECK(a == IntMatrix{{2}});
  const RationalFunction expected(LaurentPoly::constant(2, 2) * LaurentPoly::skew(2, 0) * LaurentPoly::skew(2, 1));
  CHECK(*l2.conway() == expected);
  REQUIRE(l2.sublink_without_first() != nullptr);
  CHECK(l2.sublink_without_first()->seifert().size() == 0);
  CHECK(make_twist(0).seifert().at({1, -1}) == IntMatrix{{0}});
  CHECK(signature_nullity(make_twist(0), TorusPoint{Angle(1, 5), Angle(2, 3)}) == SignatureNullity{0, 1, 1});
}

TEST_CASE("torus link data") {
  const ColoredLink t3 = make_torus(3);
  CHECK(t3.seifert().size() == 2);
  CHECK(t3.seifert().at({1, 1}) == IntMatrix{{-1, 0}, {-1, -1}});
  CHECK(t3.seifert().at({1, -1}) == IntMatrix(2, 2));
  CHECK(t3.color_linking(0, 1) == 3);
  CHECK(make_torus(-3).seifert().at({1, 1}) == IntMatrix{{1, 0}, {1, 1}});

  const ColoredLink t1 = make_torus(1);
  CHECK(t1.seifert().size() == 0);
  testing_support::Gen g(3);
  for (int trial = 0; trial < 50; ++trial)
    CHECK(signature_nullity(t1, g.point(2)) == SignatureNullity{0, 0, 0});

  // the 2-component unlink: one loop with vanishing forms
  const ColoredLink t0 = make_torus(0);
  CHECK(t0.color_linking(0, 1) == 0);
  CHECK(signature_nullity(t0, TorusPoint{Angle(1, 3), Angle(1, 7)}) == SignatureNullity{0, 1, 1});
  CHECK(t0.conway()->is_zero());
}

TEST_CASE("torus Conway data satisfies the Torres relation") {
  for (std::int64_t ell : {-3, -1, 1, 2, 4}) {
    const LaurentPoly nabla = make_torus(ell).conway()->num();
    const LaurentPoly at_one = nabla.specialize_unit(0, 1);
    const int e = static_cast<int>(ell);
    const LaurentPoly rhs = LaurentPoly::variable(1, 0, e) - LaurentPoly::variable(1, 0, -e);
    // nabla(1, t) (t - 1/t) = t^l - t^-l, i.e. nabla(1, t) = (t^l - t^-l) nabla_unknot(t)
    CHECK(at_one * LaurentPoly::skew(1, 0) == rhs);
  }
}

TEST_CASE("oriented torus Seifert matrices") {
  const IntMatrix v = torus_oriented_seifert(3);
  CHECK(v.rows() == 5);
  CHECK(v(0, 0) == -1);
  CHECK(v(0, 1) == 1);
  CHECK(v(1, 0) == 0);
  // Levine-Tristram signature of T(2,6) at omega = -1 is -5
  const ColoredLink oriented = *make_torus(3).underlying_oriented();
  CHECK(signature_nullity(oriented, TorusPoint{Angle(1, 2)}).sigma == -5);
  CHECK(signature_nullity(*make_hopf().underlying_oriented(), TorusPoint{Angle(1, 2)}).sigma == -1);
  CHECK(signature_nullity(*make_torus(-2).underlying_oriented(), TorusPoint{Angle(1, 2)}).sigma == 3);
}

TEST_CASE("unlinks") {
  const ColoredLink u3 = make_unlink(3);
  CHECK(u3.colors() == 3);
  CHECK(signature_nullity(u3, TorusPoint{Angle(1, 3), Angle(1, 4), Angle(1, 5)}) == SignatureNullity{0, 2, 2});
  CHECK(make_unlink(1).seifert().size() == 0);
  CHECK_THROWS_AS(make_unlink(0), DomainError);
  CHECK_THROWS_AS(make_family({"unlink", 0}), DomainError);
  CHECK_THROWS_AS(make_family({"pretzel", 1}), SchemaError);
  CHECK(make_family({"torus", 2}).color_linking(0, 1) == 2);
}

TEST_CASE("closed-form oracles") {
  CHECK(oracle_torus(3, Rational(1, 10), Rational(1, 10)) == SigmaEta{2, 0});
  CHECK(oracle_torus(3, Rational(1, 6), Rational(1, 6)) == SigmaEta{1, 1});
  CHECK(oracle_torus(3, Rational(1, 2), Rational(1, 2)) == SigmaEta{-2, 0});
  CHECK(oracle_torus(-3, Rational(1, 10), Rational(1, 10)) == SigmaEta{-2, 0});
  CHECK_THROWS_AS(oracle_torus(0, Rational(1, 3), Rational(1, 3)), ZeroParameter);
  CHECK_THROWS_AS(oracle_torus(2, Rational(0), Rational(1, 3)), DomainError);
  CHECK(oracle_twist(-5) == SigmaEta{-1, 0});
  CHECK(oracle_twist(0) == SigmaEta{0, 1});
  CHECK(oracle_twist(7) == SigmaEta{1, 0});
}

TEST_CASE("torus engine matches the closed form on a 60x60 grid") {
  for (std::int64_t ell : {-3, -2, -1, 1, 2, 3}) {
    const ColoredLink link = make_torus(ell);
    int mismatches = 0;
    for (int i = 0; i < 60; ++i)
      for (int j = 0; j < 60; ++j) {
        const Rational a(2 * i + 1, 120), b(2 * j + 1, 120);
        const SignatureNullity sn = signature_nullity(link, TorusPoint{Angle(a), Angle(b)});
        const SigmaEta o = oracle_torus(ell, a, b);
        if (sn.sigma != o.sigma || sn.eta != o.eta) ++mismatches;
      }
    CHECK(mismatches == 0);
  }
}

TEST_CASE("twist engine matches the closed form on a 20x20 grid") {
  for (std::int64_t k : {-3, -2, -1, 0, 1, 2, 3}) {
    const ColoredLink link = make_twist(k);
    const SigmaEta o = oracle_twist(k);
    int mismatches = 0;
    for (int i = 1; i <= 20; ++i)
      for (int j = 1; j <= 20; ++j) {
        const SignatureNullity sn = signature_nullity(link, TorusPoint{Angle(i, 21), Angle(j, 21)});
        if (sn.sigma != o.sigma || sn.eta != o.eta) ++mismatches;
      }
    CHECK(mismatches == 0);
  }
}

TEST_CASE("torus clasp sequence reproduces rho and tau") {
  for (std::int64_t ell : {1, 2, 3}) {
    const ClaspSequence clasps(static_cast<std::size_t>(ell), Clasp{1, 1});
    for (int i = 1; i < 120; ++i) {
      const TorusPoint w{Angle(i, 120)};
      const Inertia in = inertia(build_clasp_matrix(clasps, w));
      CHECK(in.signature() == rho_ell({{ell}}, w));
      CHECK(in.nullity() == (ell > 1 ? tau_ell({{ell}}, w) : 0));
    }
  }
}

TEST_CASE("family documents load back") {
  for (const auto& spec : {FamilySpec{"torus", 3}, FamilySpec{"twist", 0}, FamilySpec{"torus", 0},
                           FamilySpec{"unlink", 3}, FamilySpec{"hopf", 0}}) {
    const ColoredLink link = make_family(spec);
    const ColoredLink back = parse_link(to_json(link));
    testing_support::Gen g(9);
    for (int trial = 0; trial < 20; ++trial) {
      const TorusPoint w = g.point(link.colors());
      CHECK(signature_nullity(back, w) == signature_nullity(link, w));
    }
  }
}
