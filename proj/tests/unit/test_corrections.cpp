#include <algorithm>

#include "doctest.h"
#include "sigtorus/corrections.hpp"
#include "sigtorus/errors.hpp"
#include "support.hpp"

using namespace sigtorus;
using testing_support::Gen;

namespace {

const Complex I{0.0, 1.0};

TorusPoint at(std::initializer_list<Rational> thetas) {
  std::vector<Angle> a;
  for (const auto& t : thetas) a.emplace_back(t);
  return TorusPoint(std::move(a));
}

Rational angle_sum(std::span<const Angle> z) {
  Rational s = 0;
  for (const auto& a : z) s += a.exact();
  return s;
}

}  // namespace

TEST_CASE("rho on the 2-torus") {
  const Angle w(3, 7);
  CHECK(rho2(w, w.conj()) == 0);
  CHECK(rho2(Angle(1, 4), Angle(1, 4)) == 1);
  CHECK(rho2(I, I) == 1);
  CHECK(rho2(Angle::from_double(0.4), Angle::from_double(0.7)) == -1);
  CHECK(rho2(Angle(), Angle(1, 3)) == 0);
  CHECK(rho2(Angle(1, 2), Angle(1, 2)) == 0);
}

TEST_CASE("exact and complex evaluations of rho agree off the zero set") {
  Gen g(10);
  for (int trial = 0; trial < 2000; ++trial) {
    const Angle a = g.angle(), b = g.angle();
    if ((a + b).is_zero()) continue;
    CHECK(rho2(a, b) == rho2(a.unit(), b.unit()));
  }
  // On the zero set only the exact predicate is trustworthy: the complex
  // bracket is a rounding residue there.
  for (int trial = 0; trial < 200; ++trial) {
    const Angle a = g.angle();
    CHECK(rho2(a, a.conj()) == 0);
  }
}

TEST_CASE("rho is odd under conjugation") {
  Gen g(11);
  for (int trial = 0; trial < 1000; ++trial) {
    const Angle a = g.angle(), b = g.angle();
    CHECK(rho2(a.conj(), b.conj()) == -rho2(a, b));
  }
  const std::vector<LinkingVector> ells{{{5}}, {{-5}}, {{2, 2}}, {{2, 3}}, {{-2, 3}}};
  for (const auto& ell : ells) {
    for (int trial = 0; trial < 200; ++trial) {
      const TorusPoint w = g.point(ell.size());
      CHECK(rho_ell(ell, w.conj()) == -rho_ell(ell, w));
    }
  }
}

TEST_CASE("rho on the n-torus") {
  CHECK(rho_n(std::vector<Angle>{}) == 0);
  CHECK(rho_n(std::vector<Angle>{Angle(1, 3)}) == 0);
  CHECK(rho_n(std::vector<Angle>{Angle(1, 4), Angle(1, 4)}) == 1);
  // all five coordinates close to 1 from above
  CHECK(rho_n(std::vector<Angle>(5, Angle(1, 1000))) == 4);
  CHECK(rho_n(std::vector<Angle>(5, Angle(999, 1000))) == -4);
}

TEST_CASE("rho_ell values") {
  CHECK(rho_ell({{0, 0}}, at({Rational(1, 3), Rational(1, 5)})) == 0);
  CHECK(rho_ell({{5}}, at({Rational(1, 2)})) == 0);
  CHECK(rho_ell({{5}}, at({Rational(1, 5)})) == 3);
  CHECK(rho_ell({{5}}, at({Rational(1, 20)})) == 4);
  CHECK(rho_ell({{5}}, at({Rational(1, 4)})) == 2);
  CHECK(rho_ell({{5}}, at({Rational(3, 4)})) == -2);
  CHECK(rho_ell({{5}}, at({Rational(19, 20)})) == -4);
  CHECK(rho_ell({{-5}}, at({Rational(1, 20)})) == -4);
  CHECK_THROWS_AS(rho_ell({{5, 1}}, at({Rational(1, 20)})), DimensionMismatch);
}

TEST_CASE("wall-counting description of rho_ell") {
  CHECK(rho_ell_geometric({{2, 3}}, at({Rational(1, 1000), Rational(1, 1000)})) == 4);
  CHECK(rho_ell_geometric({{2, 2}}, at({Rational(1, 4), Rational(1, 4)})) == 2);
  CHECK(rho_ell_geometric({{5}}, at({Rational(1, 2)})) == 0);
  CHECK(rho_ell_geometric({{-2, 3}}, at({Rational(999, 1000), Rational(1, 1000)})) == 4);
  CHECK_THROWS_AS(rho_ell_geometric({{0, 0}}, at({Rational(1, 3), Rational(1, 3)})), ZeroLinking);
  CHECK_THROWS_AS(rho_ell_geometric({{2}}, TorusPoint{Angle::from_double(0.3)}), InexactAngles);
}

TEST_CASE("both descriptions of rho_ell agree on a rational grid") {
  const std::vector<LinkingVector> ells{{{5}}, {{-5}}, {{2, 2}}, {{2, 3}}, {{-2, 3}}};
  for (const auto& ell : ells) {
    int mismatches = 0, points = 0;
    if (ell.size() == 1) {
      for (int i = 1; i < 10000; ++i, ++points) {
        const TorusPoint w = at({Rational(i, 10000)});
        if (rho_ell(ell, w) != rho_ell_geometric(ell, w)) ++mismatches;
      }
    } else {
      for (int i = 1; i <= 100; ++i)
        for (int j = 1; j <= 100; ++j, ++points) {
          const TorusPoint w = at({Rational(i, 101), Rational(j, 101)});
          if (rho_ell(ell, w) != rho_ell_geometric(ell, w)) ++mismatches;
        }
      // the grid above misses the walls; add points on them
      for (int i = 1; i < 60; ++i, ++points) {
        const Rational t1(i, 120);
        const Rational t2 = frac((Rational(1) - ell.ell[0] * t1) / ell.ell[1]);
        if (t2 == 0) continue;
        const TorusPoint w = at({t1, t2});
        REQUIRE(tau_ell(ell, w) == 1);
        if (rho_ell(ell, w) != rho_ell_geometric(ell, w)) ++mismatches;
      }
    }
    CHECK(points >= 9999);
    CHECK(mismatches == 0);
  }
}

TEST_CASE("block order does not matter") {
  Gen g(12);
  for (int trial = 0; trial < 300; ++trial) {
    const LinkingVector ell{{g.range(-3, 3), g.range(-3, 3), g.range(-3, 3)}};
    if (ell.abs_sum() == 0) continue;
    const TorusPoint w = g.point(3);
    std::vector<Angle> block;
    for (std::size_t j = 0; j < 3; ++j)
      for (std::int64_t r = 0; r < std::abs(ell.ell[j]); ++r) block.push_back(w[j].power(ell.sign(j)));
    std::shuffle(block.begin(), block.end(), g.engine());
    CHECK(rho_n(block) == rho_ell(ell, w));
  }
}

TEST_CASE("rho_ell drops by two across each wall, exactly where tau = 1") {
  for (std::int64_t l : {1, 2, 3, 5}) {
    const LinkingVector ell{{l}};
    const Rational h(1, 10007);
    for (int i = 1; i < 1000; ++i) {
      const Rational t(i, 1000);
      const bool wall = tau_ell(ell, at({t})) == 1;
      CHECK(wall == (denominator(Rational(t * l)) == 1));
      const int before = rho_ell(ell, at({t - h}));
      const int after = rho_ell(ell, at({t + h}));
      const int on = rho_ell(ell, at({t}));
      if (wall) {
        CHECK(before - after == 2);
        CHECK(on == before - 1);
      } else {
        CHECK(before == after);
      }
    }
  }
}

TEST_CASE("tau_ell") {
  CHECK(tau_ell({{2, 3}}, at({Rational(1, 2), Rational(1, 3)})) == 1);
  CHECK(tau_ell({{0}}, at({Rational(2, 7)})) == 1);
  CHECK(tau_ell({{5}}, at({Rational(1, 2)})) == 0);
  CHECK_THROWS_AS(tau_ell({{5}}, TorusPoint{Angle::from_double(0.5)}), InexactAngles);
}

TEST_CASE("torus step function") {
  CHECK(torus_step_function(3, Rational(1, 5)) == 2);
  CHECK(torus_step_function(3, Rational(1, 3)) == 1);
  CHECK(torus_step_function(3, Rational(1)) == -2);
  CHECK(torus_step_function(3, Rational(1, 2)) == 0);
  CHECK(torus_step_function(1, Rational(1, 2)) == 0);
  CHECK(torus_step_function(1, Rational(1)) == 0);
  CHECK_THROWS_AS(torus_step_function(3, Rational(0)), DomainError);
  CHECK_THROWS_AS(torus_step_function(3, Rational(2)), DomainError);
  CHECK_THROWS_AS(torus_step_function(3, Rational(-1, 2)), DomainError);
  Gen g(13);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = static_cast<int>(g.range(1, 7));
    const Rational t = g.open_angle() * 2;
    if (t == 0 || t >= 2) continue;
    CHECK(torus_step_function(n, t) == torus_step_function(n, Rational(2) - t));
    // below 1, f_n(theta) is rho_n at n copies of omega with n * angle = theta... only on
    // the bands: rho_(n)(omega) with omega = exp(2 pi i theta) matches f_n(theta)
    if (t < 1) CHECK(torus_step_function(n, t) == rho_ell({{n}}, at({t})));
  }
}

TEST_CASE("G_n examples") {
  CHECK(build_Gn(std::vector<Angle>{Angle(1, 3)}).size() == 0);
  const HermitianMatrix g2 = build_Gn(std::vector<Angle>{Angle(1, 4), Angle(1, 4)});
  REQUIRE(g2.size() == 1);
  CHECK(std::abs(g2(0, 0) - 1.0) <= 1e-14);
  const Angle w(2, 9);
  CHECK(inertia(build_Gn(std::vector<Angle>{w, w.conj()})).nullity() == 1);
  CHECK_THROWS_AS(build_Gn(std::vector<Angle>{Angle(1, 3), Angle()}), UnitOne);
}

TEST_CASE("G_n signature is rho and nullity detects product one") {
  Gen g(14);
  for (int n = 1; n <= 6; ++n) {
    int failures = 0;
    for (int trial = 0; trial < 1000; ++trial) {
      std::vector<Angle> z;
      for (int k = 0; k < n; ++k) z.push_back(g.angle());
      if (n >= 2 && trial % 4 == 0) {
        // force z_1 ... z_n = 1 when the last coordinate allows it
        const Rational last = frac(-angle_sum(std::span<const Angle>(z).first(n - 1)));
        if (last != 0) z.back() = Angle(last);
      }
      const Inertia in = inertia(build_Gn(z));
      const int product_one = denominator(angle_sum(z)) == 1 ? 1 : 0;
      if (in.signature() != rho_n(z) || in.nullity() != (n >= 2 ? product_one : 0)) ++failures;
    }
    CHECK(failures == 0);
  }
}

TEST_CASE("clasp matrices") {
  const TorusPoint w = at({Rational(2, 7)});
  const HermitianMatrix opposite = build_clasp_matrix({{1, 1}, {1, -1}}, w);
  REQUIRE(opposite.size() == 1);
  CHECK(std::abs(opposite(0, 0)) <= 1e-12);
  const HermitianMatrix t6 = build_clasp_matrix({{1, 1}, {1, 1}, {1, 1}}, w);
  const HermitianMatrix direct = build_Gn(std::vector<Angle>(3, w[0]));
  CHECK(t6.entries() == direct.entries());
  CHECK(build_clasp_matrix({{1, -1}}, w).size() == 0);
  CHECK_THROWS_AS(build_clasp_matrix({}, w), DomainError);
  CHECK_THROWS_AS(build_clasp_matrix({{0, 1}}, w), DomainError);
  CHECK_THROWS_AS(build_clasp_matrix({{2, 1}}, w), DomainError);
}

TEST_CASE("clasp moves preserve inertia") {
  Gen g(15);
  int checked_a = 0, checked_b = 0, failures = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t colors = static_cast<std::size_t>(g.range(1, 3));
    const TorusPoint w = g.point(colors);
    ClaspSequence seq;
    const auto len = g.range(1, 8);
    for (std::int64_t k = 0; k < len; ++k)
      seq.push_back({static_cast<std::size_t>(g.range(1, static_cast<std::int64_t>(colors))), g.coin() ? 1 : -1});
    // The moves preserve signature and nullity; a cancelling pair adds a hyperbolic block.
    auto sig_null = [&](const ClaspSequence& q) {
      const Inertia in = inertia(build_clasp_matrix(q, w));
      return std::pair{in.signature(), in.nullity()};
    };
    const auto base = sig_null(seq);

    // (a) insert a cancelling pair at a random position; equivalent to deleting it
    ClaspSequence longer = seq;
    const auto pos = static_cast<std::size_t>(g.range(0, static_cast<std::int64_t>(seq.size())));
    const Clasp c{static_cast<std::size_t>(g.range(1, static_cast<std::int64_t>(colors))), g.coin() ? 1 : -1};
    longer.insert(longer.begin() + static_cast<std::ptrdiff_t>(pos), {c, Clasp{c.color, -c.sign}});
    ++checked_a;
    if (sig_null(longer) != base) ++failures;

    // (b) swap adjacent clasps of different colors
    for (std::size_t k = 0; k + 1 < seq.size(); ++k) {
      if (seq[k].color == seq[k + 1].color) continue;
      ClaspSequence swapped = seq;
      std::swap(swapped[k], swapped[k + 1]);
      ++checked_b;
      if (sig_null(swapped) != base) ++failures;
      break;
    }
  }
  CHECK(checked_a == 500);
  CHECK(checked_b >= 200);
  CHECK(failures == 0);
}
