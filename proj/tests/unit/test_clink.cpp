#include <cmath>

#include "doctest.h"
#include "sigtorus/errors.hpp"
#include "sigtorus/families.hpp"
#include "sigtorus/link_io.hpp"
#include "support.hpp"

using namespace sigtorus;
using nlohmann::json;
using testing_support::Gen;

namespace {

json twist_doc(int k) {
  const json a = json::array({json::array({k})});
  return json{{"mu", 2}, {"components_per_color", {1, 1}}, {"seifert", {{"++", a}, {"+-", a}, {"-+", a}, {"--", a}}}};
}

}  // namespace

TEST_CASE("sign vectors") {
  CHECK(sign_string({1, -1, 1}) == "+-+");
  CHECK(parse_sign_string("-+") == SignVector{-1, 1});
  CHECK_THROWS_AS(parse_sign_string("+x"), SchemaError);
  const auto all = all_sign_vectors(2);
  REQUIRE(all.size() == 4);
  CHECK(all.front() == SignVector{1, 1});
  CHECK(all_sign_vectors(5).size() == 32);
}

TEST_CASE("Seifert systems validate the transpose rule") {
  std::map<SignVector, IntMatrix> m{{{1, 1}, IntMatrix{{1}}}, {{-1, -1}, IntMatrix{{2}}},
                                    {{1, -1}, IntMatrix{{0}}}, {{-1, 1}, IntMatrix{{0}}}};
  try {
    SeifertSystem(2, m);
    FAIL("expected SymmetryViolation");
  } catch (const SymmetryViolation& e) {
    const std::string what = e.what();
    CHECK((what.find("++") != std::string::npos || what.find("--") != std::string::npos));
  }
  m.erase({-1, 1});
  CHECK_THROWS_AS(SeifertSystem(2, m), SchemaError);
  std::map<SignVector, IntMatrix> ragged{{{1}, IntMatrix(2, 2)}, {{-1}, IntMatrix(1, 1)}};
  CHECK_THROWS_AS(SeifertSystem(1, ragged), DimensionMismatch);
}

TEST_CASE("assembled H for the twist links") {
  Gen g(1);
  for (std::int64_t k : {-2, 0, 3}) {
    const ColoredLink link = make_twist(k);
    for (int trial = 0; trial < 20; ++trial) {
      const TorusPoint w = g.point(2);
      const auto u = w.units();
      const double expected = static_cast<double>(k) * std::norm(1.0 - u[0]) * std::norm(1.0 - u[1]);
      const HermitianMatrix h = assemble_H(link, w);
      REQUIRE(h.size() == 1);
      CHECK(std::abs(h(0, 0) - expected) <= 1e-12);
    }
  }
}

TEST_CASE("H vanishes at (1, ..., 1)") {
  for (const auto& link : {make_twist(2), make_torus(3), make_unlink(3)}) {
    const HermitianMatrix h = assemble_H(link, TorusPoint(std::vector<Angle>(link.colors())));
    CHECK(h.frobenius_norm() == 0.0);
  }
}

TEST_CASE("assembled H for T(2,6) matches the tridiagonal a/b form") {
  Gen g(2);
  const ColoredLink link = make_torus(3);
  for (int trial = 0; trial < 20; ++trial) {
    const TorusPoint w = g.point(2);
    const auto u = w.units();
    const Complex a = -(1.0 - std::conj(u[0])) * (1.0 - std::conj(u[1])) * (1.0 + u[0] * u[1]);
    const Complex b = -(1.0 - u[0]) * (1.0 - u[1]);
    const HermitianMatrix h = assemble_H(link, w);
    REQUIRE(h.size() == 2);
    CHECK(std::abs(h(0, 0) - a) <= 1e-12);
    CHECK(std::abs(h(1, 1) - a) <= 1e-12);
    CHECK(std::abs(h(0, 1) - b) <= 1e-12);
    CHECK(std::abs(h(1, 0) - std::conj(b)) <= 1e-12);
  }
}

TEST_CASE("assembled H is exactly Hermitian") {
  Gen g(3);
  for (const auto& link : {make_torus(3), make_torus(-2), make_unlink(4), make_twist(5)}) {
    for (int trial = 0; trial < 10; ++trial) {
      const HermitianMatrix h = assemble_H(link, g.point(link.colors()));
      for (std::size_t i = 0; i < h.size(); ++i)
        for (std::size_t j = 0; j < h.size(); ++j) CHECK(h(i, j) == std::conj(h(j, i)));
    }
  }
}

TEST_CASE("signature and nullity") {
  CHECK(signature_nullity(make_twist(2), TorusPoint{Angle(1, 4), Angle(1, 2)}) == SignatureNullity{1, 0, 1});
  CHECK(signature_nullity(make_twist(0), TorusPoint{Angle(1, 3), Angle(5, 7)}) == SignatureNullity{0, 1, 1});
  CHECK(signature_nullity(make_torus(3), TorusPoint{Angle(1, 10), Angle(1, 10)}).sigma == 2);
  CHECK(signature_nullity(make_torus(3), TorusPoint{Angle::from_double(0.1), Angle::from_double(0.1)}).sigma == 2);
  CHECK_THROWS_AS(signature_nullity(make_twist(1), TorusPoint{Angle(), Angle(1, 2)}), BoundaryPoint);
  CHECK_THROWS_AS(signature_nullity(make_twist(1), TorusPoint{Angle(1, 2)}), DimensionMismatch);
}

TEST_CASE("signatures are invariant under conjugation") {
  Gen g(4);
  const std::vector<ColoredLink> links{make_torus(3), make_torus(-2), make_twist(2), make_twist(0), make_unlink(3)};
  for (const auto& link : links) {
    for (int trial = 0; trial < 200; ++trial) {
      const TorusPoint w = g.point(link.colors());
      CHECK(signature_nullity(link, w) == signature_nullity(link, w.conj()));
    }
  }
}

TEST_CASE("one color reduces to the Levine-Tristram form") {
  Gen g(5);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = static_cast<std::size_t>(g.range(1, 4));
    IntMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) a(i, j) = g.range(-2, 2);
    std::map<SignVector, IntMatrix> m{{{-1}, a}, {{1}, a.transpose()}};
    const ColoredLink knot({1}, SeifertSystem(1, m));
    const Angle theta = g.angle();
    const Complex w = theta.unit();
    CMatrix lt(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        lt(i, j) = (1.0 - w) * static_cast<double>(a(i, j)) + (1.0 - std::conj(w)) * static_cast<double>(a(j, i));
    const Inertia expected = testing_support::eigen_inertia(lt);
    const SignatureNullity got = signature_nullity(knot, TorusPoint{theta});
    CHECK(got.sigma == expected.signature());
    CHECK(got.eta == expected.nullity());
  }
}

TEST_CASE("linking matrices") {
  const ColoredLink t = make_torus(3);
  CHECK(linking_matrix(t) == IntMatrix{{-3, 3}, {3, -3}});
  CHECK(linking_matrix(t, {1, -1}) == IntMatrix{{3, -3}, {-3, 3}});
  CHECK(linking_matrix(make_twist(4)) == IntMatrix(2, 2));
  ColoredLink link({2, 1}, SeifertSystem::zero(2, 0));
  link.set_linking({0, 0}, {1, 0}, 2);
  link.set_linking({0, 1}, {1, 0}, -1);
  link.set_linking({0, 0}, {0, 1}, 5);
  CHECK(link.color_linking(0, 1) == 1);
  const IntMatrix lk = linking_matrix(link, {1, -1});
  CHECK(lk == IntMatrix{{-3, 5, -2}, {5, -6, 1}, {-2, 1, 1}});
  CHECK_THROWS_AS(link.set_linking({1, 0}, {0, 0}, 7), SymmetryViolation);
}

TEST_CASE("parsing link documents") {
  const ColoredLink l2 = parse_link(twist_doc(2));
  CHECK(l2.colors() == 2);
  CHECK(l2.seifert().size() == 1);
  for (const auto& [eps, a] : l2.seifert().matrices()) CHECK(a == IntMatrix{{2}});

  json missing = twist_doc(2);
  missing["seifert"].erase("-+");
  CHECK_THROWS_AS(parse_link(missing), SchemaError);

  json broken = twist_doc(2);
  broken["seifert"]["++"] = json::array({json::array({1})});
  broken["seifert"]["--"] = json::array({json::array({2})});
  CHECK_THROWS_AS(parse_link(broken), SymmetryViolation);

  json ragged = twist_doc(2);
  ragged["seifert"]["++"] = json::array({json::array({1, 2})});
  CHECK_THROWS(parse_link(ragged));

  json bad_conway = twist_doc(2);
  bad_conway["conway"] = json::array({json{{"coeff", 1}, {"exp", json::array({1})}}});
  CHECK_THROWS_AS(parse_link(bad_conway), DimensionMismatch);

  CHECK_THROWS_AS(parse_link(json::parse(R"({"components_per_color": [1]})")), SchemaError);
}

TEST_CASE("family documents survive a round trip") {
  for (const auto& link : {make_twist(2), make_torus(3), make_torus(-1), make_torus(0), make_unlink(3)}) {
    const json doc = to_json(link);
    const ColoredLink back = parse_link(doc);
    CHECK(to_json(back) == doc);
    CHECK(back.colors() == link.colors());
    CHECK(back.sublinks().size() == link.sublinks().size());
    CHECK((back.underlying_oriented() != nullptr) == (link.underlying_oriented() != nullptr));
  }
}
