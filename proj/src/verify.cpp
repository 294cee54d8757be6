#include <cstdlib>
#include <functional>

#include "sigtorus/corrections.hpp"
#include "sigtorus/errors.hpp"
#include "sigtorus/limits_verify.hpp"

namespace sigtorus {

using json = nlohmann::json;

json VerificationReport::to_json() const {
  json out{{"check", check}, {"inputs", inputs}, {"lhs", lhs}, {"rhs", rhs}, {"relation", relation}, {"pass", pass}};
  if (skipped) out["skipped"] = true;
  out["notes"] = notes;
  return out;
}

bool all_pass(const std::vector<VerificationReport>& reports) {
  for (const auto& r : reports)
    if (!r.pass) return false;
  return true;
}

std::string status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::skipped: return "skipped";
  }
  return "skipped";
}

json TorresPrediction::to_json() const {
  json out;
  out["case"] = theorem_case;
  out["sigma_base"] = sigma_base;
  if (sigma) {
    out["sigma"] = *sigma;
  } else {
    out["sigma"] = "sigma_base + sgn(slope)";
  }
  out["eta"] = eta ? json(*eta) : json(nullptr);
  out["slope"] = slope ? json(slope->str()) : json(nullptr);
  out["midpoint"] = status_name(midpoint);
  out["lim_plus"] = lim_plus ? json(*lim_plus) : json(nullptr);
  out["lim_minus"] = lim_minus ? json(*lim_minus) : json(nullptr);
  out["notes"] = notes;
  return out;
}

namespace {

int sgn(std::int64_t x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

VerificationReport skipped_report(std::string check, json inputs, std::string why) {
  VerificationReport r;
  r.check = std::move(check);
  r.inputs = std::move(inputs);
  r.pass = true;
  r.skipped = true;
  r.notes.push_back(std::move(why));
  return r;
}

VerificationReport bound_report(std::string check, json inputs, std::int64_t lhs, std::int64_t rhs) {
  VerificationReport r;
  r.check = std::move(check);
  r.inputs = std::move(inputs);
  r.lhs = lhs;
  r.rhs = rhs;
  r.relation = "<=";
  r.pass = lhs <= rhs;
  if (r.pass) r.notes.push_back(lhs == rhs ? "sharp" : "slack " + std::to_string(rhs - lhs));
  return r;
}

VerificationReport equality_report(std::string check, json inputs, std::int64_t lhs, std::int64_t rhs) {
  VerificationReport r;
  r.check = std::move(check);
  r.inputs = std::move(inputs);
  r.lhs = lhs;
  r.rhs = rhs;
  r.relation = "==";
  r.pass = lhs == rhs;
  return r;
}

VerificationReport unstable_report(std::string check, json inputs, const LimitResult& lim, std::string relation) {
  VerificationReport r;
  r.check = std::move(check);
  r.inputs = std::move(inputs);
  r.inputs["limit"] = lim.to_json();
  r.relation = std::move(relation);
  r.pass = false;
  r.notes.push_back("limit did not stabilize along the schedule");
  return r;
}

/// Attach the full limit trail to failing records.
void audit(VerificationReport& r, const LimitResult& lim) {
  if (!r.pass) r.inputs["limit_" + side_name(lim.side)] = lim.to_json();
}

const ColoredLink& require_sublink(const ColoredLink& link) {
  const ColoredLink* sub = link.sublink_without_first();
  if (!sub) throw MissingSublink("sublinks: the sublink without color 1 is required");
  return *sub;
}

void require_two_colors(const ColoredLink& link, const char* what) {
  if (link.colors() < 2) throw WrongColorCount(std::string(what) + " needs at least two colors");
}

/// For each component K of the first color, sum over K' in L' of |lk(K, K')|.
std::vector<std::int64_t> first_color_abs_linking(const ColoredLink& link) {
  std::vector<std::int64_t> out;
  for (std::size_t a = 0; a < link.components_per_color()[0]; ++a) {
    std::int64_t s = 0;
    for (std::size_t c = 1; c < link.colors(); ++c)
      for (std::size_t b = 0; b < link.components_per_color()[c]; ++b)
        s += std::abs(link.linking(ComponentId{0, a}, ComponentId{c, b}));
    out.push_back(s);
  }
  return out;
}

json point_inputs(const TorusPoint& omega_rest) { return json{{"omega_rest", omega_rest.str()}}; }

/// Delta_L'(omega') != 0 read off nabla_L'(sqrt omega'); empty without Conway data.
std::optional<bool> lp_alexander_nonzero(const ColoredLink& sub, const TorusPoint& omega_rest) {
  if (!sub.conway()) return std::nullopt;
  const auto roots = omega_rest.half_units();
  if (sub.conway()->den().eval_scaled(roots).is_zero()) return true;
  return !sub.conway()->num().eval_scaled(roots).is_zero();
}

}  // namespace

std::vector<VerificationReport> verify_3d(const ColoredLink& link, const TorusPoint& omega_rest,
                                          const Schedule& schedule) {
  require_two_colors(link, "verify_3d");
  std::vector<VerificationReport> out;
  const json base = point_inputs(omega_rest);
  if (link.components_per_color()[0] != 1) {
    out.push_back(skipped_report("3d", base, "the first color is not a knot"));
    return out;
  }
  const ColoredLink& sub = require_sublink(link);
  const SignatureNullity lp = signature_nullity(sub, omega_rest, schedule.tol);
  const LinkingVector ell{first_color_linking(link)};
  const int rho = rho_ell(ell, omega_rest);
  const int tau = tau_ell(ell, omega_rest);
  const int rank = link.rank_alexander();
  std::optional<bool> generic;
  try {
    generic = torres_generic(link, omega_rest);
  } catch (const MissingConwayData&) {
    if (tau == 1) generic = false;
  }

  for (Side side : {Side::plus, Side::minus}) {
    const int pm = side == Side::plus ? 1 : -1;
    json in = base;
    in["side"] = side_name(side);
    in["sigma_Lp"] = lp.sigma;
    in["eta_Lp"] = lp.eta;
    in["rho"] = rho;
    in["tau"] = tau;
    in["rank_alexander"] = rank;
    const LimitResult lim = directional_limit(link, omega_rest, side, schedule);
    if (!lim.stable()) {
      out.push_back(unstable_report("3d.inequality", in, lim, "<="));
      continue;
    }
    in["limit"] = *lim.value;
    auto r = bound_report("3d.inequality", in, std::abs(*lim.value - lp.sigma - pm * rho), lp.eta + tau - rank);
    audit(r, lim);
    out.push_back(std::move(r));
    if (generic == std::optional<bool>(true)) {
      auto e = equality_report("3d.equality", in, *lim.value, lp.sigma + pm * rho);
      audit(e, lim);
      out.push_back(std::move(e));
    } else if (!generic) {
      out.push_back(skipped_report("3d.equality", in, "no conway data for L' to decide Delta_L(1, omega') != 0"));
    } else {
      out.push_back(skipped_report("3d.equality", in, "Delta_L(1, omega') = 0"));
    }
  }
  return out;
}

std::vector<VerificationReport> verify_4d(const ColoredLink& link, const TorusPoint& omega_rest,
                                          const Schedule& schedule) {
  require_two_colors(link, "verify_4d");
  std::vector<VerificationReport> out;
  json base = point_inputs(omega_rest);
  if (link.components_per_color()[0] != 1) {
    out.push_back(skipped_report("4d", base, "the first color is not a knot"));
    return out;
  }
  const ColoredLink& sub = require_sublink(link);
  const SignatureNullity lp = signature_nullity(sub, omega_rest, schedule.tol);
  const std::int64_t total_lk = first_color_abs_linking(link)[0];
  const int rank = link.rank_alexander();
  base["sigma_Lp"] = lp.sigma;
  base["eta_Lp"] = lp.eta;
  base["sum_abs_lk"] = total_lk;
  base["rank_alexander"] = rank;

  // Case 2 needs the slope before any limit is taken.
  std::optional<SlopeClass> cls;
  bool split_equality = false;
  if (total_lk == 0) {
    if (!link.conway() || !sub.conway())
      throw MissingConwayData("conway: the slope needs Conway functions for L and L'");
    const SlopeQuotient q = slope_quotient(*link.conway(), *sub.conway(), omega_rest);
    try {
      const SlopeValue v = slope(*link.conway(), *sub.conway(), omega_rest);
      cls = classify_slope(v);
      base["slope"] = v.str();
      base["s"] = cls->s;
      base["epsilon"] = cls->epsilon;
      split_equality = !q.numerator_zero && !q.denominator_zero;
    } catch (const Indeterminate& e) {
      out.push_back(skipped_report("4d.case2", base, e.what()));
      return out;
    }
  }

  const LimitResult plus = directional_limit(link, omega_rest, Side::plus, schedule);
  const LimitResult minus = directional_limit(link, omega_rest, Side::minus, schedule);
  const std::string prefix = total_lk > 0 ? "4d.case1" : "4d.case2";
  const std::int64_t bound = total_lk > 0 ? lp.eta - 1 + total_lk - rank : lp.eta + cls->epsilon - rank;
  const int shift = total_lk > 0 ? 0 : cls->s;

  for (const LimitResult* lim : {&plus, &minus}) {
    json in = base;
    in["side"] = side_name(lim->side);
    if (!lim->stable()) {
      out.push_back(unstable_report(prefix + ".inequality", in, *lim, "<="));
      continue;
    }
    in["limit"] = *lim->value;
    auto r = bound_report(prefix + ".inequality", in, std::abs(*lim->value - lp.sigma - shift), bound);
    audit(r, *lim);
    out.push_back(std::move(r));
  }
  if (plus.stable() && minus.stable()) {
    json in = base;
    in["limit_plus"] = *plus.value;
    in["limit_minus"] = *minus.value;
    out.push_back(bound_report(prefix + ".difference", in, std::abs(*plus.value - *minus.value), 2 * bound));
  } else {
    out.push_back(unstable_report(prefix + ".difference", base, plus.stable() ? minus : plus, "<="));
  }

  // Equality corollaries.
  std::optional<int> predicted;
  std::string why_not;
  if (total_lk == 1) {
    const auto nonzero = lp_alexander_nonzero(sub, omega_rest);
    if (!nonzero) {
      why_not = "no conway data for L' to decide Delta_L'(omega') != 0";
    } else if (*nonzero) {
      predicted = lp.sigma;
    } else {
      why_not = "Delta_L'(omega') = 0";
    }
  } else if (total_lk == 0) {
    if (split_equality)
      predicted = lp.sigma + cls->s;
    else
      why_not = "slope is 0 or infinite";
  }
  if (predicted) {
    for (const LimitResult* lim : {&plus, &minus}) {
      json in = base;
      in["side"] = side_name(lim->side);
      if (!lim->stable()) {
        out.push_back(unstable_report(prefix + ".equality", in, *lim, "=="));
        continue;
      }
      auto e = equality_report(prefix + ".equality", in, *lim->value, *predicted);
      audit(e, *lim);
      out.push_back(std::move(e));
    }
  } else if (!why_not.empty()) {
    out.push_back(skipped_report(prefix + ".equality", base, why_not));
  }
  return out;
}

std::vector<VerificationReport> verify_lt(const ColoredLink& link, const Schedule& schedule) {
  if (link.colors() != 1) throw WrongColorCount("verify_lt needs a 1-colored link");
  std::vector<VerificationReport> out;
  const Inertia lk = inertia_exact_integer(linking_matrix(link));
  const int rank = link.rank_alexander();
  const auto m = static_cast<std::int64_t>(link.component_count());
  json base{{"sigma_Lk", lk.signature()}, {"eta_Lk", lk.nullity()}, {"components", m}, {"rank_alexander", rank}};

  const TorusPoint none;
  const LimitResult plus = directional_limit(link, none, Side::plus, schedule);
  const LimitResult minus = directional_limit(link, none, Side::minus, schedule);
  if (!plus.stable() || !minus.stable()) {
    const LimitResult& bad = plus.stable() ? minus : plus;
    out.push_back(unstable_report("lt.side_symmetry", base, bad, "=="));
    return out;
  }
  out.push_back(equality_report("lt.side_symmetry", base, *plus.value, *minus.value));
  const int lim = *plus.value;
  base["limit"] = lim;
  out.push_back(bound_report("lt.inequality", base, std::abs(lim - lk.signature()), lk.nullity() - 1 - rank));
  out.push_back(bound_report("lt.bound", base, std::abs(lim), m - 1 - rank));
  auto r = bound_report("lt.rank_constraint", base, rank, lk.nullity() - 1);
  if (rank == lk.nullity() - 1) r.notes.push_back("equality forces the limit to be sigma(Lk)");
  out.push_back(std::move(r));
  return out;
}

std::vector<VerificationReport> verify_corner_limits(const ColoredLink& link, const Schedule& schedule) {
  std::vector<VerificationReport> out;
  const int rank = link.rank_alexander();
  const auto m = static_cast<std::int64_t>(link.component_count());
  const std::size_t mu = link.colors();
  for (const SignVector& eps : all_sign_vectors(mu)) {
    const Inertia lk = inertia_exact_integer(linking_matrix(link, eps));
    std::int64_t cross = 0;
    for (std::size_t i = 0; i < mu; ++i)
      for (std::size_t j = i + 1; j < mu; ++j) cross += eps[i] * eps[j] * link.color_linking(i, j);
    json in{{"eps", sign_string(eps)},      {"sigma_Lk", lk.signature()}, {"eta_Lk", lk.nullity()},
            {"sum_eps_lk", cross},          {"components", m},            {"rank_alexander", rank}};
    const LimitResult lim = corner_limit(link, eps, schedule);
    if (!lim.stable()) {
      out.push_back(unstable_report("corners.inequality", in, lim, "<="));
      continue;
    }
    const int v = *lim.value;
    in["limit"] = v;
    std::vector<VerificationReport> batch;
    batch.push_back(
        bound_report("corners.inequality", in, std::abs(v - lk.signature() - cross), lk.nullity() - 1 - rank));
    if (lk.nullity() == 1) batch.push_back(equality_report("corners.equality", in, v, lk.signature() + cross));
    if (mu == 2) {
      const std::int64_t ell = link.color_linking(0, 1);
      if (ell != 0) batch.push_back(equality_report("corners.two_color", in, v, eps[0] * eps[1] * (ell - sgn(ell))));
    }
    batch.push_back(bound_report("corners.bound", in, std::abs(v), m - 1 + std::abs(cross) - rank));
    for (auto& r : batch) {
      audit(r, lim);
      out.push_back(std::move(r));
    }
  }
  return out;
}

std::vector<VerificationReport> verify_multi_lt(const ColoredLink& link, const Angle& omega) {
  const ColoredLink* oriented = link.underlying_oriented();
  if (!oriented) throw MissingUnderlying("underlying_oriented: the oriented link data is required");
  const TorusPoint diag(std::vector<Angle>(link.colors(), omega));
  const int sigma = signature_nullity(link, diag).sigma;
  const int sigma_or = signature_nullity(*oriented, TorusPoint{omega}).sigma;
  std::int64_t total = 0;
  for (std::size_t i = 0; i < link.colors(); ++i)
    for (std::size_t j = i + 1; j < link.colors(); ++j) total += link.color_linking(i, j);
  json in{{"omega", omega.str()}, {"sigma_or", sigma_or}, {"sum_lk", total}};
  return {equality_report("multi_lt", in, sigma, sigma_or + total)};
}

LtPrediction predict_lt_limit_2comp(std::int64_t ell, const RationalFunction& nabla) {
  if (ell != 0 || nabla.is_zero()) return {-sgn(ell), false};
  const LaurentPoly f = factor_2comp(nabla);
  BigInt at_one = 0;
  for (const auto& [exp, c] : f.terms()) at_one += c;
  if (at_one == 0) return {0, true};
  return {at_one > 0 ? 1 : -1, false};
}

TorresPrediction predict_torres(const ColoredLink& link, const TorusPoint& omega_rest, const Schedule& schedule) {
  TorresPrediction p;
  if (link.colors() == 1) {
    const Inertia lk = inertia_exact_integer(linking_matrix(link));
    p.theorem_case = "oriented";
    p.sigma_base = lk.signature();
    p.sigma = lk.signature();
    p.eta = lk.nullity() - 1;
    p.notes.push_back("sigma_L(1) is the signature of the linking matrix");
    return p;
  }
  if (omega_rest.size() + 1 != link.colors())
    throw DimensionMismatch("omega' must have " + std::to_string(link.colors() - 1) + " coordinates");
  const ColoredLink& sub = require_sublink(link);
  const SignatureNullity lp = signature_nullity(sub, omega_rest, schedule.tol);
  p.sigma_base = lp.sigma;
  const std::vector<std::int64_t> per_knot = first_color_abs_linking(link);
  bool any_split = false, any_linked = false;
  std::int64_t total = 0;
  for (auto s : per_knot) {
    (s == 0 ? any_split : any_linked) = true;
    total += s;
  }

  if (!any_linked) {
    if (per_knot.size() != 1)
      throw UnsupportedCase("algebraically split with a first color of " + std::to_string(per_knot.size()) +
                            " components");
    p.theorem_case = "split";
    try {
      const SlopeValue v = slope(link, omega_rest);
      p.slope = v;
      p.sigma = lp.sigma + extended_sign(v);
      const SlopeClass c = classify_slope(v);
      p.eta = lp.eta + c.epsilon;
    } catch (const MissingConwayData& e) {
      p.notes.push_back(e.what());
    } catch (const Indeterminate& e) {
      p.notes.push_back(e.what());
    }
    p.notes.push_back("no midpoint check: the first color is algebraically split");
    return p;
  }
  if (any_split)
    throw UnsupportedCase("some components of the first color link L' and some do not");

  p.theorem_case = "linked";
  p.sigma = lp.sigma;
  p.eta = lp.eta - static_cast<int>(per_knot.size()) + static_cast<int>(total);
  bool generic = false;
  try {
    generic = torres_generic(link, omega_rest);
  } catch (const MissingConwayData& e) {
    p.notes.push_back(std::string("midpoint check skipped: ") + e.what());
    return p;
  }
  if (!generic) {
    p.notes.push_back("midpoint check skipped: Delta_L(1, omega') = 0");
    return p;
  }
  const LimitResult plus = directional_limit(link, omega_rest, Side::plus, schedule);
  const LimitResult minus = directional_limit(link, omega_rest, Side::minus, schedule);
  if (plus.stable()) p.lim_plus = *plus.value;
  if (minus.stable()) p.lim_minus = *minus.value;
  if (!plus.stable() || !minus.stable()) {
    p.midpoint = CheckStatus::fail;
    p.notes.push_back("a one-sided limit did not stabilize");
  } else {
    p.midpoint = (*plus.value + *minus.value == 2 * lp.sigma) ? CheckStatus::pass : CheckStatus::fail;
  }
  return p;
}

namespace {

const std::vector<std::string> kSuites{"3d", "4d", "lt", "corners", "torres", "multi-lt"};

void append(std::vector<VerificationReport>& out, std::vector<VerificationReport> more) {
  for (auto& r : more) out.push_back(std::move(r));
}

VerificationReport torres_report(const ColoredLink& link, const TorusPoint& omega_rest, const Schedule& schedule) {
  json in = point_inputs(omega_rest);
  try {
    const TorresPrediction p = predict_torres(link, omega_rest, schedule);
    in["prediction"] = p.to_json();
    if (p.midpoint == CheckStatus::skipped)
      return skipped_report("torres.midpoint", in, p.notes.empty() ? "not applicable" : p.notes.back());
    VerificationReport r;
    r.check = "torres.midpoint";
    r.inputs = in;
    r.relation = "==";
    if (p.lim_plus && p.lim_minus) r.lhs = *p.lim_plus + *p.lim_minus;
    r.rhs = 2 * p.sigma_base;
    r.pass = p.midpoint == CheckStatus::pass;
    r.notes.push_back("lim+ + lim- against twice sigma_L'(omega')");
    return r;
  } catch (const UnsupportedCase& e) {
    return skipped_report("torres", in, e.what());
  }
}

std::vector<VerificationReport> run_one(const ColoredLink& link, const std::string& suite, int samples,
                                        std::uint64_t seed, const Schedule& schedule) {
  std::vector<VerificationReport> out;
  AngleSampler rng(seed);
  const std::size_t mu = link.colors();
  if (suite == "3d" || suite == "4d") {
    if (mu < 2) {
      out.push_back(skipped_report(suite, json::object(), "needs at least two colors"));
      return out;
    }
    for (int i = 0; i < samples; ++i) {
      const TorusPoint w = rng.point(mu - 1);
      append(out, suite == "3d" ? verify_3d(link, w, schedule) : verify_4d(link, w, schedule));
    }
  } else if (suite == "lt") {
    if (mu == 1)
      append(out, verify_lt(link, schedule));
    else if (link.underlying_oriented())
      append(out, verify_lt(*link.underlying_oriented(), schedule));
    else
      throw MissingUnderlying("underlying_oriented: needed to run the lt suite on a colored link");
  } else if (suite == "corners") {
    append(out, verify_corner_limits(link, schedule));
  } else if (suite == "torres") {
    if (mu == 1) {
      out.push_back(torres_report(link, TorusPoint{}, schedule));
    } else {
      for (int i = 0; i < samples; ++i) out.push_back(torres_report(link, rng.point(mu - 1), schedule));
    }
  } else if (suite == "multi-lt") {
    for (int i = 0; i < samples; ++i) append(out, verify_multi_lt(link, rng.next()));
  } else {
    throw SchemaError("unknown suite '" + suite + "'");
  }
  return out;
}

}  // namespace

std::vector<VerificationReport> run_suite(const ColoredLink& link, const std::string& suite, int samples,
                                          std::uint64_t seed, const Schedule& schedule) {
  if (samples < 1) throw DomainError("samples must be positive");
  if (suite != "all") return run_one(link, suite, samples, seed, schedule);
  std::vector<VerificationReport> out;
  for (const auto& name : kSuites) {
    try {
      append(out, run_one(link, name, samples, seed, schedule));
    } catch (const MissingSublink& e) {
      out.push_back(skipped_report(name, json::object(), e.what()));
    } catch (const MissingConwayData& e) {
      out.push_back(skipped_report(name, json::object(), e.what()));
    } catch (const MissingUnderlying& e) {
      out.push_back(skipped_report(name, json::object(), e.what()));
    }
  }
  return out;
}

}  // namespace sigtorus
