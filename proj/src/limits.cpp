#include <random>

#include "sigtorus/errors.hpp"
#include "sigtorus/limits_verify.hpp"

namespace sigtorus {

std::string side_name(Side s) { return s == Side::plus ? "plus" : "minus"; }

Side parse_side(const std::string& s) {
  if (s == "plus" || s == "+") return Side::plus;
  if (s == "minus" || s == "-") return Side::minus;
  throw SchemaError("side must be plus or minus, got '" + s + "'");
}

nlohmann::json LimitResult::to_json() const {
  nlohmann::json out;
  out["side"] = side_name(side);
  out["status"] = stable() ? "stable" : "unstable";
  out["value"] = stable() ? nlohmann::json(*value) : nlohmann::json(nullptr);
  auto& trail = out["samples"] = nlohmann::json::array();
  for (const auto& s : samples) trail.push_back({{"theta", s.angle.str()}, {"sigma", s.sigma}, {"eta", s.eta}});
  return out;
}

namespace {

template <typename PointAt>
LimitResult run_schedule(const ColoredLink& link, Side side, const Schedule& schedule, PointAt point_at) {
  if (schedule.steps < 1 || schedule.window < 1 || schedule.window > schedule.steps)
    throw DomainError("schedule needs 1 <= window <= steps");
  LimitResult result;
  result.side = side;
  Rational delta = schedule.initial;
  for (int m = 0; m < schedule.steps; ++m, delta /= 2) {
    const Angle moving{delta};
    const SignatureNullity sn = signature_nullity(link, point_at(moving), schedule.tol);
    result.samples.push_back({moving, sn.sigma, sn.eta});
  }
  const int last = result.samples.back().sigma;
  bool agree = true;
  for (std::size_t k = result.samples.size() - schedule.window; k < result.samples.size(); ++k)
    agree = agree && result.samples[k].sigma == last;
  if (agree) result.value = last;
  return result;
}

}  // namespace

LimitResult directional_limit(const ColoredLink& link, const TorusPoint& omega_rest, Side side,
                              const Schedule& schedule) {
  if (omega_rest.size() + 1 != link.colors())
    throw DimensionMismatch("omega' must have " + std::to_string(link.colors() - 1) + " coordinates");
  LimitResult r = run_schedule(link, side, schedule, [&](const Angle& delta) {
    return omega_rest.prepend(side == Side::plus ? delta : delta.conj());
  });
  if (side == Side::minus)
    for (auto& s : r.samples) s.angle = s.angle.conj();
  return r;
}

LimitResult corner_limit(const ColoredLink& link, const SignVector& eps, const Schedule& schedule) {
  if (eps.size() != link.colors()) throw DimensionMismatch("one sign per color is required");
  return run_schedule(link, Side::plus, schedule, [&](const Angle& delta) {
    std::vector<Angle> angles;
    for (int e : eps) angles.push_back(e > 0 ? delta : delta.conj());
    return TorusPoint(std::move(angles));
  });
}

AngleSampler::AngleSampler(std::uint64_t seed) : engine_(seed) {}

Angle AngleSampler::next() {
  const std::int64_t q = 2 + static_cast<std::int64_t>(engine_() % 96);
  const std::int64_t p = 1 + static_cast<std::int64_t>(engine_() % static_cast<std::uint64_t>(q - 1));
  return Angle(p, q);
}

TorusPoint AngleSampler::point(std::size_t dim) {
  std::vector<Angle> a;
  for (std::size_t j = 0; j < dim; ++j) a.push_back(next());
  return TorusPoint(std::move(a));
}

}  // namespace sigtorus
