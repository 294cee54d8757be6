#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "sigtorus/clink.hpp"
#include "sigtorus/conway_slope.hpp"

namespace sigtorus {

enum class Side { plus, minus };
std::string side_name(Side s);
Side parse_side(const std::string& s);

/// delta_m = initial / 2^m for m = 0 .. steps-1; a value is accepted when the
/// last `window` samples agree.
struct Schedule {
  Rational initial{1, 16};
  int steps = 17;
  int window = 4;
  double tol = kDefaultTolerance;
};

struct LimitSample {
  Angle angle;  ///< the moving coordinate(s): theta_1 for one-sided limits, omega for corners
  int sigma = 0;
  int eta = 0;
};

struct LimitResult {
  std::optional<int> value;  ///< empty means Unstable
  std::vector<LimitSample> samples;
  Side side = Side::plus;

  bool stable() const { return value.has_value(); }
  nlohmann::json to_json() const;
};

/// lim sigma_L(omega_1, omega') as omega_1 -> 1 from the given side, with
/// theta_1 = delta (plus) or 1 - delta (minus).
LimitResult directional_limit(const ColoredLink& link, const TorusPoint& omega_rest, Side side,
                              const Schedule& schedule = {});

/// lim sigma_L(omega^{eps_1}, ..., omega^{eps_mu}) as omega -> 1+.
LimitResult corner_limit(const ColoredLink& link, const SignVector& eps, const Schedule& schedule = {});

/// One checked relation. Skipped checks pass vacuously and say why in notes.
struct VerificationReport {
  std::string check;
  nlohmann::json inputs = nlohmann::json::object();
  nlohmann::json lhs;  ///< null when the quantity could not be computed
  nlohmann::json rhs;
  std::string relation = "<=";
  bool pass = false;
  bool skipped = false;
  std::vector<std::string> notes;

  nlohmann::json to_json() const;
};

/// All reports pass (skipped ones included).
bool all_pass(const std::vector<VerificationReport>& reports);

/// Limit of signatures near omega_1 = 1 against sigma_L' +- rho_ell.
std::vector<VerificationReport> verify_3d(const ColoredLink& link, const TorusPoint& omega_rest,
                                          const Schedule& schedule = {});
/// Bounds of the two cases split by whether the first knot links L'.
std::vector<VerificationReport> verify_4d(const ColoredLink& link, const TorusPoint& omega_rest,
                                          const Schedule& schedule = {});
/// Levine-Tristram limit at 1 against the linking matrix. Throws WrongColorCount unless mu = 1.
std::vector<VerificationReport> verify_lt(const ColoredLink& link, const Schedule& schedule = {});
/// Limits with every variable tending to 1 from prescribed sides.
std::vector<VerificationReport> verify_corner_limits(const ColoredLink& link, const Schedule& schedule = {});
/// sigma_L(omega, ..., omega) = sigma_{L^or}(omega) + sum_{i<j} lk(L_i, L_j). Throws MissingUnderlying.
std::vector<VerificationReport> verify_multi_lt(const ColoredLink& link, const Angle& omega);

/// lim sigma_L(omega) as omega -> 1 for a 2-component oriented link.
struct LtPrediction {
  int value = 0;
  bool plus_minus_one = false;  ///< only +-1 can be concluded
  std::string str() const { return plus_minus_one ? "+-1" : std::to_string(value); }
};
LtPrediction predict_lt_limit_2comp(std::int64_t ell, const RationalFunction& nabla);

enum class CheckStatus { pass, fail, skipped };
std::string status_name(CheckStatus s);

struct TorresPrediction {
  std::string theorem_case;  ///< "oriented", "split" or "linked"
  int sigma_base = 0;        ///< sigma_L'(omega'), or sigma(Lk) for oriented links
  /// Full prediction; empty when it is sigma_base + sgn(slope) with the slope unavailable.
  std::optional<int> sigma;
  std::optional<int> eta;
  std::optional<SlopeValue> slope;
  CheckStatus midpoint = CheckStatus::skipped;
  std::optional<int> lim_plus;
  std::optional<int> lim_minus;
  std::vector<std::string> notes;

  nlohmann::json to_json() const;
};

/// sigma_L and eta_L at (1, omega'), from the Torres formulas. Throws UnsupportedCase,
/// MissingSublink.
TorresPrediction predict_torres(const ColoredLink& link, const TorusPoint& omega_rest,
                                const Schedule& schedule = {});

/// Random rational point of the open torus; denominators in [2, 97]. Draws
/// are reduced with modulo so sequences match across standard libraries.
class AngleSampler {
 public:
  explicit AngleSampler(std::uint64_t seed);
  Angle next();
  TorusPoint point(std::size_t dim);

 private:
  std::mt19937_64 engine_;
};

/// Run a named suite ("3d", "4d", "lt", "corners", "torres", "multi-lt" or "all")
/// on `samples` random points drawn from `seed`. Suites that do not apply to the
/// link's shape are reported as skipped.
std::vector<VerificationReport> run_suite(const ColoredLink& link, const std::string& suite, int samples,
                                          std::uint64_t seed, const Schedule& schedule = {});

}  // namespace sigtorus
