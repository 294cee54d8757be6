// sigtorus: command-line front end over the library.
#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "sigtorus/clink.hpp"
#include "sigtorus/conway_slope.hpp"
#include "sigtorus/corrections.hpp"
#include "sigtorus/errors.hpp"
#include "sigtorus/families.hpp"
#include "sigtorus/limits_verify.hpp"
#include "sigtorus/link_io.hpp"

namespace fs = std::filesystem;
using namespace sigtorus;

namespace {

enum Exit { kOk = 0, kInput = 2, kIo = 3, kVerify = 4 };

struct Exited {
  int code;
};

TorusPoint parse_point(const std::string& text, const std::string& flag) {
  const TorusPoint p = TorusPoint::parse(text);
  if (!p.is_exact())
    std::cerr << "warning: " << flag << " has decimal angles; exact predicates (walls, exact rho) are disabled\n";
  return p;
}

TorusPoint parse_rest(const std::string& text) {
  if (text.empty()) return TorusPoint{};
  return parse_point(text, "--omega-rest");
}

double default_tolerance() {
  const char* env = std::getenv("SIGTORUS_TOL");
  if (env == nullptr || *env == '\0') return kDefaultTolerance;
  char* end = nullptr;
  const double t = std::strtod(env, &end);
  if (end == env || *end != '\0' || !(t > 0.0)) throw SchemaError(std::string("SIGTORUS_TOL is not a positive number: ") + env);
  return t;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path);
  return out;
}

void finish(std::ofstream& out, const std::string& path) {
  out.flush();
  if (!out) throw IoError("write to " + path + " failed");
}

// ---- eval

int cmd_eval(const std::string& link_path, const std::string& omega, double tol) {
  const ColoredLink link = load_link(link_path);
  const TorusPoint w = parse_point(omega, "--omega");
  try {
    const SignatureNullity sn = signature_nullity(link, w, tol);
    std::cout << "sigma=" << sn.sigma << " eta=" << sn.eta << " dim=" << sn.dimension << "\n";
  } catch (const BoundaryPoint& e) {
    std::cerr << "error: " << e.what() << "\n"
              << "hint: at omega_j = 1 run `sigtorus torres` for the predicted values\n";
    return kInput;
  }
  return kOk;
}

// ---- grid

struct GridCell {
  Rational t1, t2;
  SignatureNullity sn;
};

int cmd_grid(const std::string& link_path, int resolution, const std::string& csv_path,
             const std::string& pgm_path, const std::vector<int>& axes, const std::string& fixed, double tol) {
  if (resolution < 2) throw SchemaError("--resolution must be at least 2");
  const ColoredLink link = load_link(link_path);
  const std::size_t mu = link.colors();
  if (mu < 2) throw WrongColorCount("grid sweeps two colors; the link has " + std::to_string(mu));
  const std::size_t a1 = static_cast<std::size_t>(axes.at(0) - 1), a2 = static_cast<std::size_t>(axes.at(1) - 1);
  if (a1 == a2 || a1 >= mu || a2 >= mu) throw SchemaError("--axes must name two distinct colors in 1.." + std::to_string(mu));
  const TorusPoint rest = fixed.empty() ? TorusPoint{} : parse_point(fixed, "--fixed");
  if (rest.size() != mu - 2)
    throw DimensionMismatch("--fixed needs " + std::to_string(mu - 2) + " angles for the unswept colors");

  std::vector<GridCell> cells;
  for (int i = 1; i < resolution; ++i)
    for (int j = 1; j < resolution; ++j) {
      const Rational t1(i, resolution), t2(j, resolution);
      std::vector<Angle> angles;
      std::size_t next_fixed = 0;
      for (std::size_t c = 0; c < mu; ++c) {
        if (c == a1)
          angles.emplace_back(t1);
        else if (c == a2)
          angles.emplace_back(t2);
        else
          angles.push_back(rest[next_fixed++]);
      }
      cells.push_back({t1, t2, signature_nullity(link, TorusPoint(std::move(angles)), tol)});
    }

  std::ofstream csv = open_out(csv_path);
  csv << "theta1,theta2,sigma,eta\n";
  for (const auto& c : cells) csv << Angle(c.t1).str() << ',' << Angle(c.t2).str() << ',' << c.sn.sigma << ',' << c.sn.eta << '\n';
  finish(csv, csv_path);

  if (!pgm_path.empty()) {
    const auto [lo, hi] = std::minmax_element(cells.begin(), cells.end(),
                                              [](const GridCell& x, const GridCell& y) { return x.sn.sigma < y.sn.sigma; });
    const int smin = lo->sn.sigma, smax = hi->sn.sigma;
    const int side = resolution - 1;
    std::ofstream pgm = open_out(pgm_path);
    pgm << "P2\n# sigma in [" << smin << ", " << smax << "]; x = theta" << axes[0] << ", y = theta" << axes[1]
        << " increasing upward\n"
        << side << ' ' << side << "\n255\n";
    // cells are stored with theta1 outer; image rows run over theta2 from the top.
    for (int row = 0; row < side; ++row) {
      const int j = side - 1 - row;
      for (int i = 0; i < side; ++i) {
        const int s = cells[static_cast<std::size_t>(i * side + j)].sn.sigma;
        const int level = smax == smin ? 0 : (255 * (s - smin)) / (smax - smin);
        pgm << level << (i + 1 < side ? ' ' : '\n');
      }
    }
    finish(pgm, pgm_path);
  }
  std::cout << cells.size() << " points written to " << csv_path << "\n";
  return kOk;
}

// ---- limit

int cmd_limit(const std::string& link_path, const std::string& side, const std::string& rest, bool as_json, double tol) {
  const ColoredLink link = load_link(link_path);
  Schedule schedule;
  schedule.tol = tol;
  const TorusPoint w = parse_rest(rest);
  const LimitResult r = directional_limit(link, w, parse_side(side), schedule);
  if (link.colors() >= 2 && w.is_exact()) {
    const LinkingVector ell{first_color_linking(link)};
    if (ell.abs_sum() > 0 && tau_ell(ell, w) == 1)
      std::cerr << "note: omega' is on a wall of rho_ell (tau = 1); this is the limit along the path, "
                   "the limit over the torus need not exist\n";
  }
  if (as_json) {
    std::cout << r.to_json().dump(2) << "\n";
    return kOk;
  }
  if (r.stable()) {
    std::cout << "limit=" << *r.value << " side=" << side_name(r.side) << " status=stable\n";
    return kOk;
  }
  std::cout << "limit=none side=" << side_name(r.side) << " status=unstable\n";
  for (const auto& s : r.samples) std::cout << "  theta1=" << s.angle.str() << " sigma=" << s.sigma << " eta=" << s.eta << "\n";
  return kOk;
}

// ---- slope

int cmd_slope(const std::string& link_path, const std::string& rest) {
  const ColoredLink link = load_link(link_path);
  const SlopeValue v = slope(link, parse_rest(rest));
  const SlopeClass c = classify_slope(v);
  std::cout << "slope=" << v.str() << " s=" << c.s << " epsilon=" << c.epsilon << "\n";
  return kOk;
}

// ---- verify

int cmd_verify(const std::string& link_path, const std::string& suite, int samples, std::uint64_t seed,
               const std::string& report_path, double tol) {
  if (samples < 1) throw SchemaError("--samples must be positive");
  const ColoredLink link = load_link(link_path);
  Schedule schedule;
  schedule.tol = tol;
  const std::vector<VerificationReport> reports = run_suite(link, suite, samples, seed, schedule);
  nlohmann::json out = nlohmann::json::array();
  std::size_t failed = 0, skipped = 0;
  for (const auto& r : reports) {
    out.push_back(r.to_json());
    if (r.skipped)
      ++skipped;
    else if (!r.pass)
      ++failed;
  }
  if (!report_path.empty()) {
    std::ofstream f = open_out(report_path);
    f << out.dump(2) << "\n";
    finish(f, report_path);
  }
  std::cout << reports.size() << " checks: " << reports.size() - failed - skipped << " passed, " << failed
            << " failed, " << skipped << " skipped\n";
  for (const auto& r : reports)
    if (!r.pass) std::cout << "FAIL " << r.check << " " << r.inputs.dump() << "\n";
  return failed == 0 ? kOk : kVerify;
}

// ---- family

int cmd_family(const std::string& name, const std::optional<std::int64_t>& param, const std::string& out_path, bool force) {
  if (!param && name != "hopf") throw SchemaError("--param is required for the " + name + " family");
  const ColoredLink link = make_family(FamilySpec{name, param.value_or(0)});
  if (!force && fs::exists(out_path)) {
    std::cerr << "error: " << out_path << " exists; pass --force to overwrite\n";
    return kIo;
  }
  std::ofstream f = open_out(out_path);
  f << to_json(link).dump(2) << "\n";
  finish(f, out_path);
  std::cout << "wrote " << name << (param ? " " + std::to_string(*param) : std::string()) << " to " << out_path << "\n";
  return kOk;
}

// ---- torres

int cmd_torres(const std::string& link_path, const std::string& rest, double tol) {
  const ColoredLink link = load_link(link_path);
  Schedule schedule;
  schedule.tol = tol;
  std::cout << predict_torres(link, parse_rest(rest), schedule).to_json().dump(2) << "\n";
  return kOk;
}

int run(int argc, char** argv) {
  CLI::App app{"Colored-link signatures on the torus: evaluation, limits and checks"};
  app.require_subcommand(1);
  std::optional<double> tol_flag;

  std::string link, omega, rest, side = "plus", csv, pgm, suite = "all", report, name, out, fixed;
  int resolution = 60, samples = 20;
  std::uint64_t seed = 1;
  bool as_json = false, force = false;
  std::vector<int> axes{1, 2};
  std::optional<std::int64_t> param;

  auto add_tol = [&](CLI::App* sub) { sub->add_option("--tol", tol_flag, "relative zero threshold (default 1e-9 or SIGTORUS_TOL)"); };

  auto* eval = app.add_subcommand("eval", "signature and nullity at one point");
  eval->add_option("--link", link, "link JSON file")->required();
  eval->add_option("--omega", omega, "angles theta_1,...,theta_mu as p/q")->required();
  add_tol(eval);

  auto* grid = app.add_subcommand("grid", "sweep two colors over an N x N grid");
  grid->add_option("--link", link)->required();
  grid->add_option("--resolution", resolution, "N: angles i/N for i = 1..N-1")->required();
  grid->add_option("--out", csv, "CSV output")->required();
  grid->add_option("--heatmap", pgm, "plain PGM heatmap of sigma");
  grid->add_option("--axes", axes, "the two swept colors (1-based)")->expected(2)->delimiter(',');
  grid->add_option("--fixed", fixed, "angles for the remaining colors");
  add_tol(grid);

  auto* limit = app.add_subcommand("limit", "limit of sigma as omega_1 -> 1");
  limit->add_option("--link", link)->required();
  limit->add_option("--side", side, "plus or minus")->check(CLI::IsMember({"plus", "minus"}));
  limit->add_option("--omega-rest", rest, "angles for colors 2..mu");
  limit->add_flag("--json", as_json, "print the result with its sample trail as JSON");
  add_tol(limit);

  auto* slope_cmd = app.add_subcommand("slope", "Conway-function slope at (1, omega')");
  slope_cmd->add_option("--link", link)->required();
  slope_cmd->add_option("--omega-rest", rest)->required();

  auto* verify = app.add_subcommand("verify", "run verification suites");
  verify->add_option("--link", link)->required();
  verify->add_option("--suite", suite)->check(CLI::IsMember({"3d", "4d", "lt", "corners", "torres", "multi-lt", "all"}));
  verify->add_option("--samples", samples, "random points per suite");
  verify->add_option("--seed", seed);
  verify->add_option("--report", report, "JSON report output");
  add_tol(verify);

  auto* family = app.add_subcommand("family", "write a built-in family as a link file");
  family->add_option("--name", name)->required()->check(CLI::IsMember({"twist", "torus", "hopf", "unlink"}));
  family->add_option("--param", param, "k for twist, l for torus, mu for unlink");
  family->add_option("--out", out)->required();
  family->add_flag("--force", force, "overwrite an existing file");

  auto* torres = app.add_subcommand("torres", "predicted sigma, eta at omega_1 = 1");
  torres->add_option("--link", link)->required();
  torres->add_option("--omega-rest", rest);
  add_tol(torres);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    throw Exited{code == 0 ? kOk : kInput};
  }

  const double tol = tol_flag ? *tol_flag : default_tolerance();
  if (!(tol > 0.0)) throw SchemaError("--tol must be positive");
  if (*eval) return cmd_eval(link, omega, tol);
  if (*grid) return cmd_grid(link, resolution, csv, pgm, axes, fixed, tol);
  if (*limit) return cmd_limit(link, side, rest, as_json, tol);
  if (*slope_cmd) return cmd_slope(link, rest);
  if (*verify) return cmd_verify(link, suite, samples, seed, report, tol);
  if (*family) return cmd_family(name, param, out, force);
  return cmd_torres(link, rest, tol);
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const Exited& e) {
    return e.code;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kIo;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  }
}
