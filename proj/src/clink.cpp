#include "sigtorus/clink.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <limits>
#include <numeric>

#include "sigtorus/errors.hpp"

namespace sigtorus {

std::string sign_string(const SignVector& eps) {
  std::string s;
  for (int e : eps) s += (e > 0 ? '+' : '-');
  return s;
}

SignVector parse_sign_string(const std::string& s) {
  SignVector eps;
  for (char c : s) {
    if (c == '+')
      eps.push_back(1);
    else if (c == '-')
      eps.push_back(-1);
    else
      throw SchemaError("bad sign-vector key '" + s + "': only '+' and '-' allowed");
  }
  return eps;
}

std::vector<SignVector> all_sign_vectors(std::size_t mu) {
  std::vector<SignVector> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << mu); ++mask) {
    SignVector eps(mu);
    for (std::size_t j = 0; j < mu; ++j) eps[j] = ((mask >> (mu - 1 - j)) & 1) ? -1 : 1;
    out.push_back(std::move(eps));
  }
  return out;
}

namespace {

SignVector negate(const SignVector& eps) {
  SignVector out(eps.size());
  std::transform(eps.begin(), eps.end(), out.begin(), [](int e) { return -e; });
  return out;
}

}  // namespace

SeifertSystem::SeifertSystem(std::size_t mu, std::map<SignVector, IntMatrix> matrices)
    : mu_(mu), matrices_(std::move(matrices)) {
  if (mu_ == 0) throw SchemaError("a colored link needs at least one color");
  const auto signs = all_sign_vectors(mu_);
  for (const auto& eps : signs)
    if (!matrices_.count(eps)) throw SchemaError("missing Seifert matrix for sign vector \"" + sign_string(eps) + "\"");
  if (matrices_.size() != signs.size())
    throw SchemaError("Seifert system has sign vectors of the wrong length");
  n_ = matrices_.begin()->second.rows();
  for (const auto& [eps, a] : matrices_)
    if (a.rows() != n_ || a.cols() != n_)
      throw DimensionMismatch("Seifert matrix \"" + sign_string(eps) + "\" is " + std::to_string(a.rows()) + "x" +
                              std::to_string(a.cols()) + ", expected " + std::to_string(n_) + "x" +
                              std::to_string(n_));
  for (const auto& [eps, a] : matrices_)
    if (!(matrices_.at(negate(eps)) == a.transpose()))
      throw SymmetryViolation("A^{" + sign_string(negate(eps)) + "} is not the transpose of A^{" +
                              sign_string(eps) + "}");
}

SeifertSystem SeifertSystem::zero(std::size_t mu, std::size_t n) { return constant(mu, IntMatrix(n, n)); }

SeifertSystem SeifertSystem::constant(std::size_t mu, const IntMatrix& a) {
  std::map<SignVector, IntMatrix> m;
  for (auto& eps : all_sign_vectors(mu)) m.emplace(eps, a);
  return SeifertSystem(mu, std::move(m));
}

const IntMatrix& SeifertSystem::at(const SignVector& eps) const {
  auto it = matrices_.find(eps);
  if (it == matrices_.end()) throw SchemaError("no Seifert matrix for \"" + sign_string(eps) + "\"");
  return it->second;
}

ColoredLink::ColoredLink(std::vector<std::size_t> components_per_color, SeifertSystem seifert)
    : components_per_color_(std::move(components_per_color)), seifert_(std::move(seifert)) {
  if (components_per_color_.empty()) throw SchemaError("a colored link needs at least one color");
  if (seifert_.colors() != components_per_color_.size())
    throw DimensionMismatch("Seifert system has " + std::to_string(seifert_.colors()) + " colors, link has " +
                            std::to_string(components_per_color_.size()));
  offsets_.assign(1, 0);
  for (auto c : components_per_color_) {
    if (c == 0) throw SchemaError("every color needs at least one component");
    offsets_.push_back(offsets_.back() + c);
  }
  linking_ = IntMatrix(component_count(), component_count());
}

std::size_t ColoredLink::global_index(ComponentId c) const {
  if (c.color >= colors() || c.index >= components_per_color_[c.color])
    throw SchemaError("component " + std::to_string(c.color + 1) + "." + std::to_string(c.index + 1) +
                      " does not exist");
  return offsets_[c.color] + c.index;
}

ComponentId ColoredLink::component(std::size_t global) const {
  if (global >= component_count()) throw std::out_of_range("component index out of range");
  std::size_t color = 0;
  while (offsets_[color + 1] <= global) ++color;
  return {color, global - offsets_[color]};
}

std::int64_t ColoredLink::linking(ComponentId a, ComponentId b) const {
  return linking_global(global_index(a), global_index(b));
}

std::int64_t ColoredLink::linking_global(std::size_t a, std::size_t b) const { return a == b ? 0 : linking_(a, b); }

void ColoredLink::set_linking(ComponentId a, ComponentId b, std::int64_t lk) {
  const auto i = global_index(a), j = global_index(b);
  if (i == j) throw SchemaError("linking number of a component with itself");
  if (linking_(i, j) != 0 && linking_(i, j) != lk)
    throw SymmetryViolation("conflicting linking numbers for one pair of components");
  linking_(i, j) = lk;
  linking_(j, i) = lk;
}

std::int64_t ColoredLink::color_linking(std::size_t i, std::size_t j) const {
  std::int64_t total = 0;
  for (std::size_t a = offsets_.at(i); a < offsets_.at(i + 1); ++a)
    for (std::size_t b = offsets_.at(j); b < offsets_.at(j + 1); ++b) total += linking_global(a, b);
  return total;
}

void ColoredLink::set_conway(std::optional<RationalFunction> nabla) {
  if (nabla && nabla->nvars() != colors())
    throw DimensionMismatch("Conway function has " + std::to_string(nabla->nvars()) + " variables, link has " +
                            std::to_string(colors()) + " colors");
  conway_ = std::move(nabla);
}

void ColoredLink::set_rank_alexander(int rank) {
  if (rank < 0) throw SchemaError("rank_alexander must be non-negative");
  rank_alexander_ = rank;
  rank_supplied_ = true;
}

void ColoredLink::set_sublink(std::vector<std::size_t> colors_kept, ColoredLink sub) {
  std::sort(colors_kept.begin(), colors_kept.end());
  if (colors_kept.empty() || colors_kept.back() >= colors())
    throw SchemaError("sublink key names a color outside the link");
  if (std::adjacent_find(colors_kept.begin(), colors_kept.end()) != colors_kept.end())
    throw SchemaError("sublink key repeats a color");
  if (sub.colors() != colors_kept.size())
    throw DimensionMismatch("sublink has " + std::to_string(sub.colors()) + " colors, key names " +
                            std::to_string(colors_kept.size()));
  for (std::size_t k = 0; k < colors_kept.size(); ++k)
    if (sub.components_per_color()[k] != components_per_color_[colors_kept[k]])
      throw DimensionMismatch("sublink component counts disagree with the parent link");
  sublinks_[std::move(colors_kept)] = std::make_shared<const ColoredLink>(std::move(sub));
}

const ColoredLink* ColoredLink::sublink_without_first() const {
  std::vector<std::size_t> rest(colors() - 1);
  std::iota(rest.begin(), rest.end(), std::size_t{1});
  auto it = sublinks_.find(rest);
  return it == sublinks_.end() ? nullptr : it->second.get();
}

void ColoredLink::set_underlying_oriented(ColoredLink oriented) {
  if (oriented.colors() != 1) throw WrongColorCount("underlying oriented link must have exactly one color");
  if (oriented.component_count() != component_count())
    throw DimensionMismatch("underlying oriented link has a different number of components");
  underlying_ = std::make_shared<const ColoredLink>(std::move(oriented));
}

namespace {

// sin(pi t) and cos(pi t) for t reduced exactly into [0, 2), so small angles keep full relative precision.
Rational reduce_mod2(Rational t) {
  const Rational two(2);
  Rational q = t / two;
  boost::multiprecision::cpp_int whole = numerator(q) / denominator(q);
  if (q < 0 && whole * denominator(q) != numerator(q)) whole -= 1;
  return t - two * Rational(whole);
}

double sin_pi_unit(const Angle& a) {
  if (a.is_exact()) {
    Rational t = a.exact();
    if (t > Rational(1, 2)) t = Rational(1) - t;
    return std::sin(std::numbers::pi * t.convert_to<double>());
  }
  double t = a.value();
  if (t > 0.5) t = 1.0 - t;
  return std::sin(std::numbers::pi * t);
}

// exp(i pi phase), with exact reduction and exact quarter points when the phase is rational.
Complex unit_pi(const Rational& phase) {
  Rational t = reduce_mod2(phase);
  if (t == 0) return {1.0, 0.0};
  if (t == Rational(1, 2)) return {0.0, 1.0};
  if (t == 1) return {-1.0, 0.0};
  if (t == Rational(3, 2)) return {0.0, -1.0};
  if (t > 1) t -= 2;
  const double x = std::numbers::pi * t.convert_to<double>();
  return {std::cos(x), std::sin(x)};
}

// Coefficient prod_j (1 - conj(w_j)^{eps_j}) = prod_j eps_j 2 sin(pi theta_j) * exp(i pi (mu/2 - sum eps_j theta_j)).
Complex term_coefficient(const TorusPoint& omega, const SignVector& eps, const std::vector<double>& sines) {
  const std::size_t mu = omega.size();
  double magnitude = 1.0;
  for (std::size_t j = 0; j < mu; ++j) magnitude *= eps[j] * 2.0 * sines[j];
  if (omega.is_exact()) {
    Rational phase(static_cast<long long>(mu), 2);
    for (std::size_t j = 0; j < mu; ++j) phase -= eps[j] * omega[j].exact();
    return magnitude * unit_pi(phase);
  }
  double phase = 0.5 * static_cast<double>(mu);
  for (std::size_t j = 0; j < mu; ++j) phase -= eps[j] * omega[j].value();
  return magnitude * std::polar(1.0, std::numbers::pi * phase);
}

std::vector<double> sines_of(const TorusPoint& omega) {
  std::vector<double> out;
  for (std::size_t j = 0; j < omega.size(); ++j) out.push_back(sin_pi_unit(omega[j]));
  return out;
}

double frobenius(const IntMatrix& a) {
  double norm = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) norm += static_cast<double>(a(i, k)) * static_cast<double>(a(i, k));
  return std::sqrt(norm);
}

}  // namespace

HermitianMatrix assemble_H(const ColoredLink& link, const TorusPoint& omega) {
  const std::size_t mu = link.colors();
  if (omega.size() != mu)
    throw DimensionMismatch("point has " + std::to_string(omega.size()) + " coordinates, link has " +
                            std::to_string(mu) + " colors");
  const std::size_t n = link.seifert().size();
  const auto sines = sines_of(omega);
  CMatrix h(n, n);
  for (const auto& [eps, a] : link.seifert().matrices()) {
    const Complex c = term_coefficient(omega, eps, sines);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = i; k < n; ++k)
        if (a(i, k) != 0) h(i, k) += c * static_cast<double>(a(i, k));
  }
  // The transpose rule makes the sum Hermitian; mirror the upper triangle so
  // the stored matrix is Hermitian to the last bit.
  return HermitianMatrix::from_upper(h);
}

double term_scale(const ColoredLink& link, const TorusPoint& omega) {
  double c = 1.0;
  for (double s : sines_of(omega)) c *= 2.0 * s;
  double total = 0.0;
  for (const auto& entry : link.seifert().matrices()) total += c * frobenius(entry.second);
  return total;
}

double zero_threshold(const TorusPoint& omega, double tol) {
  double shrink = tol;
  for (double s : sines_of(omega)) shrink *= s;
  return std::max(shrink, 64.0 * std::numeric_limits<double>::epsilon());
}

SignatureNullity signature_nullity(const ColoredLink& link, const TorusPoint& omega, double tol) {
  if (omega.size() != link.colors())
    throw DimensionMismatch("point has " + std::to_string(omega.size()) + " coordinates, link has " +
                            std::to_string(link.colors()) + " colors");
  for (std::size_t j = 0; j < omega.size(); ++j)
    if (omega.is_one(j))
      throw BoundaryPoint("omega_" + std::to_string(j + 1) +
                          " = 1: the C-complex signature is undefined there, use the Torres prediction");
  HermitianMatrix h = assemble_H(link, omega);
  const double scale = term_scale(link, omega);
  // After scaling ||H|| <= 1, so the inertia threshold is zero_threshold itself.
  if (scale > 0.0) h = h.scaled(1.0 / scale);
  Inertia in = inertia(h, zero_threshold(omega, tol));
  return {in.signature(), in.nullity(), in.dimension()};
}

IntMatrix linking_matrix(const ColoredLink& link, const SignVector& eps_per_color) {
  if (eps_per_color.size() != link.colors()) throw DimensionMismatch("one sign per color expected");
  const std::size_t m = link.component_count();
  std::vector<int> sign(m);
  for (std::size_t g = 0; g < m; ++g) sign[g] = eps_per_color[link.component(g).color];
  IntMatrix lk(m, m);
  for (std::size_t i = 0; i < m; ++i) {
    std::int64_t row = 0;
    for (std::size_t k = 0; k < m; ++k) {
      if (k == i) continue;
      lk(i, k) = sign[i] * sign[k] * link.linking_global(i, k);
      row += lk(i, k);
    }
    lk(i, i) = -row;
  }
  return lk;
}

IntMatrix linking_matrix(const ColoredLink& link) { return linking_matrix(link, SignVector(link.colors(), 1)); }

}  // namespace sigtorus
