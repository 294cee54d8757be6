#include "sigtorus/laurent.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "sigtorus/errors.hpp"

namespace sigtorus {

namespace {

void check_same_vars(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.nvars() != b.nvars()) throw std::invalid_argument("Laurent polynomials over different variable counts");
}

Complex monomial_value(const Exponent& exp, std::span<const Complex> point) {
  Complex v{1.0, 0.0};
  for (std::size_t j = 0; j < exp.size(); ++j)
    if (exp[j] != 0) v *= std::pow(point[j], exp[j]);
  return v;
}

void check_point(std::size_t nvars, std::span<const Complex> point) {
  if (point.size() != nvars)
    throw std::invalid_argument("evaluation point has " + std::to_string(point.size()) +
                                " coordinates, polynomial has " + std::to_string(nvars) + " variables");
  for (const auto& z : point)
    if (z == Complex{0.0, 0.0}) throw ZeroCoordinate("Laurent polynomial evaluated at a zero coordinate");
}

}  // namespace

LaurentPoly::LaurentPoly(std::size_t nvars) : nvars_(nvars) {}

LaurentPoly LaurentPoly::constant(std::size_t nvars, const BigInt& c) {
  return monomial(nvars, Exponent(nvars, 0), c);
}

LaurentPoly LaurentPoly::monomial(std::size_t nvars, Exponent exp, const BigInt& c) {
  if (exp.size() != nvars) throw std::invalid_argument("exponent vector has wrong length");
  LaurentPoly p(nvars);
  p.add_term(exp, c);
  return p;
}

LaurentPoly LaurentPoly::variable(std::size_t nvars, std::size_t var, int power) {
  Exponent e(nvars, 0);
  e.at(var) = power;
  return monomial(nvars, std::move(e));
}

LaurentPoly LaurentPoly::skew(std::size_t nvars, std::size_t var) {
  return variable(nvars, var, 1) - variable(nvars, var, -1);
}

bool LaurentPoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const auto& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

BigInt LaurentPoly::coefficient(const Exponent& exp) const {
  auto it = terms_.find(exp);
  return it == terms_.end() ? BigInt(0) : it->second;
}

void LaurentPoly::add_term(const Exponent& exp, const BigInt& c) {
  if (exp.size() != nvars_) throw std::invalid_argument("exponent vector has wrong length");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(exp, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r(nvars_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  check_same_vars(*this, o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  check_same_vars(*this, o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  check_same_vars(a, b);
  LaurentPoly r(a.nvars_);
  Exponent e(a.nvars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t j = 0; j < e.size(); ++j) e[j] = ea[j] + eb[j];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

Complex LaurentPoly::eval(std::span<const Complex> point) const { return eval_scaled(point).value; }

ScaledValue LaurentPoly::eval_scaled(std::span<const Complex> point) const {
  check_point(nvars_, point);
  ScaledValue out{{0.0, 0.0}, 0.0};
  for (const auto& [e, c] : terms_) {
    Complex term = c.convert_to<double>() * monomial_value(e, point);
    out.value += term;
    out.scale = std::max(out.scale, std::abs(term));
  }
  return out;
}

LaurentPoly LaurentPoly::derivative(std::size_t var) const {
  if (var >= nvars_) throw std::out_of_range("derivative variable index out of range");
  LaurentPoly r(nvars_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exponent d = e;
    d[var] -= 1;
    r.add_term(d, c * e[var]);
  }
  return r;
}

LaurentPoly LaurentPoly::specialize_unit(std::size_t var, int value) const {
  if (var >= nvars_) throw std::out_of_range("specialize variable index out of range");
  if (value != 1 && value != -1) throw std::invalid_argument("specialize_unit expects +-1");
  LaurentPoly r(nvars_ - 1);
  for (const auto& [e, c] : terms_) {
    Exponent d;
    d.reserve(nvars_ - 1);
    for (std::size_t j = 0; j < nvars_; ++j)
      if (j != var) d.push_back(e[j]);
    BigInt coeff = (value == -1 && (e[var] % 2 != 0)) ? BigInt(-c) : c;
    r.add_term(d, coeff);
  }
  return r;
}

std::string LaurentPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    BigInt mag = c < 0 ? BigInt(-c) : c;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool has_var = std::any_of(e.begin(), e.end(), [](int x) { return x != 0; });
    if (mag != 1 || !has_var) os << mag;
    bool need_sep = (mag != 1);
    for (std::size_t j = 0; j < e.size(); ++j) {
      if (e[j] == 0) continue;
      if (need_sep) os << '*';
      os << 't' << (j + 1);
      if (e[j] != 1) os << '^' << e[j];
      need_sep = true;
    }
  }
  return os.str();
}

LaurentPoly divide_exact(const LaurentPoly& p, const LaurentPoly& q) {
  check_same_vars(p, q);
  if (q.is_zero()) throw std::invalid_argument("divide_exact: division by the zero polynomial");
  const std::size_t n = p.nvars();
  LaurentPoly quotient(n);
  if (p.is_zero()) return quotient;

  // Every exponent of an exact quotient lies in the box
  // [min_p - min_q, max_p - max_q] coordinatewise; leaving it proves failure.
  Exponent lo(n), hi(n);
  for (std::size_t j = 0; j < n; ++j) {
    int pmin = INT32_MAX, pmax = INT32_MIN, qmin = INT32_MAX, qmax = INT32_MIN;
    for (const auto& [e, c] : p.terms()) pmin = std::min(pmin, e[j]), pmax = std::max(pmax, e[j]);
    for (const auto& [e, c] : q.terms()) qmin = std::min(qmin, e[j]), qmax = std::max(qmax, e[j]);
    lo[j] = pmin - qmin;
    hi[j] = pmax - qmax;
    if (lo[j] > hi[j]) throw NotDivisible("divide_exact: Newton box of quotient is empty");
  }

  const auto& [lead_q_exp, lead_q_coeff] = *q.terms().rbegin();
  LaurentPoly remainder = p;
  while (!remainder.is_zero()) {
    const auto& [lead_r_exp, lead_r_coeff] = *remainder.terms().rbegin();
    if (lead_r_coeff % lead_q_coeff != 0)
      throw NotDivisible("divide_exact: leading coefficient " + lead_r_coeff.str() +
                         " is not a multiple of " + lead_q_coeff.str());
    Exponent e(n);
    for (std::size_t j = 0; j < n; ++j) {
      e[j] = lead_r_exp[j] - lead_q_exp[j];
      if (e[j] < lo[j] || e[j] > hi[j]) throw NotDivisible("divide_exact: nonzero remainder");
    }
    LaurentPoly step = LaurentPoly::monomial(n, e, lead_r_coeff / lead_q_coeff);
    quotient += step;
    remainder -= step * q;
  }
  return quotient;
}

RationalFunction::RationalFunction(LaurentPoly num)
    : num_(std::move(num)), den_(LaurentPoly::constant(num_.nvars(), 1)) {}

RationalFunction::RationalFunction(LaurentPoly num, LaurentPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
  check_same_vars(num_, den_);
  if (den_.is_zero()) throw std::invalid_argument("rational function with zero denominator");
}

bool RationalFunction::is_polynomial() const {
  // A unit monomial denominator still counts: divide it through.
  return den_.terms().size() == 1 && (den_.terms().begin()->second == 1 || den_.terms().begin()->second == -1);
}

Complex RationalFunction::eval(std::span<const Complex> point) const {
  ScaledValue d = den_.eval_scaled(point);
  if (d.is_zero()) throw DenominatorVanishes("rational function denominator vanishes at evaluation point");
  return num_.eval(point) / d.value;
}

RationalFunction RationalFunction::scaled(const BigInt& num_factor, const BigInt& den_factor) const {
  return RationalFunction(num_ * LaurentPoly::constant(nvars(), num_factor),
                          den_ * LaurentPoly::constant(nvars(), den_factor));
}

bool operator==(const RationalFunction& a, const RationalFunction& b) {
  return a.num_ * b.den_ == b.num_ * a.den_;
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

Complex eval(const LaurentPoly& p, std::span<const Complex> point) { return p.eval(point); }
Complex eval(const RationalFunction& f, std::span<const Complex> point) { return f.eval(point); }

RationalFunction partial_derivative(const RationalFunction& f, std::size_t var) {
  if (f.den().is_constant()) {
    // c constant: (num / c)' = num' / c
    return RationalFunction(f.num().derivative(var), f.den());
  }
  LaurentPoly num = f.num().derivative(var) * f.den() - f.num() * f.den().derivative(var);
  return RationalFunction(std::move(num), f.den() * f.den());
}

}  // namespace sigtorus
