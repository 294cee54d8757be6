#include "sigtorus/angle.hpp"

#include <charconv>
#include <cmath>
#include <numbers>
#include <sstream>

#include "sigtorus/errors.hpp"

namespace sigtorus {

namespace {

double to_double(const Rational& r) { return r.convert_to<double>(); }

double frac_double(double x) {
  double f = x - std::floor(x);
  return f >= 1.0 ? 0.0 : f;
}

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t");
  return std::string(s.substr(b, e - b + 1));
}

BigInt parse_integer(const std::string& s, std::string_view whole) {
  if (s.empty()) throw AngleParseError("empty integer in angle '" + std::string(whole) + "'");
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size()) throw AngleParseError("bad angle '" + std::string(whole) + "'");
  for (std::size_t i = start; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9') throw AngleParseError("bad angle '" + std::string(whole) + "'");
  return BigInt(s);
}

}  // namespace

Rational frac(const Rational& r) {
  BigInt n = numerator(r), d = denominator(r);
  BigInt q = n / d;
  if (n < 0 && q * d != n) q -= 1;
  return r - Rational(q);
}

Angle::Angle(const Rational& r) : value_(frac(r)) {}

Angle Angle::from_double(double x) {
  Angle a;
  a.value_ = frac_double(x);
  return a;
}

Angle Angle::parse(std::string_view text) {
  std::string s = trim(text);
  if (s.empty()) throw AngleParseError("empty angle");
  if (auto slash = s.find('/'); slash != std::string::npos) {
    BigInt num = parse_integer(trim(s.substr(0, slash)), text);
    BigInt den = parse_integer(trim(s.substr(slash + 1)), text);
    if (den == 0) throw AngleParseError("zero denominator in angle '" + s + "'");
    return Angle(Rational(num, den));
  }
  if (s.find_first_of(".eE") == std::string::npos) return Angle(Rational(parse_integer(s, text)));
  double x = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw AngleParseError("bad angle '" + s + "'");
  return from_double(x);
}

const Rational& Angle::exact() const {
  if (auto* r = std::get_if<Rational>(&value_)) return *r;
  throw InexactAngles("exact predicate requested on float angle " + str());
}

double Angle::value() const {
  if (auto* r = std::get_if<Rational>(&value_)) return to_double(*r);
  return std::get<double>(value_);
}

bool Angle::is_zero() const {
  if (auto* r = std::get_if<Rational>(&value_)) return *r == 0;
  return std::get<double>(value_) == 0.0;
}

Angle Angle::conj() const {
  if (auto* r = std::get_if<Rational>(&value_)) return Angle(Rational(1) - *r);
  return from_double(1.0 - std::get<double>(value_));
}

Angle Angle::power(std::int64_t k) const {
  if (auto* r = std::get_if<Rational>(&value_)) return Angle(*r * k);
  return from_double(static_cast<double>(k) * std::get<double>(value_));
}

std::string Angle::str() const {
  if (auto* r = std::get_if<Rational>(&value_)) {
    std::ostringstream os;
    os << numerator(*r);
    if (denominator(*r) != 1) os << '/' << denominator(*r);
    return os.str();
  }
  std::ostringstream os;
  os.precision(17);
  os << std::get<double>(value_);
  return os.str();
}

Complex Angle::unit() const {
  // Exact values at the quarter points keep H(omega) entries free of 1e-17 noise.
  if (auto* r = std::get_if<Rational>(&value_)) {
    if (*r == 0) return {1.0, 0.0};
    if (*r == Rational(1, 4)) return {0.0, 1.0};
    if (*r == Rational(1, 2)) return {-1.0, 0.0};
    if (*r == Rational(3, 4)) return {0.0, -1.0};
  }
  double t = 2.0 * std::numbers::pi * value();
  return {std::cos(t), std::sin(t)};
}

Complex Angle::half_unit() const {
  if (auto* r = std::get_if<Rational>(&value_)) {
    if (*r == 0) return {1.0, 0.0};
    if (*r == Rational(1, 2)) return {0.0, 1.0};
  }
  double t = std::numbers::pi * value();
  return {std::cos(t), std::sin(t)};
}

Angle operator+(const Angle& a, const Angle& b) {
  if (a.is_exact() && b.is_exact()) return Angle(a.exact() + b.exact());
  return Angle::from_double(a.value() + b.value());
}

bool operator==(const Angle& a, const Angle& b) {
  if (a.is_exact() != b.is_exact()) return false;
  if (a.is_exact()) return a.exact() == b.exact();
  return a.value() == b.value();
}

TorusPoint TorusPoint::parse(std::string_view text) {
  std::vector<Angle> out;
  std::size_t start = 0;
  while (true) {
    auto comma = text.find(',', start);
    out.push_back(Angle::parse(text.substr(start, comma == std::string_view::npos ? comma : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return TorusPoint(std::move(out));
}

bool TorusPoint::is_exact() const {
  for (const auto& a : angles_)
    if (!a.is_exact()) return false;
  return true;
}

bool TorusPoint::in_open_torus() const {
  for (const auto& a : angles_)
    if (a.is_zero()) return false;
  return true;
}

bool TorusPoint::power_is_one(std::span<const std::int64_t> exponents) const {
  if (exponents.size() != angles_.size())
    throw std::invalid_argument("power_is_one: exponent vector has wrong length");
  Rational sum = 0;
  for (std::size_t j = 0; j < angles_.size(); ++j) {
    if (exponents[j] == 0) continue;
    sum += angles_[j].exact() * exponents[j];
  }
  return denominator(sum) == 1;
}

TorusPoint TorusPoint::conj() const {
  std::vector<Angle> out;
  out.reserve(angles_.size());
  for (const auto& a : angles_) out.push_back(a.conj());
  return TorusPoint(std::move(out));
}

TorusPoint TorusPoint::prepend(const Angle& first) const {
  std::vector<Angle> out;
  out.reserve(angles_.size() + 1);
  out.push_back(first);
  out.insert(out.end(), angles_.begin(), angles_.end());
  return TorusPoint(std::move(out));
}

std::vector<Complex> TorusPoint::units() const {
  std::vector<Complex> out;
  for (const auto& a : angles_) out.push_back(a.unit());
  return out;
}

std::vector<Complex> TorusPoint::half_units() const {
  std::vector<Complex> out;
  for (const auto& a : angles_) out.push_back(a.half_unit());
  return out;
}

std::string TorusPoint::str() const {
  std::string s;
  for (std::size_t j = 0; j < angles_.size(); ++j) {
    if (j) s += ',';
    s += angles_[j].str();
  }
  return s;
}

}  // namespace sigtorus
