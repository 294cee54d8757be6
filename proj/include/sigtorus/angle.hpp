#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace sigtorus {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using Complex = std::complex<double>;

/// An angle theta in [0, 1), standing for the unit complex number exp(2 pi i theta).
///
/// Angles are either exact rationals or floats. Degeneracy predicates
/// (is_zero, sums landing in Z) are only decided on exact angles; float angles
/// refuse with InexactAngles rather than compare doubles.
class Angle {
 public:
  Angle() : value_(Rational(0)) {}
  explicit Angle(const Rational& r);
  Angle(std::int64_t num, std::int64_t den) : Angle(Rational(num, den)) {}

  static Angle from_double(double x);

  /// Accepts "p/q", an integer, or a decimal such as "0.25". Decimals become
  /// float angles; integers and fractions stay exact. Values are reduced mod 1.
  static Angle parse(std::string_view text);

  bool is_exact() const { return std::holds_alternative<Rational>(value_); }
  const Rational& exact() const;
  double value() const;

  /// theta == 0, i.e. omega == 1. Float angles compare exactly against 0.0.
  bool is_zero() const;

  /// Angle of the complex conjugate, (1 - theta) mod 1.
  Angle conj() const;
  /// Angle of omega^k.
  Angle power(std::int64_t k) const;

  std::string str() const;

  /// exp(2 pi i theta)
  Complex unit() const;
  /// exp(pi i theta), the square root with argument in [0, pi).
  Complex half_unit() const;

  friend Angle operator+(const Angle& a, const Angle& b);
  friend bool operator==(const Angle& a, const Angle& b);

 private:
  std::variant<Rational, double> value_;
};

/// Reduce a rational into [0, 1).
Rational frac(const Rational& r);

/// A point of the torus T^mu, one angle per color.
class TorusPoint {
 public:
  TorusPoint() = default;
  explicit TorusPoint(std::vector<Angle> angles) : angles_(std::move(angles)) {}
  TorusPoint(std::initializer_list<Angle> angles) : angles_(angles) {}

  static TorusPoint parse(std::string_view comma_separated);

  std::size_t size() const { return angles_.size(); }
  bool empty() const { return angles_.empty(); }
  const Angle& operator[](std::size_t j) const { return angles_[j]; }
  std::span<const Angle> angles() const { return angles_; }

  bool is_exact() const;
  /// omega_j == 1 (exact for rational angles).
  bool is_one(std::size_t j) const { return angles_[j].is_zero(); }
  /// No coordinate equal to 1.
  bool in_open_torus() const;
  /// prod_j omega_j^{exponents_j} == 1, i.e. sum_j exponents_j * theta_j in Z.
  /// Throws InexactAngles if any involved angle is a float.
  bool power_is_one(std::span<const std::int64_t> exponents) const;

  TorusPoint conj() const;
  /// (theta_1, rest...)
  TorusPoint prepend(const Angle& first) const;
  std::vector<Complex> units() const;
  std::vector<Complex> half_units() const;
  std::string str() const;

 private:
  std::vector<Angle> angles_;
};

}  // namespace sigtorus
