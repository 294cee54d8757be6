#pragma once

#include <complex>
#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "sigtorus/angle.hpp"

namespace sigtorus {

using Exponent = std::vector<int>;

/// Result of evaluating a polynomial together with the largest magnitude of
/// any single term, so callers can decide "is this a structural zero".
struct ScaledValue {
  Complex value;
  double scale = 0.0;

  /// |value| <= tol * scale. A polynomial with no terms is zero.
  bool is_zero(double tol = 1e-10) const { return std::abs(value) <= tol * scale; }
};

/// Multivariable Laurent polynomial with arbitrary-precision integer
/// coefficients. Terms are kept in lexicographic order of exponent vectors and
/// never hold a zero coefficient, so structural equality is polynomial equality.
class LaurentPoly {
 public:
  using TermMap = std::map<Exponent, BigInt>;

  explicit LaurentPoly(std::size_t nvars = 1);

  static LaurentPoly constant(std::size_t nvars, const BigInt& c);
  static LaurentPoly monomial(std::size_t nvars, Exponent exp, const BigInt& c = 1);
  /// t_var (0-based variable index).
  static LaurentPoly variable(std::size_t nvars, std::size_t var, int power = 1);
  /// t_var - t_var^{-1}
  static LaurentPoly skew(std::size_t nvars, std::size_t var);

  std::size_t nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Constant polynomial? (zero counts as constant)
  bool is_constant() const;
  BigInt coefficient(const Exponent& exp) const;

  void add_term(const Exponent& exp, const BigInt& c);

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) = default;

  /// Throws ZeroCoordinate if any coordinate is zero.
  Complex eval(std::span<const Complex> point) const;
  ScaledValue eval_scaled(std::span<const Complex> point) const;

  /// Formal derivative with respect to t_var.
  LaurentPoly derivative(std::size_t var) const;

  /// Substitute t_var := value, removing that variable.
  /// Only used for the t_1 = 1 specialisation, so value must be +-1.
  LaurentPoly specialize_unit(std::size_t var, int value) const;

  std::string str() const;

 private:
  std::size_t nvars_;
  TermMap terms_;
};

/// Exact quotient r with p = q * r, found by leading-term elimination in
/// lexicographic order. Throws NotDivisible when no such Laurent polynomial exists.
LaurentPoly divide_exact(const LaurentPoly& p, const LaurentPoly& q);

/// num / den, not reduced. Equality is cross-multiplication.
class RationalFunction {
 public:
  RationalFunction() : num_(1), den_(LaurentPoly::constant(1, 1)) {}
  RationalFunction(LaurentPoly num);  // NOLINT: polynomials are rational functions
  RationalFunction(LaurentPoly num, LaurentPoly den);

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }
  std::size_t nvars() const { return num_.nvars(); }
  bool is_polynomial() const;
  bool is_zero() const { return num_.is_zero(); }

  /// Throws ZeroCoordinate or DenominatorVanishes.
  Complex eval(std::span<const Complex> point) const;

  /// Scale this by c (num and den both), useful only for tests of projective invariance.
  RationalFunction scaled(const BigInt& num_factor, const BigInt& den_factor) const;

  friend bool operator==(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);

 private:
  LaurentPoly num_;
  LaurentPoly den_;
};

Complex eval(const LaurentPoly& p, std::span<const Complex> point);
Complex eval(const RationalFunction& f, std::span<const Complex> point);

/// Quotient rule; no cancellation is attempted.
RationalFunction partial_derivative(const RationalFunction& f, std::size_t var);

}  // namespace sigtorus
