#pragma once

// Exact univariate polynomials with arbitrary-precision integer coefficients.

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

namespace pretzel {

/// Integer polynomial stored lowest degree first. The zero polynomial has no
/// coefficients; every other value has a nonzero leading coefficient.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<mpz_class> coeffs);
  IntPoly(std::initializer_list<long> coeffs);

  static IntPoly constant(const mpz_class& c);
  static IntPoly monomial(const mpz_class& c, std::size_t degree);
  /// x^n - 1
  static IntPoly x_pow_minus_one(std::size_t n);

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<mpz_class>& coeffs() const { return coeffs_; }
  mpz_class coeff(std::size_t i) const;
  const mpz_class& leading() const;

  IntPoly operator-() const;
  IntPoly& operator+=(const IntPoly& o);
  IntPoly& operator-=(const IntPoly& o);
  IntPoly& operator*=(const IntPoly& o);
  IntPoly& operator*=(const mpz_class& c);
  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(IntPoly a, const mpz_class& c) { return a *= c; }
  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.coeffs_ == b.coeffs_; }

  mpz_class eval(const mpz_class& x) const;
  /// Sign of f(x) at a rational point, computed without leaving the integers.
  int sign_at(const mpq_class& x) const;
  /// Sign of f(x) as x -> +inf (positive == true) or -inf.
  int sign_at_infinity(bool positive) const;

  IntPoly derivative() const;
  /// f(-x)
  IntPoly negate_variable() const;
  /// x^deg f(1/x)
  IntPoly reversed() const;
  /// Index of the lowest nonzero coefficient (0 for the zero polynomial).
  std::size_t valuation() const;
  /// f / x^valuation
  IntPoly strip_x_power() const;

  /// Nonnegative gcd of the coefficients.
  mpz_class content() const;
  /// f / content, with positive leading coefficient.
  IntPoly primitive_part() const;

  std::string to_string(char var = 'x') const;

 private:
  void trim();
  std::vector<mpz_class> coeffs_;
};

/// Pseudo-division: lc(g)^(deg f - deg g + 1) * f = q * g + r.
std::pair<IntPoly, IntPoly> pseudo_divmod(const IntPoly& f, const IntPoly& g);

/// Exact division in Z[x]; nullopt when g does not divide f.
std::optional<IntPoly> exact_divide(const IntPoly& f, const IntPoly& g);

/// Primitive gcd with positive leading coefficient; gcd(0, 0) = 0.
IntPoly gcd(const IntPoly& f, const IntPoly& g);

/// f / gcd(f, f'), primitive.
IntPoly squarefree_part(const IntPoly& f);

/// JSON array of decimal strings, lowest degree first.
nlohmann::json to_json(const IntPoly& f);
IntPoly int_poly_from_json(const nlohmann::json& j);

}  // namespace pretzel
