#pragma once

// Pretzel polynomials, cyclotomic stripping and exact root location.

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "pretzel/int_poly.hpp"

namespace pretzel {

/// 1 + x + ... + x^(n-1)
IntPoly bracket(long n);

/// [p1]...[pk](x - k + 1) + sum_j prod_{i != j} [p_i], for odd k.
IntPoly pretzel_q(std::span<const long> p_list);

/// Alexander polynomial of the (-2, p2, ..., pk) pretzel knot: Q_{2,p2,..,pk}(-t)
/// with no t-power factor and a positive constant term. p_list[0] must be 2.
IntPoly alexander_minus2_pretzel(std::span<const long> p_list);

/// sum 1/p_i < k - 2, compared exactly.
bool hyperbolicity_condition(std::span<const long> p_list);

bool is_reciprocal(const IntPoly& f);

/// gcd(f, f') is a constant.
bool simple_roots(const IntPoly& f);

/// Sturm chain of f (computed over Z with positive rescaling).
std::vector<IntPoly> sturm_sequence(const IntPoly& f);

/// Number of distinct real roots of f in the open interval (lo, hi); an empty
/// bound means the corresponding infinity.
std::size_t count_real_roots(const IntPoly& f, const std::optional<mpq_class>& lo,
                             const std::optional<mpq_class>& hi);

/// Writes an even-degree reciprocal f as x^m g(x + 1/x) and returns g.
IntPoly trace_polynomial(const IntPoly& f);

/// Distinct roots of a reciprocal polynomial on the unit circle.
std::size_t count_unit_circle_roots(const IntPoly& f);

long euler_phi(long n);
IntPoly cyclotomic(long n);

struct CyclotomicFactor {
  long index = 0;
  int multiplicity = 0;
  friend bool operator==(const CyclotomicFactor&, const CyclotomicFactor&) = default;
};

struct CyclotomicSplit {
  std::vector<CyclotomicFactor> factors;
  IntPoly remainder;
};

/// Trial division by every Phi_n with phi(n) <= deg f.
CyclotomicSplit strip_cyclotomic(const IntPoly& f);

struct RootProfile {
  std::size_t n_unit_circle = 0;
  std::size_t n_real_gt1 = 0;
  std::size_t n_real_in_01 = 0;
  std::size_t n_other = 0;
  bool all_simple = false;

  /// One real root > 1, one in (0,1), everything else on the circle.
  bool is_salem(std::size_t degree) const;
};

/// Root distribution of a reciprocal polynomial, all counts exact.
RootProfile root_profile(const IntPoly& f);

/// root_profile for a cyclotomic-free remainder; throws if f still has a
/// cyclotomic factor or is constant.
RootProfile salem_profile(const IntPoly& f);

nlohmann::json to_json(const RootProfile& p);

}  // namespace pretzel
