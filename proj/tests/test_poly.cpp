#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "pretzel/poly_core.hpp"

using namespace pretzel;

namespace {

// Direct rational evaluation of the defining formula, x != 1.
mpq_class q_formula(const std::vector<long>& ps, const mpq_class& x) {
  auto br = [&](long n) {
    mpq_class xn = 1;
    for (long i = 0; i < n; ++i) xn *= x;
    return mpq_class((xn - 1) / (x - 1));
  };
  const long k = static_cast<long>(ps.size());
  mpq_class prod = 1;
  for (long p : ps) prod *= br(p);
  mpq_class sum = 0;
  for (long j = 0; j < k; ++j) {
    mpq_class t = 1;
    for (long i = 0; i < k; ++i)
      if (i != j) t *= br(ps[static_cast<std::size_t>(i)]);
    sum += t;
  }
  return prod * (x - k + 1) + sum;
}

mpq_class eval_q(const IntPoly& f, const mpq_class& x) {
  mpq_class acc = 0;
  for (auto it = f.coeffs().rbegin(); it != f.coeffs().rend(); ++it) acc = acc * x + mpq_class(*it);
  return acc;
}

IntPoly linear(long a, long b) { return IntPoly{-a, b}; }  // b x - a

}  // namespace

TEST_CASE("pretzel_q agrees with the bracket formula at rational points") {
  for (const std::vector<long> ps : {std::vector<long>{2, 3, 7}, {2, 3, 9}, {2, 5, 7}, {3, 3, 3}, {2, 3, 5, 7, 9}}) {
    const IntPoly q = pretzel_q(ps);
    for (const mpq_class x : {mpq_class(2), mpq_class(-3), mpq_class(1, 2), mpq_class(-5, 3), mpq_class(7, 4)})
      CHECK(eval_q(q, x) == q_formula(ps, x));
  }
}

TEST_CASE("Q for (2,3,7) is Lehmer's polynomial; the knot 12n242 has Alexander polynomial L(-t)") {
  const std::vector<long> ps{2, 3, 7};
  CHECK(pretzel_q(ps) == IntPoly{1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1});
  CHECK(alexander_minus2_pretzel(ps) == IntPoly{1, -1, 0, 1, -1, 1, -1, 1, 0, -1, 1});
}

TEST_CASE("small cases by hand") {
  const std::vector<long> ones{1, 1, 1};
  CHECK(pretzel_q(ones) == IntPoly{1, 1});
  const std::vector<long> even{2, 3};
  CHECK_THROWS_AS(pretzel_q(even), std::invalid_argument);
}

TEST_CASE("Alexander polynomials are symmetric and take the value 1 at t = 1") {
  for (int s = 3; s <= 12; ++s) {
    const std::vector<long> ps{2, 3, 2L * s + 1};
    const IntPoly d = alexander_minus2_pretzel(ps);
    CHECK(is_reciprocal(d));
    CHECK(abs(d.eval(1)) == 1);
  }
}

TEST_CASE("alexander requires a leading 2") {
  const std::vector<long> ps{3, 3, 7};
  CHECK_THROWS_AS(alexander_minus2_pretzel(ps), std::invalid_argument);
}

TEST_CASE("hyperbolicity condition is exact") {
  const std::vector<long> a{2, 3, 5}, b{2, 3, 7}, c{2, 3, 6};
  CHECK_FALSE(hyperbolicity_condition(a));  // 31/30 > 1
  CHECK(hyperbolicity_condition(b));        // 41/42 < 1
  CHECK_FALSE(hyperbolicity_condition(c));  // exactly 1
}

TEST_CASE("unit-circle root counts for the pretzel family") {
  for (int s = 3; s <= 12; ++s) {
    const std::vector<long> ps{2, 3, 2L * s + 1};
    const IntPoly q = pretzel_q(ps);
    CHECK(q.degree() == 2 * s + 4);
    CHECK(count_unit_circle_roots(q) == static_cast<std::size_t>(2 * s + 2));
    CHECK(simple_roots(q));
  }
}

TEST_CASE("real root counting matches polynomials built from known roots") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> num(-12, 12), den(1, 4);
  for (int trial = 0; trial < 20; ++trial) {
    std::set<mpq_class> roots;
    const int n = 1 + static_cast<int>(rng() % 5);
    while (static_cast<int>(roots.size()) < n) {
      mpq_class r(num(rng), den(rng));
      r.canonicalize();
      roots.insert(r);
    }
    IntPoly f{1};
    for (const auto& r : roots) f = f * linear(r.get_num().get_si(), r.get_den().get_si());
    if (trial % 2) f = f * IntPoly{1, 0, 1};  // no real roots added
    const mpq_class lo(num(rng), 2), hi = lo + mpq_class(1 + static_cast<long>(rng() % 10));
    const auto inside = std::count_if(roots.begin(), roots.end(), [&](const mpq_class& r) { return lo < r && r < hi; });
    CHECK(count_real_roots(f, std::nullopt, std::nullopt) == roots.size());
    CHECK(count_real_roots(f, lo, hi) == static_cast<std::size_t>(inside));
  }
}

TEST_CASE("unit-circle counting on products of quadratics x^2 + a x + 1") {
  // |a| < 2 puts both roots on the circle; |a| > 2 makes them real.
  const std::vector<std::pair<std::vector<long>, std::size_t>> cases{
      {{0}, 2}, {{3}, 0}, {{-1, 1}, 4}, {{1, 5}, 2}, {{-3, 4, 0}, 2}, {{-1, 0, 1, 7}, 6}};
  for (const auto& [as, want] : cases) {
    IntPoly f{1};
    for (long a : as) f = f * IntPoly{1, a, 1};
    CHECK(count_unit_circle_roots(f) == want);
  }
}

TEST_CASE("trace polynomial of a reciprocal quadratic") {
  CHECK(trace_polynomial(IntPoly{1, -3, 1}) == IntPoly{-3, 1});
}

TEST_CASE("euler_phi against a gcd count") {
  for (long n = 1; n <= 60; ++n) {
    long c = 0;
    for (long k = 1; k <= n; ++k)
      if (std::gcd(k, n) == 1) ++c;
    CHECK(euler_phi(n) == c);
  }
}

TEST_CASE("x^n - 1 is the product of Phi_d over divisors") {
  for (long n = 1; n <= 30; ++n) {
    IntPoly prod{1};
    for (long d = 1; d <= n; ++d)
      if (n % d == 0) prod = prod * cyclotomic(d);
    CHECK(prod == IntPoly::x_pow_minus_one(static_cast<std::size_t>(n)));
  }
}

TEST_CASE("strip_cyclotomic separates known factors") {
  const IntPoly core{1, -3, 1};
  const auto split = strip_cyclotomic(cyclotomic(3) * cyclotomic(5) * cyclotomic(3) * core);
  CHECK(split.remainder == core);
  REQUIRE(split.factors.size() == 2);
  CHECK(split.factors[0] == CyclotomicFactor{3, 2});
  CHECK(split.factors[1] == CyclotomicFactor{5, 1});
}

TEST_CASE("Salem profile of the stripped remainder") {
  for (int s = 3; s <= 12; ++s) {
    const std::vector<long> ps{2, 3, 2L * s + 1};
    const auto rem = strip_cyclotomic(pretzel_q(ps)).remainder;
    const auto prof = salem_profile(rem);
    CHECK(prof.n_real_gt1 == 1);
    CHECK(prof.n_real_in_01 == 1);
    CHECK(prof.is_salem(static_cast<std::size_t>(rem.degree())));
  }
  CHECK_THROWS_AS(salem_profile(cyclotomic(7)), std::invalid_argument);
}

TEST_CASE("JSON round trip of a polynomial") {
  const IntPoly f{5, 0, -12, 1};
  CHECK(int_poly_from_json(to_json(f)) == f);
}
