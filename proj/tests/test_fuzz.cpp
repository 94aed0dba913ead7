#include <doctest.h>

#include <random>

#include "pretzel/builtin_scripts.hpp"
#include "pretzel/certificate.hpp"
#include "pretzel/fuzz.hpp"

using namespace pretzel;
using namespace pretzel::fuzz;

namespace {

Assignment sample(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-10.0, 10.0), d(-2.0, 2.0);
  Assignment a;
  for (int g = 0; g < 3; ++g) {
    std::vector<double> xs{u(rng), u(rng), u(rng), u(rng)};
    std::sort(xs.begin(), xs.end());
    std::vector<double> ys;
    double off = d(rng);
    for (std::size_t i = 0; i < xs.size(); ++i) {
      if (i) off += 0.5 * (xs[i] - xs[i - 1]) * (d(rng) / 2.0);
      ys.push_back(xs[i] + off);
    }
    a.maps.emplace_back(xs, ys);
  }
  return a;
}

}  // namespace

TEST_CASE("piecewise-linear maps invert") {
  const PlMap m({0.0, 1.0, 3.0}, {0.5, 2.0, 2.5});
  for (double x : {-4.0, 0.0, 0.3, 1.0, 2.2, 3.0, 9.0}) CHECK(m.inverse(m(x)) == doctest::Approx(x));
  CHECK(m(-1.0) == doctest::Approx(-0.5));
  CHECK(m(5.0) == doctest::Approx(4.5));
  CHECK_THROWS(PlMap({0.0, 1.0}, {1.0, 0.5}));
}

TEST_CASE("displacement range agrees with dense sampling") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const auto a = sample(seed);
    const Word w = parse_word(seed % 2 ? "c l^-1 k" : "k^-1 c^2 l");
    const auto [lo, hi] = a.displacement_range(w, {});
    double slo = 1e300, shi = -1e300;
    for (int i = 0; i <= 200000; ++i) {
      const double x = -60.0 + 120.0 * i / 200000.0;
      const double v = a.apply(w, x) - x;
      slo = std::min(slo, v);
      shi = std::max(shi, v);
    }
    CHECK(lo <= slo + 1e-9);
    CHECK(hi >= shi - 1e-9);
    CHECK(lo == doctest::Approx(slo).epsilon(1e-4));
    CHECK(hi == doctest::Approx(shi).epsilon(1e-4));
  }
}

TEST_CASE("words act right to left") {
  const auto a = sample(3);
  const Word w = parse_word("c l");
  for (double x : {-3.0, 0.0, 4.5}) CHECK(a.apply(w, x) == doctest::Approx(a.maps[0](a.maps[1](x))));
  CHECK(a.apply(parse_word("l^-1 l"), 2.0) == 2.0);
}

TEST_CASE("grid spacing") {
  const auto g = grid(1000);
  CHECK(g.size() == 1000);
  CHECK(g.front() == -20.0);
  CHECK(g.back() == 20.0);
}

TEST_CASE("small soundness run") {
  const auto rep = soundness_fuzz(99, 500, 200);
  CHECK(rep.instances == 500);
  CHECK(rep.violations == 0);
  CHECK(rep.per_rule.size() >= 12);
  const auto again = soundness_fuzz(99, 500, 200);
  CHECK(again.attempts == rep.attempts);
}

TEST_CASE("small mutation run") {
  const auto sc = SurgeryContext::make(3, 9, 1);
  const std::vector<nlohmann::json> certs{to_json(builtin_script_main(sc)), to_json(builtin_script_fixedpoint(sc))};
  const auto rep = mutation_fuzz(certs, 5, 100);
  CHECK(rep.originals_accepted == 2);
  CHECK(rep.kept == 100);
  CHECK(rep.rejected == rep.kept);
}
