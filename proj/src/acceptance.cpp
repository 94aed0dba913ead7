#include "pretzel/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <random>
#include <sstream>

#include "pretzel/builtin_scripts.hpp"
#include "pretzel/certificate.hpp"
#include "pretzel/edgepath.hpp"
#include "pretzel/fuzz.hpp"
#include "pretzel/independent_verifier.hpp"
#include "pretzel/knot_group.hpp"
#include "pretzel/poly_core.hpp"

namespace pretzel {

namespace {

using Clock = std::chrono::steady_clock;

constexpr double kRootSeconds = 10.0;
constexpr double kGridSeconds = 30.0;

struct Window {
  int lo, hi;
  bool empty() const { return hi < lo; }
};

Window clip(const AcceptanceConfig& cfg, int lo, int hi) {
  return {std::max(cfg.s_min, lo), std::min(cfg.s_max, hi)};
}

std::vector<long> knot_params(int s) { return {2, 3, 2L * s + 1}; }

// Each check appends a complaint per failure; the first few go into the detail.
class Tally {
 public:
  void check(bool ok, const std::string& what) {
    ++checked_;
    if (ok) return;
    ++failed_;
    if (notes_.size() < 4) notes_.push_back(what);
  }
  bool ok() const { return failed_ == 0; }
  std::string summary(const std::string& extra = {}) const {
    std::ostringstream os;
    os << (checked_ - failed_) << "/" << checked_ << " checks";
    if (!extra.empty()) os << ", " << extra;
    for (const auto& n : notes_) os << "; " << n;
    return os.str();
  }

 private:
  std::size_t checked_ = 0, failed_ = 0;
  std::vector<std::string> notes_;
};

std::string fmt_seconds(double s) {
  std::ostringstream os;
  os.precision(3);
  os << s << " s";
  return os.str();
}

CriterionResult unit_circle(const AcceptanceConfig& cfg) {
  Tally t;
  const auto start = Clock::now();
  for (int s = cfg.s_min; s <= cfg.s_max; ++s) {
    const auto q = pretzel_q(knot_params(s));
    const auto n = count_unit_circle_roots(q);
    t.check(n == static_cast<std::size_t>(2 * s + 2),
            "s=" + std::to_string(s) + ": " + std::to_string(n) + " roots on the circle");
  }
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  t.check(secs < kRootSeconds, "took " + fmt_seconds(secs));
  return {1, "unit-circle roots", t.ok(), t.summary(fmt_seconds(secs)), secs};
}

CriterionResult structure(const AcceptanceConfig& cfg) {
  Tally t;
  for (int s = cfg.s_min; s <= cfg.s_max; ++s) {
    const std::string tag = "s=" + std::to_string(s) + ": ";
    const auto q = pretzel_q(knot_params(s));
    t.check(simple_roots(q), tag + "repeated root");
    t.check(is_reciprocal(q), tag + "not reciprocal");
    t.check(q.degree() == 2 * s + 4, tag + "degree " + std::to_string(q.degree()));
    try {
      const auto rem = strip_cyclotomic(q).remainder;
      t.check(salem_profile(rem).is_salem(static_cast<std::size_t>(rem.degree())), tag + "remainder not Salem");
    } catch (const std::exception& e) {
      t.check(false, tag + e.what());
    }
  }
  return {2, "simplicity and structure", t.ok(), t.summary()};
}

CriterionResult table(const AcceptanceConfig& cfg) {
  Tally t;
  for (int s = cfg.s_min; s <= cfg.s_max; ++s) {
    const auto tab = slope_table(s);
    std::size_t zeros = 0, inadmissible = 0;
    for (int r = 0; r < 8; ++r)
      for (bool type3 : {false, true}) {
        const auto& cell = type3 ? tab.rows[r].type3 : tab.rows[r].type2;
        const auto want = expected_slope(s, r, type3);
        const std::string tag = "s=" + std::to_string(s) + " " + tab.rows[r].signs() + (type3 ? " III" : " II");
        if (!cell.slope) {
          ++inadmissible;
          t.check(!want, tag + " not admissible");
        } else {
          if (*cell.slope == 0) ++zeros;
          t.check(want && *cell.slope == mpq_class(*want), tag + " = " + cell.slope->get_str());
        }
      }
    t.check(zeros == 1 && inadmissible == 1, "s=" + std::to_string(s) + ": zero/inadmissible cell count");
  }
  return {3, "slope table", t.ok(), t.summary()};
}

CriterionResult type1(const AcceptanceConfig& cfg) {
  Tally t;
  std::size_t systems = 0;
  const Window w = clip(cfg, 3, 6);
  for (int s = w.lo; s <= w.hi; ++s)
    for (int bound = 2; bound <= 12; ++bound)
      for (const auto& sys : type1_scan(s, bound)) {
        ++systems;
        t.check(sys.slope > 0, "s=" + std::to_string(s) + " u0=" + sys.u0.get_str() + " slope " + sys.slope.get_str());
      }
  return {4, "type I positivity", t.ok(), t.summary(std::to_string(systems) + " systems")};
}

CriterionResult certificates(const AcceptanceConfig& cfg) {
  Tally t;
  std::size_t proved = 0, refused = 0;
  const Window w = clip(cfg, 3, 8);
  const auto start = Clock::now();
  for (int s = w.lo; s <= w.hi; ++s)
    for (std::int64_t q = 1; q <= 3; ++q) {
      const std::int64_t edge = (2 * s + 3) * q;
      for (std::int64_t p = edge - 2; p <= edge + 4; ++p) {
        if (std::gcd(p, q) != 1) continue;
        const std::string tag = "(" + std::to_string(s) + "," + std::to_string(p) + "," + std::to_string(q) + ")";
        const auto cert = builtin_script_main(SurgeryContext::make(s, p, q));
        const bool bot = !cert.failure && cert.proves_bot() && cert.open_assumptions().empty();
        t.check(bot == (p >= edge), tag + (bot ? " proved" : " not proved"));
        if (bot) {
          ++proved;
          t.check(independent::verify(to_json(cert)).accepted, tag + " independent check failed");
        } else {
          ++refused;
          t.check(cert.failure && cert.failure->rule == Rule::KpowSign,
                  tag + " failed at " + (cert.failure ? cert.failure->id : std::string("no step")));
        }
      }
    }
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  t.check(secs < kGridSeconds, "took " + fmt_seconds(secs));
  return {5, "non-left-orderability certificates", t.ok(),
          t.summary(std::to_string(proved) + " proved, " + std::to_string(refused) + " refused, " + fmt_seconds(secs)),
          secs};
}

CriterionResult fixed_point(const AcceptanceConfig& cfg) {
  Tally t;
  const Window w = clip(cfg, 3, 8);
  for (int s = w.lo; s <= w.hi; ++s) {
    const auto cert = builtin_script_fixedpoint(SurgeryContext::make(s, 2 * s + 3, 1));
    const std::string tag = "s=" + std::to_string(s);
    t.check(!cert.failure && cert.proves_bot(), tag + " did not reach BOT");
    t.check(cert.open_assumptions() == std::vector<std::string>{"h"}, tag + " unexpected open assumptions");
    t.check(independent::verify(to_json(cert)).accepted, tag + " independent check failed");
  }
  return {6, "fixed-point replay", t.ok(), t.summary()};
}

CriterionResult homology(const AcceptanceConfig& cfg) {
  Tally t;
  std::mt19937_64 rng(cfg.seed);
  std::uniform_int_distribution<int> sd(3, 50);
  std::uniform_int_distribution<std::int64_t> qd(1, 20), pd(1, 2000);
  for (int i = 0; i < 200; ++i) {
    const int s = sd(rng);
    const std::int64_t q = qd(rng);
    std::int64_t p = pd(rng);
    while (std::gcd(p, q) != 1) ++p;
    const auto ctx = SurgeryContext::make(s, p, q);
    t.check(h1_order(ctx) == p, "h1 of (" + std::to_string(s) + "," + std::to_string(p) + "," + std::to_string(q) + ")");
    t.check(homology_class(longitude(s)) == 0, "longitude class for s=" + std::to_string(s));
  }
  return {7, "homology", t.ok(), t.summary()};
}

std::vector<nlohmann::json> fuzz_corpus() {
  const auto a = SurgeryContext::make(3, 9, 1);
  std::vector<nlohmann::json> out;
  out.push_back(to_json(builtin_script_main(a)));
  out.push_back(to_json(builtin_script_main(SurgeryContext::make(4, 23, 2))));
  out.push_back(to_json(builtin_script_fixedpoint(a)));
  out.push_back(to_json(check_script(mirror(main_script(a)))));
  return out;
}

CriterionResult soundness(const AcceptanceConfig& cfg) {
  Tally t;
  const auto snd = fuzz::soundness_fuzz(cfg.seed, cfg.soundness_instances);
  t.check(snd.instances == cfg.soundness_instances, "only " + std::to_string(snd.instances) + " instances");
  t.check(snd.violations == 0, std::to_string(snd.violations) + " violations" +
                                   (snd.examples.empty() ? std::string() : ", e.g. " + snd.examples.front()));
  const auto mut = fuzz::mutation_fuzz(fuzz_corpus(), cfg.seed, cfg.mutations);
  t.check(mut.originals_accepted == mut.originals, "an original certificate was rejected");
  t.check(mut.kept == cfg.mutations, "only " + std::to_string(mut.kept) + " mutations");
  t.check(mut.rejected == mut.kept,
          std::to_string(mut.kept - mut.rejected) + " escapes" +
              (mut.escapes.empty() ? std::string() : ", e.g. " + mut.escapes.front()));
  std::ostringstream os;
  os << snd.instances << " instances, " << snd.violations << " violations; " << mut.rejected << "/" << mut.kept
     << " mutations rejected";
  return {8, "prover soundness fuzz", t.ok(), t.summary(os.str())};
}

}  // namespace

std::optional<std::int64_t> expected_slope(int s, int row, bool type3) {
  const std::int64_t f = 4 * static_cast<std::int64_t>(s);
  switch (row) {
    case 0: return type3 ? std::optional<std::int64_t>(0) : std::nullopt;
    case 1: return type3 ? f + 2 : f + 4;
    case 2: return type3 ? 6 : 8;
    case 3: return f + 8;
    case 4: return type3 ? 4 : 6;
    case 5: return f + 6;
    case 6: return 10;
    case 7: return type3 ? f + 12 : f + 10;
    default: throw std::out_of_range("slope table row");
  }
}

CriterionResult run_criterion(int id, const AcceptanceConfig& cfg) {
  const auto start = Clock::now();
  CriterionResult r;
  switch (id) {
    case 1: r = unit_circle(cfg); break;
    case 2: r = structure(cfg); break;
    case 3: r = table(cfg); break;
    case 4: r = type1(cfg); break;
    case 5: r = certificates(cfg); break;
    case 6: r = fixed_point(cfg); break;
    case 7: r = homology(cfg); break;
    case 8: r = soundness(cfg); break;
    default: throw std::out_of_range("no criterion " + std::to_string(id));
  }
  r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return r;
}

std::vector<CriterionResult> run_acceptance(const AcceptanceConfig& cfg) {
  std::vector<CriterionResult> out;
  if (cfg.s_max < cfg.s_min) return out;
  for (int id = 1; id <= 8; ++id) out.push_back(run_criterion(id, cfg));
  return out;
}

nlohmann::json to_json(const CriterionResult& r) {
  return {{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}, {"seconds", r.seconds}};
}

}  // namespace pretzel
