// pretzel: command-line front end.
//
// Exit codes: 0 success, 1 verify-all failure, 2 invalid input or a failed
// derivation/invariant, 3 proof-script parse error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "pretzel/acceptance.hpp"
#include "pretzel/builtin_scripts.hpp"
#include "pretzel/certificate.hpp"
#include "pretzel/edgepath.hpp"
#include "pretzel/independent_verifier.hpp"
#include "pretzel/knot_group.hpp"
#include "pretzel/poly_core.hpp"
#include "pretzel/proof_script.hpp"
#include "pretzel/search.hpp"

using nlohmann::json;
using namespace pretzel;

namespace {

constexpr int kOk = 0;
constexpr int kSuiteFailed = 1;
constexpr int kInvalid = 2;
constexpr int kParseError = 3;

struct RunConfig {
  std::optional<int> s;
  std::optional<std::int64_t> p, q;
  std::vector<long> pretzel;
  std::string format = "json";
  std::string script;
  std::uint64_t seed = AcceptanceConfig{}.seed;
  std::size_t max_steps = SearchBudget{}.max_steps;
  std::int64_t max_word_len = SearchBudget{}.max_word_len;
  int denominator_bound = 0;
  bool search = false;
  std::string s_range = "3..12";
};

bool text(const RunConfig& rc) { return rc.format == "text"; }

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

int invalid(const std::string& msg) {
  std::cerr << "error: " << msg << '\n';
  return kInvalid;
}

int need_s(const RunConfig& rc) {
  if (!rc.s) throw std::invalid_argument("--s is required");
  if (*rc.s < 3) throw std::invalid_argument("s must be at least 3");
  return *rc.s;
}

// ---- alexander

int cmd_alexander(const RunConfig& rc) {
  std::vector<long> params = rc.pretzel;
  if (params.empty()) params = {2, 3, 2L * need_s(rc) + 1};
  const IntPoly q = pretzel_q(params);
  const IntPoly delta = alexander_minus2_pretzel(params);
  const auto split = strip_cyclotomic(q);

  json out;
  out["pretzel"] = params;
  out["polynomial"] = to_json(q);
  out["alexander"] = to_json(delta);
  out["degree"] = q.degree();
  out["reciprocal"] = is_reciprocal(q);
  out["simple"] = simple_roots(q);
  out["hyperbolic"] = hyperbolicity_condition(params);
  out["unit_circle_roots"] = is_reciprocal(q) ? json(count_unit_circle_roots(q)) : json(nullptr);
  json cyc = json::array();
  for (const auto& f : split.factors) cyc.push_back({{"index", f.index}, {"multiplicity", f.multiplicity}});
  out["cyclotomic_factors"] = cyc;
  try {
    out["salem_profile"] = to_json(salem_profile(split.remainder));
  } catch (const std::invalid_argument&) {
    out["salem_profile"] = nullptr;
  }

  if (!text(rc)) {
    emit(out);
    return kOk;
  }
  std::cout << "pretzel      ";
  for (std::size_t i = 0; i < params.size(); ++i) std::cout << (i ? "," : "") << params[i];
  std::cout << "\nQ(x)         " << q.to_string('x') << "\nDelta(t)     " << delta.to_string('t')
            << "\ndegree       " << q.degree() << "\nreciprocal   " << (is_reciprocal(q) ? "yes" : "no")
            << "\nsimple roots " << (simple_roots(q) ? "yes" : "no") << "\nhyperbolic   "
            << (hyperbolicity_condition(params) ? "yes" : "no (sum of 1/p_i >= k-2)") << '\n';
  if (out["unit_circle_roots"].is_number()) std::cout << "unit circle  " << out["unit_circle_roots"] << '\n';
  std::cout << "cyclotomic   ";
  if (split.factors.empty()) std::cout << "none";
  for (const auto& f : split.factors)
    std::cout << "Phi_" << f.index << (f.multiplicity > 1 ? "^" + std::to_string(f.multiplicity) : "") << ' ';
  std::cout << '\n';
  if (!out["salem_profile"].is_null()) std::cout << "remainder    " << out["salem_profile"].dump() << '\n';
  return kOk;
}

// ---- slopes

int cmd_slopes(const RunConfig& rc) {
  const int s = need_s(rc);
  const SlopeTable t = slope_table(s);

  std::vector<std::string> problems;
  std::size_t zeros = 0, missing = 0;
  for (const auto& row : t.rows)
    for (const auto* cell : {&row.type2, &row.type3}) {
      if (!cell->slope) {
        ++missing;
        continue;
      }
      if (*cell->slope == 0) ++zeros;
      if (cell->slope->get_den() != 1 || cell->slope->get_num() % 2 != 0)
        problems.push_back(row.signs() + " slope is not an even integer");
    }
  if (zeros != 1) problems.push_back("expected exactly one zero slope");
  if (missing != 1) problems.push_back("expected exactly one inadmissible cell");
  if (!is_monochromatic(seifert_system(s))) problems.push_back("Seifert system is not monochromatic");
  const auto same = [&](const SlopeTable& o) {
    for (std::size_t r = 0; r < 8; ++r)
      if (o.rows[r].type2.slope != t.rows[r].type2.slope || o.rows[r].type3.slope != t.rows[r].type3.slope)
        return false;
    return true;
  };
  PathOrder order = kDefaultOrder;
  while (std::next_permutation(order.begin(), order.end()))
    if (!same(slope_table(s, order))) problems.push_back("table depends on path order");

  std::vector<Type1System> t1;
  if (rc.denominator_bound >= 2) {
    t1 = type1_scan(s, rc.denominator_bound);
    for (const auto& sys : t1)
      if (sys.slope <= 0) problems.push_back("type I slope " + sys.slope.get_str() + " is not positive");
  }

  if (text(rc)) {
    std::cout << to_text(t);
    std::cout << "distinct type II/III slopes: " << count_type23_slope_values(s) << '\n';
    if (rc.denominator_bound >= 2) {
      std::cout << "type I systems (denominators <= " << rc.denominator_bound << "): " << t1.size() << '\n';
      for (const auto& sys : t1) std::cout << "  " << to_json(sys).dump() << '\n';
    }
  } else {
    json out = to_json(t);
    out["distinct_type23_slopes"] = count_type23_slope_values(s);
    if (rc.denominator_bound >= 2) {
      json arr = json::array();
      for (const auto& sys : t1) arr.push_back(to_json(sys));
      out["type1"] = arr;
    }
    out["invariants_ok"] = problems.empty();
    emit(out);
  }
  for (const auto& p : problems) std::cerr << "invariant: " << p << '\n';
  return problems.empty() ? kOk : kInvalid;
}

// ---- prove

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int cmd_prove(const RunConfig& rc) {
  std::optional<ProofScript> script;
  if (!rc.script.empty()) {
    const std::string body = read_file(rc.script);
    try {
      script = parse_script(body);
    } catch (const ScriptParseError& e) {
      std::cerr << rc.script << ": " << e.what() << '\n';
      return kParseError;
    } catch (const WordParseError& e) {
      std::cerr << rc.script << ": " << e.what() << '\n';
      return kParseError;
    }
  }

  std::optional<SurgeryContext> sc;
  if (rc.s || rc.p || rc.q) {
    if (!rc.s || !rc.p || !rc.q) throw std::invalid_argument("--s, --p and --q go together");
    sc = SurgeryContext::make(*rc.s, *rc.p, *rc.q);
  } else if (script && script->context) {
    sc = script->context;
  } else {
    throw std::invalid_argument("no surgery context: give --s --p --q or a script with a context line");
  }

  Certificate cert;
  if (script) {
    cert = check_script(*script, ProverContext::for_surgery(*sc, script->k_orientation));
  } else if (rc.search) {
    const auto res = search(ProverContext::for_surgery(*sc), {rc.max_steps, rc.max_word_len});
    if (!res.certificate) {
      const json out{{"result", "exhausted"}, {"derived", res.derived}};
      if (text(rc)) {
        std::cout << "search exhausted after " << res.derived << " derived facts\n";
      } else {
        emit(out);
      }
      return kInvalid;
    }
    cert = *res.certificate;
  } else {
    cert = builtin_script_main(*sc);
  }

  const json cj = to_json(cert);
  const bool bot = !cert.failure && cert.proves_bot() && cert.open_assumptions().empty();
  const auto verdict = independent::verify(cj);
  const bool ok = bot && verdict.accepted;

  if (text(rc)) {
    std::cout << "context s=" << sc->s << " p=" << sc->p << " q=" << sc->q << '\n'
              << "steps   " << cert.steps.size() << '\n';
    if (cert.failure)
      std::cout << "failed  step " << cert.failure->id << " (" << rule_name(cert.failure->rule)
                << "): " << cert.failure->reason << '\n';
    if (auto c = cert.conclusion()) std::cout << "proves  " << c->to_string() << '\n';
    std::cout << "result  " << (ok ? "BOT, independently verified" : "not certified") << '\n';
  } else {
    json out = cj;
    out["independent"] = {{"accepted", verdict.accepted}, {"reason", verdict.reason}};
    emit(out);
  }
  if (bot && !verdict.accepted) std::cerr << "independent verifier: " << verdict.reason << '\n';
  return ok ? kOk : kInvalid;
}

// ---- group

int cmd_group(const RunConfig& rc) {
  const int s = need_s(rc);
  const Word r = relator(s), lg = longitude(s);
  bool ok = homology_class(r) == 0 && homology_class(lg) == 0;

  json out;
  out["s"] = s;
  auto describe = [](const Word& w) {
    const auto e = exponent_sums(w);
    return json{{"word", w.to_string()},
                {"length", w.length()},
                {"exponent_sums", {{"c", e.c}, {"l", e.l}}},
                {"homology_class", homology_class(w)}};
  };
  out["relator"] = describe(r);
  out["longitude"] = describe(lg);
  out["meridian"] = describe(meridian());
  if (rc.p || rc.q) {
    if (!rc.p || !rc.q) throw std::invalid_argument("--p and --q go together");
    const auto sc = SurgeryContext::make(s, *rc.p, *rc.q);
    const auto h1 = h1_order(sc);
    ok = ok && h1 == sc.p;
    out["surgery"] = {{"p", sc.p}, {"q", sc.q}, {"h1_order", h1}, {"h1_matches_p", h1 == sc.p}};
  }
  out["ok"] = ok;

  if (!text(rc)) {
    emit(out);
  } else {
    std::cout << "relator    " << r.to_string() << "  (length " << r.length() << ")\n"
              << "longitude  " << lg.to_string() << "  (length " << lg.length() << ", class "
              << homology_class(lg) << ")\n";
    if (out.contains("surgery"))
      std::cout << "|H1|       " << out["surgery"]["h1_order"] << " (p = " << *rc.p << ")\n";
  }
  return ok ? kOk : kInvalid;
}

// ---- verify-all

int cmd_verify_all(const RunConfig& rc) {
  static const std::regex range_re(R"(\s*(\d+)\s*\.\.\s*(\d+)\s*)");
  std::smatch m;
  if (!std::regex_match(rc.s_range, m, range_re)) throw std::invalid_argument("--s-range must look like A..B");
  AcceptanceConfig cfg;
  cfg.s_min = std::stoi(m[1]);
  cfg.s_max = std::stoi(m[2]);
  cfg.seed = rc.seed;
  if (cfg.s_min <= cfg.s_max && (cfg.s_min < 3 || cfg.s_max > 12))
    throw std::invalid_argument("--s-range must lie within 3..12");

  const auto results = run_acceptance(cfg);
  bool pass = true;
  json arr = json::array();
  for (const auto& r : results) {
    pass = pass && r.pass;
    arr.push_back(to_json(r));
    if (text(rc))
      std::cout << (r.pass ? "PASS" : "FAIL") << " [" << r.id << "] " << r.name << ": " << r.detail << '\n';
  }
  if (!text(rc))
    emit({{"s_range", {cfg.s_min, cfg.s_max}}, {"seed", cfg.seed}, {"criteria", arr}, {"pass", pass}});
  return pass ? kOk : kSuiteFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pretzel knot surgeries: Alexander polynomials, boundary slopes, and order certificates"};
  app.require_subcommand(1);
  RunConfig rc;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--format", rc.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  };
  auto with_s = [&](CLI::App* sub) { sub->add_option("--s", rc.s, "Knot index, s >= 3"); };
  auto with_pq = [&](CLI::App* sub) {
    sub->add_option("--p", rc.p, "Surgery numerator");
    sub->add_option("--q", rc.q, "Surgery denominator");
  };

  auto* alex = app.add_subcommand("alexander", "Polynomial Q and Alexander polynomial of a (-2,...) pretzel knot");
  common(alex);
  with_s(alex);
  alex->add_option("--pretzel", rc.pretzel, "Explicit parameters, leading 2 included, e.g. 2,3,7")->delimiter(',');

  auto* slopes = app.add_subcommand("slopes", "Boundary slope table from edgepath systems");
  common(slopes);
  with_s(slopes);
  slopes->add_option("--denominator-bound", rc.denominator_bound, "Also scan type I systems up to this denominator");

  auto* prove = app.add_subcommand("prove", "Check a certificate that the surgery group is not left orderable");
  common(prove);
  with_s(prove);
  with_pq(prove);
  prove->add_option("--script", rc.script, "Proof script file (default: the built-in derivation)");
  prove->add_flag("--search", rc.search, "Search for a derivation instead of replaying a script");
  prove->add_option("--max-steps", rc.max_steps, "Search budget: derived facts");
  prove->add_option("--max-word-len", rc.max_word_len, "Search budget: longest word kept");

  auto* group = app.add_subcommand("group", "Relator, longitude and homology checks");
  common(group);
  with_s(group);
  with_pq(group);

  auto* all = app.add_subcommand("verify-all", "Run the acceptance suite");
  common(all);
  all->add_option("--s-range", rc.s_range, "Knot indices A..B within 3..12");
  all->add_option("--seed", rc.seed, "Seed for the randomised checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInvalid;
  }

  try {
    if (alex->parsed()) return cmd_alexander(rc);
    if (slopes->parsed()) return cmd_slopes(rc);
    if (prove->parsed()) return cmd_prove(rc);
    if (group->parsed()) return cmd_group(rc);
    if (all->parsed()) return cmd_verify_all(rc);
  } catch (const std::invalid_argument& e) {
    return invalid(e.what());
  } catch (const std::out_of_range& e) {
    return invalid(e.what());
  }
  return kInvalid;
}
