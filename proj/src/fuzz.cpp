#include "pretzel/fuzz.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>

#include "pretzel/certificate.hpp"
#include "pretzel/independent_verifier.hpp"
#include "pretzel/prover.hpp"

namespace pretzel::fuzz {

PlMap::PlMap(std::vector<double> xs, std::vector<double> ys) : xs_(std::move(xs)), ys_(std::move(ys)) {
  if (xs_.empty() || xs_.size() != ys_.size()) throw std::invalid_argument("PlMap needs matching breakpoints");
  for (std::size_t i = 1; i < xs_.size(); ++i)
    if (!(xs_[i] > xs_[i - 1]) || !(ys_[i] > ys_[i - 1])) throw std::invalid_argument("PlMap must be increasing");
}

double PlMap::eval(const std::vector<double>& from, const std::vector<double>& to, double x) {
  if (x <= from.front()) return to.front() + (x - from.front());
  if (x >= from.back()) return to.back() + (x - from.back());
  const auto it = std::upper_bound(from.begin(), from.end(), x);
  const std::size_t i = static_cast<std::size_t>(it - from.begin());
  if (x == from[i - 1]) return to[i - 1];
  const double t = (x - from[i - 1]) / (from[i] - from[i - 1]);
  return to[i - 1] + t * (to[i] - to[i - 1]);
}

double PlMap::operator()(double x) const { return eval(xs_, ys_, x); }
double PlMap::inverse(double x) const { return eval(ys_, xs_, x); }

double Assignment::apply(const Word& w, double x) const {
  const auto& syl = w.syllables();
  for (auto it = syl.rbegin(); it != syl.rend(); ++it) {
    const PlMap& m = maps[static_cast<std::size_t>(it->gen)];
    const std::int64_t n = it->exp < 0 ? -it->exp : it->exp;
    for (std::int64_t i = 0; i < n; ++i) x = it->exp > 0 ? m(x) : m.inverse(x);
  }
  return x;
}

std::vector<double> Assignment::critical_points(const Word& w) const {
  const auto letters = w.letters();
  std::vector<double> out;
  for (std::size_t j = 0; j < letters.size(); ++j) {
    const PlMap& m = maps[static_cast<std::size_t>(letters[j].gen)];
    for (double b : letters[j].inverse ? m.ys() : m.xs()) {
      double x = b;
      for (std::size_t i = j + 1; i < letters.size(); ++i) {
        const PlMap& mi = maps[static_cast<std::size_t>(letters[i].gen)];
        x = letters[i].inverse ? mi(x) : mi.inverse(x);
      }
      out.push_back(x);
    }
  }
  if (out.empty()) return {0.0};
  const auto [lo, hi] = std::minmax_element(out.begin(), out.end());
  const double a = *lo - 1.0, b = *hi + 1.0;
  out.push_back(a);
  out.push_back(b);
  return out;
}

std::pair<double, double> Assignment::displacement_range(const Word& w, const std::vector<double>& g) const {
  double lo = std::numeric_limits<double>::infinity(), hi = -lo;
  auto visit = [&](double x) {
    const double d = apply(w, x) - x;
    lo = std::min(lo, d);
    hi = std::max(hi, d);
  };
  for (double x : critical_points(w)) visit(x);
  for (double x : g) visit(x);
  return {lo, hi};
}

std::vector<double> grid(std::size_t points) {
  std::vector<double> g(points);
  for (std::size_t i = 0; i < points; ++i)
    g[i] = points == 1 ? 0.0 : -20.0 + 40.0 * static_cast<double>(i) / static_cast<double>(points - 1);
  return g;
}

namespace {

constexpr double kMargin = 1e-6;     // strict premises hold by at least this much
constexpr double kEqTol = 1e-12;     // equalities hold to this tolerance
constexpr double kViolation = 1e-9;  // a conclusion fails by more than rounding

using Rng = std::mt19937_64;

double uniform(Rng& rng, double a, double b) { return std::uniform_real_distribution<double>(a, b)(rng); }
int pick(Rng& rng, int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng); }

enum class MapType { Pos, Neg, Mixed, Fixed };

PlMap random_map(Rng& rng, MapType type, const std::vector<double>& g) {
  const int n = 4 + pick(rng, 7);
  std::vector<double> xs;
  for (int i = 0; i < n; ++i) xs.push_back(uniform(rng, -25.0, 25.0));
  std::vector<double> pinned;
  if (type == MapType::Fixed)
    for (int i = 0, m = 1 + pick(rng, 3); i < m; ++i) {
      pinned.push_back(g[static_cast<std::size_t>(pick(rng, static_cast<int>(g.size())))]);
      xs.push_back(pinned.back());
    }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end(), [](double a, double b) { return b - a < 1e-3; }), xs.end());

  std::vector<double> d(xs.size());
  d[0] = type == MapType::Pos ? uniform(rng, 0.1, 3.0) : type == MapType::Neg ? uniform(rng, -3.0, -0.1) : uniform(rng, -3.0, 3.0);
  auto is_pinned = [&](double x) { return std::find(pinned.begin(), pinned.end(), x) != pinned.end(); };
  if (is_pinned(xs[0])) d[0] = 0.0;
  for (std::size_t i = 1; i < xs.size(); ++i) {
    const double gap = xs[i] - xs[i - 1];
    double lo = -0.8 * gap, hi = 0.8 * gap;
    if (type == MapType::Pos) lo = std::max(lo, 0.05 - d[i - 1]);
    if (type == MapType::Neg) hi = std::min(hi, -0.05 - d[i - 1]);
    d[i] = d[i - 1] + uniform(rng, lo, hi);
    if (is_pinned(xs[i]) && std::abs(d[i - 1]) <= 0.8 * gap) d[i] = 0.0;
  }
  std::vector<double> ys(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) ys[i] = xs[i] + d[i];
  return PlMap(xs, ys);
}

Word random_word(Rng& rng, int max_len = 3) {
  std::vector<Letter> ls;
  for (int i = 0, n = 1 + pick(rng, max_len); i < n; ++i)
    ls.push_back({static_cast<Gen>(pick(rng, 3)), pick(rng, 2) == 1});
  return Word::from_letters(ls);
}

class Semantics {
 public:
  Semantics(const Assignment& a, const std::vector<double>& g, double x0) : a_(a), g_(g), x0_(x0) {}

  std::pair<double, double> range(const Word& w) const { return a_.displacement_range(w, g_); }
  double at(const Word& w) const { return a_.apply(w, x0_); }

  bool premise_holds(const Judgment& j) const {
    switch (j.kind) {
      case Kind::Pos:
        return range(j.subject).first > kMargin;
      case Kind::Neg:
        return range(j.subject).second < -kMargin;
      case Kind::Nneg:
        return range(j.subject).first >= -kEqTol;
      case Kind::Npos:
        return range(j.subject).second <= kEqTol;
      case Kind::Eq: {
        const auto [lo, hi] = range(j.lhs * j.rhs.inverse());
        return lo >= -kEqTol && hi <= kEqTol;
      }
      case Kind::Pt: {
        const double d = at(j.lhs) - at(j.rhs);
        if (j.rel == Rel::Lt) return d < -kMargin;
        if (j.rel == Rel::Gt) return d > kMargin;
        return std::abs(d) <= kEqTol;
      }
      case Kind::Bot:
        return false;
    }
    return false;
  }

  bool conclusion_fails(const Judgment& j) const {
    switch (j.kind) {
      case Kind::Pos:
        return range(j.subject).first <= 0.0;
      case Kind::Neg:
        return range(j.subject).second >= 0.0;
      case Kind::Nneg:
        return range(j.subject).first < -kViolation;
      case Kind::Npos:
        return range(j.subject).second > kViolation;
      case Kind::Eq: {
        const auto [lo, hi] = range(j.lhs * j.rhs.inverse());
        return lo < -kViolation || hi > kViolation;
      }
      case Kind::Pt: {
        const double d = at(j.lhs) - at(j.rhs);
        if (j.rel == Rel::Lt) return d >= 0.0;
        if (j.rel == Rel::Gt) return d <= 0.0;
        return std::abs(d) > kViolation;
      }
      case Kind::Bot:
        return true;
    }
    return true;
  }

 private:
  const Assignment& a_;
  const std::vector<double>& g_;
  double x0_;
};

// A true sign fact; `orientation` 1 asks for POS/NNEG, -1 for NEG/NPOS, 0 for either.
std::optional<Judgment> sign_fact(Rng& rng, const Semantics& sem, int orientation, bool strict_only) {
  for (int attempt = 0; attempt < 20; ++attempt) {
    const Word w = random_word(rng);
    const auto [lo, hi] = sem.range(w);
    std::vector<Kind> ok;
    if (lo > kMargin) ok.push_back(Kind::Pos);
    if (hi < -kMargin) ok.push_back(Kind::Neg);
    if (!strict_only && lo >= -kEqTol) ok.push_back(Kind::Nneg);
    if (!strict_only && hi <= kEqTol) ok.push_back(Kind::Npos);
    std::erase_if(ok, [&](Kind k) {
      const bool up = k == Kind::Pos || k == Kind::Nneg;
      return (orientation > 0 && !up) || (orientation < 0 && up);
    });
    if (!ok.empty()) return Judgment::sign(ok[static_cast<std::size_t>(pick(rng, static_cast<int>(ok.size())))], w);
  }
  return std::nullopt;
}

std::optional<Rel> relation(double d) {
  if (d < -kMargin) return Rel::Lt;
  if (d > kMargin) return Rel::Gt;
  if (std::abs(d) <= kEqTol) return Rel::Eq;
  return std::nullopt;
}

std::optional<Judgment> pt_fact(Rng& rng, const Semantics& sem, std::optional<Word> lhs, bool rhs_identity) {
  for (int attempt = 0; attempt < 20; ++attempt) {
    const Word u = lhs ? *lhs : random_word(rng);
    const Word v = rhs_identity || pick(rng, 2) == 0 ? Word{} : random_word(rng);
    if (auto r = relation(sem.at(u) - sem.at(v))) return Judgment::pt(u, *r, v, {"h" + std::to_string(pick(rng, 3))});
  }
  return std::nullopt;
}

const std::vector<Rule> kFuzzRules{Rule::Pow,     Rule::Mul,     Rule::Conj,      Rule::Inv,     Rule::EqSubst,
                                   Rule::KpowSign, Rule::Contra,  Rule::EqSym,     Rule::EqTrans, Rule::EqPow,
                                   Rule::EqCtx,   Rule::PtApply, Rule::PtPow,     Rule::PtTrans, Rule::PtSym,
                                   Rule::PtEqSubst, Rule::PtContra};

}  // namespace

SoundnessReport soundness_fuzz(std::uint64_t seed, std::size_t instances, std::size_t grid_points) {
  Rng rng(seed);
  const auto g = grid(grid_points);
  const ProverContext ctx;
  SoundnessReport rep;
  const std::size_t max_attempts = instances * 50 + 1000;
  while (rep.instances < instances && rep.attempts < max_attempts) {
    ++rep.attempts;
    Assignment a;
    for (int i = 0; i < 3; ++i) a.maps.push_back(random_map(rng, static_cast<MapType>(pick(rng, 4)), g));
    // Prefer a fixed point of c as the base point when there is one.
    double x0 = g[static_cast<std::size_t>(pick(rng, static_cast<int>(g.size())))];
    if (pick(rng, 2) == 0)
      for (double x : g)
        if (a.maps[0](x) == x) {
          x0 = x;
          break;
        }
    const Semantics sem(a, g, x0);

    const Rule rule = kFuzzRules[static_cast<std::size_t>(pick(rng, static_cast<int>(kFuzzRules.size())))];
    std::vector<Judgment> prem;
    std::vector<Arg> args;
    auto need = [](std::optional<Judgment> j, std::vector<Judgment>& out) {
      if (!j) return false;
      out.push_back(std::move(*j));
      return true;
    };
    const Word u = random_word(rng);
    bool built = true;
    switch (rule) {
      case Rule::Pow:
        built = need(sign_fact(rng, sem, 0, false), prem);
        args = {std::int64_t{pick(rng, 6) - 1}};
        break;
      case Rule::Mul:
        built = need(sign_fact(rng, sem, 0, false), prem);
        if (built) {
          const bool up = prem[0].kind == Kind::Pos || prem[0].kind == Kind::Nneg;
          built = need(sign_fact(rng, sem, up ? 1 : -1, false), prem);
        }
        break;
      case Rule::Conj:
        built = need(sign_fact(rng, sem, 0, false), prem);
        args = {random_word(rng)};
        break;
      case Rule::Inv:
        built = need(sign_fact(rng, sem, 0, false), prem);
        break;
      case Rule::EqSubst:
        built = need(sign_fact(rng, sem, 0, false), prem);
        if (built) prem.push_back(Judgment::eq(prem[0].subject, prem[0].subject * u * u.inverse()));
        break;
      case Rule::KpowSign:
        built = need(sign_fact(rng, sem, 0, true), prem);
        args = {std::int64_t{pick(rng, 7) - 3}, pick(rng, 2) ? Kind::Nneg : Kind::Npos};
        break;
      case Rule::Contra:
        built = need(sign_fact(rng, sem, 0, false), prem);
        if (built) {
          if (pick(rng, 2)) {
            prem.push_back(Judgment::eq(prem[0].subject, Word{}));
          } else {
            prem.push_back(Judgment::sign(static_cast<Kind>(pick(rng, 4)), prem[0].subject));
          }
        }
        break;
      case Rule::EqSym:
      case Rule::EqPow:
      case Rule::EqCtx:
        prem.push_back(Judgment::eq(u, u));
        if (rule == Rule::EqPow) args = {std::int64_t{pick(rng, 7) - 3}};
        if (rule == Rule::EqCtx) args = {random_word(rng), random_word(rng)};
        break;
      case Rule::EqTrans:
        prem = {Judgment::eq(u, u), Judgment::eq(u, u)};
        break;
      case Rule::PtApply:
        built = need(pt_fact(rng, sem, std::nullopt, false), prem);
        args = {random_word(rng)};
        break;
      case Rule::PtPow:
        built = need(pt_fact(rng, sem, std::nullopt, true), prem);
        args = {std::int64_t{pick(rng, 7) - 2}};
        break;
      case Rule::PtTrans:
        built = need(pt_fact(rng, sem, std::nullopt, false), prem);
        if (built) {
          // second fact starts where the first ends
          const Word mid = prem[0].rhs;
          const Word w = random_word(rng);
          if (auto r = relation(sem.at(mid) - sem.at(w))) {
            prem.push_back(Judgment::pt(mid, *r, w, {"h1"}));
          } else {
            built = false;
          }
        }
        break;
      case Rule::PtSym:
      case Rule::PtContra:
        built = need(pt_fact(rng, sem, std::nullopt, false), prem);
        break;
      case Rule::PtEqSubst:
        built = need(pt_fact(rng, sem, std::nullopt, false), prem);
        if (built) prem.push_back(Judgment::eq(prem[0].rhs, prem[0].rhs));
        break;
      default:
        built = false;
    }
    if (!built) continue;
    if (!std::all_of(prem.begin(), prem.end(), [&](const Judgment& j) { return sem.premise_holds(j); })) continue;

    ScriptStep st{.id = "goal", .rule = rule, .args = args};
    std::vector<const Judgment*> ptrs;
    for (std::size_t i = 0; i < prem.size(); ++i) {
      st.premises.push_back("p" + std::to_string(i));
      ptrs.push_back(&prem[i]);
    }
    Judgment concl;
    try {
      concl = apply_rule(ctx, st, ptrs, [](const std::string&) { return nullptr; });
    } catch (const RuleViolation&) {
      continue;
    }
    ++rep.instances;
    ++rep.per_rule[std::string(rule_name(rule))];
    if (sem.conclusion_fails(concl)) {
      ++rep.violations;
      if (rep.examples.size() < 5) {
        std::ostringstream os;
        os << rule_name(rule) << ":";
        for (const auto& p : prem) os << ' ' << p.to_string();
        os << " => " << concl.to_string();
        rep.examples.push_back(os.str());
      }
    }
  }
  return rep;
}

MutationReport mutation_fuzz(const std::vector<nlohmann::json>& certificates, std::uint64_t seed,
                             std::size_t mutations) {
  Rng rng(seed);
  MutationReport rep;
  for (const auto& c : certificates) {
    ++rep.originals;
    if (independent::verify(c).accepted) ++rep.originals_accepted;
  }
  if (certificates.empty()) return rep;
  const auto rules = all_rules();
  const std::size_t max_attempts = mutations * 20 + 100;
  while (rep.kept < mutations && rep.attempts < max_attempts) {
    ++rep.attempts;
    nlohmann::json m = certificates[static_cast<std::size_t>(pick(rng, static_cast<int>(certificates.size())))];
    auto& steps = m.at("steps");
    const auto si = static_cast<std::size_t>(pick(rng, static_cast<int>(steps.size())));
    auto& st = steps[si];
    std::string what;
    switch (pick(rng, 3)) {
      case 0: {
        const auto r = rule_name(rules[static_cast<std::size_t>(pick(rng, static_cast<int>(rules.size())))]);
        if (st.at("rule") == r) continue;
        what = "rule " + st.at("rule").get<std::string>() + " -> " + std::string(r);
        st["rule"] = r;
        break;
      }
      case 1: {
        auto& prem = st.at("premises");
        if (prem.empty()) continue;
        const auto pi = static_cast<std::size_t>(pick(rng, static_cast<int>(prem.size())));
        const auto& other = steps[static_cast<std::size_t>(pick(rng, static_cast<int>(steps.size())))].at("id");
        if (prem[pi] == other) continue;
        what = "premise " + prem[pi].get<std::string>() + " -> " + other.get<std::string>();
        prem[pi] = other;
        break;
      }
      default: {
        auto& args = st.at("args");
        std::vector<std::size_t> words;
        for (std::size_t i = 0; i < args.size(); ++i)
          if (args[i].get<std::string>().starts_with("{")) words.push_back(i);
        if (words.empty()) continue;
        const std::size_t ai = words[static_cast<std::size_t>(pick(rng, static_cast<int>(words.size())))];
        const std::string text = args[ai].get<std::string>();
        const Word w = parse_word(text.substr(1, text.size() - 2));
        const Word extra = random_word(rng, 1);
        const Word nw = pick(rng, 2) ? w * extra : extra * w;
        if (nw == w) continue;
        const std::string repl = nw.is_identity() ? "{}" : "{" + nw.to_string() + "}";
        what = "word " + text + " -> " + repl;
        args[ai] = repl;
        break;
      }
    }
    if (recheck_certificate(m)) continue;  // harmless mutation
    ++rep.kept;
    if (!independent::verify(m).accepted) {
      ++rep.rejected;
    } else if (rep.escapes.size() < 5) {
      rep.escapes.push_back("step " + st.at("id").get<std::string>() + ": " + what);
    }
  }
  return rep;
}

}  // namespace pretzel::fuzz
