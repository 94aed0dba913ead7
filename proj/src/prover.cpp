#include "pretzel/prover.hpp"

#include <algorithm>
#include <array>
#include <sstream>

namespace pretzel {

std::string_view kind_name(Kind k) {
  switch (k) {
    case Kind::Pos:
      return "POS";
    case Kind::Nneg:
      return "NNEG";
    case Kind::Neg:
      return "NEG";
    case Kind::Npos:
      return "NPOS";
    case Kind::Eq:
      return "EQ";
    case Kind::Bot:
      return "BOT";
    case Kind::Pt:
      return "PT";
  }
  return "?";
}

std::string_view rel_symbol(Rel r) {
  switch (r) {
    case Rel::Lt:
      return "<";
    case Rel::Eq:
      return "=";
    case Rel::Gt:
      return ">";
  }
  return "?";
}

std::string_view rel_keyword(Rel r) {
  switch (r) {
    case Rel::Lt:
      return "lt";
    case Rel::Eq:
      return "eq";
    case Rel::Gt:
      return "gt";
  }
  return "?";
}

bool is_sign(Kind k) { return k == Kind::Pos || k == Kind::Nneg || k == Kind::Neg || k == Kind::Npos; }

Kind mirror_kind(Kind k) {
  switch (k) {
    case Kind::Pos:
      return Kind::Neg;
    case Kind::Neg:
      return Kind::Pos;
    case Kind::Nneg:
      return Kind::Npos;
    case Kind::Npos:
      return Kind::Nneg;
    default:
      return k;
  }
}

Rel mirror_rel(Rel r) {
  if (r == Rel::Lt) return Rel::Gt;
  if (r == Rel::Gt) return Rel::Lt;
  return r;
}

Judgment Judgment::sign(Kind k, Word w) {
  Judgment j;
  j.kind = k;
  j.subject = std::move(w);
  return j;
}

Judgment Judgment::eq(Word lhs, Word rhs) {
  Judgment j;
  j.kind = Kind::Eq;
  j.lhs = std::move(lhs);
  j.rhs = std::move(rhs);
  return j;
}

Judgment Judgment::pt(Word lhs, Rel rel, Word rhs, std::vector<std::string> assumptions) {
  Judgment j;
  j.kind = Kind::Pt;
  j.lhs = std::move(lhs);
  j.rhs = std::move(rhs);
  j.rel = rel;
  std::sort(assumptions.begin(), assumptions.end());
  assumptions.erase(std::unique(assumptions.begin(), assumptions.end()), assumptions.end());
  j.assumptions = std::move(assumptions);
  return j;
}

Judgment Judgment::bot(std::vector<std::string> assumptions) {
  Judgment j;
  j.kind = Kind::Bot;
  std::sort(assumptions.begin(), assumptions.end());
  assumptions.erase(std::unique(assumptions.begin(), assumptions.end()), assumptions.end());
  j.assumptions = std::move(assumptions);
  return j;
}

std::string Judgment::to_string() const {
  std::ostringstream os;
  os << kind_name(kind);
  if (is_sign(kind)) {
    os << '(' << subject.to_string() << ')';
  } else if (kind == Kind::Eq) {
    os << '(' << lhs.to_string() << ", " << rhs.to_string() << ')';
  } else if (kind == Kind::Pt) {
    os << '(' << lhs.to_string() << ' ' << rel_symbol(rel) << ' ' << rhs.to_string() << ')';
  }
  if ((kind == Kind::Pt || kind == Kind::Bot) && !assumptions.empty()) {
    os << " [";
    for (std::size_t i = 0; i < assumptions.size(); ++i) os << (i ? " " : "") << assumptions[i];
    os << ']';
  }
  return os.str();
}

namespace {

struct RuleInfo {
  Rule rule;
  std::string_view name;
  std::string_view keyword;
};

constexpr std::array<RuleInfo, 23> kRules{{
    {Rule::Axiom, "AXIOM", "axiom"},
    {Rule::Pow, "R-POW", "pow"},
    {Rule::Mul, "R-MUL", "mul"},
    {Rule::Conj, "R-CONJ", "conj"},
    {Rule::Inv, "R-INV", "inv"},
    {Rule::EqSubst, "R-EQSUBST", "eqsubst"},
    {Rule::KpowSign, "R-KPOW-SIGN", "kpow"},
    {Rule::Contra, "R-CONTRA", "contra"},
    {Rule::EqRefl, "R-EQ-REFL", "eq-refl"},
    {Rule::EqSym, "R-EQ-SYM", "eq-sym"},
    {Rule::EqTrans, "R-EQ-TRANS", "eq-trans"},
    {Rule::EqPow, "R-EQ-POW", "eq-pow"},
    {Rule::EqCtx, "R-EQ-CTX", "eq-ctx"},
    {Rule::EqRel, "R-EQ-REL", "eq-rel"},
    {Rule::PtHyp, "R-PT-HYP", "pt-hyp"},
    {Rule::PtApply, "R-PT-APPLY", "pt-apply"},
    {Rule::PtPow, "R-PT-POW", "pt-pow"},
    {Rule::PtTrans, "R-PT-TRANS", "pt-trans"},
    {Rule::PtSym, "R-PT-SYM", "pt-sym"},
    {Rule::PtEqSubst, "R-PT-EQSUBST", "pt-eqsubst"},
    {Rule::PtContra, "R-PT-CONTRA", "pt-contra"},
    {Rule::PtCases, "R-PT-CASES", "pt-cases"},
    {Rule::PtGlobalFix, "R-PT-GLOBALFIX", "pt-globalfix"},
}};

constexpr auto kAllRules = [] {
  std::array<Rule, kRules.size()> out{};
  for (std::size_t i = 0; i < kRules.size(); ++i) out[i] = kRules[i].rule;
  return out;
}();

const RuleInfo& info(Rule r) {
  for (const auto& i : kRules)
    if (i.rule == r) return i;
  throw std::logic_error("unknown rule");
}

}  // namespace

std::string_view rule_name(Rule r) { return info(r).name; }
std::string_view rule_keyword(Rule r) { return info(r).keyword; }

std::optional<Rule> rule_from_keyword(std::string_view s) {
  for (const auto& i : kRules)
    if (i.keyword == s) return i.rule;
  return std::nullopt;
}

std::optional<Rule> rule_from_name(std::string_view s) {
  for (const auto& i : kRules)
    if (i.name == s) return i.rule;
  return std::nullopt;
}

std::span<const Rule> all_rules() { return kAllRules; }

std::string arg_to_string(const Arg& a) {
  struct Visitor {
    std::string operator()(const Word& w) const { return w.is_identity() ? "{}" : "{" + w.to_string() + "}"; }
    std::string operator()(std::int64_t n) const { return std::to_string(n); }
    std::string operator()(Kind k) const { return std::string(kind_name(k)); }
    std::string operator()(Rel r) const { return std::string(rel_keyword(r)); }
  };
  return std::visit(Visitor{}, a);
}

ProverContext ProverContext::for_surgery(const SurgeryContext& sc, Orientation k) {
  ProverContext ctx;
  ctx.surgery = sc;
  ctx.k_orientation = k;
  const Word kw = Word::gen(Gen::k);
  ctx.axioms = {
      {"axC", Judgment::eq(Word::gen(Gen::c), kw.pow(sc.q))},
      {"axL", Judgment::eq(longitude(sc.s), kw.pow(-sc.p))},
      {"axR", Judgment::eq(relator(sc.s), Word{})},
      {"axK", Judgment::sign(k == Orientation::Increasing ? Kind::Pos : Kind::Neg, kw)},
  };
  return ctx;
}

ProverContext ProverContext::with_axioms(std::vector<std::pair<std::string, Judgment>> axioms) {
  ProverContext ctx;
  ctx.axioms = std::move(axioms);
  return ctx;
}

const Judgment* ProverContext::axiom(std::string_view name) const {
  for (const auto& [n, j] : axioms)
    if (n == name) return &j;
  return nullptr;
}

namespace {

[[noreturn]] void fail(const std::string& msg) { throw RuleViolation(msg); }

bool increasing(Kind k) { return k == Kind::Pos || k == Kind::Nneg; }
bool strict(Kind k) { return k == Kind::Pos || k == Kind::Neg; }

void expect_shape(const ScriptStep& step, std::size_t n_premises, std::size_t n_args) {
  if (step.premises.size() != n_premises)
    fail("expects " + std::to_string(n_premises) + " premise(s), got " + std::to_string(step.premises.size()));
  if (step.args.size() != n_args)
    fail("expects " + std::to_string(n_args) + " argument(s), got " + std::to_string(step.args.size()));
}

template <typename T>
const T& arg(const ScriptStep& step, std::size_t i, const char* what) {
  const T* v = std::get_if<T>(&step.args.at(i));
  if (!v) fail("argument " + std::to_string(i + 1) + " must be " + what);
  return *v;
}

const Word& word_arg(const ScriptStep& s, std::size_t i) { return arg<Word>(s, i, "a word"); }
std::int64_t int_arg(const ScriptStep& s, std::size_t i) { return arg<std::int64_t>(s, i, "an integer"); }

const Judgment& need(const Judgment* j, Kind k, std::size_t i) {
  if (j->kind != k)
    fail("premise " + std::to_string(i + 1) + " must be " + std::string(kind_name(k)) + ", got " + j->to_string());
  return *j;
}

const Judgment& need_sign(const Judgment* j, std::size_t i) {
  if (!is_sign(j->kind)) fail("premise " + std::to_string(i + 1) + " must be a sign judgment, got " + j->to_string());
  return *j;
}

std::vector<std::string> merge(std::vector<std::string> a, const std::vector<std::string>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

// Transitivity table for pointwise relations.
Rel chain(Rel a, Rel b) {
  if (a == Rel::Eq) return b;
  if (b == Rel::Eq) return a;
  if (a == b) return a;
  fail("relations " + std::string(rel_symbol(a)) + " and " + std::string(rel_symbol(b)) + " do not chain");
}

std::optional<Gen> single_generator(const Word& w) {
  const auto& syl = w.syllables();
  if (syl.size() == 1 && (syl[0].exp == 1 || syl[0].exp == -1)) return syl[0].gen;
  return std::nullopt;
}

Judgment contra(const Judgment& a, const Judgment& b) {
  auto sign_vs_eq = [](const Judgment& s, const Judgment& e) {
    return strict(s.kind) && e.kind == Kind::Eq &&
           ((e.lhs == s.subject && e.rhs.is_identity()) || (e.rhs == s.subject && e.lhs.is_identity()));
  };
  auto opposing = [](const Judgment& x, const Judgment& y) {
    if (!is_sign(x.kind) || !is_sign(y.kind) || x.subject != y.subject) return false;
    return (x.kind == Kind::Pos && y.kind == Kind::Npos) || (x.kind == Kind::Neg && y.kind == Kind::Nneg);
  };
  if (opposing(a, b) || opposing(b, a) || sign_vs_eq(a, b) || sign_vs_eq(b, a)) return Judgment::bot();
  fail("premises " + a.to_string() + " and " + b.to_string() + " are not contradictory");
}

Judgment cases(std::span<const Judgment* const> prem, const JudgmentLookup& lookup) {
  // Each branch must rest on a point hypothesis u rel v; the three relations
  // must all occur for the same u and v.
  struct Branch {
    std::string hyp;
    const Judgment* fact;
  };
  std::array<std::optional<Branch>, 3> found;
  std::vector<std::string> rest;
  for (std::size_t i = 0; i < 3; ++i) {
    const Judgment& b = need(prem[i], Kind::Bot, i);
    std::optional<Branch> pick;
    for (const auto& a : b.assumptions) {
      const Judgment* h = lookup(a);
      if (!h || h->kind != Kind::Pt || h->assumptions != std::vector<std::string>{a}) continue;
      const auto slot = static_cast<std::size_t>(h->rel);
      if (found[slot]) continue;
      pick = Branch{a, h};
      found[slot] = pick;
      break;
    }
    if (!pick) fail("branch " + std::to_string(i + 1) + " does not rest on an unused case hypothesis");
    for (const auto& a : b.assumptions)
      if (a != pick->hyp) rest.push_back(a);
  }
  for (std::size_t r = 0; r < 3; ++r)
    if (!found[r]) fail("no branch covers the case " + std::string(rel_keyword(static_cast<Rel>(r))));
  const Judgment& h0 = *found[0]->fact;
  for (std::size_t r = 1; r < 3; ++r) {
    const Judgment& h = *found[r]->fact;
    if (h.lhs != h0.lhs || h.rhs != h0.rhs) fail("case hypotheses compare different words: " + h0.to_string() + " vs " + h.to_string());
  }
  return Judgment::bot(rest);
}

}  // namespace

Judgment apply_rule(const ProverContext& ctx, const ScriptStep& step, std::span<const Judgment* const> prem,
                    const JudgmentLookup& lookup) {
  if (ctx.disabled_rules.contains(step.rule)) fail("rule " + std::string(rule_name(step.rule)) + " is disabled");
  if (prem.size() != step.premises.size()) throw std::logic_error("premise count mismatch");

  switch (step.rule) {
    case Rule::Axiom:
      fail("axioms are introduced by name, not as inferences");

    case Rule::Pow: {
      expect_shape(step, 1, 1);
      const auto& p = need_sign(prem[0], 0);
      const auto n = int_arg(step, 0);
      if (strict(p.kind) && n < 1) fail("side condition n >= 1 fails: n = " + std::to_string(n));
      if (!strict(p.kind) && n < 0) fail("side condition n >= 0 fails: n = " + std::to_string(n));
      return Judgment::sign(p.kind, p.subject.pow(n));
    }

    case Rule::Mul: {
      expect_shape(step, 2, 0);
      const auto& a = need_sign(prem[0], 0);
      const auto& b = need_sign(prem[1], 1);
      if (increasing(a.kind) != increasing(b.kind))
        fail("cannot multiply " + a.to_string() + " by " + b.to_string() + ": opposite directions");
      const bool st = strict(a.kind) || strict(b.kind);
      const Kind k = increasing(a.kind) ? (st ? Kind::Pos : Kind::Nneg) : (st ? Kind::Neg : Kind::Npos);
      return Judgment::sign(k, a.subject * b.subject);
    }

    case Rule::Conj: {
      expect_shape(step, 1, 1);
      const auto& p = need_sign(prem[0], 0);
      const auto& w = word_arg(step, 0);
      return Judgment::sign(p.kind, w * p.subject * w.inverse());
    }

    case Rule::Inv: {
      expect_shape(step, 1, 0);
      const auto& p = need_sign(prem[0], 0);
      return Judgment::sign(mirror_kind(p.kind), p.subject.inverse());
    }

    case Rule::EqSubst: {
      expect_shape(step, 2, 0);
      const auto& p = need_sign(prem[0], 0);
      const auto& e = need(prem[1], Kind::Eq, 1);
      if (e.lhs != p.subject)
        fail("equation left side " + e.lhs.to_string() + " does not match subject " + p.subject.to_string());
      return Judgment::sign(p.kind, e.rhs);
    }

    case Rule::KpowSign: {
      expect_shape(step, 1, 2);
      const auto& p = need_sign(prem[0], 0);
      const auto m = int_arg(step, 0);
      const Kind target = arg<Kind>(step, 1, "a sign kind");
      if (!strict(p.kind)) fail("premise must be POS or NEG, got " + p.to_string());
      if (target != Kind::Nneg && target != Kind::Npos) fail("target kind must be NNEG or NPOS");
      // POS w: w^m is NNEG for m >= 0 and NPOS for m <= 0; NEG swaps the two.
      const bool want_nonneg_m = (p.kind == Kind::Pos) == (target == Kind::Nneg);
      if (want_nonneg_m && m < 0) fail("side condition m >= 0 fails: m = " + std::to_string(m));
      if (!want_nonneg_m && m > 0) fail("side condition m <= 0 fails: m = " + std::to_string(m));
      return Judgment::sign(target, p.subject.pow(m));
    }

    case Rule::Contra: {
      expect_shape(step, 2, 0);
      return contra(*prem[0], *prem[1]);
    }

    case Rule::EqRefl: {
      expect_shape(step, 0, 1);
      const auto& w = word_arg(step, 0);
      return Judgment::eq(w, w);
    }

    case Rule::EqSym: {
      expect_shape(step, 1, 0);
      const auto& e = need(prem[0], Kind::Eq, 0);
      return Judgment::eq(e.rhs, e.lhs);
    }

    case Rule::EqTrans: {
      expect_shape(step, 2, 0);
      const auto& a = need(prem[0], Kind::Eq, 0);
      const auto& b = need(prem[1], Kind::Eq, 1);
      if (a.rhs != b.lhs) fail("middle terms differ: " + a.rhs.to_string() + " vs " + b.lhs.to_string());
      return Judgment::eq(a.lhs, b.rhs);
    }

    case Rule::EqPow: {
      expect_shape(step, 1, 1);
      const auto& e = need(prem[0], Kind::Eq, 0);
      const auto n = int_arg(step, 0);
      return Judgment::eq(e.lhs.pow(n), e.rhs.pow(n));
    }

    case Rule::EqCtx: {
      expect_shape(step, 1, 2);
      const auto& e = need(prem[0], Kind::Eq, 0);
      const auto& u = word_arg(step, 0);
      const auto& v = word_arg(step, 1);
      return Judgment::eq(u * e.lhs * v, u * e.rhs * v);
    }

    case Rule::EqRel: {
      expect_shape(step, 1, 4);
      const auto& e = need(prem[0], Kind::Eq, 0);
      if (!e.rhs.is_identity() || e.lhs.is_identity()) fail("premise must have the form EQ(r, 1) with r nontrivial");
      const auto& w = word_arg(step, 0);
      const auto pos = int_arg(step, 1);
      const auto shift = int_arg(step, 2);
      const auto dir = int_arg(step, 3);
      if (dir != 1 && dir != -1) fail("direction must be 1 or -1");
      try {
        return Judgment::eq(w, insert_relator(w, e.lhs, pos, shift, static_cast<int>(dir)));
      } catch (const std::out_of_range& ex) {
        fail(ex.what());
      }
    }

    case Rule::PtHyp: {
      expect_shape(step, 0, 3);
      const auto& u = word_arg(step, 0);
      const Rel r = arg<Rel>(step, 1, "a relation");
      const auto& v = word_arg(step, 2);
      return Judgment::pt(u, r, v, {step.id});
    }

    case Rule::PtApply: {
      expect_shape(step, 1, 1);
      const auto& p = need(prem[0], Kind::Pt, 0);
      const auto& g = word_arg(step, 0);
      return Judgment::pt(g * p.lhs, p.rel, g * p.rhs, p.assumptions);
    }

    case Rule::PtPow: {
      expect_shape(step, 1, 1);
      const auto& p = need(prem[0], Kind::Pt, 0);
      const auto n = int_arg(step, 0);
      if (!p.rhs.is_identity()) fail("premise must compare a word with 1 at the point");
      if (p.rel != Rel::Eq && n < 1) fail("side condition n >= 1 fails: n = " + std::to_string(n));
      return Judgment::pt(p.lhs.pow(n), p.rel, Word{}, p.assumptions);
    }

    case Rule::PtTrans: {
      expect_shape(step, 2, 0);
      const auto& a = need(prem[0], Kind::Pt, 0);
      const auto& b = need(prem[1], Kind::Pt, 1);
      if (a.rhs != b.lhs) fail("middle terms differ: " + a.rhs.to_string() + " vs " + b.lhs.to_string());
      return Judgment::pt(a.lhs, chain(a.rel, b.rel), b.rhs, merge(a.assumptions, b.assumptions));
    }

    case Rule::PtSym: {
      expect_shape(step, 1, 0);
      const auto& p = need(prem[0], Kind::Pt, 0);
      return Judgment::pt(p.rhs, mirror_rel(p.rel), p.lhs, p.assumptions);
    }

    case Rule::PtEqSubst: {
      expect_shape(step, 2, 0);
      const auto& p = need(prem[0], Kind::Pt, 0);
      const auto& e = need(prem[1], Kind::Eq, 1);
      if (e.lhs != p.rhs) fail("equation left side " + e.lhs.to_string() + " does not match " + p.rhs.to_string());
      return Judgment::pt(p.lhs, p.rel, e.rhs, p.assumptions);
    }

    case Rule::PtContra: {
      expect_shape(step, 1, 0);
      const auto& p = need(prem[0], Kind::Pt, 0);
      if (p.rel == Rel::Eq || p.lhs != p.rhs) fail("premise is not a strict self-comparison: " + p.to_string());
      return Judgment::bot(p.assumptions);
    }

    case Rule::PtCases: {
      expect_shape(step, 3, 0);
      return cases(prem, lookup);
    }

    case Rule::PtGlobalFix: {
      if (step.premises.empty()) fail("expects at least one premise");
      if (!step.args.empty()) fail("expects no arguments");
      std::set<Gen> fixed;
      std::vector<std::string> as;
      for (std::size_t i = 0; i < prem.size(); ++i) {
        const auto& p = need(prem[i], Kind::Pt, i);
        const Word& g = p.rhs.is_identity() ? p.lhs : p.rhs;
        const auto gen = single_generator(g);
        if (p.rel != Rel::Eq || !(p.lhs.is_identity() || p.rhs.is_identity()) || !gen)
          fail("premise " + std::to_string(i + 1) + " does not fix a generator: " + p.to_string());
        fixed.insert(*gen);
        as = merge(std::move(as), p.assumptions);
      }
      for (Gen g : ctx.generators)
        if (!fixed.contains(g)) fail(std::string("generator ") + gen_name(g) + " is not shown to fix the point");
      return Judgment::bot(as);
    }
  }
  fail("unknown rule");
}

}  // namespace pretzel
