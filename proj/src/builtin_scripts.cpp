#include "pretzel/builtin_scripts.hpp"

#include <string>

namespace pretzel {

namespace {

Word C(std::int64_t n = 1) { return Word::gen(Gen::c, n); }
Word L(std::int64_t n = 1) { return Word::gen(Gen::l, n); }
Word K(std::int64_t n = 1) { return Word::gen(Gen::k, n); }

class Builder {
 public:
  explicit Builder(std::vector<ScriptStep>& out) : out_(out) {}

  void axiom(const std::string& name) { out_.push_back({.id = name, .rule = Rule::Axiom}); }

  const std::string& step(std::string id, Rule r, std::vector<std::string> premises, std::vector<Arg> args = {}) {
    out_.push_back({.id = std::move(id), .rule = r, .premises = std::move(premises), .args = std::move(args)});
    return out_.back().id;
  }

 private:
  std::vector<ScriptStep>& out_;
};

std::string num(const char* stem, std::int64_t t) { return stem + std::to_string(t); }

}  // namespace

ProofScript main_script(const SurgeryContext& ctx) {
  const std::int64_t s = ctx.s, p = ctx.p, q = ctx.q;
  const std::int64_t m = -p + (2 * s + 3) * q;
  ProofScript script;
  script.context = ctx;
  Builder b(script.steps);
  for (const char* ax : {"axC", "axL", "axR", "axK"}) b.axiom(ax);

  // x < k^q x = c x
  b.step("kq", Rule::Pow, {"axK"}, {q});
  b.step("cq", Rule::EqSym, {"axC"});
  b.step("posc", Rule::EqSubst, {"kq", "cq"});

  // clc x < lcl x
  const Word w = (L() * C() * L(s) * C() * L()).inverse();
  const Word clc = C() * L() * C();
  b.step("a1", Rule::Conj, {"posc"}, {w});
  b.step("a2", Rule::Conj, {"a1"}, {clc});
  const Word a2_subject = clc * w * C() * w.inverse() * clc.inverse();
  b.step("a3", Rule::EqRel, {"axR"}, {a2_subject, std::int64_t{0}, std::int64_t{0}, std::int64_t{-1}});
  b.step("d", Rule::EqSubst, {"a2", "a3"});

  // c^t lcx < lcl^t x and clc^t x < l^t clx, unrolled
  std::string f = "d", g = "d";
  for (std::int64_t t = 1; t < s; ++t) {
    b.step(num("fc", t), Rule::Conj, {f}, {C()});
    f = b.step(num("f", t + 1), Rule::Mul, {"d", num("fc", t)});
    b.step(num("gl", t), Rule::Conj, {"d"}, {L(t)});
    g = b.step(num("g", t + 1), Rule::Mul, {num("gl", t), g});
  }

  // c x >= k^m c x, the only step with a side condition on p
  b.step("km", Rule::KpowSign, {"axK"}, {m, Kind::Npos});
  b.step("kmi", Rule::Inv, {"km"});
  b.step("e1", Rule::EqPow, {"axL"}, {std::int64_t{-1}});
  b.step("e2", Rule::EqCtx, {"e1"}, {C(-(s + 5)), C(-(s - 2))});
  b.step("e3", Rule::EqPow, {"axC"}, {-(s + 5)});
  b.step("e4", Rule::EqCtx, {"e3"}, {Word{}, K(p) * C(-(s - 2))});
  b.step("e5", Rule::EqPow, {"axC"}, {-(s - 2)});
  b.step("e6", Rule::EqCtx, {"e5"}, {K(p - q * (s + 5)), Word{}});
  b.step("e7", Rule::EqTrans, {"e2", "e4"});
  b.step("e8", Rule::EqTrans, {"e7", "e6"});
  b.step("e9", Rule::EqSym, {"e8"});
  b.step("w0", Rule::EqSubst, {"kmi", "e9"});

  // lx < cx
  b.step("w1", Rule::Conj, {g}, {C(-s) * L() * C() * L(s) * C()});
  b.step("w2", Rule::Conj, {f}, {C(-s)});
  b.step("w3", Rule::Conj, {"d"}, {L() * C(2) * L(-1)});
  b.step("w4", Rule::Conj, {"posc"}, {L() * C(2) * L(-1)});
  b.step("x1", Rule::Mul, {"w0", "w1"});
  b.step("x2", Rule::Mul, {"x1", "w2"});
  b.step("x3", Rule::Mul, {"x2", "w3"});
  b.step("lx", Rule::Mul, {"x3", "w4"});

  // cl x < lc x < clx
  b.step("yb", Rule::Conj, {"lx"}, {L() * C()});
  b.step("yc", Rule::Conj, {"d"}, {C(-1)});
  b.step("yd", Rule::Conj, {"lx"}, {C(-1)});
  b.step("z1", Rule::Mul, {"yd", "yc"});
  b.step("z2", Rule::Mul, {"z1", "yb"});
  b.step("z3", Rule::Mul, {"z2", "d"});
  b.step("one", Rule::EqRefl, {}, {Word{}});
  b.step("bot", Rule::Contra, {"z3", "one"});
  script.qed = "bot";
  return script;
}

namespace {

// One strict branch: from PT(1 < l) reach PT(1 < 1). The ">" branch is its mirror.
void strict_branch(Builder& b, const std::string& pre, const std::string& hyp, const SurgeryContext& ctx) {
  const std::int64_t s = ctx.s;
  // x0 < l x0 < ... < l^s x0
  std::string lt = hyp;
  for (std::int64_t t = 2; t <= s; ++t) {
    b.step(pre + num("la", t), Rule::PtApply, {lt}, {L()});
    lt = b.step(pre + num("l", t), Rule::PtTrans, {hyp, pre + num("la", t)});
  }
  // Walk the longitude from the right, starting at x0 = c^-(2s+9) x0.
  const std::vector<std::pair<Word, std::string>> factors = {
      {L(), hyp}, {C(), "hc1"}, {L(s), lt}, {C(), "hc1"}, {L(s), lt}, {C(), "hc1"}, {L(), hyp}, {C(-(2 * s - 2)), "hs1"}};
  std::string run = "ht1";
  int i = 0;
  for (const auto& [g, fact] : factors) {
    ++i;
    b.step(pre + num("ap", i), Rule::PtApply, {run}, {g});
    run = b.step(pre + num("r", i), Rule::PtTrans, {fact, pre + num("ap", i)});
  }
  b.step(pre + "rl", Rule::PtEqSubst, {run, "axL"});
  b.step(pre + "rk", Rule::PtTrans, {pre + "rl", "hp"});
  b.step(pre + "bot", Rule::PtContra, {pre + "rk"});
}

}  // namespace

ProofScript fixedpoint_script(const SurgeryContext& ctx) {
  const std::int64_t s = ctx.s, p = ctx.p, q = ctx.q;
  ProofScript script;
  script.context = ctx;
  Builder b(script.steps);
  b.axiom("axC");
  b.axiom("axL");

  // k x0 = x0 gives c x0 = x0 and k^-p x0 = x0
  b.step("h", Rule::PtHyp, {}, {K(), Rel::Eq, Word{}});
  b.step("hq", Rule::PtPow, {"h"}, {q});
  b.step("hq1", Rule::PtSym, {"hq"});
  b.step("cq", Rule::EqSym, {"axC"});
  b.step("hc1", Rule::PtEqSubst, {"hq1", "cq"});
  b.step("hc", Rule::PtSym, {"hc1"});
  b.step("hp", Rule::PtPow, {"h"}, {-p});
  b.step("ht0", Rule::PtPow, {"hc"}, {-(2 * s + 9)});
  b.step("ht1", Rule::PtSym, {"ht0"});
  b.step("hs0", Rule::PtPow, {"hc"}, {-(2 * s - 2)});
  b.step("hs1", Rule::PtSym, {"hs0"});

  b.step("cl", Rule::PtHyp, {}, {Word{}, Rel::Lt, L()});
  b.step("ce", Rule::PtHyp, {}, {Word{}, Rel::Eq, L()});
  b.step("cg", Rule::PtHyp, {}, {Word{}, Rel::Gt, L()});

  b.step("le", Rule::PtSym, {"ce"});
  b.step("be", Rule::PtGlobalFix, {"hc", "le"});

  strict_branch(b, "lt_", "cl", ctx);

  std::vector<ScriptStep> gt;
  Builder bg(gt);
  strict_branch(bg, "gt_", "cg", ctx);
  for (auto& st : mirror_steps(std::move(gt))) script.steps.push_back(std::move(st));

  b.step("bot", Rule::PtCases, {"lt_bot", "be", "gt_bot"});
  script.qed = "bot";
  return script;
}

std::vector<ScriptStep> mirror_steps(std::vector<ScriptStep> steps) {
  for (auto& st : steps) {
    for (auto& a : st.args) {
      if (auto* k = std::get_if<Kind>(&a)) *k = mirror_kind(*k);
      if (auto* r = std::get_if<Rel>(&a)) *r = mirror_rel(*r);
    }
  }
  return steps;
}

ProofScript mirror(const ProofScript& script) {
  ProofScript out = script;
  out.k_orientation =
      script.k_orientation == Orientation::Increasing ? Orientation::Decreasing : Orientation::Increasing;
  out.steps = mirror_steps(std::move(out.steps));
  return out;
}

Certificate builtin_script_main(const SurgeryContext& ctx) {
  return check_script(main_script(ctx), ProverContext::for_surgery(ctx));
}

Certificate builtin_script_fixedpoint(const SurgeryContext& ctx, const std::set<Rule>& disabled) {
  ProverContext pc = ProverContext::for_surgery(ctx);
  pc.disabled_rules = disabled;
  return check_script(fixedpoint_script(ctx), pc);
}

}  // namespace pretzel
