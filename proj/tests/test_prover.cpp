#include <doctest.h>

#include "pretzel/builtin_scripts.hpp"
#include "pretzel/certificate.hpp"
#include "pretzel/prover.hpp"

using namespace pretzel;

namespace {

Word w(const char* text) { return parse_word(text); }

Judgment run(Rule r, std::vector<Judgment> prem, std::vector<Arg> args = {}, const ProverContext& ctx = {}) {
  ScriptStep st{.id = "t", .rule = r, .args = std::move(args)};
  std::vector<const Judgment*> ptrs;
  for (std::size_t i = 0; i < prem.size(); ++i) {
    st.premises.push_back("p" + std::to_string(i));
    ptrs.push_back(&prem[i]);
  }
  return apply_rule(ctx, st, ptrs, [&](const std::string& id) -> const Judgment* {
    if (id.size() < 2 || id[0] != 'p') return nullptr;
    const auto i = std::stoul(id.substr(1));
    return i < prem.size() ? &prem[i] : nullptr;
  });
}

const Judgment posk = Judgment::sign(Kind::Pos, w("k"));

}  // namespace

TEST_CASE("R-POW") {
  CHECK(run(Rule::Pow, {posk}, {std::int64_t{3}}) == Judgment::sign(Kind::Pos, w("k^3")));
  CHECK_THROWS_AS(run(Rule::Pow, {posk}, {std::int64_t{0}}), RuleViolation);
  CHECK(run(Rule::Pow, {Judgment::sign(Kind::Nneg, w("c l"))}, {std::int64_t{0}}) ==
        Judgment::sign(Kind::Nneg, Word{}));
  CHECK_THROWS_AS(run(Rule::Pow, {Judgment::eq(w("c"), w("c"))}, {std::int64_t{2}}), RuleViolation);
}

TEST_CASE("R-POW then R-EQSUBST turns POS k into POS c when c = k^q") {
  const auto ctx = ProverContext::for_surgery(SurgeryContext::make(4, 23, 2));
  const Judgment kq = run(Rule::Pow, {posk}, {std::int64_t{2}});
  const Judgment flipped = run(Rule::EqSym, {*ctx.axiom("axC")});
  CHECK(run(Rule::EqSubst, {kq, flipped}) == Judgment::sign(Kind::Pos, w("c")));
  CHECK_THROWS_AS(run(Rule::EqSubst, {kq, *ctx.axiom("axC")}), RuleViolation);
}

TEST_CASE("R-MUL") {
  const auto posc = Judgment::sign(Kind::Pos, w("c"));
  CHECK(run(Rule::Mul, {posc, posc}) == Judgment::sign(Kind::Pos, w("c^2")));
  CHECK(run(Rule::Mul, {posc, Judgment::sign(Kind::Nneg, w("l"))}) == Judgment::sign(Kind::Pos, w("c l")));
  CHECK(run(Rule::Mul, {Judgment::sign(Kind::Npos, w("l")), Judgment::sign(Kind::Npos, w("c"))}) ==
        Judgment::sign(Kind::Npos, w("l c")));
  CHECK_THROWS_AS(run(Rule::Mul, {posc, Judgment::sign(Kind::Neg, w("l"))}), RuleViolation);
}

TEST_CASE("R-CONJ and R-INV") {
  CHECK(run(Rule::Conj, {posk}, {w("c l")}) == Judgment::sign(Kind::Pos, w("c l k l^-1 c^-1")));
  CHECK(run(Rule::Inv, {posk}) == Judgment::sign(Kind::Neg, w("k^-1")));
  CHECK(run(Rule::Inv, {Judgment::sign(Kind::Nneg, w("c l"))}) == Judgment::sign(Kind::Npos, w("l^-1 c^-1")));
}

TEST_CASE("R-KPOW-SIGN side condition") {
  CHECK(run(Rule::KpowSign, {posk}, {std::int64_t{0}, Kind::Npos}) == Judgment::sign(Kind::Npos, Word{}));
  CHECK(run(Rule::KpowSign, {posk}, {std::int64_t{-3}, Kind::Npos}) == Judgment::sign(Kind::Npos, w("k^-3")));
  CHECK(run(Rule::KpowSign, {posk}, {std::int64_t{2}, Kind::Nneg}) == Judgment::sign(Kind::Nneg, w("k^2")));
  CHECK_THROWS_WITH_AS(run(Rule::KpowSign, {posk}, {std::int64_t{1}, Kind::Npos}),
                       doctest::Contains("m = 1"), RuleViolation);
  // NEG swaps the two sides
  const auto negk = Judgment::sign(Kind::Neg, w("k"));
  CHECK(run(Rule::KpowSign, {negk}, {std::int64_t{2}, Kind::Npos}) == Judgment::sign(Kind::Npos, w("k^2")));
  CHECK_THROWS_AS(run(Rule::KpowSign, {Judgment::sign(Kind::Nneg, w("k"))}, {std::int64_t{0}, Kind::Npos}),
                  RuleViolation);
}

TEST_CASE("R-CONTRA") {
  const auto posc = Judgment::sign(Kind::Pos, w("c"));
  CHECK(run(Rule::Contra, {posc, Judgment::sign(Kind::Npos, w("c"))}).kind == Kind::Bot);
  CHECK(run(Rule::Contra, {posc, Judgment::eq(w("c"), Word{})}).kind == Kind::Bot);
  CHECK_THROWS_AS(run(Rule::Contra, {posc, Judgment::sign(Kind::Nneg, w("c"))}), RuleViolation);
  CHECK_THROWS_AS(run(Rule::Contra, {posc, Judgment::sign(Kind::Npos, w("l"))}), RuleViolation);
}

TEST_CASE("equality rules") {
  const auto e = Judgment::eq(w("c"), w("k^2"));
  CHECK(run(Rule::EqRefl, {}, {w("c l")}) == Judgment::eq(w("c l"), w("c l")));
  CHECK(run(Rule::EqSym, {e}) == Judgment::eq(w("k^2"), w("c")));
  CHECK(run(Rule::EqTrans, {e, Judgment::eq(w("k^2"), w("l"))}) == Judgment::eq(w("c"), w("l")));
  CHECK_THROWS_AS(run(Rule::EqTrans, {e, e}), RuleViolation);
  CHECK(run(Rule::EqPow, {e}, {std::int64_t{-1}}) == Judgment::eq(w("c^-1"), w("k^-2")));
  CHECK(run(Rule::EqCtx, {e}, {w("l"), w("c")}) == Judgment::eq(w("l c c"), w("l k^2 c")));
}

TEST_CASE("R-EQ-REL inserts the relator") {
  const auto r = Judgment::eq(relator(3), Word{});
  CHECK(run(Rule::EqRel, {r}, {Word{}, std::int64_t{0}, std::int64_t{0}, std::int64_t{1}}) ==
        Judgment::eq(Word{}, relator(3)));
  CHECK_THROWS_AS(run(Rule::EqRel, {r}, {Word{}, std::int64_t{2}, std::int64_t{0}, std::int64_t{1}}), RuleViolation);
  CHECK_THROWS_AS(run(Rule::EqRel, {Judgment::eq(w("c"), w("l"))}, {Word{}, std::int64_t{0}, std::int64_t{0}, std::int64_t{1}}),
                  RuleViolation);
}

TEST_CASE("point rules") {
  const auto h = Judgment::pt(w("l"), Rel::Lt, Word{}, {"h"});
  CHECK(run(Rule::PtHyp, {}, {w("k"), Rel::Eq, Word{}}) == Judgment::pt(w("k"), Rel::Eq, Word{}, {"t"}));
  CHECK(run(Rule::PtApply, {h}, {w("c")}) == Judgment::pt(w("c l"), Rel::Lt, w("c"), {"h"}));
  CHECK(run(Rule::PtPow, {h}, {std::int64_t{3}}) == Judgment::pt(w("l^3"), Rel::Lt, Word{}, {"h"}));
  CHECK_THROWS_AS(run(Rule::PtPow, {h}, {std::int64_t{-1}}), RuleViolation);
  CHECK(run(Rule::PtSym, {h}) == Judgment::pt(Word{}, Rel::Gt, w("l"), {"h"}));

  const auto g = Judgment::pt(Word{}, Rel::Eq, w("c"), {"g"});
  CHECK(run(Rule::PtTrans, {h, g}) == Judgment::pt(w("l"), Rel::Lt, w("c"), {"g", "h"}));
  CHECK_THROWS_AS(run(Rule::PtTrans, {h, Judgment::pt(Word{}, Rel::Gt, w("c"), {})}), RuleViolation);
  CHECK(run(Rule::PtEqSubst, {h, Judgment::eq(Word{}, w("c c^-1"))}) == h);
  CHECK(run(Rule::PtContra, {Judgment::pt(w("c"), Rel::Lt, w("c"), {"h"})}) == Judgment::bot({"h"}));
  CHECK_THROWS_AS(run(Rule::PtContra, {Judgment::pt(w("c"), Rel::Eq, w("c"), {})}), RuleViolation);
}

TEST_CASE("R-PT-GLOBALFIX needs every generator fixed") {
  const auto fc = Judgment::pt(w("c"), Rel::Eq, Word{}, {"a"});
  const auto fl = Judgment::pt(Word{}, Rel::Eq, w("l"), {"b"});
  CHECK(run(Rule::PtGlobalFix, {fc, fl}) == Judgment::bot({"a", "b"}));
  CHECK_THROWS_AS(run(Rule::PtGlobalFix, {fc}), RuleViolation);
  CHECK_THROWS_AS(run(Rule::PtGlobalFix, {fc, Judgment::pt(w("l"), Rel::Lt, Word{}, {})}), RuleViolation);
}

TEST_CASE("R-PT-CASES needs the three branches of one comparison") {
  const auto lt = Judgment::pt(w("l"), Rel::Lt, Word{}, {"p0"});
  const auto eq = Judgment::pt(w("l"), Rel::Eq, Word{}, {"p1"});
  const auto gt = Judgment::pt(w("l"), Rel::Gt, Word{}, {"p2"});
  // premises of cases are BOT facts; the hypotheses are found by id
  ScriptStep st{.id = "cases", .rule = Rule::PtCases, .premises = {"b0", "b1", "b2"}};
  const std::vector<Judgment> hyps{lt, eq, gt};
  const std::vector<Judgment> bots{Judgment::bot({"h", "p0"}), Judgment::bot({"p1"}), Judgment::bot({"h", "p2"})};
  auto lookup = [&](const std::string& id) -> const Judgment* {
    if (id.size() == 2 && id[0] == 'p') return &hyps[static_cast<std::size_t>(id[1] - '0')];
    return nullptr;
  };
  std::vector<const Judgment*> ptrs{&bots[0], &bots[1], &bots[2]};
  CHECK(apply_rule({}, st, ptrs, lookup) == Judgment::bot({"h"}));

  const std::vector<Judgment> short_bots{bots[0], bots[0], bots[2]};
  std::vector<const Judgment*> bad{&short_bots[0], &short_bots[1], &short_bots[2]};
  CHECK_THROWS_AS(apply_rule({}, st, bad, lookup), RuleViolation);
}

TEST_CASE("rule names and keywords") {
  for (Rule r : all_rules()) {
    CHECK(rule_from_name(rule_name(r)) == r);
    CHECK(rule_from_keyword(rule_keyword(r)) == r);
  }
  CHECK(rule_name(Rule::KpowSign) == std::string("R-KPOW-SIGN"));
}

TEST_CASE("main certificate exists exactly at and above the threshold") {
  for (const auto& [s, p, q] : std::vector<std::array<std::int64_t, 3>>{{3, 9, 1}, {4, 23, 2}, {3, 10, 1}, {5, 40, 3}}) {
    const auto cert = builtin_script_main(SurgeryContext::make(static_cast<int>(s), p, q));
    CHECK(cert.proves_bot());
    CHECK(cert.open_assumptions().empty());
  }
  const auto low = builtin_script_main(SurgeryContext::make(3, 8, 1));
  CHECK_FALSE(low.proves_bot());
  REQUIRE(low.failure);
  CHECK(low.failure->rule == Rule::KpowSign);
  CHECK(low.failure->reason.find("m = 1") != std::string::npos);
}

TEST_CASE("at the threshold the side-condition step yields NPOS of the identity") {
  const auto cert = builtin_script_main(SurgeryContext::make(3, 9, 1));
  bool seen = false;
  for (const auto& st : cert.steps)
    if (st.step.rule == Rule::KpowSign) {
      CHECK(st.judgment == Judgment::sign(Kind::Npos, Word{}));
      seen = true;
    }
  CHECK(seen);
}

TEST_CASE("mirror is an involution and preserves validity") {
  const auto sc = SurgeryContext::make(3, 9, 1);
  const auto script = main_script(sc);
  CHECK(mirror(mirror(script)) == script);
  CHECK(mirror(ProofScript{}).steps.empty());
  const auto m = mirror(script);
  CHECK(m.k_orientation == Orientation::Decreasing);
  const auto cert = check_script(m);
  CHECK(cert.proves_bot());
  CHECK(*cert.context.axiom("axK") == Judgment::sign(Kind::Neg, w("k")));
  // the mirrored script is not a proof under POS(k)
  CHECK_FALSE(check_script(m, ProverContext::for_surgery(sc)).proves_bot());
}

TEST_CASE("fixed-point certificate") {
  const auto sc = SurgeryContext::make(3, 9, 1);
  const auto cert = builtin_script_fixedpoint(sc);
  CHECK(cert.proves_bot());
  CHECK(cert.open_assumptions() == std::vector<std::string>{"h"});

  const auto crippled = builtin_script_fixedpoint(sc, {Rule::PtGlobalFix});
  CHECK_FALSE(crippled.proves_bot());
  REQUIRE(crippled.failure);
  CHECK(crippled.failure->rule == Rule::PtGlobalFix);
}

TEST_CASE("the strict branch of the fixed-point script grows linearly in s") {
  auto branch = [](int s) {
    std::size_t n = 0;
    for (const auto& st : fixedpoint_script(SurgeryContext::make(s, 2 * s + 3, 1)).steps)
      if (st.id.rfind("lt_", 0) == 0) ++n;
    return static_cast<long>(n);
  };
  const long d = branch(4) - branch(3);
  CHECK(d > 0);
  for (int s = 4; s <= 9; ++s) CHECK(branch(s + 1) - branch(s) == d);
}
