#include <doctest.h>

#include <fstream>
#include <sstream>

#include "pretzel/builtin_scripts.hpp"
#include "pretzel/certificate.hpp"
#include "pretzel/independent_verifier.hpp"
#include "pretzel/proof_script.hpp"
#include "pretzel/search.hpp"

using namespace pretzel;
using nlohmann::json;

namespace {

std::string shipped_script() {
  std::ifstream in(PRETZEL_SOURCE_DIR "/scripts/main_s3_p9_q1.proof");
  REQUIRE(in);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json main_cert() { return to_json(builtin_script_main(SurgeryContext::make(3, 9, 1))); }

}  // namespace

TEST_CASE("parsing a single step") {
  const auto sc = parse_script("step f1 = pow axK 3\n");
  REQUIRE(sc.steps.size() == 1);
  CHECK(sc.steps[0].id == "f1");
  CHECK(sc.steps[0].rule == Rule::Pow);
  CHECK(sc.steps[0].premises == std::vector<std::string>{"axK"});
  CHECK(sc.steps[0].args == std::vector<Arg>{std::int64_t{3}});
  CHECK(sc.steps[0].pos.line == 1);
}

TEST_CASE("context, comments, words, kinds and relations") {
  const auto sc = parse_script(
      "# header\n"
      "context s=4 p=23 q=2 k=decreasing\n"
      "axiom axK\n"
      "step a = conj axK {l^-1 c^-1}   # trailing comment\n"
      "step b = kpow axK -2 NNEG\n"
      "step h = pt-hyp {k} eq {}\n"
      "qed b\n");
  REQUIRE(sc.context);
  CHECK(*sc.context == SurgeryContext::make(4, 23, 2));
  CHECK(sc.k_orientation == Orientation::Decreasing);
  REQUIRE(sc.steps.size() == 4);
  CHECK(sc.steps[1].args == std::vector<Arg>{parse_word("l^-1 c^-1")});
  CHECK(sc.steps[2].args == std::vector<Arg>{std::int64_t{-2}, Kind::Nneg});
  CHECK(sc.steps[3].args == std::vector<Arg>{Word::gen(Gen::k), Rel::Eq, Word{}});
  CHECK(sc.qed == "b");
}

TEST_CASE("parse errors carry positions") {
  try {
    parse_script("axiom axK\nstep x = pow axK $\n");
    FAIL("expected a parse error");
  } catch (const ScriptParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 18);
  }
  CHECK_THROWS_AS(parse_script("step x = frobnicate axK\n"), ScriptParseError);
  CHECK_THROWS_AS(parse_script("step x = conj axK {c x}\n"), ScriptParseError);
  CHECK_THROWS_AS(parse_script("step x = pow 3 axK\n"), ScriptParseError);
  CHECK_THROWS_AS(parse_script("context s=3 p=9\n"), ScriptParseError);
}

TEST_CASE("the shipped script round-trips and matches the built-in derivation") {
  const auto text = shipped_script();
  const auto once = parse_script(text);
  const auto twice = parse_script(print_script(once));
  CHECK(once == twice);
  CHECK(print_script(twice) == print_script(once));
  CHECK(once == main_script(SurgeryContext::make(3, 9, 1)));
  CHECK(check_script(once).proves_bot());
}

TEST_CASE("check_script failure modes") {
  const auto empty = check_script(ProofScript{});
  CHECK(empty.steps.empty());
  CHECK_FALSE(empty.proves_bot());

  const auto ctx = ProverContext::for_surgery(SurgeryContext::make(3, 9, 1));
  auto dup = check_script(parse_script("axiom axK\nstep a = pow axK 2\nstep a = pow axK 3\n"), ctx);
  REQUIRE(dup.failure);
  CHECK(dup.failure->index == 2);

  auto missing = check_script(parse_script("axiom axK\nstep a = pow nope 2\n"), ctx);
  REQUIRE(missing.failure);
  CHECK(missing.failure->id == "a");

  auto unknown = check_script(parse_script("axiom axQ\n"), ctx);
  CHECK(unknown.failure);

  auto mismatch = check_script(parse_script("context s=3 p=10 q=1\naxiom axK\n"), ctx);
  CHECK(mismatch.failure);

  auto forward = check_script(parse_script("axiom axK\nstep a = pow b 2\nstep b = pow axK 2\n"), ctx);
  REQUIRE(forward.failure);
  CHECK(forward.failure->id == "a");
}

TEST_CASE("perturbing one premise is rejected unless it only strengthens") {
  // q = 2 so that k^q and k differ
  const auto sc = main_script(SurgeryContext::make(4, 23, 2));
  const auto good = check_script(sc);
  auto judgment_of = [&](const std::string& id) {
    for (const auto& st : good.steps)
      if (st.step.id == id) return st.judgment;
    return *good.context.axiom(id);
  };
  std::size_t rejected = 0, strengthened = 0;
  for (std::size_t i = 0; i < sc.steps.size(); ++i) {
    auto bad = sc;
    if (bad.steps[i].premises.empty()) continue;
    const std::string old = bad.steps[i].premises[0];
    bad.steps[i].premises[0] = old == "axK" ? "axC" : "axK";
    const auto cert = check_script(bad);
    if (!cert.proves_bot()) {
      ++rejected;
      continue;
    }
    // POS k in place of NNEG k is a sound strengthening
    INFO("step ", bad.steps[i].id);
    CHECK(judgment_of(old) == Judgment::sign(Kind::Nneg, parse_word("k")));
    ++strengthened;
  }
  CHECK(rejected >= 40);
  CHECK(strengthened <= 1);
}

TEST_CASE("certificate JSON") {
  const json j = main_cert();
  CHECK(j["result"] == "BOT");
  CHECK(j["failure"].is_null());
  CHECK(j["context"]["s"] == 3);
  CHECK(j["steps"].size() == builtin_script_main(SurgeryContext::make(3, 9, 1)).steps.size());
  for (const auto& st : j["steps"]) {
    CHECK(st.contains("rule"));
    CHECK(st.contains("premises"));
    CHECK(st.contains("args"));
    CHECK(st["verified"] == true);
  }
  CHECK(recheck_certificate(j));
  CHECK(script_from_json(j) == main_script(SurgeryContext::make(3, 9, 1)));
  for (const auto& st : j["steps"]) CHECK(judgment_from_json(st["judgment"]).to_string() == st["judgment"]["text"]);

  json bad = j;
  bad["steps"][5]["judgment"] = to_json(Judgment::sign(Kind::Pos, parse_word("l")));
  CHECK_FALSE(recheck_certificate(bad));

  const json low = to_json(builtin_script_main(SurgeryContext::make(3, 8, 1)));
  CHECK(low["result"] == "incomplete");
  CHECK(low["failure"]["rule"] == "R-KPOW-SIGN");
}

TEST_CASE("independent verifier accepts the built-in certificates") {
  const auto sc = SurgeryContext::make(3, 9, 1);
  CHECK(independent::verify(main_cert()).accepted);
  CHECK(independent::verify(to_json(builtin_script_main(SurgeryContext::make(6, 46, 3)))).accepted);
  CHECK(independent::verify(to_json(builtin_script_fixedpoint(sc))).accepted);
  CHECK(independent::verify(to_json(check_script(mirror(main_script(sc))))).accepted);
}

TEST_CASE("independent verifier rejects tampering") {
  const json j = main_cert();

  json claimed = j;
  claimed["result"] = "incomplete";
  CHECK_FALSE(independent::verify(claimed).accepted);

  json low = to_json(builtin_script_main(SurgeryContext::make(3, 8, 1)));
  CHECK_FALSE(independent::verify(low).accepted);
  low["result"] = "BOT";
  low["failure"] = nullptr;
  CHECK_FALSE(independent::verify(low).accepted);

  // threshold certificate replayed under a smaller p
  json shifted = j;
  shifted["context"]["p"] = 8;
  const auto v = independent::verify(shifted);
  CHECK_FALSE(v.accepted);

  for (std::size_t i = 0; i < j["steps"].size(); ++i) {
    if (j["steps"][i]["rule"] != "R-CONJ") continue;
    json m = j;
    m["steps"][i]["args"][0] = "{c l k}";
    const auto verdict = independent::verify(m);
    CHECK_FALSE(verdict.accepted);
    REQUIRE(verdict.failed_step);
    CHECK(*verdict.failed_step == i);
    break;
  }
}

TEST_CASE("search finds a two-step contradiction") {
  const auto ctx = ProverContext::with_axioms(
      {{"a", Judgment::sign(Kind::Pos, parse_word("c"))}, {"b", Judgment::eq(parse_word("c"), Word{})}});
  const auto res = search(ctx, {});
  REQUIRE(res.certificate);
  CHECK(res.certificate->proves_bot());
  std::size_t derived = 0;
  for (const auto& st : res.certificate->steps) derived += st.step.rule != Rule::Axiom;
  CHECK(derived <= 2);
  CHECK(search(ctx, {}).certificate->steps.size() == res.certificate->steps.size());
}

TEST_CASE("search with no budget is exhausted") {
  const auto ctx = ProverContext::for_surgery(SurgeryContext::make(3, 9, 1));
  const auto res = search(ctx, {.max_steps = 0});
  CHECK(res.exhausted);
  CHECK_FALSE(res.certificate);
  CHECK(res.derived == 0);
}

TEST_CASE("search is deterministic and respects the word bound") {
  const auto ctx = ProverContext::for_surgery(SurgeryContext::make(3, 9, 1));
  const auto a = search(ctx, {.max_steps = 200, .max_word_len = 4});
  const auto b = search(ctx, {.max_steps = 200, .max_word_len = 4});
  CHECK(a.derived == b.derived);
  CHECK(a.exhausted == b.exhausted);
}
