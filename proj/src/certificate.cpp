#include "pretzel/certificate.hpp"

#include <map>

namespace pretzel {

const Judgment* Certificate::conclusion() const {
  if (qed) {
    for (const auto& s : steps)
      if (s.step.id == *qed) return &s.judgment;
    return nullptr;
  }
  return steps.empty() ? nullptr : &steps.back().judgment;
}

bool Certificate::proves_bot() const {
  if (failure) return false;
  const Judgment* j = conclusion();
  return j && j->kind == Kind::Bot;
}

std::vector<std::string> Certificate::open_assumptions() const {
  const Judgment* j = conclusion();
  return j ? j->assumptions : std::vector<std::string>{};
}

Certificate check_script(const ProofScript& script, const ProverContext& ctx) {
  Certificate cert;
  cert.context = ctx;
  cert.qed = script.qed;
  std::map<std::string, std::size_t, std::less<>> index;

  auto fail = [&](std::size_t i, const ScriptStep& st, std::string why) {
    cert.failure = StepFailure{i, st.id, st.rule, std::move(why)};
  };
  const JudgmentLookup lookup = [&](const std::string& id) -> const Judgment* {
    auto it = index.find(id);
    return it == index.end() ? nullptr : &cert.steps[it->second].judgment;
  };

  if (script.context && (!ctx.surgery || *script.context != *ctx.surgery || script.k_orientation != ctx.k_orientation)) {
    cert.failure = StepFailure{0, "context", Rule::Axiom, "script context does not match the checking context"};
    return cert;
  }

  for (std::size_t i = 0; i < script.steps.size(); ++i) {
    const ScriptStep& st = script.steps[i];
    if (index.contains(st.id)) {
      fail(i, st, "duplicate step id '" + st.id + "'");
      return cert;
    }
    Judgment j;
    if (st.rule == Rule::Axiom) {
      const Judgment* ax = ctx.axiom(st.id);
      if (!ax) {
        fail(i, st, "unknown axiom '" + st.id + "'");
        return cert;
      }
      j = *ax;
    } else {
      std::vector<const Judgment*> prem;
      for (const auto& p : st.premises) {
        const Judgment* pj = lookup(p);
        if (!pj) {
          fail(i, st, "premise '" + p + "' does not name an earlier step");
          return cert;
        }
        prem.push_back(pj);
      }
      try {
        j = apply_rule(ctx, st, prem, lookup);
      } catch (const RuleViolation& ex) {
        fail(i, st, ex.what());
        return cert;
      }
    }
    index.emplace(st.id, cert.steps.size());
    cert.steps.push_back({st, std::move(j), true});
  }
  if (script.qed && !index.contains(*script.qed)) {
    const ScriptStep end{.id = *script.qed};
    fail(script.steps.size(), end, "qed names no step");
  }
  return cert;
}

Certificate check_script(const ProofScript& script) {
  if (script.context) return check_script(script, ProverContext::for_surgery(*script.context, script.k_orientation));
  return check_script(script, ProverContext{});
}

nlohmann::json to_json(const Judgment& j) {
  nlohmann::json out{{"kind", kind_name(j.kind)}, {"text", j.to_string()}};
  if (is_sign(j.kind)) out["subject"] = j.subject.to_string();
  if (j.kind == Kind::Eq || j.kind == Kind::Pt) {
    out["lhs"] = j.lhs.to_string();
    out["rhs"] = j.rhs.to_string();
  }
  if (j.kind == Kind::Pt) out["relation"] = rel_keyword(j.rel);
  if (j.kind == Kind::Pt || j.kind == Kind::Bot) out["assumptions"] = j.assumptions;
  return out;
}

nlohmann::json to_json(const Certificate& cert) {
  nlohmann::json ctx = nlohmann::json::object();
  if (cert.context.surgery) {
    ctx["s"] = cert.context.surgery->s;
    ctx["p"] = cert.context.surgery->p;
    ctx["q"] = cert.context.surgery->q;
  }
  ctx["k"] = cert.context.k_orientation == Orientation::Increasing ? "increasing" : "decreasing";
  nlohmann::json axioms = nlohmann::json::array();
  for (const auto& [name, j] : cert.context.axioms) axioms.push_back({{"name", name}, {"judgment", to_json(j)}});
  ctx["axioms"] = axioms;

  nlohmann::json steps = nlohmann::json::array();
  for (const auto& s : cert.steps) {
    nlohmann::json args = nlohmann::json::array();
    for (const auto& a : s.step.args) args.push_back(arg_to_string(a));
    steps.push_back({{"id", s.step.id},
                     {"rule", rule_name(s.step.rule)},
                     {"premises", s.step.premises},
                     {"args", args},
                     {"judgment", to_json(s.judgment)},
                     {"verified", s.verified}});
  }
  nlohmann::json out{{"context", ctx},
                     {"result", cert.proves_bot() ? "BOT" : "incomplete"},
                     {"open_assumptions", cert.open_assumptions()},
                     {"steps", steps}};
  if (cert.qed) out["qed"] = *cert.qed;
  if (cert.failure) {
    out["failure"] = {{"index", cert.failure->index},
                      {"id", cert.failure->id},
                      {"rule", rule_name(cert.failure->rule)},
                      {"reason", cert.failure->reason}};
  } else {
    out["failure"] = nullptr;
  }
  return out;
}

namespace {

Word word_from_json(const nlohmann::json& j) { return parse_word(j.get<std::string>()); }

Arg arg_from_string(const std::string& a) {
  if (a.size() >= 2 && a.front() == '{' && a.back() == '}') return parse_word(a.substr(1, a.size() - 2));
  for (Kind k : {Kind::Pos, Kind::Nneg, Kind::Neg, Kind::Npos})
    if (kind_name(k) == a) return k;
  for (Rel r : {Rel::Lt, Rel::Eq, Rel::Gt})
    if (rel_keyword(r) == a) return r;
  std::size_t used = 0;
  const long long v = std::stoll(a, &used);
  if (used != a.size()) throw std::invalid_argument("bad argument '" + a + "'");
  return static_cast<std::int64_t>(v);
}

}  // namespace

Judgment judgment_from_json(const nlohmann::json& j) {
  const auto kind_s = j.at("kind").get<std::string>();
  std::optional<Kind> kind;
  for (Kind k : {Kind::Pos, Kind::Nneg, Kind::Neg, Kind::Npos, Kind::Eq, Kind::Bot, Kind::Pt})
    if (kind_name(k) == kind_s) kind = k;
  if (!kind) throw std::invalid_argument("unknown judgment kind '" + kind_s + "'");
  if (is_sign(*kind)) return Judgment::sign(*kind, word_from_json(j.at("subject")));
  if (*kind == Kind::Eq) return Judgment::eq(word_from_json(j.at("lhs")), word_from_json(j.at("rhs")));
  const auto as = j.at("assumptions").get<std::vector<std::string>>();
  if (*kind == Kind::Bot) return Judgment::bot(as);
  const auto rel = std::get<Rel>(arg_from_string(j.at("relation").get<std::string>()));
  return Judgment::pt(word_from_json(j.at("lhs")), rel, word_from_json(j.at("rhs")), as);
}

ProverContext context_from_json(const nlohmann::json& cert) {
  const auto& c = cert.at("context");
  const Orientation k = c.value("k", "increasing") == "decreasing" ? Orientation::Decreasing : Orientation::Increasing;
  if (c.contains("s"))
    return ProverContext::for_surgery(
        SurgeryContext::make(c.at("s").get<int>(), c.at("p").get<std::int64_t>(), c.at("q").get<std::int64_t>()), k);
  std::vector<std::pair<std::string, Judgment>> axioms;
  for (const auto& a : c.at("axioms")) axioms.emplace_back(a.at("name").get<std::string>(), judgment_from_json(a.at("judgment")));
  ProverContext ctx = ProverContext::with_axioms(std::move(axioms));
  ctx.k_orientation = k;
  return ctx;
}

ProofScript script_from_json(const nlohmann::json& cert) {
  ProofScript script;
  const ProverContext ctx = context_from_json(cert);
  script.context = ctx.surgery;
  script.k_orientation = ctx.k_orientation;
  for (const auto& s : cert.at("steps")) {
    ScriptStep st;
    st.id = s.at("id").get<std::string>();
    const auto rule = rule_from_name(s.at("rule").get<std::string>());
    if (!rule) throw std::invalid_argument("unknown rule '" + s.at("rule").get<std::string>() + "'");
    st.rule = *rule;
    st.premises = s.at("premises").get<std::vector<std::string>>();
    for (const auto& a : s.at("args")) st.args.push_back(arg_from_string(a.get<std::string>()));
    script.steps.push_back(std::move(st));
  }
  if (cert.contains("qed")) script.qed = cert.at("qed").get<std::string>();
  return script;
}

bool recheck_certificate(const nlohmann::json& cert) {
  try {
    if (!cert.at("failure").is_null()) return false;
    const Certificate replay = check_script(script_from_json(cert), context_from_json(cert));
    if (replay.failure) return false;
    const auto& steps = cert.at("steps");
    if (steps.size() != replay.steps.size()) return false;
    for (std::size_t i = 0; i < steps.size(); ++i)
      if (judgment_from_json(steps[i].at("judgment")) != replay.steps[i].judgment) return false;
    const bool claims_bot = cert.at("result") == "BOT";
    if (claims_bot != replay.proves_bot()) return false;
    return cert.at("open_assumptions").get<std::vector<std::string>>() == replay.open_assumptions();
  } catch (const std::exception&) {
    return false;
  }
}

}  // namespace pretzel
