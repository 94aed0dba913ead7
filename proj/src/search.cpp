#include "pretzel/search.hpp"

#include <functional>
#include <set>
#include <unordered_map>
#include <unordered_set>

namespace pretzel {

namespace {

struct Fact {
  ScriptStep step;
  Judgment judgment;
};

std::int64_t longest_word(const Judgment& j) {
  return std::max({j.subject.length(), j.lhs.length(), j.rhs.length()});
}

class Engine {
 public:
  Engine(const ProverContext& ctx, const SearchBudget& budget) : ctx_(ctx), budget_(budget) {
    for (const auto& [name, j] : ctx.axioms) {
      seen_.insert(j.to_string());
      index_[name] = facts_.size();
      facts_.push_back({ScriptStep{.id = name, .rule = Rule::Axiom}, j});
    }
    for (Gen g : {Gen::c, Gen::l, Gen::k}) {
      letters_.push_back(Word::gen(g, 1));
      letters_.push_back(Word::gen(g, -1));
    }
  }

  SearchResult run() {
    SearchResult res;
    while (!bot_ && derived_ < budget_.max_steps) {
      const std::size_t before = facts_.size();
      round(before);
      if (facts_.size() == before) break;  // saturated
    }
    res.derived = derived_;
    if (!bot_) {
      res.exhausted = true;
      return res;
    }
    res.certificate = check_script(closure(*bot_), ctx_);
    return res;
  }

 private:
  bool full() const { return bot_ || derived_ >= budget_.max_steps; }

  void attempt(Rule r, std::vector<std::size_t> prem, std::vector<Arg> args) {
    if (full() || ctx_.disabled_rules.contains(r)) return;
    ScriptStep st{.id = "s" + std::to_string(facts_.size()), .rule = r, .args = std::move(args)};
    std::vector<const Judgment*> pj;
    for (auto i : prem) {
      st.premises.push_back(facts_[i].step.id);
      pj.push_back(&facts_[i].judgment);
    }
    Judgment j;
    try {
      j = apply_rule(ctx_, st, pj, [this](const std::string& id) -> const Judgment* {
        auto it = index_.find(id);
        return it == index_.end() ? nullptr : &facts_[it->second].judgment;
      });
    } catch (const RuleViolation&) {
      return;
    }
    if (longest_word(j) > budget_.max_word_len) return;
    if (!seen_.insert(j.to_string()).second) return;
    index_[st.id] = facts_.size();
    facts_.push_back({std::move(st), std::move(j)});
    ++derived_;
    if (facts_.back().judgment.kind == Kind::Bot) bot_ = facts_.size() - 1;
  }

  void round(std::size_t n) {
    auto kind = [&](std::size_t i) { return facts_[i].judgment.kind; };
    for (Rule r : all_rules()) {
      for (std::size_t i = 0; i < n && !full(); ++i) {
        const bool sign = is_sign(kind(i));
        const bool eq = kind(i) == Kind::Eq;
        switch (r) {
          case Rule::Pow:
            if (sign)
              for (std::int64_t e : {2, 3}) attempt(r, {i}, {e});
            break;
          case Rule::Conj:
            if (sign)
              for (const auto& w : letters_) attempt(r, {i}, {w});
            break;
          case Rule::Inv:
          case Rule::EqSym:
            if (sign || eq) attempt(r, {i}, {});
            break;
          case Rule::KpowSign:
            if (sign)
              for (std::int64_t m : {-1, 0, 1})
                for (Kind k : {Kind::Nneg, Kind::Npos}) attempt(r, {i}, {m, k});
            break;
          case Rule::EqPow:
            if (eq) attempt(r, {i}, {std::int64_t{-1}});
            break;
          case Rule::Mul:
          case Rule::EqSubst:
          case Rule::Contra:
          case Rule::EqTrans:
            for (std::size_t k = 0; k < n && !full(); ++k) attempt(r, {i, k}, {});
            break;
          default:
            break;
        }
      }
    }
  }

  ProofScript closure(std::size_t goal) {
    std::set<std::size_t> need;
    std::function<void(std::size_t)> mark = [&](std::size_t i) {
      if (!need.insert(i).second) return;
      for (const auto& p : facts_[i].step.premises) mark(index_.at(p));
    };
    mark(goal);
    ProofScript script;
    script.context = ctx_.surgery;
    script.k_orientation = ctx_.k_orientation;
    for (auto i : need) script.steps.push_back(facts_[i].step);
    script.qed = facts_[goal].step.id;
    return script;
  }

  const ProverContext& ctx_;
  SearchBudget budget_;
  std::vector<Fact> facts_;
  std::unordered_map<std::string, std::size_t> index_;
  std::unordered_set<std::string> seen_;
  std::vector<Word> letters_;
  std::size_t derived_ = 0;
  std::optional<std::size_t> bot_;
};

}  // namespace

SearchResult search(const ProverContext& ctx, const SearchBudget& budget) {
  return Engine(ctx, budget).run();
}

}  // namespace pretzel
