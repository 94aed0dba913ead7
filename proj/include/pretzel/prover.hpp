#pragma once

// Certificate calculus for order facts about words acting on the real line
// by increasing bijections.
//
// Sign judgments quantify over every x:
//   POS w   x < w x        NNEG w   x <= w x
//   NEG w   w x < x        NPOS w   w x <= x
// so "u x < v x for all x" is POS(v u^-1). EQ(u, v) is equality in the group.
// PT(u, rel, v) compares u x0 and v x0 at one symbolic point x0 and carries
// the ids of the point hypotheses it depends on; so does BOT.

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "pretzel/knot_group.hpp"
#include "pretzel/word.hpp"

namespace pretzel {

enum class Kind { Pos, Nneg, Neg, Npos, Eq, Bot, Pt };
enum class Rel { Lt, Eq, Gt };

std::string_view kind_name(Kind k);
std::string_view rel_symbol(Rel r);
std::string_view rel_keyword(Rel r);
bool is_sign(Kind k);
/// POS <-> NEG, NNEG <-> NPOS; other kinds are fixed.
Kind mirror_kind(Kind k);
Rel mirror_rel(Rel r);

struct Judgment {
  Kind kind = Kind::Bot;
  Word subject;
  Word lhs;
  Word rhs;
  Rel rel = Rel::Eq;
  std::vector<std::string> assumptions;

  static Judgment sign(Kind k, Word w);
  static Judgment eq(Word lhs, Word rhs);
  static Judgment pt(Word lhs, Rel rel, Word rhs, std::vector<std::string> assumptions);
  static Judgment bot(std::vector<std::string> assumptions = {});

  std::string to_string() const;
  friend bool operator==(const Judgment&, const Judgment&) = default;
};

enum class Rule {
  Axiom,
  Pow,
  Mul,
  Conj,
  Inv,
  EqSubst,
  KpowSign,
  Contra,
  EqRefl,
  EqSym,
  EqTrans,
  EqPow,
  EqCtx,
  EqRel,
  PtHyp,
  PtApply,
  PtPow,
  PtTrans,
  PtSym,
  PtEqSubst,
  PtContra,
  PtCases,
  PtGlobalFix,
};

/// Certificate name, e.g. "R-KPOW-SIGN".
std::string_view rule_name(Rule r);
/// Script keyword, e.g. "kpow".
std::string_view rule_keyword(Rule r);
std::optional<Rule> rule_from_keyword(std::string_view s);
std::optional<Rule> rule_from_name(std::string_view s);
std::span<const Rule> all_rules();

using Arg = std::variant<Word, std::int64_t, Kind, Rel>;
std::string arg_to_string(const Arg& a);

struct SourcePos {
  int line = 0;
  int column = 0;
};

struct ScriptStep {
  std::string id;
  Rule rule = Rule::Axiom;
  std::vector<std::string> premises;
  std::vector<Arg> args;
  SourcePos pos;

  /// Source positions are not compared.
  friend bool operator==(const ScriptStep& a, const ScriptStep& b) {
    return a.id == b.id && a.rule == b.rule && a.premises == b.premises && a.args == b.args;
  }
};

/// Sign of the axiom on k: increasing means POS(k), decreasing NEG(k).
enum class Orientation { Increasing, Decreasing };

struct ProofScript {
  std::optional<SurgeryContext> context;
  Orientation k_orientation = Orientation::Increasing;
  std::vector<ScriptStep> steps;
  std::optional<std::string> qed;
  friend bool operator==(const ProofScript&, const ProofScript&) = default;
};

struct ProverContext {
  std::optional<SurgeryContext> surgery;
  Orientation k_orientation = Orientation::Increasing;
  std::vector<Gen> generators{Gen::c, Gen::l};
  std::vector<std::pair<std::string, Judgment>> axioms;
  std::set<Rule> disabled_rules;

  /// Axioms axC: EQ(c, k^q), axL: EQ(L, k^-p), axR: EQ(R, 1), axK: POS(k) or NEG(k).
  static ProverContext for_surgery(const SurgeryContext& ctx, Orientation k = Orientation::Increasing);
  static ProverContext with_axioms(std::vector<std::pair<std::string, Judgment>> axioms);

  const Judgment* axiom(std::string_view name) const;
};

class RuleViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using JudgmentLookup = std::function<const Judgment*(const std::string&)>;

/// Checks one inference and returns its conclusion; throws RuleViolation.
/// `premises` are the judgments named by step.premises, in order; `lookup`
/// resolves any earlier step id (needed to inspect case hypotheses).
Judgment apply_rule(const ProverContext& ctx, const ScriptStep& step, std::span<const Judgment* const> premises,
                    const JudgmentLookup& lookup);

}  // namespace pretzel
