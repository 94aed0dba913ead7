#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "pretzel/prover.hpp"

namespace pretzel {

struct CertificateStep {
  ScriptStep step;
  Judgment judgment;
  bool verified = false;
};

struct StepFailure {
  std::size_t index = 0;  // position in the script
  std::string id;
  Rule rule = Rule::Axiom;
  std::string reason;
};

struct Certificate {
  ProverContext context;
  std::vector<CertificateStep> steps;  // verified prefix
  std::optional<StepFailure> failure;
  std::optional<std::string> qed;

  /// The concluding judgment: the qed step, or the last step.
  const Judgment* conclusion() const;
  /// No failure and the conclusion is BOT.
  bool proves_bot() const;
  /// Point hypotheses the conclusion still depends on.
  std::vector<std::string> open_assumptions() const;
};

/// Replays every step against `ctx`, stopping at the first invalid one.
/// A context line in the script must agree with `ctx`.
Certificate check_script(const ProofScript& script, const ProverContext& ctx);
/// Uses the script's own context line, or an empty axiom set without one.
Certificate check_script(const ProofScript& script);

nlohmann::json to_json(const Judgment& j);
nlohmann::json to_json(const Certificate& cert);

/// Inverse of to_json for judgments; throws std::invalid_argument.
Judgment judgment_from_json(const nlohmann::json& j);
/// Script and checking context recorded in a certificate; throws on malformed input.
ProofScript script_from_json(const nlohmann::json& cert);
ProverContext context_from_json(const nlohmann::json& cert);
/// Replays a certificate with the kernel: every claimed judgment must be
/// reproduced, there must be no recorded failure, and a claimed BOT must hold.
bool recheck_certificate(const nlohmann::json& cert);

}  // namespace pretzel
