#pragma once

// A second certificate checker that shares no code with the prover kernel:
// its own word type, parser, axioms and rule checks, reading only JSON.

#include <cstddef>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

namespace pretzel::independent {

struct Verdict {
  bool accepted = false;
  std::optional<std::size_t> failed_step;
  std::string reason;
};

/// Accepts a certificate only if it claims BOT, records no failure, every
/// step's judgment is re-derived exactly, and the open assumptions match.
Verdict verify(const nlohmann::json& certificate);

}  // namespace pretzel::independent
