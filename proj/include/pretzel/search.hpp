#pragma once

// Bounded breadth-first forward chaining over the sign and equality rules.

#include <cstddef>
#include <cstdint>
#include <optional>

#include "pretzel/certificate.hpp"
#include "pretzel/prover.hpp"

namespace pretzel {

struct SearchBudget {
  std::size_t max_steps = 1000;      // derived facts, axioms excluded
  std::int64_t max_word_len = 12;    // longest word kept in any fact
};

struct SearchResult {
  std::optional<Certificate> certificate;  // set when BOT was reached
  bool exhausted = false;
  std::size_t derived = 0;
};

/// Rounds apply the rules in declaration order to earlier facts in order of
/// discovery, with word arguments in shortlex order; the first BOT found is
/// returned as a certificate of its ancestors only.
SearchResult search(const ProverContext& ctx, const SearchBudget& budget);

}  // namespace pretzel
