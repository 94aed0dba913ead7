#pragma once

// Scripted derivations for the surgery groups of the (-2,3,2s+1) pretzel knot.

#include <set>
#include <vector>

#include "pretzel/certificate.hpp"
#include "pretzel/knot_group.hpp"
#include "pretzel/prover.hpp"

namespace pretzel {

/// Derivation of BOT from POS(k). Every step except the single R-KPOW-SIGN
/// step is valid for all contexts; that one needs -p + (2s+3)q <= 0.
ProofScript main_script(const SurgeryContext& ctx);

/// Assumes k x0 = x0 and derives BOT by splitting on l x0 against x0.
/// The conclusion keeps the hypothesis open; the "<" branch grows linearly in s.
ProofScript fixedpoint_script(const SurgeryContext& ctx);

/// Swaps POS/NEG and NNEG/NPOS arguments, reverses point relations and flips
/// the orientation of k. An involution.
ProofScript mirror(const ProofScript& script);
std::vector<ScriptStep> mirror_steps(std::vector<ScriptStep> steps);

Certificate builtin_script_main(const SurgeryContext& ctx);
Certificate builtin_script_fixedpoint(const SurgeryContext& ctx, const std::set<Rule>& disabled = {});

}  // namespace pretzel
