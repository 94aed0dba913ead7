#pragma once

// Text form of proof scripts.
//
//   # comment
//   context s=3 p=9 q=1            (optional k=decreasing)
//   axiom axK
//   step kq = pow axK 1
//   step a1 = conj posc {l^-1 c^-1}
//   qed bot
//
// A step lists its rule keyword, then premise ids, then arguments: words in
// braces ({} is the identity), integers, sign kinds (POS NNEG NEG NPOS) and
// relations (lt eq gt).

#include <stdexcept>
#include <string>
#include <string_view>

#include "pretzel/prover.hpp"

namespace pretzel {

class ScriptParseError : public std::runtime_error {
 public:
  ScriptParseError(const std::string& msg, int line, int column)
      : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg),
        line_(line),
        column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

ProofScript parse_script(std::string_view text);
std::string print_script(const ProofScript& script);

}  // namespace pretzel
