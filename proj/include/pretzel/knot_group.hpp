#pragma once

// Knot group of the (-2,3,2s+1) pretzel knot and its Dehn surgeries.

#include <cstdint>
#include <vector>

#include "pretzel/word.hpp"

namespace pretzel {

struct Presentation {
  std::vector<Gen> generators;
  std::vector<Word> relators;
};

/// Surgery parameters: the knot index s >= 3 and a slope p/q with p, q
/// coprime and positive.
struct SurgeryContext {
  int s = 3;
  std::int64_t p = 1;
  std::int64_t q = 1;

  /// Validates and returns the context; throws std::invalid_argument.
  static SurgeryContext make(int s, std::int64_t p, std::int64_t q);
  /// p >= (2s+3) q, compared exactly.
  bool at_or_above_threshold() const;
  friend bool operator==(const SurgeryContext&, const SurgeryContext&) = default;
};

/// c l c l^-1 c^-1 l^-s c^-1 l^-1 c l c l^(s-1)
Word relator(int s);
/// c^-(2s-2) l c l^s c l^s c l c^-(2s+9), the longitude; the meridian is c.
Word longitude(int s);
inline Word meridian() { return Word::gen(Gen::c); }

struct ExponentSums {
  std::int64_t c = 0;
  std::int64_t l = 0;
  friend bool operator==(const ExponentSums&, const ExponentSums&) = default;
};

/// Abelianisation of a word over {c, l}; throws if the word contains k.
ExponentSums exponent_sums(const Word& w);

/// Image in H_1 = Z with [c] -> 1 (the relator forces [l] = 2[c]).
std::int64_t homology_class(const Word& w);

Presentation knot_presentation(int s);
/// <c, l | relator(s), c^p L^q>
Presentation surgery_presentation(const SurgeryContext& ctx);

/// |det [[2, -1], [p - (4s+4)q, (2s+2)q]]|, the order of H_1 of the surgery.
std::int64_t h1_order(const SurgeryContext& ctx);

/// Inserts a cyclic conjugate of r^direction at a letter offset of w and
/// freely reduces. The shift rotates r by that many letters before inversion.
Word insert_relator(const Word& w, const Word& r, std::int64_t position, std::int64_t cyclic_shift, int direction);

/// insert_relator with r = relator(s).
Word rewrite_with_relator(const Word& w, int s, std::int64_t position, std::int64_t cyclic_shift, int direction);

}  // namespace pretzel
