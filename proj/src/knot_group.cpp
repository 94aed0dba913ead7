#include "pretzel/knot_group.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace pretzel {

namespace {

void check_s(int s) {
  if (s < 3) throw std::invalid_argument("knot index s must be at least 3, got " + std::to_string(s));
}

}  // namespace

SurgeryContext SurgeryContext::make(int s, std::int64_t p, std::int64_t q) {
  check_s(s);
  if (p < 1 || q < 1) throw std::invalid_argument("surgery slope p/q needs positive p and q");
  if (std::gcd(p, q) != 1) throw std::invalid_argument("surgery slope p/q needs coprime p and q");
  return SurgeryContext{s, p, q};
}

bool SurgeryContext::at_or_above_threshold() const { return p >= (2 * static_cast<std::int64_t>(s) + 3) * q; }

Word relator(int s) {
  check_s(s);
  return Word({{Gen::c, 1},
               {Gen::l, 1},
               {Gen::c, 1},
               {Gen::l, -1},
               {Gen::c, -1},
               {Gen::l, -s},
               {Gen::c, -1},
               {Gen::l, -1},
               {Gen::c, 1},
               {Gen::l, 1},
               {Gen::c, 1},
               {Gen::l, s - 1}});
}

Word longitude(int s) {
  check_s(s);
  return Word({{Gen::c, -(2 * s - 2)},
               {Gen::l, 1},
               {Gen::c, 1},
               {Gen::l, s},
               {Gen::c, 1},
               {Gen::l, s},
               {Gen::c, 1},
               {Gen::l, 1},
               {Gen::c, -(2 * s + 9)}});
}

ExponentSums exponent_sums(const Word& w) {
  ExponentSums e;
  for (const auto& s : w.syllables()) {
    switch (s.gen) {
      case Gen::c:
        e.c += s.exp;
        break;
      case Gen::l:
        e.l += s.exp;
        break;
      case Gen::k:
        throw std::invalid_argument("exponent_sums: word contains k, which is not a presentation generator");
    }
  }
  return e;
}

std::int64_t homology_class(const Word& w) {
  const auto e = exponent_sums(w);
  return e.c + 2 * e.l;
}

Presentation knot_presentation(int s) { return {{Gen::c, Gen::l}, {relator(s)}}; }

Presentation surgery_presentation(const SurgeryContext& ctx) {
  Presentation pres = knot_presentation(ctx.s);
  pres.relators.push_back(meridian().pow(ctx.p) * longitude(ctx.s).pow(ctx.q));
  return pres;
}

std::int64_t h1_order(const SurgeryContext& ctx) {
  // Rows are the abelianised relators: (e_c, e_l) of relator(s) and of c^p L^q.
  const std::int64_t s = ctx.s;
  const std::int64_t a = 2, b = -1;
  const std::int64_t c = ctx.p - (4 * s + 4) * ctx.q;
  const std::int64_t d = (2 * s + 2) * ctx.q;
  const std::int64_t det = a * d - b * c;
  return det < 0 ? -det : det;
}

Word insert_relator(const Word& w, const Word& r, std::int64_t position, std::int64_t cyclic_shift, int direction) {
  if (direction != 1 && direction != -1) throw std::invalid_argument("relator direction must be +1 or -1");
  if (r.is_identity()) throw std::invalid_argument("cannot insert the empty relator");
  const std::int64_t n = w.length();
  if (position < 0 || position > n)
    throw std::out_of_range("insertion point " + std::to_string(position) + " outside word of length " +
                            std::to_string(n));
  auto rl = r.letters();
  const auto rn = static_cast<std::int64_t>(rl.size());
  if (cyclic_shift < 0 || cyclic_shift >= rn)
    throw std::out_of_range("cyclic shift " + std::to_string(cyclic_shift) + " outside relator of length " +
                            std::to_string(rn));
  std::rotate(rl.begin(), rl.begin() + cyclic_shift, rl.end());
  Word inserted = Word::from_letters(rl);
  if (direction < 0) inserted = inserted.inverse();

  auto wl = w.letters();
  std::vector<Letter> head(wl.begin(), wl.begin() + position);
  std::vector<Letter> tail(wl.begin() + position, wl.end());
  return Word::from_letters(head) * inserted * Word::from_letters(tail);
}

Word rewrite_with_relator(const Word& w, int s, std::int64_t position, std::int64_t cyclic_shift, int direction) {
  return insert_relator(w, relator(s), position, cyclic_shift, direction);
}

}  // namespace pretzel
