#include <doctest.h>

#include <random>

#include "pretzel/knot_group.hpp"
#include "pretzel/word.hpp"

using namespace pretzel;

namespace {

// Letters as signed ints: +-1 c, +-2 l, +-3 k; reduce with a stack.
std::vector<int> stack_reduce(const std::vector<int>& in) {
  std::vector<int> st;
  for (int x : in) {
    if (!st.empty() && st.back() == -x) {
      st.pop_back();
    } else {
      st.push_back(x);
    }
  }
  return st;
}

std::vector<int> as_ints(const Word& w) {
  std::vector<int> out;
  for (const auto& l : w.letters()) {
    const int g = static_cast<int>(l.gen) + 1;
    out.push_back(l.inverse ? -g : g);
  }
  return out;
}

std::vector<Letter> as_letters(const std::vector<int>& xs) {
  std::vector<Letter> out;
  for (int x : xs) out.push_back({static_cast<Gen>((x < 0 ? -x : x) - 1), x < 0});
  return out;
}

std::vector<int> random_ints(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<int> d(0, 5);
  std::vector<int> out;
  for (int i = 0; i < n; ++i) {
    const int v = d(rng);
    out.push_back((v / 2 + 1) * (v % 2 ? -1 : 1));
  }
  return out;
}

}  // namespace

TEST_CASE("free reduction agrees with a letter stack") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 500; ++t) {
    const auto xs = random_ints(rng, static_cast<int>(rng() % 20));
    CHECK(as_ints(Word::from_letters(as_letters(xs))) == stack_reduce(xs));
  }
}

TEST_CASE("products and inverses agree with the stack") {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 200; ++t) {
    const auto a = random_ints(rng, 8), b = random_ints(rng, 8);
    const Word wa = Word::from_letters(as_letters(a)), wb = Word::from_letters(as_letters(b));
    auto ab = a;
    ab.insert(ab.end(), b.begin(), b.end());
    CHECK(as_ints(wa * wb) == stack_reduce(ab));
    CHECK((wa * wa.inverse()).is_identity());
    CHECK(wa.pow(3) == wa * wa * wa);
    CHECK(wa.pow(-2) == wa.inverse() * wa.inverse());
  }
}

TEST_CASE("parse and print round trip") {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 200; ++t) {
    const Word w = Word::from_letters(as_letters(random_ints(rng, 10)));
    CHECK(parse_word(w.to_string()) == w);
  }
}

TEST_CASE("word literal syntax") {
  const Word w = parse_word("c l^-3 (l c l)^-1");
  CHECK(w == Word::gen(Gen::c) * Word::gen(Gen::l, -4) * Word::gen(Gen::c, -1) * Word::gen(Gen::l, -1));
  CHECK(parse_word("1").is_identity());
  CHECK(parse_word("c c^-1").is_identity());
  CHECK(w.length() == 7);
  CHECK_THROWS_AS(parse_word("c x"), WordParseError);
  CHECK_THROWS_AS(parse_word("(c l"), WordParseError);
  CHECK_THROWS_AS(parse_word("c^"), WordParseError);
}

TEST_CASE("shortlex order") {
  CHECK(parse_word("c") < parse_word("c^-1"));
  CHECK(parse_word("k^-1") < parse_word("c c"));
  CHECK(parse_word("l") < parse_word("k"));
}

TEST_CASE("relator and longitude shapes") {
  for (int s = 3; s <= 20; ++s) {
    CHECK(relator(s).length() == 2 * s + 9);
    CHECK(longitude(s).length() == 6 * s + 12);
    const auto e = exponent_sums(longitude(s));
    CHECK(e.c == -4 * s - 4);
    CHECK(e.l == 2 * s + 2);
    CHECK(homology_class(longitude(s)) == 0);
    CHECK(homology_class(relator(s)) == 0);
  }
  CHECK(longitude(3).length() == 30);
  CHECK(relator(3) == parse_word("c l c l^-1 c^-1 l^-3 c^-1 l^-1 c l c l^2"));
}

TEST_CASE("homology rejects k and maps l to twice c") {
  CHECK(homology_class(parse_word("l")) == 2);
  CHECK(homology_class(parse_word("c^3 l^-1")) == 1);
  CHECK_THROWS(exponent_sums(parse_word("k")));
}

TEST_CASE("h1 order equals p") {
  std::mt19937_64 rng(14);
  for (int t = 0; t < 200; ++t) {
    const int s = 3 + static_cast<int>(rng() % 48);
    const std::int64_t q = 1 + static_cast<std::int64_t>(rng() % 15);
    std::int64_t p = 1 + static_cast<std::int64_t>(rng() % 500);
    while (std::gcd(p, q) != 1) ++p;
    const auto ctx = SurgeryContext::make(s, p, q);
    // determinant of [[2, -1], [p - (4s+4)q, (2s+2)q]], expanded by hand
    const std::int64_t det = 2 * (2 * s + 2) * q + (p - (4 * s + 4) * q);
    CHECK(h1_order(ctx) == det);
    CHECK(h1_order(ctx) == p);
  }
  CHECK(h1_order(SurgeryContext::make(3, 9, 1)) == 9);
}

TEST_CASE("surgery context validation") {
  CHECK_THROWS_AS(SurgeryContext::make(2, 9, 1), std::invalid_argument);
  CHECK_THROWS_AS(SurgeryContext::make(3, 6, 4), std::invalid_argument);
  CHECK_THROWS_AS(SurgeryContext::make(3, -9, 1), std::invalid_argument);
  CHECK(SurgeryContext::make(3, 9, 1).at_or_above_threshold());
  CHECK_FALSE(SurgeryContext::make(3, 17, 2).at_or_above_threshold());
}

TEST_CASE("relator insertion keeps the homology class") {
  std::mt19937_64 rng(15);
  const int s = 4;
  for (int t = 0; t < 100; ++t) {
    std::vector<int> xs = random_ints(rng, 6);
    for (auto& x : xs)
      if (x == 3 || x == -3) x = 1;
    const Word w = Word::from_letters(as_letters(xs));
    const auto pos = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(w.length() + 1));
    const auto shift = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(relator(s).length()));
    const Word v = rewrite_with_relator(w, s, pos, shift, t % 2 ? 1 : -1);
    CHECK(homology_class(v) == homology_class(w));
  }
  CHECK(insert_relator(Word{}, relator(3), 0, 0, 1) == relator(3));
  CHECK(insert_relator(Word{}, relator(3), 0, 0, -1) == relator(3).inverse());
  CHECK_THROWS_AS(insert_relator(Word{}, relator(3), 1, 0, 1), std::out_of_range);
}

TEST_CASE("surgery presentation") {
  const auto pres = surgery_presentation(SurgeryContext::make(3, 9, 1));
  REQUIRE(pres.relators.size() == 2);
  CHECK(pres.relators[0] == relator(3));
  CHECK(pres.relators[1] == Word::gen(Gen::c, 9) * longitude(3));
}
