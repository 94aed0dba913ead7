#pragma once

// Freely reduced words over the generators c, l, k, stored run-length.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pretzel {

enum class Gen : std::uint8_t { c, l, k };

char gen_name(Gen g);

struct Syllable {
  Gen gen;
  std::int64_t exp;
  friend bool operator==(const Syllable&, const Syllable&) = default;
};

/// A single letter g^(+-1).
struct Letter {
  Gen gen;
  bool inverse;
  friend bool operator==(const Letter&, const Letter&) = default;
};

class Word {
 public:
  Word() = default;
  /// Freely reduces the given syllables.
  explicit Word(const std::vector<Syllable>& raw);

  static Word gen(Gen g, std::int64_t exp = 1);
  static Word from_letters(const std::vector<Letter>& letters);

  bool is_identity() const { return syllables_.empty(); }
  const std::vector<Syllable>& syllables() const { return syllables_; }
  /// Number of letters, i.e. the sum of |exponent|.
  std::int64_t length() const;
  std::vector<Letter> letters() const;

  Word inverse() const;
  Word pow(std::int64_t n) const;
  bool contains(Gen g) const;

  friend Word operator*(const Word& a, const Word& b);
  friend bool operator==(const Word&, const Word&) = default;
  /// Shortlex on letters, with c < c^-1 < l < l^-1 < k < k^-1.
  friend std::strong_ordering operator<=>(const Word& a, const Word& b);

  /// Literal syntax, e.g. "c l^-3 c"; the identity prints as "1".
  std::string to_string() const;

 private:
  std::vector<Syllable> syllables_;
};

std::vector<Syllable> free_reduce(const std::vector<Syllable>& raw);
inline Word concat(const Word& a, const Word& b) { return a * b; }
inline Word invert(const Word& w) { return w.inverse(); }

class WordParseError : public std::runtime_error {
 public:
  WordParseError(const std::string& msg, std::size_t column)
      : std::runtime_error(msg + " at column " + std::to_string(column + 1)), column_(column) {}
  /// Zero-based offset into the parsed text.
  std::size_t column() const { return column_; }

 private:
  std::size_t column_;
};

/// Parses tokens c, l, k, 1 with optional ^<int>, whitespace separated, and
/// parenthesised groups with optional ^<int>.
Word parse_word(std::string_view text);

}  // namespace pretzel
