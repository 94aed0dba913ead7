#include "pretzel/word.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

namespace pretzel {

char gen_name(Gen g) {
  switch (g) {
    case Gen::c:
      return 'c';
    case Gen::l:
      return 'l';
    case Gen::k:
      return 'k';
  }
  return '?';
}

std::vector<Syllable> free_reduce(const std::vector<Syllable>& raw) {
  std::vector<Syllable> out;
  out.reserve(raw.size());
  for (const auto& s : raw) {
    if (s.exp == 0) continue;
    if (!out.empty() && out.back().gen == s.gen) {
      out.back().exp += s.exp;
      if (out.back().exp == 0) out.pop_back();
    } else {
      out.push_back(s);
    }
  }
  return out;
}

Word::Word(const std::vector<Syllable>& raw) : syllables_(free_reduce(raw)) {}

Word Word::gen(Gen g, std::int64_t exp) { return Word({Syllable{g, exp}}); }

Word Word::from_letters(const std::vector<Letter>& letters) {
  std::vector<Syllable> raw;
  raw.reserve(letters.size());
  for (const auto& l : letters) raw.push_back({l.gen, l.inverse ? -1 : 1});
  return Word(raw);
}

std::int64_t Word::length() const {
  std::int64_t n = 0;
  for (const auto& s : syllables_) n += s.exp < 0 ? -s.exp : s.exp;
  return n;
}

std::vector<Letter> Word::letters() const {
  std::vector<Letter> out;
  out.reserve(static_cast<std::size_t>(length()));
  for (const auto& s : syllables_) {
    const std::int64_t n = s.exp < 0 ? -s.exp : s.exp;
    for (std::int64_t i = 0; i < n; ++i) out.push_back({s.gen, s.exp < 0});
  }
  return out;
}

Word Word::inverse() const {
  Word w;
  w.syllables_.reserve(syllables_.size());
  for (auto it = syllables_.rbegin(); it != syllables_.rend(); ++it) w.syllables_.push_back({it->gen, -it->exp});
  return w;
}

Word Word::pow(std::int64_t n) const {
  if (n == 0 || is_identity()) return {};
  const Word base = n > 0 ? *this : inverse();
  const std::int64_t count = n > 0 ? n : -n;
  std::vector<Syllable> raw;
  raw.reserve(base.syllables_.size() * static_cast<std::size_t>(count));
  for (std::int64_t i = 0; i < count; ++i) raw.insert(raw.end(), base.syllables_.begin(), base.syllables_.end());
  return Word(raw);
}

bool Word::contains(Gen g) const {
  for (const auto& s : syllables_)
    if (s.gen == g) return true;
  return false;
}

Word operator*(const Word& a, const Word& b) {
  std::vector<Syllable> raw = a.syllables_;
  raw.insert(raw.end(), b.syllables_.begin(), b.syllables_.end());
  return Word(raw);
}

std::strong_ordering operator<=>(const Word& a, const Word& b) {
  if (auto c = a.length() <=> b.length(); c != 0) return c;
  auto rank = [](const Letter& l) { return static_cast<int>(l.gen) * 2 + (l.inverse ? 1 : 0); };
  const auto la = a.letters();
  const auto lb = b.letters();
  for (std::size_t i = 0; i < la.size(); ++i)
    if (auto c = rank(la[i]) <=> rank(lb[i]); c != 0) return c;
  return std::strong_ordering::equal;
}

std::string Word::to_string() const {
  if (syllables_.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& s : syllables_) {
    if (!first) os << ' ';
    first = false;
    os << gen_name(s.gen);
    if (s.exp != 1) os << '^' << s.exp;
  }
  return os.str();
}

namespace {

class WordParser {
 public:
  explicit WordParser(std::string_view text) : text_(text) {}

  Word parse() {
    Word w = sequence();
    skip_space();
    if (pos_ < text_.size()) throw WordParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
    return w;
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  Word sequence() {
    std::vector<Syllable> raw;
    while (true) {
      skip_space();
      if (pos_ >= text_.size() || text_[pos_] == ')') break;
      Word factor = atom();
      raw.insert(raw.end(), factor.syllables().begin(), factor.syllables().end());
    }
    return Word(raw);
  }

  Word atom() {
    const std::size_t start = pos_;
    Word base;
    const char ch = text_[pos_];
    if (ch == '(') {
      ++pos_;
      base = sequence();
      if (pos_ >= text_.size() || text_[pos_] != ')') throw WordParseError("missing ')'", start);
      ++pos_;
    } else if (ch == 'c' || ch == 'l' || ch == 'k') {
      ++pos_;
      base = Word::gen(ch == 'c' ? Gen::c : ch == 'l' ? Gen::l : Gen::k);
    } else if (ch == '1') {
      ++pos_;
    } else {
      throw WordParseError(std::string("unexpected '") + ch + "' in word literal", pos_);
    }
    if (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_])))
      throw WordParseError("letters must be separated by whitespace", pos_);
    if (pos_ < text_.size() && text_[pos_] == '^') {
      ++pos_;
      return base.pow(exponent());
    }
    return base;
  }

  std::int64_t exponent() {
    const std::size_t start = pos_;
    if (start >= text_.size()) throw WordParseError("missing exponent", start);
    std::size_t end = pos_;
    if (end < text_.size() && (text_[end] == '-' || text_[end] == '+')) ++end;
    while (end < text_.size() && std::isdigit(static_cast<unsigned char>(text_[end]))) ++end;
    std::int64_t value = 0;
    const char* first = text_.data() + start + (text_[start] == '+' ? 1 : 0);
    auto [ptr, ec] = std::from_chars(first, text_.data() + end, value);
    if (ec != std::errc() || ptr != text_.data() + end || end == start) throw WordParseError("malformed exponent", start);
    pos_ = end;
    return value;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Word parse_word(std::string_view text) { return WordParser(text).parse(); }

}  // namespace pretzel
