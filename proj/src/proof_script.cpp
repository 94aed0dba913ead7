#include "pretzel/proof_script.hpp"

#include <cctype>
#include <charconv>
#include <sstream>
#include <vector>

namespace pretzel {

namespace {

struct Token {
  enum Type { Ident, Int, Equals, WordLit } type;
  std::string text;
  int column;  // 1-based
};

bool ident_start(char ch) { return std::isalpha(static_cast<unsigned char>(ch)) || ch == '_'; }
bool ident_char(char ch) { return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_' || ch == '-'; }

std::vector<Token> tokenize(std::string_view line, int line_no) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    const char ch = line[i];
    const int col = static_cast<int>(i) + 1;
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++i;
    } else if (ch == '#') {
      break;
    } else if (ch == '=') {
      out.push_back({Token::Equals, "=", col});
      ++i;
    } else if (ch == '{') {
      const auto close = line.find('}', i);
      if (close == std::string_view::npos) throw ScriptParseError("unterminated word literal", line_no, col);
      out.push_back({Token::WordLit, std::string(line.substr(i + 1, close - i - 1)), col});
      i = close + 1;
    } else if (std::isdigit(static_cast<unsigned char>(ch)) ||
               (ch == '-' && i + 1 < line.size() && std::isdigit(static_cast<unsigned char>(line[i + 1])))) {
      std::size_t j = i + 1;
      while (j < line.size() && std::isdigit(static_cast<unsigned char>(line[j]))) ++j;
      out.push_back({Token::Int, std::string(line.substr(i, j - i)), col});
      i = j;
    } else if (ident_start(ch)) {
      std::size_t j = i + 1;
      while (j < line.size() && ident_char(line[j])) ++j;
      out.push_back({Token::Ident, std::string(line.substr(i, j - i)), col});
      i = j;
    } else {
      throw ScriptParseError(std::string("unexpected character '") + ch + "'", line_no, col);
    }
  }
  return out;
}

std::int64_t to_int(const Token& t, int line_no) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
  if (ec != std::errc() || ptr != t.text.data() + t.text.size())
    throw ScriptParseError("integer out of range: " + t.text, line_no, t.column);
  return v;
}

std::optional<Kind> kind_keyword(std::string_view s) {
  for (Kind k : {Kind::Pos, Kind::Nneg, Kind::Neg, Kind::Npos})
    if (kind_name(k) == s) return k;
  return std::nullopt;
}

std::optional<Rel> rel_from_keyword(std::string_view s) {
  for (Rel r : {Rel::Lt, Rel::Eq, Rel::Gt})
    if (rel_keyword(r) == s) return r;
  return std::nullopt;
}

bool valid_id(std::string_view s) {
  if (s.empty() || !ident_start(s[0])) return false;
  for (char ch : s)
    if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '_') return false;
  return true;
}

class LineParser {
 public:
  LineParser(std::vector<Token> toks, int line_no) : toks_(std::move(toks)), line_(line_no) {}

  void parse_into(ProofScript& script) {
    const Token& head = toks_[0];
    if (head.type != Token::Ident) error("expected a directive", head);
    pos_ = 1;
    if (head.text == "context") {
      context(script);
    } else if (head.text == "axiom") {
      ScriptStep st;
      st.rule = Rule::Axiom;
      st.id = id("axiom name");
      st.pos = {line_, head.column};
      end();
      script.steps.push_back(std::move(st));
    } else if (head.text == "step") {
      step(script, head);
    } else if (head.text == "qed") {
      if (script.qed) error("duplicate qed", head);
      script.qed = id("step id");
      end();
    } else {
      error("unknown directive '" + head.text + "'", head);
    }
  }

 private:
  [[noreturn]] void error(const std::string& msg, const Token& at) const { throw ScriptParseError(msg, line_, at.column); }
  [[noreturn]] void error_eol(const std::string& msg) const {
    const int col = toks_.empty() ? 1 : toks_.back().column + static_cast<int>(toks_.back().text.size());
    throw ScriptParseError(msg, line_, col);
  }

  const Token& next(const std::string& what) {
    if (pos_ >= toks_.size()) error_eol("expected " + what);
    return toks_[pos_++];
  }

  std::string id(const std::string& what) {
    const Token& t = next(what);
    if (t.type != Token::Ident || !valid_id(t.text)) error("expected " + what, t);
    return t.text;
  }

  void end() {
    if (pos_ < toks_.size()) error("unexpected trailing input", toks_[pos_]);
  }

  void context(ProofScript& script) {
    if (script.context) error("duplicate context line", toks_[0]);
    std::optional<std::int64_t> s, p, q;
    while (pos_ < toks_.size()) {
      const Token& key = next("key");
      if (key.type != Token::Ident) error("expected key", key);
      const Token& eq = next("'='");
      if (eq.type != Token::Equals) error("expected '='", eq);
      const Token& val = next("value");
      if (key.text == "k") {
        if (val.text == "increasing") {
          script.k_orientation = Orientation::Increasing;
        } else if (val.text == "decreasing") {
          script.k_orientation = Orientation::Decreasing;
        } else {
          error("k must be increasing or decreasing", val);
        }
        continue;
      }
      if (val.type != Token::Int) error("expected integer", val);
      const auto v = to_int(val, line_);
      if (key.text == "s") {
        s = v;
      } else if (key.text == "p") {
        p = v;
      } else if (key.text == "q") {
        q = v;
      } else {
        error("unknown context key '" + key.text + "'", key);
      }
    }
    if (!s || !p || !q) error("context needs s, p and q", toks_[0]);
    try {
      script.context = SurgeryContext::make(static_cast<int>(*s), *p, *q);
    } catch (const std::invalid_argument& ex) {
      error(ex.what(), toks_[0]);
    }
  }

  void step(ProofScript& script, const Token& head) {
    ScriptStep st;
    st.pos = {line_, head.column};
    st.id = id("step id");
    const Token& eq = next("'='");
    if (eq.type != Token::Equals) error("expected '='", eq);
    const Token& rt = next("rule");
    const auto rule = rt.type == Token::Ident ? rule_from_keyword(rt.text) : std::nullopt;
    if (!rule || *rule == Rule::Axiom) error("unknown rule '" + rt.text + "'", rt);
    st.rule = *rule;
    while (pos_ < toks_.size()) {
      const Token& t = toks_[pos_++];
      if (t.type == Token::WordLit) {
        try {
          st.args.emplace_back(parse_word(t.text));
        } catch (const WordParseError& ex) {
          throw ScriptParseError(std::string("bad word: ") + ex.what(), line_,
                                 t.column + 1 + static_cast<int>(ex.column()));
        }
      } else if (t.type == Token::Int) {
        st.args.emplace_back(to_int(t, line_));
      } else if (t.type == Token::Ident) {
        if (auto k = kind_keyword(t.text)) {
          st.args.emplace_back(*k);
        } else if (auto r = rel_from_keyword(t.text)) {
          st.args.emplace_back(*r);
        } else {
          if (!st.args.empty()) error("premise '" + t.text + "' after arguments", t);
          if (!valid_id(t.text)) error("bad premise id '" + t.text + "'", t);
          st.premises.push_back(t.text);
        }
      } else {
        error("unexpected '='", t);
      }
    }
    script.steps.push_back(std::move(st));
  }

  std::vector<Token> toks_;
  int line_;
  std::size_t pos_ = 0;
};

}  // namespace

ProofScript parse_script(std::string_view text) {
  ProofScript script;
  int line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto nl = text.find('\n', start);
    const auto line = text.substr(start, nl == std::string_view::npos ? std::string_view::npos : nl - start);
    ++line_no;
    auto toks = tokenize(line, line_no);
    if (!toks.empty()) LineParser(std::move(toks), line_no).parse_into(script);
    if (nl == std::string_view::npos) break;
    start = nl + 1;
  }
  return script;
}

std::string print_script(const ProofScript& script) {
  std::ostringstream os;
  if (script.context) {
    os << "context s=" << script.context->s << " p=" << script.context->p << " q=" << script.context->q;
    if (script.k_orientation == Orientation::Decreasing) os << " k=decreasing";
    os << '\n';
  }
  for (const auto& st : script.steps) {
    if (st.rule == Rule::Axiom) {
      os << "axiom " << st.id << '\n';
      continue;
    }
    os << "step " << st.id << " = " << rule_keyword(st.rule);
    for (const auto& p : st.premises) os << ' ' << p;
    for (const auto& a : st.args) os << ' ' << arg_to_string(a);
    os << '\n';
  }
  if (script.qed) os << "qed " << *script.qed << '\n';
  return os.str();
}

}  // namespace pretzel
