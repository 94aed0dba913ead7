#include "pretzel/independent_verifier.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace pretzel::independent {

namespace {

// Letters are +-1 (c), +-2 (l), +-3 (k).
using W = std::vector<int>;

struct Reject : std::runtime_error {
  using std::runtime_error::runtime_error;
};

W reduce(const W& w) {
  W out;
  for (int x : w) {
    if (!out.empty() && out.back() == -x) {
      out.pop_back();
    } else {
      out.push_back(x);
    }
  }
  return out;
}

W cat(std::initializer_list<W> parts) {
  W all;
  for (const auto& p : parts) all.insert(all.end(), p.begin(), p.end());
  return reduce(all);
}

W inv(const W& w) {
  W out(w.rbegin(), w.rend());
  for (int& x : out) x = -x;
  return out;
}

W power(const W& w, std::int64_t n) {
  const W base = n >= 0 ? w : inv(w);
  W out;
  for (std::int64_t i = 0; i < (n >= 0 ? n : -n); ++i) out.insert(out.end(), base.begin(), base.end());
  return reduce(out);
}

W gen(int g, std::int64_t n) { return power(W{g}, n); }

int letter_code(char ch) {
  if (ch == 'c') return 1;
  if (ch == 'l') return 2;
  if (ch == 'k') return 3;
  throw Reject(std::string("bad generator '") + ch + "'");
}

// Whitespace-separated tokens: 1, or g, or g^n.
W parse(const std::string& text) {
  std::istringstream is(text);
  std::string tok;
  W out;
  while (is >> tok) {
    if (tok == "1") continue;
    const int g = letter_code(tok[0]);
    std::int64_t e = 1;
    if (tok.size() > 1) {
      if (tok[1] != '^' || tok.size() < 3) throw Reject("bad token '" + tok + "'");
      std::size_t used = 0;
      e = std::stoll(tok.substr(2), &used);
      if (used != tok.size() - 2) throw Reject("bad exponent in '" + tok + "'");
    }
    const W part = gen(g, e);
    out.insert(out.end(), part.begin(), part.end());
  }
  return reduce(out);
}

struct J {
  std::string kind;  // POS NNEG NEG NPOS EQ BOT PT
  W a, b;            // subject in a for sign kinds
  std::string rel;   // lt eq gt
  std::set<std::string> hyps;
  bool operator==(const J&) const = default;
};

bool sign_kind(const std::string& k) { return k == "POS" || k == "NNEG" || k == "NEG" || k == "NPOS"; }
bool strict_kind(const std::string& k) { return k == "POS" || k == "NEG"; }
bool up_kind(const std::string& k) { return k == "POS" || k == "NNEG"; }

std::string flip_kind(const std::string& k) {
  if (k == "POS") return "NEG";
  if (k == "NEG") return "POS";
  if (k == "NNEG") return "NPOS";
  if (k == "NPOS") return "NNEG";
  throw Reject("cannot flip " + k);
}

std::string flip_rel(const std::string& r) { return r == "lt" ? "gt" : r == "gt" ? "lt" : r; }

J read_judgment(const nlohmann::json& j) {
  J out;
  out.kind = j.at("kind").get<std::string>();
  if (sign_kind(out.kind)) {
    out.a = parse(j.at("subject").get<std::string>());
  } else if (out.kind == "EQ" || out.kind == "PT") {
    out.a = parse(j.at("lhs").get<std::string>());
    out.b = parse(j.at("rhs").get<std::string>());
  } else if (out.kind != "BOT") {
    throw Reject("unknown kind " + out.kind);
  }
  if (out.kind == "PT") {
    out.rel = j.at("relation").get<std::string>();
    if (out.rel != "lt" && out.rel != "eq" && out.rel != "gt") throw Reject("bad relation");
  }
  if (out.kind == "PT" || out.kind == "BOT")
    for (const auto& h : j.at("assumptions")) out.hyps.insert(h.get<std::string>());
  return out;
}

J sign(const std::string& k, W w) { return {k, std::move(w), {}, "", {}}; }
J eq(W a, W b) { return {"EQ", std::move(a), std::move(b), "", {}}; }
J pt(W a, const std::string& r, W b, std::set<std::string> h) { return {"PT", std::move(a), std::move(b), r, std::move(h)}; }
J bot(std::set<std::string> h) { return {"BOT", {}, {}, "", std::move(h)}; }

// Longitude and relator of the (-2,3,2s+1) pretzel knot, written out letter by letter.
W longitude_word(std::int64_t s) {
  return cat({gen(1, -(2 * s - 2)), gen(2, 1), gen(1, 1), gen(2, s), gen(1, 1), gen(2, s), gen(1, 1), gen(2, 1),
              gen(1, -(2 * s + 9))});
}

W relator_word(std::int64_t s) {
  return cat({gen(1, 1), gen(2, 1), gen(1, 1), gen(2, -1), gen(1, -1), gen(2, -s), gen(1, -1), gen(2, -1), gen(1, 1),
              gen(2, 1), gen(1, 1), gen(2, s - 1)});
}

struct Args {
  const nlohmann::json& raw;
  std::size_t size() const { return raw.size(); }
  std::string str(std::size_t i) const { return raw.at(i).get<std::string>(); }
  W word(std::size_t i) const {
    const auto s = str(i);
    if (s.size() < 2 || s.front() != '{' || s.back() != '}') throw Reject("argument " + std::to_string(i) + " is not a word");
    return parse(s.substr(1, s.size() - 2));
  }
  std::int64_t num(std::size_t i) const {
    const auto s = str(i);
    std::size_t used = 0;
    std::int64_t v = 0;
    try {
      v = std::stoll(s, &used);
    } catch (const std::exception&) {
      throw Reject("argument " + std::to_string(i) + " is not an integer");
    }
    if (used != s.size()) throw Reject("argument " + std::to_string(i) + " is not an integer");
    return v;
  }
};

void need(bool ok, const std::string& why) {
  if (!ok) throw Reject(why);
}

class Checker {
 public:
  explicit Checker(const nlohmann::json& cert) {
    const auto& c = cert.at("context");
    decreasing_ = c.value("k", "increasing") == "decreasing";
    if (c.contains("s")) {
      const auto s = c.at("s").get<std::int64_t>();
      const auto p = c.at("p").get<std::int64_t>();
      const auto q = c.at("q").get<std::int64_t>();
      need(s >= 3 && p >= 1 && q >= 1, "invalid surgery context");
      axioms_["axC"] = eq(gen(1, 1), gen(3, q));
      axioms_["axL"] = eq(longitude_word(s), gen(3, -p));
      axioms_["axR"] = eq(relator_word(s), {});
      axioms_["axK"] = sign(decreasing_ ? "NEG" : "POS", gen(3, 1));
    } else {
      for (const auto& a : c.at("axioms")) axioms_[a.at("name").get<std::string>()] = read_judgment(a.at("judgment"));
    }
  }

  J step(const nlohmann::json& st) {
    const auto id = st.at("id").get<std::string>();
    const auto rule = st.at("rule").get<std::string>();
    std::vector<const J*> pr;
    for (const auto& p : st.at("premises")) {
      auto it = facts_.find(p.get<std::string>());
      need(it != facts_.end(), "premise " + p.get<std::string>() + " is not an earlier step");
      pr.push_back(&it->second);
    }
    const Args args{st.at("args")};
    auto shape = [&](std::size_t np, std::size_t na) {
      need(pr.size() == np && args.size() == na, rule + ": wrong number of premises or arguments");
    };
    auto is = [&](std::size_t i, const char* kind) { need(pr[i]->kind == kind, rule + ": premise kind"); };
    auto is_sign = [&](std::size_t i) { need(sign_kind(pr[i]->kind), rule + ": premise must be a sign fact"); };

    J out;
    if (rule == "AXIOM") {
      need(pr.empty(), "axiom with premises");
      auto it = axioms_.find(id);
      need(it != axioms_.end(), "no axiom named " + id);
      out = it->second;
    } else if (rule == "R-POW") {
      shape(1, 1);
      is_sign(0);
      const auto n = args.num(0);
      need(n >= (strict_kind(pr[0]->kind) ? 1 : 0), "R-POW exponent too small");
      out = sign(pr[0]->kind, power(pr[0]->a, n));
    } else if (rule == "R-MUL") {
      shape(2, 0);
      is_sign(0);
      is_sign(1);
      need(up_kind(pr[0]->kind) == up_kind(pr[1]->kind), "R-MUL mixes directions");
      const bool st2 = strict_kind(pr[0]->kind) || strict_kind(pr[1]->kind);
      const std::string k = up_kind(pr[0]->kind) ? (st2 ? "POS" : "NNEG") : (st2 ? "NEG" : "NPOS");
      out = sign(k, cat({pr[0]->a, pr[1]->a}));
    } else if (rule == "R-CONJ") {
      shape(1, 1);
      is_sign(0);
      const W w = args.word(0);
      out = sign(pr[0]->kind, cat({w, pr[0]->a, inv(w)}));
    } else if (rule == "R-INV") {
      shape(1, 0);
      is_sign(0);
      out = sign(flip_kind(pr[0]->kind), inv(pr[0]->a));
    } else if (rule == "R-EQSUBST") {
      shape(2, 0);
      is_sign(0);
      is(1, "EQ");
      need(pr[1]->a == pr[0]->a, "R-EQSUBST subject mismatch");
      out = sign(pr[0]->kind, pr[1]->b);
    } else if (rule == "R-KPOW-SIGN") {
      shape(1, 2);
      is_sign(0);
      need(strict_kind(pr[0]->kind), "R-KPOW-SIGN needs a strict premise");
      const auto m = args.num(0);
      const auto target = args.str(1);
      need(target == "NNEG" || target == "NPOS", "R-KPOW-SIGN target");
      const bool nonneg_m = (pr[0]->kind == "POS") == (target == "NNEG");
      need(nonneg_m ? m >= 0 : m <= 0, "R-KPOW-SIGN side condition on m");
      out = sign(target, power(pr[0]->a, m));
    } else if (rule == "R-CONTRA") {
      shape(2, 0);
      auto clash = [](const J& x, const J& y) {
        if (sign_kind(x.kind) && sign_kind(y.kind) && x.a == y.a)
          return (x.kind == "POS" && y.kind == "NPOS") || (x.kind == "NEG" && y.kind == "NNEG");
        if (strict_kind(x.kind) && y.kind == "EQ")
          return (y.a == x.a && y.b.empty()) || (y.b == x.a && y.a.empty());
        return false;
      };
      need(clash(*pr[0], *pr[1]) || clash(*pr[1], *pr[0]), "R-CONTRA premises do not clash");
      out = bot({});
    } else if (rule == "R-EQ-REFL") {
      shape(0, 1);
      out = eq(args.word(0), args.word(0));
    } else if (rule == "R-EQ-SYM") {
      shape(1, 0);
      is(0, "EQ");
      out = eq(pr[0]->b, pr[0]->a);
    } else if (rule == "R-EQ-TRANS") {
      shape(2, 0);
      is(0, "EQ");
      is(1, "EQ");
      need(pr[0]->b == pr[1]->a, "R-EQ-TRANS middle mismatch");
      out = eq(pr[0]->a, pr[1]->b);
    } else if (rule == "R-EQ-POW") {
      shape(1, 1);
      is(0, "EQ");
      out = eq(power(pr[0]->a, args.num(0)), power(pr[0]->b, args.num(0)));
    } else if (rule == "R-EQ-CTX") {
      shape(1, 2);
      is(0, "EQ");
      const W u = args.word(0), v = args.word(1);
      out = eq(cat({u, pr[0]->a, v}), cat({u, pr[0]->b, v}));
    } else if (rule == "R-EQ-REL") {
      shape(1, 4);
      is(0, "EQ");
      need(pr[0]->b.empty() && !pr[0]->a.empty(), "R-EQ-REL premise must be r = 1");
      const W w = args.word(0);
      const auto pos = args.num(1), shift = args.num(2), dir = args.num(3);
      W r = pr[0]->a;
      need(pos >= 0 && pos <= static_cast<std::int64_t>(w.size()), "R-EQ-REL position out of range");
      need(shift >= 0 && shift < static_cast<std::int64_t>(r.size()), "R-EQ-REL shift out of range");
      need(dir == 1 || dir == -1, "R-EQ-REL direction");
      std::rotate(r.begin(), r.begin() + shift, r.end());
      if (dir < 0) r = inv(r);
      W mid(w.begin(), w.begin() + pos);
      mid.insert(mid.end(), r.begin(), r.end());
      mid.insert(mid.end(), w.begin() + pos, w.end());
      out = eq(w, reduce(mid));
    } else if (rule == "R-PT-HYP") {
      shape(0, 3);
      const auto rel = args.str(1);
      need(rel == "lt" || rel == "eq" || rel == "gt", "R-PT-HYP relation");
      out = pt(args.word(0), rel, args.word(2), {id});
      hyps_[id] = out;
    } else if (rule == "R-PT-APPLY") {
      shape(1, 1);
      is(0, "PT");
      const W g = args.word(0);
      out = pt(cat({g, pr[0]->a}), pr[0]->rel, cat({g, pr[0]->b}), pr[0]->hyps);
    } else if (rule == "R-PT-POW") {
      shape(1, 1);
      is(0, "PT");
      need(pr[0]->b.empty(), "R-PT-POW needs u rel 1");
      const auto n = args.num(0);
      need(pr[0]->rel == "eq" || n >= 1, "R-PT-POW exponent");
      out = pt(power(pr[0]->a, n), pr[0]->rel, {}, pr[0]->hyps);
    } else if (rule == "R-PT-TRANS") {
      shape(2, 0);
      is(0, "PT");
      is(1, "PT");
      need(pr[0]->b == pr[1]->a, "R-PT-TRANS middle mismatch");
      const auto &r1 = pr[0]->rel, &r2 = pr[1]->rel;
      std::string r;
      if (r1 == "eq") {
        r = r2;
      } else if (r2 == "eq" || r1 == r2) {
        r = r1;
      } else {
        throw Reject("R-PT-TRANS opposite relations");
      }
      auto h = pr[0]->hyps;
      h.insert(pr[1]->hyps.begin(), pr[1]->hyps.end());
      out = pt(pr[0]->a, r, pr[1]->b, h);
    } else if (rule == "R-PT-SYM") {
      shape(1, 0);
      is(0, "PT");
      out = pt(pr[0]->b, flip_rel(pr[0]->rel), pr[0]->a, pr[0]->hyps);
    } else if (rule == "R-PT-EQSUBST") {
      shape(2, 0);
      is(0, "PT");
      is(1, "EQ");
      need(pr[1]->a == pr[0]->b, "R-PT-EQSUBST mismatch");
      out = pt(pr[0]->a, pr[0]->rel, pr[1]->b, pr[0]->hyps);
    } else if (rule == "R-PT-CONTRA") {
      shape(1, 0);
      is(0, "PT");
      need(pr[0]->rel != "eq" && pr[0]->a == pr[0]->b, "R-PT-CONTRA needs a < a or a > a");
      out = bot(pr[0]->hyps);
    } else if (rule == "R-PT-CASES") {
      shape(3, 0);
      std::map<std::string, const J*> used;  // relation -> hypothesis
      std::set<std::string> rest;
      for (std::size_t i = 0; i < 3; ++i) {
        is(i, "BOT");
        std::string pick;
        for (const auto& h : pr[i]->hyps) {
          auto it = hyps_.find(h);
          if (it == hyps_.end() || used.contains(it->second.rel)) continue;
          used[it->second.rel] = &it->second;
          pick = h;
          break;
        }
        need(!pick.empty(), "R-PT-CASES branch without a case hypothesis");
        for (const auto& h : pr[i]->hyps)
          if (h != pick) rest.insert(h);
      }
      need(used.size() == 3, "R-PT-CASES does not cover three relations");
      const J* first = used.begin()->second;
      for (const auto& [rel, h] : used) need(h->a == first->a && h->b == first->b, "R-PT-CASES compares different words");
      out = bot(rest);
    } else if (rule == "R-PT-GLOBALFIX") {
      need(!pr.empty() && args.size() == 0, "R-PT-GLOBALFIX shape");
      std::set<int> fixed;
      std::set<std::string> h;
      for (std::size_t i = 0; i < pr.size(); ++i) {
        is(i, "PT");
        const J& f = *pr[i];
        const W& g = f.b.empty() ? f.a : f.b;
        need(f.rel == "eq" && (f.a.empty() || f.b.empty()) && g.size() == 1, "R-PT-GLOBALFIX premise");
        fixed.insert(g[0] < 0 ? -g[0] : g[0]);
        h.insert(f.hyps.begin(), f.hyps.end());
      }
      need(fixed.contains(1) && fixed.contains(2), "R-PT-GLOBALFIX must fix both c and l");
      out = bot(h);
    } else {
      throw Reject("unknown rule " + rule);
    }
    need(!facts_.contains(id), "duplicate id " + id);
    facts_[id] = out;
    return out;
  }

 private:
  bool decreasing_ = false;
  std::map<std::string, J> axioms_;
  std::map<std::string, J> facts_;
  std::map<std::string, J> hyps_;
};

}  // namespace

Verdict verify(const nlohmann::json& cert) {
  Verdict v;
  std::size_t i = 0;
  try {
    need(cert.at("result") == "BOT", "certificate does not claim BOT");
    need(cert.at("failure").is_null(), "certificate records a failure");
    Checker checker(cert);
    const auto& steps = cert.at("steps");
    need(!steps.empty(), "no steps");
    J last;
    std::map<std::string, J> by_id;
    for (i = 0; i < steps.size(); ++i) {
      const J got = checker.step(steps[i]);
      need(got == read_judgment(steps[i].at("judgment")), "claimed judgment differs from the derived one");
      by_id[steps[i].at("id").get<std::string>()] = got;
      last = got;
    }
    if (cert.contains("qed")) {
      auto it = by_id.find(cert.at("qed").get<std::string>());
      need(it != by_id.end(), "qed names no step");
      last = it->second;
    }
    need(last.kind == "BOT", "conclusion is not BOT");
    std::set<std::string> open;
    for (const auto& h : cert.at("open_assumptions")) open.insert(h.get<std::string>());
    need(open == last.hyps, "open assumptions differ");
    v.accepted = true;
  } catch (const std::exception& ex) {
    v.accepted = false;
    if (cert.contains("steps") && i < cert["steps"].size()) v.failed_step = i;
    v.reason = ex.what();
  }
  return v;
}

}  // namespace pretzel::independent
