#include "pretzel/edgepath.hpp"

#include <algorithm>
#include <iomanip>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace pretzel {

Vertex::Vertex(std::int64_t p, std::int64_t q) {
  if (q == 0) {
    if (p == 0) throw std::invalid_argument("0/0 is not a vertex");
    p_ = 1;
    q_ = 0;
    return;
  }
  if (q < 0) {
    p = -p;
    q = -q;
  }
  const std::int64_t g = std::gcd(p, q);
  p_ = p / g;
  q_ = q / g;
}

mpq_class Vertex::u() const {
  if (is_infinity()) return -1;
  return mpq_class(q_ - 1, q_);
}

mpq_class Vertex::v() const {
  if (is_infinity()) throw std::domain_error("the vertex 1/0 has no v-coordinate");
  mpq_class r(p_, q_);
  r.canonicalize();
  return r;
}

std::string Vertex::to_string() const {
  if (is_infinity()) return "1/0";
  return std::to_string(p_) + "/" + std::to_string(q_);
}

bool adjacent(const Vertex& a, const Vertex& b) {
  const std::int64_t d = a.p() * b.q() - a.q() * b.p();
  return d == 1 || d == -1;
}

std::string color_name(EdgeColor c) {
  switch (c) {
    case EdgeColor::InfZero:
      return "<1/0,0/1>";
    case EdgeColor::InfOne:
      return "<1/0,1/1>";
    case EdgeColor::OneZero:
      return "<1/1,0/1>";
  }
  return "?";
}

namespace {

// Parity class: 0 for odd/even (like 1/0), 1 for even/odd (0/1), 2 for odd/odd (1/1).
int parity_class(const Vertex& v) {
  const bool podd = v.p() % 2 != 0;
  const bool qodd = v.q() % 2 != 0;
  if (podd && !qodd) return 0;
  if (!podd && qodd) return 1;
  return 2;
}

mpq_class interpolate(const mpq_class& a, const mpq_class& b, const mpq_class& t) { return a + t * (b - a); }

}  // namespace

EdgeColor edge_color(const Edge& e) {
  if (!adjacent(e.from, e.to))
    throw std::invalid_argument("not an edge: " + e.from.to_string() + " - " + e.to.to_string());
  const int a = parity_class(e.from), b = parity_class(e.to);
  const int missing = 3 - a - b;  // the two classes differ on an edge
  if (missing == 2) return EdgeColor::InfZero;
  if (missing == 1) return EdgeColor::InfOne;
  return EdgeColor::OneZero;
}

char direction_sign(Direction d) { return d == Direction::Up ? '+' : '-'; }

std::pair<mpq_class, mpq_class> EdgePath::end_point() const {
  if (vertices.empty()) throw std::logic_error("empty edgepath");
  const Vertex& last = vertices.back();
  if (!partial) return {last.u(), last.v()};
  const Vertex& prev = vertices[vertices.size() - 2];
  return {interpolate(prev.u(), last.u(), *partial), interpolate(prev.v(), last.v(), *partial)};
}

std::string EdgePath::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < vertices.size(); ++i) os << (i ? " -> " : "") << vertices[i].to_string();
  if (partial) os << " (last edge " << partial->get_str() << ")";
  return os.str();
}

bool is_minimal(const EdgePath& path) {
  const auto& vs = path.vertices;
  for (std::size_t i = 0; i + 1 < vs.size(); ++i) {
    if (!adjacent(vs[i], vs[i + 1])) return false;
    const bool border = vs[i].is_integer() && vs[i + 1].is_integer();
    if (border ? vs[i + 1].u() != vs[i].u() : vs[i + 1].u() >= vs[i].u()) return false;
  }
  for (std::size_t i = 0; i + 2 < vs.size(); ++i)
    if (vs[i] == vs[i + 2] || adjacent(vs[i], vs[i + 2])) return false;
  if (path.partial && (*path.partial <= 0 || *path.partial >= 1)) return false;
  return true;
}

bool is_monochromatic(const EdgePath& path) {
  if (path.is_constant()) return true;
  const EdgeColor first = edge_color(path.edge(0));
  for (std::size_t i = 1; i < path.edge_count(); ++i)
    if (edge_color(path.edge(i)) != first) return false;
  return true;
}

mpq_class twist(const EdgePath& path) {
  mpq_class up = 0, down = 0;
  const std::size_t n = path.edge_count();
  for (std::size_t i = 0; i < n; ++i) {
    const Edge e = path.edge(i);
    if (e.from.is_infinity() || e.to.is_infinity()) continue;
    const mpq_class w = (i + 1 == n && path.partial) ? *path.partial : mpq_class(1);
    const int c = cmp(e.to.v(), e.from.v());
    if (c > 0) up += w;
    if (c < 0) down += w;
  }
  return 2 * (down - up);
}

std::array<Vertex, 3> montesinos_fractions(int s) {
  if (s < 3) throw std::invalid_argument("knot index s must be at least 3");
  return {Vertex(-1, 2), Vertex(1, 3), Vertex(1, 2 * s + 1)};
}

std::pair<Vertex, Vertex> farey_parents(const Vertex& v) {
  if (v.is_infinity() || v.q() < 2) throw std::invalid_argument("farey_parents needs a non-integer rational");
  const std::int64_t p = v.p(), q = v.q();
  // b = p^-1 mod q, so p b - q a = 1 for a = (p b - 1) / q
  std::int64_t r0 = q, r1 = ((p % q) + q) % q, t0 = 0, t1 = 1;
  while (r1 != 0) {
    const std::int64_t k = r0 / r1;
    std::tie(r0, r1) = std::make_pair(r1, r0 - k * r1);
    std::tie(t0, t1) = std::make_pair(t1, t0 - k * t1);
  }
  const std::int64_t b = ((t0 % q) + q) % q;
  const std::int64_t a = (p * b - 1) / q;
  const Vertex x(a, b), y(p - a, q - b);
  return x.v() > y.v() ? std::make_pair(x, y) : std::make_pair(y, x);
}

std::string type_name(SystemType t) {
  switch (t) {
    case SystemType::I:
      return "I";
    case SystemType::II:
      return "II";
    case SystemType::III:
      return "III";
  }
  return "?";
}

EdgePath monotone_path(const Vertex& start, Direction dir, SystemType target) {
  if (start.is_infinity() || start.is_integer()) throw std::invalid_argument("monotone_path needs a non-integer start");
  EdgePath path;
  path.direction = dir;
  path.vertices.push_back(start);
  while (!path.vertices.back().is_integer()) {
    const auto [up, down] = farey_parents(path.vertices.back());
    path.vertices.push_back(dir == Direction::Up ? up : down);
  }
  if (target == SystemType::III) path.vertices.push_back(Vertex::infinity());
  return path;
}

bool is_monochromatic(const EdgePathSystem& sys) {
  return std::all_of(sys.paths.begin(), sys.paths.end(), [](const EdgePath& p) { return is_monochromatic(p); });
}

mpq_class twist(const EdgePathSystem& sys) {
  mpq_class t = 0;
  for (const auto& p : sys.paths) t += twist(p);
  return t;
}

EdgePathSystem build_system(int s, const std::array<Direction, 3>& dirs, SystemType type, const PathOrder& order) {
  if (type == SystemType::I) throw std::invalid_argument("type I systems come from type1_scan");
  const auto starts = montesinos_fractions(s);
  EdgePathSystem sys;
  sys.type = type;
  for (int i = 0; i < 3; ++i) sys.paths[i] = monotone_path(starts[i], dirs[i], type);

  if (type == SystemType::II) {
    std::int64_t z = 0;
    for (const auto& p : sys.paths) z += p.vertices.back().p();
    if (z != 0) {
      const std::int64_t step = z > 0 ? -1 : 1;
      const Direction need = step > 0 ? Direction::Up : Direction::Down;
      auto extended = [&](int i) {
        EdgePath e = sys.paths[i];
        for (std::int64_t k = 0; k < (z > 0 ? z : -z); ++k)
          e.vertices.push_back(Vertex::integer(e.vertices.back().p() + step));
        return e;
      };
      std::optional<int> chosen;
      for (int pass = 0; pass < 2 && !chosen; ++pass) {
        for (int i : order) {
          if (pass == 0 && dirs[i] != need) continue;
          if (is_minimal(extended(i))) {
            chosen = i;
            break;
          }
        }
      }
      if (!chosen) {
        sys.admissible = false;
        sys.reason = "integer ends sum to " + std::to_string(z) + " and no path can move " +
                     (step > 0 ? "up" : "down") + " along the border without leaving a triangle twice";
        return sys;
      }
      sys.paths[*chosen] = extended(*chosen);
    }
  }
  for (int i = 0; i < 3; ++i) {
    if (!is_minimal(sys.paths[i])) {
      sys.admissible = false;
      sys.reason = "path " + std::to_string(i + 1) + " is not minimal";
      return sys;
    }
  }
  sys.admissible = true;
  return sys;
}

EdgePathSystem seifert_system(int s) {
  return build_system(s, {Direction::Up, Direction::Up, Direction::Up}, SystemType::III);
}

mpq_class slope(const EdgePathSystem& sys, int s) {
  mpq_class r = twist(sys) - twist(seifert_system(s));
  r.canonicalize();
  if (r.get_den() != 1 || r.get_num() % 2 != 0)
    throw std::logic_error("type II/III slope " + r.get_str() + " is not an even integer");
  return r;
}

std::string SlopeRow::signs() const {
  return {direction_sign(dirs[0]), direction_sign(dirs[1]), direction_sign(dirs[2])};
}

SlopeTable slope_table(int s, const PathOrder& order) {
  SlopeTable t;
  t.s = s;
  for (int r = 0; r < 8; ++r) {
    SlopeRow& row = t.rows[r];
    for (int i = 0; i < 3; ++i) row.dirs[i] = (r >> (2 - i)) & 1 ? Direction::Down : Direction::Up;
    auto cell = [&](SystemType type) {
      SlopeCell c;
      const auto sys = build_system(s, row.dirs, type, order);
      if (sys.admissible) {
        c.slope = slope(sys, s);
      } else {
        c.reason = sys.reason;
      }
      return c;
    };
    row.type2 = cell(SystemType::II);
    row.type3 = cell(SystemType::III);
  }
  return t;
}

std::size_t count_type23_slope_values(int s) {
  std::set<mpq_class> seen;
  for (const auto& row : slope_table(s).rows) {
    if (row.type2.slope) seen.insert(*row.type2.slope);
    if (row.type3.slope) seen.insert(*row.type3.slope);
  }
  return seen.size();
}

namespace {

// The path from `start` in direction `dir` cut at u0, which must lie below u(start).
EdgePath truncate(const Vertex& start, Direction dir, const mpq_class& u0) {
  EdgePath full = monotone_path(start, dir, SystemType::II);
  EdgePath out;
  out.direction = dir;
  out.vertices.push_back(full.vertices[0]);
  for (std::size_t i = 1; i < full.vertices.size(); ++i) {
    const mpq_class ua = full.vertices[i - 1].u(), ub = full.vertices[i].u();
    out.vertices.push_back(full.vertices[i]);
    if (u0 == ub) return out;
    if (u0 > ub) {
      mpq_class f = (ua - u0) / (ua - ub);
      f.canonicalize();
      out.partial = f;
      return out;
    }
  }
  throw std::logic_error("u0 beyond the end of the path");
}

}  // namespace

std::vector<Type1System> type1_scan(int s, int denominator_bound) {
  const auto starts = montesinos_fractions(s);
  const mpq_class tau0 = twist(seifert_system(s));
  std::vector<Type1System> out;
  for (int m = 2; m <= denominator_bound; ++m) {
    for (int n = 1; n < m; ++n) {
      if (std::gcd(n, m) != 1) continue;
      const mpq_class u0(n, m);
      for (int code = 0; code < 27; ++code) {
        std::array<int, 3> dirs{};
        for (int i = 0, c = code; i < 3; ++i, c /= 3) dirs[i] = c % 3 - 1;
        if (dirs == std::array<int, 3>{0, 0, 0}) continue;
        Type1System sys{u0, dirs, {}, 0};
        mpq_class tau = 0, vsum = 0;
        bool ok = true;
        for (int i = 0; i < 3 && ok; ++i) {
          const mpq_class us = starts[i].u();
          if (dirs[i] == 0) {
            ok = u0 >= us;
            sys.v[i] = starts[i].v();
          } else {
            ok = u0 < us;
            if (!ok) break;
            const EdgePath path = truncate(starts[i], dirs[i] > 0 ? Direction::Up : Direction::Down, u0);
            sys.v[i] = path.end_point().second;
            tau += twist(path);
          }
          vsum += sys.v[i];
        }
        if (!ok || vsum != 0) continue;
        sys.slope = tau - tau0;
        sys.slope.canonicalize();
        out.push_back(std::move(sys));
      }
    }
  }
  return out;
}

namespace {

nlohmann::json slope_value(const mpq_class& q) {
  if (q.get_den() == 1 && q.get_num().fits_slong_p()) return q.get_num().get_si();
  return q.get_str();
}

}  // namespace

nlohmann::json to_json(const SlopeTable& t) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : t.rows) {
    for (auto [type, cell] : {std::pair{"II", &row.type2}, std::pair{"III", &row.type3}}) {
      nlohmann::json e{{"sign_triple", row.signs()}, {"type", type}};
      if (cell->slope) {
        e["slope"] = slope_value(*cell->slope);
      } else {
        e["slope"] = "not_admissible";
        e["reason"] = cell->reason;
      }
      rows.push_back(e);
    }
  }
  return {{"s", t.s}, {"rows", rows}};
}

std::string to_text(const SlopeTable& t) {
  std::ostringstream os;
  auto show = [](const SlopeCell& c) { return c.slope ? c.slope->get_str() : std::string("Not admissible"); };
  os << "Slope list for s = " << t.s << "\n";
  os << std::left << std::setw(12) << "Directions" << std::setw(18) << "Type II" << "Type III\n";
  for (const auto& row : t.rows)
    os << std::setw(12) << row.signs() << std::setw(18) << show(row.type2) << show(row.type3) << "\n";
  return os.str();
}

nlohmann::json to_json(const Type1System& t) {
  nlohmann::json v = nlohmann::json::array();
  for (const auto& x : t.v) v.push_back(x.get_str());
  return {{"u0", t.u0.get_str()}, {"directions", t.dirs}, {"v", v}, {"slope", t.slope.get_str()}};
}

}  // namespace pretzel
