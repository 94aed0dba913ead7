#include <doctest.h>

#include <set>

#include "pretzel/edgepath.hpp"

using namespace pretzel;

namespace {

// |ps - qr| computed directly from the fractions.
long long det(long long p, long long q, long long r, long long s) { return p * s - q * r; }

}  // namespace

TEST_CASE("vertices reduce and sit at the right coordinates") {
  const Vertex v(2, 6);
  CHECK(v.p() == 1);
  CHECK(v.q() == 3);
  CHECK(v.u() == mpq_class(2, 3));
  CHECK(v.v() == mpq_class(1, 3));
  CHECK(Vertex(-3, -9) == Vertex(1, 3));
  CHECK(Vertex::infinity().u() == -1);
  CHECK(Vertex::integer(4).u() == 0);
  CHECK_THROWS(Vertex::infinity().v());
}

TEST_CASE("adjacency is the determinant condition") {
  for (long long p = -6; p <= 6; ++p)
    for (long long q = 1; q <= 6; ++q)
      for (long long r = -6; r <= 6; ++r)
        for (long long s = 1; s <= 6; ++s) {
          if (std::gcd(p, q) != 1 || std::gcd(r, s) != 1) continue;
          const long long d = det(p, q, r, s);
          CHECK(adjacent(Vertex(p, q), Vertex(r, s)) == (d == 1 || d == -1));
        }
  CHECK(adjacent(Vertex::infinity(), Vertex::integer(5)));
  CHECK_FALSE(adjacent(Vertex::infinity(), Vertex(1, 2)));
  CHECK_THROWS(edge_color({Vertex(1, 3), Vertex(1, 5)}));
}

TEST_CASE("Farey parents") {
  const auto [a, b] = farey_parents(Vertex(2, 5));
  CHECK(a == Vertex(1, 2));
  CHECK(b == Vertex(1, 3));
  CHECK(adjacent(a, Vertex(2, 5)));
  CHECK(adjacent(b, Vertex(2, 5)));
}

TEST_CASE("monochromatic paths") {
  EdgePath p{{Vertex(1, 3), Vertex(1, 2), Vertex(1, 1)}};
  CHECK(is_monochromatic(p));
  EdgePath q{{Vertex(1, 3), Vertex(0, 1), Vertex::infinity()}};
  CHECK_FALSE(is_monochromatic(q));
}

TEST_CASE("twist of single edges") {
  CHECK(twist(EdgePath{{Vertex(1, 2), Vertex(0, 1)}}) == 2);  // lowers v
  CHECK(twist(EdgePath{{Vertex(1, 2), Vertex(1, 1)}}) == -2);
  CHECK(twist(EdgePath{{Vertex(0, 1), Vertex::infinity()}}) == 0);
  EdgePath half{{Vertex(1, 2), Vertex(1, 1)}, mpq_class(1, 2)};
  CHECK(twist(half) == -1);
}

TEST_CASE("monotone paths end on integers and are minimal") {
  for (int s = 3; s <= 8; ++s)
    for (const auto& f : montesinos_fractions(s))
      for (Direction d : {Direction::Up, Direction::Down}) {
        const auto p = monotone_path(f, d, SystemType::II);
        CHECK(p.vertices.back().is_integer());
        CHECK(is_minimal(p));
        for (std::size_t i = 0; i + 1 < p.vertices.size(); ++i) CHECK(p.vertices[i].u() > p.vertices[i + 1].u());
        const auto p3 = monotone_path(f, d, SystemType::III);
        CHECK(p3.vertices.back().is_infinity());
      }
}

TEST_CASE("Seifert system") {
  for (int s = 3; s <= 12; ++s) {
    const auto sys = seifert_system(s);
    CHECK(sys.type == SystemType::III);
    for (const auto& p : sys.paths) CHECK(p.vertices.back().is_infinity());
    CHECK(is_monochromatic(sys));
    CHECK(slope(sys, s) == 0);
  }
}

TEST_CASE("slope table cells") {
  for (int s = 3; s <= 12; ++s) {
    const auto t = slope_table(s);
    CHECK(t.rows[0].signs() == "+++");
    CHECK_FALSE(t.rows[0].type2.slope);
    CHECK(*t.rows[0].type3.slope == 0);
    CHECK(*t.rows[6].type2.slope == 10);
    CHECK(*t.rows[6].type3.slope == 10);
    CHECK(*t.rows[1].type3.slope == 4 * s + 2);
    CHECK(*t.rows[7].type3.slope == 4 * s + 12);
    CHECK(*t.rows[2].type2.slope == 8);
  }
  CHECK(*slope_table(3).rows[1].type3.slope == 14);
}

TEST_CASE("slope table is independent of path order") {
  for (int s = 3; s <= 6; ++s) {
    const auto base = slope_table(s);
    PathOrder order{0, 1, 2};
    while (std::next_permutation(order.begin(), order.end())) {
      const auto t = slope_table(s, order);
      for (int r = 0; r < 8; ++r) {
        CHECK(t.rows[r].type2.slope == base.rows[r].type2.slope);
        CHECK(t.rows[r].type3.slope == base.rows[r].type3.slope);
      }
    }
  }
}

TEST_CASE("distinct type II/III slopes") {
  // collected straight from the table, s = 3
  const std::set<long> values{0, 14, 16, 6, 8, 20, 4, 18, 10, 22, 24};
  const auto t = slope_table(3);
  std::set<long> seen;
  for (const auto& row : t.rows)
    for (const auto* c : {&row.type2, &row.type3})
      if (c->slope) {
        CHECK(c->slope->get_den() == 1);
        CHECK(c->slope->get_num() % 2 == 0);
        seen.insert(c->slope->get_num().get_si());
      }
  CHECK(seen == values);
  CHECK(count_type23_slope_values(3) == values.size());
}

TEST_CASE("type I scan") {
  CHECK(type1_scan(3, 1).empty());
  const auto five = type1_scan(3, 5);
  CHECK_FALSE(five.empty());
  for (int s = 3; s <= 6; ++s)
    for (const auto& sys : type1_scan(s, 12)) {
      CHECK(sys.slope > 0);
      CHECK(sys.v[0] + sys.v[1] + sys.v[2] == 0);
      CHECK((sys.dirs[0] != 0 || sys.dirs[1] != 0 || sys.dirs[2] != 0));
      CHECK(sys.u0 > 0);
      CHECK(sys.u0 < 1);
    }
}

TEST_CASE("JSON output of the table") {
  const auto j = to_json(slope_table(3));
  std::size_t na = 0;
  for (const auto& row : j["rows"])
    if (row["slope"] == "not_admissible") ++na;
  CHECK(na == 1);
}
