#pragma once

// Edgepaths in the Hatcher-Oertel diagram for the Montesinos knot
// M(-1/2, 1/3, 1/(2s+1)), and the boundary slopes they carry.
//
// Vertex p/q sits at u = (q-1)/q, v = p/q; the vertex 1/0 sits at u = -1.
// Integers form the left border u = 0.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>
#include <nlohmann/json.hpp>

namespace pretzel {

class Vertex {
 public:
  /// Reduces p/q; q = 0 gives the vertex at infinity.
  Vertex(std::int64_t p, std::int64_t q);
  static Vertex infinity() { return {1, 0}; }
  static Vertex integer(std::int64_t z) { return {z, 1}; }

  std::int64_t p() const { return p_; }
  std::int64_t q() const { return q_; }
  bool is_infinity() const { return q_ == 0; }
  bool is_integer() const { return q_ == 1; }
  mpq_class u() const;
  /// Throws for the vertex at infinity.
  mpq_class v() const;
  std::string to_string() const;
  friend bool operator==(const Vertex&, const Vertex&) = default;

 private:
  std::int64_t p_;
  std::int64_t q_;
};

/// |ps - qr| = 1, with infinity as 1/0.
bool adjacent(const Vertex& a, const Vertex& b);

/// Colour classes named by a representative pair of parity classes.
enum class EdgeColor { InfZero, InfOne, OneZero };
std::string color_name(EdgeColor c);

struct Edge {
  Vertex from;
  Vertex to;
};
/// Throws std::invalid_argument if the endpoints are not adjacent.
EdgeColor edge_color(const Edge& e);

enum class Direction { Up, Down };
char direction_sign(Direction d);

struct EdgePath {
  std::vector<Vertex> vertices;
  /// Fraction (in u) of the last edge that is traversed; empty means the whole edge.
  std::optional<mpq_class> partial;
  std::optional<Direction> direction;

  bool is_constant() const { return vertices.size() < 2; }
  std::size_t edge_count() const { return vertices.empty() ? 0 : vertices.size() - 1; }
  Edge edge(std::size_t i) const { return {vertices[i], vertices[i + 1]}; }
  /// (u, v) of the end point; a constant path ends at its vertex.
  std::pair<mpq_class, mpq_class> end_point() const;
  std::string to_string() const;
};

/// Consecutive vertices adjacent, no backtracking, no two consecutive edges
/// on one triangle, u non-increasing and strictly decreasing off the border.
bool is_minimal(const EdgePath& path);
bool is_monochromatic(const EdgePath& path);

/// 2 (e- - e+): edges raising v count in e+, lowering v in e-; edges at
/// infinity count in neither; a partial last edge counts by its fraction.
mpq_class twist(const EdgePath& path);

std::array<Vertex, 3> montesinos_fractions(int s);

/// The two neighbours with smaller denominator; first has the larger v.
std::pair<Vertex, Vertex> farey_parents(const Vertex& v);

enum class SystemType { I, II, III };
std::string type_name(SystemType t);

/// Follows Farey parents in one direction until an integer; type III then
/// adds the edge to infinity. The start must be a non-integer rational.
EdgePath monotone_path(const Vertex& start, Direction dir, SystemType target);

struct EdgePathSystem {
  std::array<EdgePath, 3> paths;
  SystemType type = SystemType::III;
  bool admissible = false;
  std::string reason;  // why not admissible
};
bool is_monochromatic(const EdgePathSystem& sys);
mpq_class twist(const EdgePathSystem& sys);

/// Order in which border moves are assigned to the three paths; the twist
/// does not depend on it.
using PathOrder = std::array<int, 3>;
inline constexpr PathOrder kDefaultOrder{0, 1, 2};

/// Type II systems end on integers summing to zero; the Farey parts are
/// completed by vertical moves along the border, each allowed only where the
/// extended path stays minimal.
EdgePathSystem build_system(int s, const std::array<Direction, 3>& dirs, SystemType type,
                            const PathOrder& order = kDefaultOrder);
/// The upward type III system, which carries the Seifert surface.
EdgePathSystem seifert_system(int s);

/// tau(system) - tau(seifert_system(s)); asserts the result is an even integer.
mpq_class slope(const EdgePathSystem& sys, int s);

struct SlopeCell {
  std::optional<mpq_class> slope;  // empty: not admissible
  std::string reason;
};

struct SlopeRow {
  std::array<Direction, 3> dirs;
  SlopeCell type2;
  SlopeCell type3;
  std::string signs() const;
};

struct SlopeTable {
  int s = 3;
  std::array<SlopeRow, 8> rows;
};

/// Rows +++, ++-, +-+, +--, -++, -+-, --+, ---.
SlopeTable slope_table(int s, const PathOrder& order = kDefaultOrder);
std::size_t count_type23_slope_values(int s);

struct Type1System {
  mpq_class u0;
  std::array<int, 3> dirs;  // +1 up, -1 down, 0 constant
  std::array<mpq_class, 3> v;
  mpq_class slope;
};

/// Systems whose three ends share a u-coordinate n/m in (0, 1) with
/// m <= bound and whose v-coordinates sum to zero; paths are constant or
/// monotone, not all constant.
std::vector<Type1System> type1_scan(int s, int denominator_bound);

nlohmann::json to_json(const SlopeTable& t);
std::string to_text(const SlopeTable& t);
nlohmann::json to_json(const Type1System& t);

}  // namespace pretzel
