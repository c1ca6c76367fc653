#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace altsurf {

/// Side of an edge, relative to the link orientation (tail to head).
enum class Side : std::uint8_t { left = 0, right = 1 };

constexpr Side opposite(Side s) noexcept { return s == Side::left ? Side::right : Side::left; }
constexpr int index_of(Side s) noexcept { return static_cast<int>(s); }
char side_letter(Side s) noexcept;

/// One of the four edge-ends at a crossing.
struct EdgeEnd {
  int crossing = -1;
  int position = -1;

  friend bool operator==(const EdgeEnd&, const EdgeEnd&) = default;
};

/// Edge-ends in counterclockwise order. Position 0 is the incoming understrand,
/// so positions 0 and 2 carry the understrand and 1 and 3 the overstrand.
struct Crossing {
  std::array<int, 4> edges{};

  static constexpr bool is_over(int position) noexcept { return position % 2 == 1; }
};

struct Edge {
  int label = 0;  // PD label
  EdgeEnd tail;   // along the link orientation
  EdgeEnd head;
  EdgeEnd over_end;
  EdgeEnd under_end;
  std::array<int, 2> faces{-1, -1};  // indexed by Side
  int component = 0;
};

/// The corner of a crossing between positions `position` and `position + 1`.
struct Quadrant {
  int crossing = -1;
  int position = -1;

  friend bool operator==(const Quadrant&, const Quadrant&) = default;
};

struct EdgeSide {
  int edge = -1;
  Side side = Side::left;

  friend bool operator==(const EdgeSide&, const EdgeSide&) = default;
};

/// A complementary region of the diagram. Walking the boundary keeps the face
/// on the right: corner i, then the edge leaving it, then corner i + 1.
struct Face {
  std::vector<Quadrant> corners;
  std::vector<EdgeSide> sides;
  std::vector<EdgeEnd> departures;  // end at which sides[i] is entered from corners[i]

  std::size_t degree() const noexcept { return corners.size(); }
};

enum class DiagramErrorKind {
  syntax,
  inconsistent,
  not_alternating,
  split,
  not_planar,
  nugatory,
  not_prime,
};

std::string_view to_string(DiagramErrorKind kind) noexcept;

class DiagramError : public std::runtime_error {
 public:
  DiagramError(DiagramErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  DiagramErrorKind kind() const noexcept { return kind_; }

  /// Syntax and label errors are malformed input; the rest are inputs outside
  /// the supported class of diagrams.
  bool is_precondition() const noexcept {
    return kind_ != DiagramErrorKind::syntax && kind_ != DiagramErrorKind::inconsistent;
  }

 private:
  DiagramErrorKind kind_;
};

/// A validated, reduced, connected alternating link diagram. Immutable once built.
class Diagram {
 public:
  int crossing_count() const noexcept { return static_cast<int>(crossings_.size()); }
  int edge_count() const noexcept { return static_cast<int>(edges_.size()); }
  int face_count() const noexcept { return static_cast<int>(faces_.size()); }
  int component_count() const noexcept { return components_; }
  int quadrant_count() const noexcept { return 4 * crossing_count(); }
  int edge_side_count() const noexcept { return 2 * edge_count(); }

  const std::vector<Crossing>& crossings() const noexcept { return crossings_; }
  const Crossing& crossing(int c) const { return crossings_.at(c); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const Edge& edge(int e) const { return edges_.at(e); }
  const std::vector<Face>& faces() const noexcept { return faces_; }
  const Face& face(int f) const { return faces_.at(f); }

  int edge_at(EdgeEnd end) const { return crossings_.at(end.crossing).edges.at(end.position); }
  EdgeEnd other_end(int edge, EdgeEnd end) const;
  bool incident(int edge, int crossing) const;

  int quadrant_face(Quadrant q) const;
  int edge_side_face(EdgeSide s) const;

  /// No two faces share two distinct edges, i.e. no circle meets the diagram
  /// in two points with crossings on both sides.
  bool is_prime() const;

  /// Standard closed 2-braid: two n-gon faces and n bigons.
  bool is_two_strand_torus() const;

  /// Canonical PD text: crossings in input order, single spaces.
  std::string to_pd() const;

 private:
  friend Diagram parse_pd(std::string_view text);

  std::vector<Crossing> crossings_;
  std::vector<Edge> edges_;
  std::vector<Face> faces_;
  std::vector<int> quadrant_face_;  // 4 * crossing + position
  int components_ = 0;
};

/// Parse PD text (`X[a,b,c,d]` tokens) and validate it. Throws DiagramError.
Diagram parse_pd(std::string_view text);

inline std::vector<Face> faces(const Diagram& d) { return d.faces(); }
inline bool is_prime(const Diagram& d) { return d.is_prime(); }
inline int quadrant_face(const Diagram& d, Quadrant q) { return d.quadrant_face(q); }
inline int edge_side_face(const Diagram& d, EdgeSide s) { return d.edge_side_face(s); }

struct KnotTableEntry {
  std::string name;
  std::string pd;
  int line = 0;
};

/// Knot-table text: `name<TAB>pd-code` per line, `#` comments, blank lines skipped.
std::vector<KnotTableEntry> read_knot_table(std::istream& in);
std::vector<KnotTableEntry> read_knot_table_file(const std::string& path);

}  // namespace altsurf
