#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "altsurf/diagram.hpp"
#include "altsurf/words.hpp"

namespace altsurf {

enum class Sphere { upper, lower };

constexpr int index_of(Sphere s) noexcept { return s == Sphere::upper ? 0 : 1; }
constexpr char sphere_tag(Sphere s) noexcept { return s == Sphere::upper ? '+' : '-'; }

/// A pass over (upper) or under (lower) a bubble through one saddle.
/// `level` orders stacked saddles at one crossing, 0 nearest the overstrand.
struct SaddlePass {
  int crossing = 0;
  int side = 0;
  int level = 0;

  friend auto operator<=>(const SaddlePass&, const SaddlePass&) = default;
};

/// A point where an interior arc meets the link. `index` counts B-points on
/// the edge starting from its over-end.
struct BPoint {
  int edge = 0;
  Side side = Side::left;
  int index = 0;

  friend auto operator<=>(const BPoint&, const BPoint&) = default;
};

using Station = std::variant<SaddlePass, BPoint>;

enum class Gap { interior, boundary };

/// gaps[i] is the arc from stations[i] to stations[(i + 1) % size].
struct Curve {
  Sphere sphere = Sphere::upper;
  std::vector<Station> stations;
  std::vector<Gap> gaps;

  friend bool operator==(const Curve&, const Curve&) = default;
};

/// Where the arc system meets the diagram: the ordered sides of the B-points
/// on each edge (from the over-end) and the number of stacked saddles at each
/// crossing.
struct Placement {
  std::vector<std::vector<Side>> edge_orders;
  std::vector<int> saddles;

  int b_point_total() const noexcept;
  int saddle_total() const noexcept;

  friend bool operator==(const Placement&, const Placement&) = default;
};

BSWord word_of(const Curve& c);

/// Quadrant positions joined by a pass. Upper passes run alongside the
/// overstrand around understrand end 2*side; lower passes run alongside the
/// understrand around overstrand end 2*side + 1.
std::pair<Quadrant, Quadrant> saddle_attachments(Sphere sphere, const SaddlePass& s);

enum class CurveFault {
  none,
  malformed,        // empty, gap count mismatch, station out of range
  arc_kinds,        // B without one boundary and one interior gap, or S beside a boundary gap
  boundary_arc,     // boundary gap joins B-points not adjacent along the link on this sphere
  face_mismatch,    // interior gap between attachments on different faces
  same_bubble,      // item 2
  edge_side_reuse,  // item 4
  saddle_adjacent,  // item 6
};

std::string_view to_string(CurveFault f) noexcept;

struct CurveCheck {
  CurveFault fault = CurveFault::none;
  std::string reason;

  bool ok() const noexcept { return fault == CurveFault::none; }
  /// Standard-position property item for faults that have one, else 0.
  int item() const noexcept;
};

CurveCheck check_curve(const Curve& c, const Diagram& d, const Placement& placement);
inline bool is_realizable(const Curve& c, const Diagram& d, const Placement& placement) {
  return check_curve(c, d, placement).ok();
}

/// Attachment points of an arc system: every B-point and, for each stacked
/// saddle, one point per quadrant of its crossing. Each point is the end of
/// exactly one interior arc.
struct AttachPoint {
  bool is_saddle = false;
  int edge = -1;  // B-point
  int index = -1;
  Side side = Side::left;
  int crossing = -1;  // saddle point
  int level = -1;
  int quadrant = -1;
};

class PointIndex {
 public:
  /// Throws std::invalid_argument if the placement does not fit the diagram.
  PointIndex(const Diagram& d, const Placement& placement);

  int size() const noexcept { return static_cast<int>(points_.size()); }
  const AttachPoint& at(int id) const { return points_.at(id); }
  int b_point(int edge, int index) const { return b_offset_.at(edge) + index; }
  int saddle_point(int crossing, int level, int quadrant) const {
    return s_offset_.at(crossing) + 4 * level + quadrant;
  }
  int face(int id) const { return face_.at(id); }

  /// The point joined to `id` on this sphere without crossing Q: the other end
  /// of a boundary arc for a B-point, the other end of a pass for a saddle point.
  int link_partner(Sphere sphere, int id) const { return partner_[index_of(sphere)].at(id); }

  /// Points in cyclic order around each face.
  const std::vector<int>& face_order(int face) const { return face_order_.at(face); }
  int face_count() const noexcept { return static_cast<int>(face_order_.size()); }
  int position_in_face(int id) const { return position_.at(id); }

  /// The station a point belongs to on the given sphere.
  Station station(Sphere sphere, int id) const;
  int point_of(const BPoint& b) const { return b_point(b.edge, b.index); }

  const Placement& placement() const noexcept { return placement_; }

 private:
  Placement placement_;
  std::vector<AttachPoint> points_;
  std::vector<int> b_offset_;
  std::vector<int> s_offset_;
  std::vector<int> face_;
  std::vector<int> partner_[2];
  std::vector<std::vector<int>> face_order_;
  std::vector<int> position_;
};

/// Every upper and lower curve of the arc system whose interior arcs pair
/// point p with arc_partner[p].
std::vector<Curve> trace_curves(const PointIndex& points, const std::vector<int>& arc_partner);

/// `+ B(e3,L) = B(e5,R) ~ S(c2,0) ~` : sphere tag, then each station followed
/// by the kind of the gap after it (`=` boundary, `~` interior). Crossings and
/// edges use 1-based ids; `,index` / `,level` suffixes are printed when
/// nonzero.
std::string to_string(const Curve& c);
std::string to_string(const Station& s);

/// Throws std::invalid_argument on malformed text.
Curve parse_curve(std::string_view text);

/// Least rotation/reflection of a curve under its text order.
Curve canonical(const Curve& c);

}  // namespace altsurf
