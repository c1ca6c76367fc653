#include "altsurf/curve.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "curve_internal.hpp"

namespace altsurf {

int Placement::b_point_total() const noexcept {
  int total = 0;
  for (const auto& order : edge_orders) total += static_cast<int>(order.size());
  return total;
}

int Placement::saddle_total() const noexcept { return std::accumulate(saddles.begin(), saddles.end(), 0); }

BSWord word_of(const Curve& c) {
  std::string letters;
  letters.reserve(c.stations.size());
  for (const Station& s : c.stations) letters += std::holds_alternative<BPoint>(s) ? 'B' : 'S';
  return BSWord(letters);
}

std::pair<Quadrant, Quadrant> saddle_attachments(Sphere sphere, const SaddlePass& s) {
  const int end = sphere == Sphere::upper ? 2 * s.side : 2 * s.side + 1;
  return {Quadrant{s.crossing, (end + 3) % 4}, Quadrant{s.crossing, end}};
}

std::string_view to_string(CurveFault f) noexcept {
  switch (f) {
    case CurveFault::none: return "ok";
    case CurveFault::malformed: return "malformed";
    case CurveFault::arc_kinds: return "arc-kinds";
    case CurveFault::boundary_arc: return "boundary-arc";
    case CurveFault::face_mismatch: return "face-mismatch";
    case CurveFault::same_bubble: return "same-bubble-twice";
    case CurveFault::edge_side_reuse: return "edge-side-reuse";
    case CurveFault::saddle_adjacent: return "saddle-adjacent-edge";
  }
  return "?";
}

int CurveCheck::item() const noexcept {
  switch (fault) {
    case CurveFault::same_bubble: return 2;
    case CurveFault::edge_side_reuse: return 4;
    case CurveFault::saddle_adjacent: return 6;
    default: return 0;
  }
}

namespace {

/// Side index of the pass through quadrant q of a crossing.
int pass_side(Sphere sphere, int quadrant) {
  if (sphere == Sphere::upper) return (quadrant == 1 || quadrant == 2) ? 1 : 0;
  return quadrant >= 2 ? 1 : 0;
}

}  // namespace

PointIndex::PointIndex(const Diagram& d, const Placement& placement) : placement_(placement) {
  const int n = d.crossing_count();
  const int edge_count = d.edge_count();
  if (static_cast<int>(placement.edge_orders.size()) != edge_count)
    throw std::invalid_argument("placement has " + std::to_string(placement.edge_orders.size()) +
                                " edge orders for " + std::to_string(edge_count) + " edges");
  if (static_cast<int>(placement.saddles.size()) != n)
    throw std::invalid_argument("placement has " + std::to_string(placement.saddles.size()) +
                                " saddle counts for " + std::to_string(n) + " crossings");
  for (int e = 0; e < edge_count; ++e) {
    if (placement.edge_orders[e].size() % 2 == 0)
      throw std::invalid_argument("edge e" + std::to_string(e + 1) + " needs an odd number of B-points");
  }
  for (int c = 0; c < n; ++c) {
    if (placement.saddles[c] < 0) throw std::invalid_argument("negative saddle count");
  }

  b_offset_.resize(edge_count);
  for (int e = 0; e < edge_count; ++e) {
    b_offset_[e] = size();
    const auto& order = placement.edge_orders[e];
    for (int i = 0; i < static_cast<int>(order.size()); ++i) {
      AttachPoint p;
      p.edge = e;
      p.index = i;
      p.side = order[i];
      points_.push_back(p);
      face_.push_back(d.edge_side_face({e, order[i]}));
    }
  }
  s_offset_.resize(n);
  for (int c = 0; c < n; ++c) {
    s_offset_[c] = size();
    for (int level = 0; level < placement.saddles[c]; ++level) {
      for (int q = 0; q < 4; ++q) {
        AttachPoint p;
        p.is_saddle = true;
        p.crossing = c;
        p.level = level;
        p.quadrant = q;
        points_.push_back(p);
        face_.push_back(d.quadrant_face({c, q}));
      }
    }
  }

  for (Sphere sphere : {Sphere::upper, Sphere::lower}) {
    auto& partner = partner_[index_of(sphere)];
    partner.assign(points_.size(), -1);
    for (int id = 0; id < size(); ++id) {
      const AttachPoint& p = points_[id];
      if (p.is_saddle) {
        const SaddlePass pass{p.crossing, pass_side(sphere, p.quadrant), p.level};
        const auto [qa, qb] = saddle_attachments(sphere, pass);
        const int other = p.quadrant == qa.position ? qb.position : qa.position;
        partner[id] = saddle_point(p.crossing, p.level, other);
        continue;
      }
      const int m = static_cast<int>(placement.edge_orders[p.edge].size());
      const Edge& edge = d.edge(p.edge);
      if (sphere == Sphere::upper) {
        // above the plane: from the over-end to the first B-point, then every
        // second gap between B-points
        if (p.index == 0) {
          const EdgeEnd through{edge.over_end.crossing, (edge.over_end.position + 2) % 4};
          partner[id] = b_point(d.edge_at(through), 0);
        } else {
          partner[id] = b_point(p.edge, p.index % 2 == 1 ? p.index + 1 : p.index - 1);
        }
      } else {
        if (p.index == m - 1) {
          const EdgeEnd through{edge.under_end.crossing, (edge.under_end.position + 2) % 4};
          const int other = d.edge_at(through);
          partner[id] = b_point(other, static_cast<int>(placement.edge_orders[other].size()) - 1);
        } else {
          partner[id] = b_point(p.edge, p.index % 2 == 0 ? p.index + 1 : p.index - 1);
        }
      }
    }
  }

  position_.assign(points_.size(), -1);
  face_order_.resize(d.face_count());
  for (int f = 0; f < d.face_count(); ++f) {
    const Face& face = d.face(f);
    auto& order = face_order_[f];
    for (std::size_t i = 0; i < face.degree(); ++i) {
      const Quadrant corner = face.corners[i];
      const int k = placement.saddles[corner.crossing];
      for (int t = 0; t < k; ++t) {
        const int level = Crossing::is_over(corner.position) ? t : k - 1 - t;
        order.push_back(saddle_point(corner.crossing, level, corner.position));
      }
      const EdgeSide side = face.sides[i];
      const Edge& edge = d.edge(side.edge);
      const auto& sides = placement.edge_orders[side.edge];
      const int m = static_cast<int>(sides.size());
      const bool from_over = face.departures[i] == edge.over_end;
      for (int t = 0; t < m; ++t) {
        const int index = from_over ? t : m - 1 - t;
        if (sides[index] == side.side) order.push_back(b_point(side.edge, index));
      }
    }
    for (std::size_t i = 0; i < order.size(); ++i) position_[order[i]] = static_cast<int>(i);
  }
}

Station PointIndex::station(Sphere sphere, int id) const {
  const AttachPoint& p = points_.at(id);
  if (p.is_saddle) return SaddlePass{p.crossing, pass_side(sphere, p.quadrant), p.level};
  return BPoint{p.edge, p.side, p.index};
}

std::vector<Curve> trace_curves(const PointIndex& points, const std::vector<int>& arc_partner) {
  std::vector<Curve> out;
  for (Sphere sphere : {Sphere::upper, Sphere::lower}) {
    std::vector<char> seen(points.size(), 0);
    for (int start = 0; start < points.size(); ++start) {
      if (seen[start]) continue;
      Curve c;
      c.sphere = sphere;
      int p = start;
      do {
        const int q = points.link_partner(sphere, p);
        seen[p] = seen[q] = 1;
        if (points.at(p).is_saddle) {
          c.stations.push_back(points.station(sphere, p));
          c.gaps.push_back(Gap::interior);
        } else {
          c.stations.push_back(points.station(sphere, p));
          c.gaps.push_back(Gap::boundary);
          c.stations.push_back(points.station(sphere, q));
          c.gaps.push_back(Gap::interior);
        }
        p = arc_partner.at(q);
      } while (p != start);
      out.push_back(std::move(c));
    }
  }
  return out;
}

namespace detail {

ResolvedCurve resolve_curve(const Curve& c, const Diagram& d, const PointIndex& index) {
  ResolvedCurve out;
  auto fail = [&](CurveFault f, std::string reason) {
    out.check = {f, std::move(reason)};
    out.gap_points.clear();
    return out;
  };

  const std::size_t n = c.stations.size();
  const Placement& placement = index.placement();
  if (n == 0) return fail(CurveFault::malformed, "curve has no stations");
  if (c.gaps.size() != n) return fail(CurveFault::malformed, "gap count differs from station count");

  for (const Station& s : c.stations) {
    if (const auto* b = std::get_if<BPoint>(&s)) {
      if (b->edge < 0 || b->edge >= d.edge_count())
        return fail(CurveFault::malformed, "unknown edge in " + to_string(s));
      const auto& order = placement.edge_orders[b->edge];
      if (b->index < 0 || b->index >= static_cast<int>(order.size()))
        return fail(CurveFault::malformed, "B-point index out of range in " + to_string(s));
      if (order[b->index] != b->side)
        return fail(CurveFault::malformed, "B-point side disagrees with edge order in " + to_string(s));
    } else {
      const auto& p = std::get<SaddlePass>(s);
      if (p.crossing < 0 || p.crossing >= d.crossing_count())
        return fail(CurveFault::malformed, "unknown crossing in " + to_string(s));
      if (p.side < 0 || p.side > 1) return fail(CurveFault::malformed, "saddle side must be 0 or 1");
      if (p.level < 0 || p.level >= placement.saddles[p.crossing])
        return fail(CurveFault::malformed, "saddle level out of range in " + to_string(s));
    }
  }

  for (std::size_t i = 0; i < n; ++i) {
    const Gap before = c.gaps[(i + n - 1) % n];
    const Gap after = c.gaps[i];
    const int boundary = (before == Gap::boundary) + (after == Gap::boundary);
    if (std::holds_alternative<BPoint>(c.stations[i])) {
      if (boundary != 1 || n < 2)
        return fail(CurveFault::arc_kinds, "B-point " + to_string(c.stations[i]) +
                                               " needs one boundary and one interior arc");
    } else if (boundary != 0) {
      return fail(CurveFault::arc_kinds, "saddle pass " + to_string(c.stations[i]) + " touches a boundary arc");
    }
  }

  for (std::size_t i = 0; i < n; ++i) {
    if (c.gaps[i] != Gap::boundary) continue;
    const auto& a = std::get<BPoint>(c.stations[i]);
    const auto& b = std::get<BPoint>(c.stations[(i + 1) % n]);
    if (index.link_partner(c.sphere, index.point_of(a)) != index.point_of(b))
      return fail(CurveFault::boundary_arc, to_string(c.stations[i]) + " and " +
                                                to_string(c.stations[(i + 1) % n]) +
                                                " are not joined along the link on this sphere");
  }

  // Orient each pass: `entry[i]` is the quadrant point where station i is
  // entered from gap i-1; the pass leaves through its other point.
  std::vector<int> entry(n, -1);
  std::vector<int> exit(n, -1);
  const auto pass_points = [&](std::size_t i) {
    const auto& p = std::get<SaddlePass>(c.stations[i]);
    const auto [qa, qb] = saddle_attachments(c.sphere, p);
    return std::array<int, 2>{index.saddle_point(p.crossing, p.level, qa.position),
                              index.saddle_point(p.crossing, p.level, qb.position)};
  };
  for (std::size_t i = 0; i < n; ++i) {
    if (const auto* b = std::get_if<BPoint>(&c.stations[i])) entry[i] = exit[i] = index.point_of(*b);
  }
  std::size_t anchor = n;
  for (std::size_t i = 0; i < n; ++i) {
    if (std::holds_alternative<BPoint>(c.stations[i])) {
      anchor = i;
      break;
    }
  }

  const auto propagate = [&](std::size_t start, int start_exit) -> bool {
    int current = start_exit;
    for (std::size_t step = 1; step <= n; ++step) {
      const std::size_t i = (start + step) % n;
      const bool interior = c.gaps[(i + n - 1) % n] == Gap::interior;
      if (std::holds_alternative<SaddlePass>(c.stations[i])) {
        if (step == n) return entry[i] != -1 && index.face(entry[i]) == index.face(current);
        const auto pts = pass_points(i);
        const int face = index.face(current);
        if (index.face(pts[0]) == face) {
          entry[i] = pts[0];
          exit[i] = pts[1];
        } else if (index.face(pts[1]) == face) {
          entry[i] = pts[1];
          exit[i] = pts[0];
        } else {
          return false;
        }
        current = exit[i];
      } else {
        if (interior && index.face(entry[i]) != index.face(current)) return false;
        current = exit[i];
      }
    }
    return true;
  };

  bool placed = false;
  if (anchor < n) {
    placed = propagate(anchor, exit[anchor]);
  } else {
    for (int choice = 0; choice < 2 && !placed; ++choice) {
      const auto pts = pass_points(0);
      entry[0] = pts[choice];
      exit[0] = pts[1 - choice];
      placed = propagate(0, exit[0]);
    }
  }
  if (!placed) return fail(CurveFault::face_mismatch, "an interior arc joins attachments on different faces");

  std::vector<int> crossings;
  for (const Station& s : c.stations) {
    if (const auto* p = std::get_if<SaddlePass>(&s)) {
      if (std::find(crossings.begin(), crossings.end(), p->crossing) != crossings.end())
        return fail(CurveFault::same_bubble, "curve passes bubble c" + std::to_string(p->crossing + 1) + " twice");
      crossings.push_back(p->crossing);
    }
  }

  std::vector<std::pair<int, Side>> sides;
  for (const Station& s : c.stations) {
    if (const auto* b = std::get_if<BPoint>(&s)) {
      const std::pair<int, Side> key{b->edge, b->side};
      if (std::find(sides.begin(), sides.end(), key) != sides.end())
        return fail(CurveFault::edge_side_reuse, "two interior arcs end on side " +
                                                     std::string(1, side_letter(b->side)) + " of edge e" +
                                                     std::to_string(b->edge + 1));
      sides.push_back(key);
    }
  }

  for (std::size_t i = 0; i < n; ++i) {
    if (c.gaps[i] != Gap::interior) continue;
    const Station& a = c.stations[i];
    const Station& b = c.stations[(i + 1) % n];
    const auto adjacent = [&](const Station& s, const Station& t) {
      const auto* pass = std::get_if<SaddlePass>(&s);
      const auto* point = std::get_if<BPoint>(&t);
      return pass && point && d.incident(point->edge, pass->crossing);
    };
    if (adjacent(a, b) || adjacent(b, a))
      return fail(CurveFault::saddle_adjacent,
                  to_string(a) + " and " + to_string(b) + " meet across an edge adjacent to the saddle");
  }

  out.check = {};
  out.gap_points.resize(n);
  for (std::size_t i = 0; i < n; ++i) out.gap_points[i] = {exit[i], entry[(i + 1) % n]};
  return out;
}

}  // namespace detail

CurveCheck check_curve(const Curve& c, const Diagram& d, const Placement& placement) {
  std::optional<PointIndex> index;
  try {
    index.emplace(d, placement);
  } catch (const std::invalid_argument& e) {
    return {CurveFault::malformed, e.what()};
  }
  return detail::resolve_curve(c, d, *index).check;
}

std::string to_string(const Station& s) {
  std::string out;
  if (const auto* b = std::get_if<BPoint>(&s)) {
    out = "B(e" + std::to_string(b->edge + 1) + "," + side_letter(b->side);
    if (b->index != 0) out += "," + std::to_string(b->index);
  } else {
    const auto& p = std::get<SaddlePass>(s);
    out = "S(c" + std::to_string(p.crossing + 1) + "," + std::to_string(p.side);
    if (p.level != 0) out += "," + std::to_string(p.level);
  }
  return out + ")";
}

std::string to_string(const Curve& c) {
  std::string out(1, sphere_tag(c.sphere));
  for (std::size_t i = 0; i < c.stations.size(); ++i) {
    out += ' ';
    out += to_string(c.stations[i]);
    out += ' ';
    out += i < c.gaps.size() && c.gaps[i] == Gap::boundary ? '=' : '~';
  }
  return out;
}

namespace {

[[noreturn]] void bad_curve(std::string_view text, const std::string& why) {
  throw std::invalid_argument("malformed curve '" + std::string(text) + "': " + why);
}

int parse_int(std::string_view s, std::string_view text) {
  if (s.empty()) bad_curve(text, "missing number");
  int v = 0;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) bad_curve(text, "bad number '" + std::string(s) + "'");
    v = v * 10 + (ch - '0');
  }
  return v;
}

Station parse_station(std::string_view tok, std::string_view text) {
  if (tok.size() < 4 || tok[1] != '(' || tok.back() != ')') bad_curve(text, "bad station '" + std::string(tok) + "'");
  std::vector<std::string_view> fields;
  std::string_view body = tok.substr(2, tok.size() - 3);
  while (true) {
    const auto comma = body.find(',');
    fields.push_back(body.substr(0, comma));
    if (comma == std::string_view::npos) break;
    body.remove_prefix(comma + 1);
  }
  if (fields.size() < 2 || fields.size() > 3) bad_curve(text, "bad station '" + std::string(tok) + "'");
  const int extra = fields.size() == 3 ? parse_int(fields[2], text) : 0;
  if (tok[0] == 'B') {
    if (fields[0].size() < 2 || fields[0][0] != 'e') bad_curve(text, "B-point needs an edge id");
    if (fields[1] != "L" && fields[1] != "R") bad_curve(text, "B-point side must be L or R");
    const int label = parse_int(fields[0].substr(1), text);
    if (label < 1) bad_curve(text, "edge ids start at 1");
    return BPoint{label - 1, fields[1] == "L" ? Side::left : Side::right, extra};
  }
  if (tok[0] == 'S') {
    if (fields[0].size() < 2 || fields[0][0] != 'c') bad_curve(text, "saddle pass needs a crossing id");
    const int id = parse_int(fields[0].substr(1), text);
    if (id < 1) bad_curve(text, "crossing ids start at 1");
    return SaddlePass{id - 1, parse_int(fields[1], text), extra};
  }
  bad_curve(text, "station must start with B or S");
}

}  // namespace

Curve parse_curve(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<std::string> tokens;
  for (std::string t; in >> t;) tokens.push_back(t);
  if (tokens.empty()) bad_curve(text, "empty");
  Curve c;
  if (tokens[0] == "+") {
    c.sphere = Sphere::upper;
  } else if (tokens[0] == "-") {
    c.sphere = Sphere::lower;
  } else {
    bad_curve(text, "sphere tag must be + or -");
  }
  if (tokens.size() < 3 || (tokens.size() - 1) % 2 != 0) bad_curve(text, "expected station/gap pairs");
  for (std::size_t i = 1; i < tokens.size(); i += 2) {
    c.stations.push_back(parse_station(tokens[i], text));
    if (tokens[i + 1] == "=") {
      c.gaps.push_back(Gap::boundary);
    } else if (tokens[i + 1] == "~") {
      c.gaps.push_back(Gap::interior);
    } else {
      bad_curve(text, "gap must be = or ~");
    }
  }
  return c;
}

Curve canonical(const Curve& c) {
  const std::size_t n = c.stations.size();
  Curve best = c;
  std::string best_text = to_string(c);
  for (int reflect = 0; reflect < 2; ++reflect) {
    for (std::size_t k = 0; k < n; ++k) {
      Curve r;
      r.sphere = c.sphere;
      r.stations.resize(n);
      r.gaps.resize(n);
      for (std::size_t i = 0; i < n; ++i) {
        if (!reflect) {
          r.stations[i] = c.stations[(i + k) % n];
          r.gaps[i] = c.gaps[(i + k) % n];
        } else {
          const std::size_t j = (k + n - i) % n;  // walk backwards from k
          r.stations[i] = c.stations[j];
          r.gaps[i] = c.gaps[(j + n - 1) % n];
        }
      }
      std::string text = to_string(r);
      if (text < best_text) {
        best_text = std::move(text);
        best = std::move(r);
      }
    }
  }
  return best;
}

}  // namespace altsurf
