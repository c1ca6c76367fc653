// Brute-force reference enumeration. Shares only the value types, check()
// and accept_surface() with the pruned search; point bookkeeping, boundary
// partners, curve tracing and the letter-count admissibility test are
// written separately here.

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "altsurf/enumerate.hpp"

namespace altsurf {

namespace {

struct OraclePoint {
  bool saddle = false;
  int edge = -1, index = -1;
  int crossing = -1, level = -1, quadrant = -1;
  int face = -1;
};

struct WordShape {
  int b, s;
};

/// All (curves, c1, c2) reachable by a multiset of valid word shapes with
/// exactly `b` B's and `s` S's, listed by explicit recursion.
void word_multisets(const std::vector<WordShape>& shapes, std::size_t from, int b, int s, int curves, int c1,
                    int c2, std::set<std::tuple<int, int, int>>& out) {
  if (b == 0 && s == 0) {
    out.insert({curves, c1, c2});
    return;
  }
  for (std::size_t i = from; i < shapes.size(); ++i) {
    if (shapes[i].b > b || shapes[i].s > s) continue;
    const bool bbss = shapes[i].b + shapes[i].s == 4;
    word_multisets(shapes, i, b - shapes[i].b, s - shapes[i].s, curves + 1, c1 + (bbss ? 0 : 1), c2 + (bbss ? 1 : 0),
                   out);
  }
}

bool letters_admit(int n, int b_total, int saddles, const TargetSpec& t, const Caps& caps) {
  const int curves = t.chi() + b_total / 2 + saddles;
  std::vector<WordShape> shapes;
  for (int len = 4; len <= caps.max_word_len; ++len) {
    for (int s = 0; s <= std::min(len - 2, n); ++s) {
      const int b = len - s;
      if (b % 2 != 0 || (b == 4 && s == 0)) continue;
      shapes.push_back({b, s});
    }
  }
  std::set<std::tuple<int, int, int>> sphere;
  word_multisets(shapes, 0, b_total, 2 * saddles, 0, 0, 0, sphere);
  for (const auto& [k1, a1, b1] : sphere) {
    for (const auto& [k2, a2, b2] : sphere) {
      if (k1 > 0 && k2 > 0 && k1 + k2 == curves && a1 + a2 <= caps.max_c1 && b1 + b2 <= caps.max_c2) return true;
    }
  }
  return false;
}

class Oracle {
 public:
  Oracle(const Diagram& d, const TargetSpec& t, const Caps& caps) : d_(d), t_(t), caps_(caps) {}

  std::vector<Configuration> run() {
    const int n = d_.crossing_count();
    const int edges = d_.edge_count();
    for (int k = 0; k <= std::max(0, caps_.saddle_budget); ++k) {
      const int hi = 2 * (caps_.max_c1 + caps_.max_c2 - t_.chi() - k);
      for (int m = 2 * n; m <= hi; m += 2) {
        if (!letters_admit(n, m, k, t_, caps_)) continue;
        std::vector<int> saddles(n, 0);
        for_each_vector(saddles, 0, k, [&] {
          std::vector<int> counts(edges, 1);
          for_each_odd(counts, 0, m - edges, [&] { for_each_sides(saddles, counts); });
        });
      }
    }
    std::vector<Configuration> out;
    for (auto& [key, cfg] : found_) out.push_back(cfg);
    return out;
  }

 private:
  template <class F>
  void for_each_vector(std::vector<int>& v, std::size_t i, int left, const F& f) {
    if (i == v.size()) {
      if (left == 0) f();
      return;
    }
    for (int x = 0; x <= left; ++x) {
      v[i] = x;
      for_each_vector(v, i + 1, left - x, f);
    }
    v[i] = 0;
  }

  template <class F>
  void for_each_odd(std::vector<int>& v, std::size_t i, int extra, const F& f) {
    if (i == v.size()) {
      if (extra == 0) f();
      return;
    }
    for (int x = 0; x <= extra; x += 2) {
      v[i] = 1 + x;
      for_each_odd(v, i + 1, extra - x, f);
    }
    v[i] = 1;
  }

  void for_each_sides(const std::vector<int>& saddles, const std::vector<int>& counts) {
    points_.clear();
    std::vector<std::vector<int>> b_id(counts.size());
    for (std::size_t e = 0; e < counts.size(); ++e) {
      for (int i = 0; i < counts[e]; ++i) {
        b_id[e].push_back(static_cast<int>(points_.size()));
        OraclePoint p;
        p.edge = static_cast<int>(e);
        p.index = i;
        points_.push_back(p);
      }
    }
    const int b_total = static_cast<int>(points_.size());
    for (int x = 0; x < d_.crossing_count(); ++x) {
      for (int level = 0; level < saddles[x]; ++level) {
        for (int q = 0; q < 4; ++q) {
          OraclePoint p;
          p.saddle = true;
          p.crossing = x;
          p.level = level;
          p.quadrant = q;
          p.face = d_.quadrant_face({x, q});
          points_.push_back(p);
        }
      }
    }

    // Boundary arcs, segment by segment along the link.
    for (auto& v : partner_) v.assign(points_.size(), -1);
    auto join = [&](int sphere, int a, int b) {
      partner_[sphere][a] = b;
      partner_[sphere][b] = a;
    };
    for (int x = 0; x < d_.crossing_count(); ++x) {
      const auto& ends = d_.crossing(x).edges;
      join(0, b_id[ends[1]].front(), b_id[ends[3]].front());
      join(1, b_id[ends[0]].back(), b_id[ends[2]].back());
    }
    for (std::size_t e = 0; e < counts.size(); ++e) {
      for (int i = 0; i + 1 < counts[e]; ++i) join(i % 2 == 0 ? 1 : 0, b_id[e][i], b_id[e][i + 1]);
    }
    for (int id = b_total; id < static_cast<int>(points_.size()); ++id) {
      const int q = points_[id].quadrant;
      const int base = id - q;
      partner_[0][id] = base + (3 - q);
      partner_[1][id] = base + (q ^ 1);
    }

    std::vector<Side> sides(b_total);
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << b_total); ++bits) {
      bool ok = true;
      for (int id = 0; id < b_total && ok; ++id) {
        sides[id] = (bits >> id) & 1 ? Side::right : Side::left;
        for (int s = 0; s < 2 && ok; ++s) {
          const int other = partner_[s][id];
          if (other < id && points_[other].edge == points_[id].edge && sides[other] == sides[id]) ok = false;
        }
      }
      if (!ok) continue;
      Placement placement;
      placement.saddles = saddles;
      placement.edge_orders.resize(counts.size());
      for (int id = 0; id < b_total; ++id) {
        placement.edge_orders[points_[id].edge].push_back(sides[id]);
        points_[id].face = d_.edge_side_face({points_[id].edge, sides[id]});
      }
      match_faces(placement);
    }
  }

  void match_faces(const Placement& placement) {
    std::vector<std::vector<int>> by_face(d_.face_count());
    for (int id = 0; id < static_cast<int>(points_.size()); ++id) by_face[points_[id].face].push_back(id);
    for (const auto& f : by_face) {
      if (f.size() % 2 != 0) return;
    }
    arc_.assign(points_.size(), -1);
    std::function<void(std::size_t)> next_face = [&](std::size_t f) {
      if (f == by_face.size()) {
        evaluate(placement);
        return;
      }
      std::function<void()> pair_up = [&] {
        int first = -1;
        for (int id : by_face[f]) {
          if (arc_[id] == -1) {
            first = id;
            break;
          }
        }
        if (first == -1) {
          next_face(f + 1);
          return;
        }
        for (int id : by_face[f]) {
          if (id == first || arc_[id] != -1) continue;
          arc_[first] = id;
          arc_[id] = first;
          pair_up();
          arc_[first] = arc_[id] = -1;
        }
      };
      pair_up();
    };
    next_face(0);
  }

  Station station_of(int sphere, int id, const Placement& placement) const {
    const OraclePoint& p = points_[id];
    if (!p.saddle) return BPoint{p.edge, placement.edge_orders[p.edge][p.index], p.index};
    const int side = sphere == 0 ? (p.quadrant == 1 || p.quadrant == 2) : (p.quadrant >= 2);
    return SaddlePass{p.crossing, side, p.level};
  }

  void evaluate(const Placement& placement) {
    Configuration cfg;
    cfg.target = t_;
    cfg.placement = placement;
    for (int sphere = 0; sphere < 2; ++sphere) {
      std::vector<bool> used(points_.size(), false);
      for (int start = 0; start < static_cast<int>(points_.size()); ++start) {
        if (used[start]) continue;
        Curve c;
        c.sphere = sphere == 0 ? Sphere::upper : Sphere::lower;
        for (int p = start; !used[p];) {
          const int q = partner_[sphere][p];
          used[p] = used[q] = true;
          c.stations.push_back(station_of(sphere, p, placement));
          if (points_[p].saddle) {
            c.gaps.push_back(Gap::interior);
          } else {
            c.gaps.push_back(Gap::boundary);
            c.stations.push_back(station_of(sphere, q, placement));
            c.gaps.push_back(Gap::interior);
          }
          p = arc_[q];
        }
        cfg.curves.push_back(std::move(c));
      }
    }
    if (!check(cfg, d_, caps_).ok) return;
    if (!accept_surface(cfg, d_)) return;
    Configuration canon = canonical_config(cfg);
    found_.emplace(to_json(canon), std::move(canon));
  }

  const Diagram& d_;
  const TargetSpec& t_;
  const Caps& caps_;
  std::vector<OraclePoint> points_;
  std::vector<int> partner_[2];
  std::vector<int> arc_;
  std::map<std::string, Configuration> found_;
};

}  // namespace

std::vector<Configuration> oracle_enumerate(const Diagram& d, const TargetSpec& t) {
  return oracle_enumerate(d, t, Caps::for_target(t));
}

std::vector<Configuration> oracle_enumerate(const Diagram& d, const TargetSpec& t, const Caps& caps) {
  require_enumerable(d, t);
  if (d.crossing_count() > 4 || t.chi() < -3)
    throw PreconditionError("oracle enumeration is limited to 4 crossings and chi >= -3");
  return Oracle(d, t, caps).run();
}

}  // namespace altsurf
