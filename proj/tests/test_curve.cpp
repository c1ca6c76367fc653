#include <doctest.h>

#include <algorithm>
#include <optional>
#include <random>
#include <regex>
#include <set>
#include <stdexcept>

#include "altsurf/curve.hpp"
#include "test_support.hpp"

using namespace altsurf;
using testing::placement;

namespace {

const Diagram& trefoil() {
  static const Diagram d = parse_pd(testing::kTrefoil);
  return d;
}

CurveCheck check_text(const std::string& text, const Placement& p) {
  return check_curve(parse_curve(text), trefoil(), p);
}

// Over-strand labels at each crossing, read from the PD text.
std::vector<std::set<int>> over_pairs(const std::string& pd) {
  std::vector<std::set<int>> pairs;
  const std::regex token(R"(X\[(\d+),(\d+),(\d+),(\d+)\])");
  for (auto it = std::sregex_iterator(pd.begin(), pd.end(), token); it != std::sregex_iterator(); ++it)
    pairs.push_back({std::stoi((*it)[2]), std::stoi((*it)[4])});
  return pairs;
}

Curve rotated(const Curve& c, std::size_t k) {
  Curve r = c;
  std::rotate(r.stations.begin(), r.stations.begin() + k, r.stations.end());
  std::rotate(r.gaps.begin(), r.gaps.begin() + k, r.gaps.end());
  return r;
}

Curve reversed(const Curve& c) {
  Curve r = c;
  std::reverse(r.stations.begin(), r.stations.end());
  // gaps[i] joined stations i and i+1; after reversal it joins n-2-i and n-1-i
  const std::size_t n = c.gaps.size();
  for (std::size_t i = 0; i < n; ++i) r.gaps[i] = c.gaps[(2 * n - 2 - i) % n];
  return r;
}

// A random closed walk on one sphere: boundary or pass moves follow the
// link, interior moves jump to any point. Returns nothing if the walk does
// not close within the station limit.
std::optional<Curve> random_walk(const PointIndex& points, Sphere sphere, std::mt19937& rng) {
  std::uniform_int_distribution<int> any(0, points.size() - 1);
  int start = any(rng);
  while (points.at(start).is_saddle) start = any(rng);
  Curve c;
  c.sphere = sphere;
  int cur = start;
  for (int steps = 0; steps < 10; ++steps) {
    if (points.at(cur).is_saddle) {
      c.stations.push_back(points.station(sphere, cur));
      c.gaps.push_back(Gap::interior);
    } else {
      c.stations.push_back(points.station(sphere, cur));
      c.gaps.push_back(Gap::boundary);
      c.stations.push_back(points.station(sphere, points.link_partner(sphere, cur)));
      c.gaps.push_back(Gap::interior);
    }
    const int exit = points.link_partner(sphere, cur);
    int next = any(rng);
    while (next == exit) next = any(rng);
    if (next == start) return c;
    cur = next;
  }
  return std::nullopt;
}

}  // namespace

TEST_CASE("the two passes on one sphere at a crossing use all four quadrants") {
  for (Sphere sphere : {Sphere::upper, Sphere::lower}) {
    std::set<int> used;
    for (int side = 0; side < 2; ++side) {
      const auto [a, b] = saddle_attachments(sphere, {0, side, 0});
      CHECK(a.crossing == 0);
      CHECK(b.crossing == 0);
      CHECK((a.position + 1) % 4 == b.position);
      used.insert(a.position);
      used.insert(b.position);
      // The pass wraps the end shared by its two quadrants.
      const int wrapped = b.position;
      CHECK(Crossing::is_over(wrapped) == (sphere == Sphere::lower));
    }
    CHECK(used == std::set<int>{0, 1, 2, 3});
  }
}

TEST_CASE("word of a curve reads one letter per station") {
  Curve c;
  c.stations = {BPoint{0, Side::left, 0}, BPoint{1, Side::right, 0}, SaddlePass{0, 0, 0}, SaddlePass{1, 1, 0},
                SaddlePass{2, 0, 0}};
  c.gaps = {Gap::boundary, Gap::interior, Gap::interior, Gap::interior, Gap::interior};
  CHECK(word_of(c).str() == "BBSSS");
  for (std::size_t k = 0; k < c.stations.size(); ++k) CHECK(canonical(word_of(rotated(c, k))) == canonical(word_of(c)));
}

TEST_CASE("a four-point curve through both triangles of the trefoil is realizable") {
  const std::string text = "+ B(e1,L) = B(e6,R) ~ B(e4,R) = B(e5,L) ~";
  const Placement p = placement(trefoil(), {{1, "L"}, {6, "R"}, {4, "R"}, {5, "L"}});
  const Curve c = parse_curve(text);
  const CurveCheck r = check_curve(c, trefoil(), p);
  CHECK_MESSAGE(r.ok(), r.reason);
  CHECK(word_of(c).str() == "BBBB");

  // Face oracle: both interior arcs stay in one face, and both boundary arcs
  // join the two over-strand edges at a crossing.
  const Diagram& d = trefoil();
  auto face_of = [&](int label, Side s) { return d.edge_side_face({testing::edge_index(d, label), s}); };
  CHECK(face_of(6, Side::right) == face_of(4, Side::right));
  CHECK(face_of(5, Side::left) == face_of(1, Side::left));
  CHECK(d.face(face_of(1, Side::left)).degree() == 3);
  CHECK(d.face(face_of(4, Side::right)).degree() == 3);
  const auto overs = over_pairs(testing::kTrefoil);
  CHECK(std::count(overs.begin(), overs.end(), std::set<int>{1, 6}) == 1);
  CHECK(std::count(overs.begin(), overs.end(), std::set<int>{4, 5}) == 1);
}

TEST_CASE("an interior arc between different faces is rejected") {
  const Placement p = placement(trefoil(), {{1, "L"}, {6, "R"}, {4, "L"}, {5, "L"}});
  CHECK(check_text("+ B(e1,L) = B(e6,R) ~ B(e4,L) = B(e5,L) ~", p).fault == CurveFault::face_mismatch);
}

TEST_CASE("a boundary arc must follow the link on its own sphere") {
  const Placement p = placement(trefoil(), {{1, "L"}, {2, "L"}, {4, "L"}, {5, "L"}});
  // e1 and e2 meet as under-strands, so they are joined on the lower sphere only.
  CHECK(check_text("+ B(e1,L) = B(e2,L) ~ B(e5,L) = B(e4,L) ~", p).fault == CurveFault::boundary_arc);
}

TEST_CASE("two passes through one bubble violate item 2") {
  const Placement p = placement(trefoil(), {}, {2, 0, 0});
  const CurveCheck r = check_text("+ S(c1,0) ~ S(c1,0,1) ~", p);
  CHECK(r.fault == CurveFault::same_bubble);
  CHECK(r.item() == 2);
}

TEST_CASE("two interior arcs on one side of an edge violate item 4") {
  const Placement p = placement(trefoil(), {{1, "LRL"}, {6, "L"}, {3, "R"}, {2, "L"}, {5, "R"}, {4, "L"}});
  const CurveCheck r = check_text(
      "+ B(e1,L) = B(e6,L) ~ B(e3,R) = B(e2,L) ~ B(e5,R) = B(e4,L) ~ B(e1,R,1) = B(e1,L,2) ~", p);
  CHECK(r.fault == CurveFault::edge_side_reuse);
  CHECK(r.item() == 4);
}

TEST_CASE("a pass followed by an edge at its own crossing violates item 6") {
  const Placement p = placement(trefoil(), {{1, "L"}, {6, "L"}, {3, "R"}, {2, "L"}, {5, "R"}, {4, "L"}}, {1, 0, 0});
  const CurveCheck r = check_text("+ S(c1,0) ~ B(e1,L) = B(e6,L) ~ B(e3,R) = B(e2,L) ~ B(e5,R) = B(e4,L) ~", p);
  CHECK(r.fault == CurveFault::saddle_adjacent);
  CHECK(r.item() == 6);
}

TEST_CASE("structurally broken curves are malformed or have wrong arc kinds") {
  const Placement p = placement(trefoil(), {});
  Curve empty;
  CHECK(check_curve(empty, trefoil(), p).fault == CurveFault::malformed);
  CHECK(check_text("+ B(e9,L) = B(e1,L) ~", p).fault == CurveFault::malformed);
  CHECK(check_text("+ B(e1,L) ~ B(e6,L) ~ B(e4,L) ~ B(e5,L) ~", p).fault == CurveFault::arc_kinds);
}

TEST_CASE("curve text round-trips") {
  for (const std::string text : {"+ B(e1,L) = B(e6,R) ~ B(e4,R) = B(e5,L) ~", "- S(c2,1,3) ~ B(e12,R,2) = B(e3,L) ~",
                                 "+ S(c1,0) ~ S(c1,0,1) ~"}) {
    CHECK(to_string(parse_curve(text)) == text);
  }
  CHECK(to_string(parse_curve("+   B(e1,L)\t= B(e6,R)  ~\nB(e4,R) =  B(e5,L) ~ ")) ==
        "+ B(e1,L) = B(e6,R) ~ B(e4,R) = B(e5,L) ~");
  CHECK_THROWS_AS(parse_curve("B(e1,L) ~"), std::invalid_argument);
  CHECK_THROWS_AS(parse_curve("+ B(e1,X) ~"), std::invalid_argument);
  CHECK_THROWS_AS(parse_curve("+ B(e1,L)"), std::invalid_argument);
}

TEST_CASE("canonical curve ignores the starting station and the direction") {
  const Curve c = parse_curve("- S(c2,1) ~ B(e5,R,2) = B(e3,L) ~ B(e4,R) = B(e1,L) ~");
  const Curve canon = canonical(c);
  CHECK(canonical(canon) == canon);
  for (std::size_t k = 0; k < c.stations.size(); ++k) {
    CHECK(canonical(rotated(c, k)) == canon);
    CHECK(canonical(reversed(rotated(c, k))) == canon);
  }
}

TEST_CASE("random closed walks that pass the check satisfy the word and local conditions") {
  const Diagram& d = trefoil();
  std::mt19937 rng(20261016);
  std::uniform_int_distribution<int> coin(0, 1);
  int accepted = 0, with_saddle = 0;
  for (int trial = 0; trial < 400; ++trial) {
    Placement p;
    for (int e = 0; e < d.edge_count(); ++e) {
      const int m = coin(rng) ? 3 : 1;
      Side s = coin(rng) ? Side::left : Side::right;
      std::vector<Side> order;
      for (int i = 0; i < m; ++i, s = opposite(s)) order.push_back(s);
      p.edge_orders.push_back(order);
    }
    for (int x = 0; x < d.crossing_count(); ++x) p.saddles.push_back(coin(rng));
    const PointIndex points(d, p);
    for (int walk = 0; walk < 200; ++walk) {
      const Sphere sphere = coin(rng) ? Sphere::upper : Sphere::lower;
      const auto c = random_walk(points, sphere, rng);
      if (!c || !check_curve(*c, d, p).ok()) continue;
      ++accepted;
      CAPTURE(to_string(*c));
      CHECK(is_valid(word_of(*c)));
      std::set<int> crossings;
      std::set<std::pair<int, int>> sides;
      const std::size_t n = c->stations.size();
      bool all_b = true;
      for (std::size_t i = 0; i < n; ++i) {
        const Station& here = c->stations[i];
        if (const auto* s = std::get_if<SaddlePass>(&here)) {
          all_b = false;
          CHECK(crossings.insert(s->crossing).second);
          for (const Station& nb : {c->stations[(i + 1) % n], c->stations[(i + n - 1) % n]})
            if (const auto* b = std::get_if<BPoint>(&nb)) CHECK_FALSE(d.incident(b->edge, s->crossing));
        } else if (c->gaps[i] == Gap::interior || c->gaps[(i + n - 1) % n] == Gap::interior) {
          const auto& b = std::get<BPoint>(here);
          CHECK(sides.insert({b.edge, index_of(b.side)}).second);
        }
      }
      if (all_b) {
        for (std::size_t i = 0; i < n; ++i) CHECK(c->gaps[i] != c->gaps[(i + 1) % n]);
      } else {
        ++with_saddle;
      }
    }
  }
  CHECK(accepted >= 50);
  CHECK(with_saddle >= 1);
}
