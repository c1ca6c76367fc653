#pragma once

#include <string>
#include <utility>
#include <vector>

#include "altsurf/config.hpp"
#include "altsurf/curve.hpp"
#include "altsurf/diagram.hpp"

namespace testing {

inline const std::string kTrefoil = "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]";
inline const std::string kFigureEight = "X[3,1,4,8] X[7,5,8,4] X[1,6,2,7] X[5,2,6,3]";
inline const std::string kTrefoilSum =
    "X[7,4,2,5] X[3,6,4,1] X[5,2,6,3] X[1,10,8,11] X[9,12,10,7] X[11,8,12,9]";

inline std::string data_path(const std::string& file) { return std::string(ALTSURF_TEST_DATA) + "/" + file; }

inline std::vector<altsurf::KnotTableEntry> knot_table() { return altsurf::read_knot_table_file(data_path("knots_le7.tsv")); }

inline std::string table_pd(const std::string& name) {
  for (const auto& e : knot_table()) {
    if (e.name == name) return e.pd;
  }
  return {};
}

}  // namespace testing

namespace testing {

inline int edge_index(const altsurf::Diagram& d, int label) {
  for (int e = 0; e < d.edge_count(); ++e)
    if (d.edge(e).label == label) return e;
  return -1;
}

/// Placement from per-label side strings such as {1, "LRL"}; unlisted edges
/// get a single B-point on the left.
inline altsurf::Placement placement(const altsurf::Diagram& d, const std::vector<std::pair<int, std::string>>& orders,
                                    std::vector<int> saddles = {}) {
  altsurf::Placement p;
  p.edge_orders.assign(d.edge_count(), {altsurf::Side::left});
  for (const auto& [label, sides] : orders) {
    auto& order = p.edge_orders.at(edge_index(d, label));
    order.clear();
    for (char c : sides) order.push_back(c == 'L' ? altsurf::Side::left : altsurf::Side::right);
  }
  if (saddles.empty()) saddles.assign(d.crossing_count(), 0);
  p.saddles = std::move(saddles);
  return p;
}

}  // namespace testing

namespace testing {

/// The genus-one trefoil configuration found by both enumerators.
inline altsurf::Configuration trefoil_genus_one() {
  const altsurf::Diagram d = altsurf::parse_pd(kTrefoil);
  altsurf::Configuration cfg;
  cfg.target = altsurf::TargetSpec::seifert(1);
  cfg.placement = placement(d, {{1, "R"}, {2, "L"}, {3, "R"}, {4, "L"}, {5, "R"}, {6, "L"}});
  cfg.curves = {altsurf::parse_curve("+ B(e1,R) = B(e6,L) ~ B(e3,R) = B(e2,L) ~ B(e5,R) = B(e4,L) ~"),
                altsurf::parse_curve("- B(e1,R) = B(e2,L) ~ B(e5,R) = B(e6,L) ~ B(e3,R) = B(e4,L) ~")};
  return cfg;
}

}  // namespace testing
