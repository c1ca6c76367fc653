#include "altsurf/config.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>

#include <json.hpp>

#include "curve_internal.hpp"

namespace altsurf {

using ordered_json = nlohmann::ordered_json;

TargetSpec TargetSpec::seifert(int genus) {
  if (genus < 1) throw std::invalid_argument("genus must be at least 1 (genus 0 surfaces are excluded)");
  TargetSpec t;
  t.mode_ = Mode::seifert_genus;
  t.genus_ = genus;
  t.chi_ = 1 - 2 * genus;
  t.boundary_ = 1;
  return t;
}

TargetSpec TargetSpec::spanning(int chi, int boundary_components) {
  if (chi > -1) throw std::invalid_argument("spanning mode needs chi <= -1");
  if (boundary_components < 1) throw std::invalid_argument("boundary component count must be positive");
  TargetSpec t;
  t.mode_ = Mode::spanning_chi;
  t.genus_ = 0;
  t.chi_ = chi;
  t.boundary_ = boundary_components;
  return t;
}

std::string TargetSpec::describe() const {
  if (mode_ == Mode::seifert_genus) return "genus " + std::to_string(genus_);
  return "chi " + std::to_string(chi_) + ", " + std::to_string(boundary_) + " boundary component" +
         (boundary_ == 1 ? "" : "s");
}

Caps Caps::for_target(const TargetSpec& t) {
  Caps c;
  c.max_c1 = -4 * t.chi();
  c.max_word_len = 4 - 4 * t.chi();
  c.saddle_budget = -t.chi() - t.boundary_components();
  c.max_c2 = 2 * c.saddle_budget;
  return c;
}

namespace {

ValidationResult failure(std::string rule, int item, std::string reason) {
  return {false, std::move(rule), item, std::move(reason)};
}

std::string curve_label(std::size_t i, const Curve& c) { return "curve " + std::to_string(i + 1) + " (" + to_string(c) + ")"; }

}  // namespace

ValidationResult check(const Configuration& cfg, const Diagram& d) {
  return check(cfg, d, Caps::for_target(cfg.target));
}

ValidationResult check(const Configuration& cfg, const Diagram& d, const Caps& caps) {
  const Placement& p = cfg.placement;
  if (static_cast<int>(p.edge_orders.size()) != d.edge_count())
    return failure("shape", 0, "expected " + std::to_string(d.edge_count()) + " edge orders");
  if (static_cast<int>(p.saddles.size()) != d.crossing_count())
    return failure("shape", 0, "expected " + std::to_string(d.crossing_count()) + " saddle counts");
  for (int x = 0; x < d.crossing_count(); ++x) {
    if (p.saddles[x] < 0) return failure("shape", 0, "negative saddle count at c" + std::to_string(x + 1));
  }
  if (cfg.curves.empty()) return failure("shape", 0, "configuration has no curves");
  for (std::size_t i = 0; i < cfg.curves.size(); ++i) {
    if (cfg.curves[i].gaps.size() != cfg.curves[i].stations.size())
      return failure("shape", 0, curve_label(i, cfg.curves[i]) + " has mismatched gap count");
  }

  for (int e = 0; e < d.edge_count(); ++e) {
    if (p.edge_orders[e].empty())
      return failure("edge-coverage", 3, "edge e" + std::to_string(e + 1) + " meets no interior arc");
  }
  for (int e = 0; e < d.edge_count(); ++e) {
    if (p.edge_orders[e].size() % 2 == 0)
      return failure("edge-parity", 0,
                     "edge e" + std::to_string(e + 1) + " has an even number of B-points, so the surface "
                     "cannot pass from above at the over-end to below at the under-end");
  }

  std::vector<BSWord> words;
  for (std::size_t i = 0; i < cfg.curves.size(); ++i) {
    words.push_back(word_of(cfg.curves[i]));
    if (const WordCheck w = check_word(words.back()); !w.ok())
      return failure("word", w.item(), curve_label(i, cfg.curves[i]) + ": " + w.reason);
  }
  int c1 = 0;
  int c2 = 0;
  for (std::size_t i = 0; i < words.size(); ++i) {
    switch (classify(words[i])) {
      case WordClass::ignorable_bbbb:
        return failure("bbbb-excluded", 0, curve_label(i, cfg.curves[i]) + " is a BBBB curve");
      case WordClass::c2_bbss: ++c2; break;
      case WordClass::c1: ++c1; break;
    }
  }
  if (c1 > caps.max_c1)
    return failure("c1-cap", 0, std::to_string(c1) + " C1 curves exceed the cap of " + std::to_string(caps.max_c1));
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (static_cast<int>(words[i].size()) > caps.max_word_len)
      return failure("word-length-cap", 0, curve_label(i, cfg.curves[i]) + " is longer than " +
                                                std::to_string(caps.max_word_len));
  }
  if (c2 > caps.max_c2)
    return failure("c2-cap", 0, std::to_string(c2) + " BBSS curves exceed the cap of " + std::to_string(caps.max_c2));
  if (p.saddle_total() > caps.saddle_budget)
    return failure("saddle-budget", 0, std::to_string(p.saddle_total()) + " saddles exceed the budget of " +
                                           std::to_string(caps.saddle_budget));

  const PointIndex index(d, p);
  std::vector<detail::ResolvedCurve> resolved;
  for (std::size_t i = 0; i < cfg.curves.size(); ++i) {
    resolved.push_back(detail::resolve_curve(cfg.curves[i], d, index));
    const CurveCheck& c = resolved.back().check;
    if (!c.ok()) return failure("curve", c.item(), curve_label(i, cfg.curves[i]) + ": " + c.reason);
  }

  // Every attachment point ends exactly one interior arc, and the upper and
  // lower curves share the same arcs.
  std::vector<int> partner[2];
  for (auto& v : partner) v.assign(index.size(), -1);
  for (std::size_t i = 0; i < cfg.curves.size(); ++i) {
    const Curve& c = cfg.curves[i];
    auto& mine = partner[index_of(c.sphere)];
    for (std::size_t g = 0; g < c.gaps.size(); ++g) {
      if (c.gaps[g] != Gap::interior) continue;
      const auto [a, b] = resolved[i].gap_points[g];
      if (mine[a] != -1 || mine[b] != -1)
        return failure("pairing", 5, "an attachment point is used twice on the " +
                                         std::string(c.sphere == Sphere::upper ? "upper" : "lower") + " sphere");
      mine[a] = b;
      mine[b] = a;
    }
  }
  for (int id = 0; id < index.size(); ++id) {
    const AttachPoint& pt = index.at(id);
    const std::string where = pt.is_saddle ? "saddle " + std::to_string(pt.level) + " at c" +
                                                 std::to_string(pt.crossing + 1)
                                           : "B-point " + std::to_string(pt.index) + " on e" +
                                                 std::to_string(pt.edge + 1);
    if (partner[0][id] == -1 || partner[1][id] == -1)
      return failure("pairing", 5, where + " is not passed by both an upper and a lower curve");
    if (partner[0][id] != partner[1][id])
      return failure("pairing", 5, where + " ends different interior arcs on the two spheres");
  }

  for (int f = 0; f < index.face_count(); ++f) {
    std::vector<int> open;
    for (int id : index.face_order(f)) {
      const int other = partner[0][id];
      if (index.position_in_face(other) > index.position_in_face(id)) {
        open.push_back(id);
      } else {
        if (open.empty() || open.back() != other)
          return failure("non-crossing", 0, "interior arcs cross in face " + std::to_string(f + 1));
        open.pop_back();
      }
    }
  }

  const Quarters total = chi(cfg);
  if (total != Quarters::whole(cfg.target.chi()))
    return failure("chi-target", 0, "chi is " + total.to_string() + ", target " + std::to_string(cfg.target.chi()));
  return {};
}

Quarters chi(const Configuration& cfg) {
  Quarters total;
  for (const Curve& c : cfg.curves) total += contribution(word_of(c));
  return total;
}

Configuration canonical_config(const Configuration& cfg) {
  Configuration out = cfg;
  std::vector<std::pair<std::pair<int, std::string>, Curve>> keyed;
  for (const Curve& c : cfg.curves) {
    Curve k = canonical(c);
    keyed.push_back({{index_of(k.sphere), to_string(k)}, std::move(k)});
  }
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  out.curves.clear();
  for (auto& [key, c] : keyed) out.curves.push_back(std::move(c));
  return out;
}

std::vector<std::string> edge_order_strings(const Placement& p) {
  std::vector<std::string> out;
  for (const auto& order : p.edge_orders) {
    std::string s;
    for (Side side : order) s += side_letter(side);
    out.push_back(std::move(s));
  }
  return out;
}

namespace {

ordered_json target_json(const TargetSpec& t) {
  ordered_json j;
  if (t.mode() == TargetSpec::Mode::seifert_genus) {
    j["mode"] = "seifert_genus";
    j["genus"] = t.genus();
  } else {
    j["mode"] = "spanning_chi";
  }
  j["chi"] = t.chi();
  j["boundary_components"] = t.boundary_components();
  j["genus_like"] = t.genus_like().to_string();
  return j;
}

}  // namespace

std::string to_json(const Configuration& cfg, int indent) {
  ordered_json j;
  j["target"] = target_json(cfg.target);
  j["saddles"] = cfg.placement.saddles;
  j["edge_orders"] = edge_order_strings(cfg.placement);
  ordered_json curves = ordered_json::array();
  for (const Curve& c : cfg.curves) curves.push_back(to_string(c));
  j["curves"] = std::move(curves);
  return j.dump(indent);
}

Configuration configuration_from_json(const std::string& text) {
  try {
    const auto j = nlohmann::json::parse(text);
    Configuration cfg;
    const auto& t = j.at("target");
    const std::string mode = t.at("mode").get<std::string>();
    if (mode == "seifert_genus") {
      cfg.target = TargetSpec::seifert(t.at("genus").get<int>());
    } else if (mode == "spanning_chi") {
      cfg.target = TargetSpec::spanning(t.at("chi").get<int>(), t.at("boundary_components").get<int>());
    } else {
      throw std::invalid_argument("unknown target mode " + mode);
    }
    cfg.placement.saddles = j.at("saddles").get<std::vector<int>>();
    for (const auto& s : j.at("edge_orders")) {
      std::vector<Side> order;
      for (char ch : s.get<std::string>()) {
        if (ch == 'L') {
          order.push_back(Side::left);
        } else if (ch == 'R') {
          order.push_back(Side::right);
        } else {
          throw std::invalid_argument("edge order letters must be L or R");
        }
      }
      cfg.placement.edge_orders.push_back(std::move(order));
    }
    for (const auto& c : j.at("curves")) cfg.curves.push_back(parse_curve(c.get<std::string>()));
    return cfg;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed configuration JSON: ") + e.what());
  }
}

}  // namespace altsurf
