#include "altsurf/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include <json.hpp>

namespace altsurf {

using ordered_json = nlohmann::ordered_json;

SurfaceSummary summarize(const SurfaceComplex& sc, const TargetSpec& t) {
  const GenusReport g = genus_report(sc, t);
  SurfaceSummary s;
  s.chi = g.chi;
  s.connected = g.connected;
  s.orientable = g.orientable;
  s.boundary_components = g.boundary_components;
  s.vertices = sc.vertices.size();
  s.edges = sc.edges.size();
  s.faces = sc.faces.size();
  s.genus = g.genus;
  s.parameter = g.parameter.to_string();
  return s;
}

CensusReport make_report(const std::string& name, const Diagram& d, const TargetSpec& t,
                         const EnumerationResult& result, const ReportOptions& options) {
  CensusReport r;
  r.name = name;
  r.pd = d.to_pd();
  r.n = d.crossing_count();
  r.components = d.component_count();
  r.target = t;
  r.bound = bound_for(r.n, t);
  r.configuration_count = result.configurations.size();
  r.status = result.status;
  r.two_strand_torus = d.is_two_strand_torus();
  r.stats = result.stats;
  r.notes.push_back(
      "counts non-BBBB curve systems meeting the standard-position conditions; an upper bound on isotopy classes");
  if (t.mode() == TargetSpec::Mode::spanning_chi)
    r.notes.push_back("spanning mode: (1 - chi)/2 = " + t.genus_like().to_string() + " stands in for the genus");
  if (r.two_strand_torus)
    r.notes.push_back("(2,n)-torus diagram: ignoring BBBB curves relies on uniqueness of its incompressible "
                      "spanning surface");
  if (result.status == SearchStatus::budget_exhausted)
    r.notes.push_back("search stopped at the node or time limit; the count covers only the explored part");
  if (options.include_configurations || options.emit_surfaces) r.configurations = result.configurations;
  if (options.emit_surfaces) {
    std::vector<SurfaceSummary> surfaces;
    for (const auto& cfg : result.configurations) surfaces.push_back(summarize(assemble(cfg, d), t));
    r.surfaces = std::move(surfaces);
  }
  return r;
}

namespace {

std::string format_ms(double ms) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", ms);
  return buf;
}

ordered_json target_json(const TargetSpec& t) {
  ordered_json j;
  j["mode"] = t.mode() == TargetSpec::Mode::seifert_genus ? "seifert_genus" : "spanning_chi";
  if (t.mode() == TargetSpec::Mode::seifert_genus) j["genus"] = t.genus();
  j["chi"] = t.chi();
  j["boundary_components"] = t.boundary_components();
  j["genus_like"] = t.genus_like().to_string();
  return j;
}

ordered_json surface_json(const SurfaceSummary& s) {
  ordered_json j;
  j["chi"] = s.chi;
  j["connected"] = s.connected;
  j["orientable"] = s.orientable;
  j["boundary_components"] = s.boundary_components;
  j["vertices"] = s.vertices;
  j["edges"] = s.edges;
  j["faces"] = s.faces;
  j["genus"] = s.genus ? ordered_json(*s.genus) : ordered_json(nullptr);
  j["parameter"] = s.parameter;
  return j;
}

}  // namespace

std::string to_json(const CensusReport& r, int indent) {
  ordered_json j;
  j["name"] = r.name;
  j["pd"] = r.pd;
  j["n"] = r.n;
  j["components"] = r.components;
  j["target"] = target_json(r.target);
  j["bound"] = r.bound.str();
  j["configuration_count"] = r.configuration_count;
  j["status"] = std::string(to_string(r.status));
  j["two_strand_torus"] = r.two_strand_torus;
  j["notes"] = r.notes;
  if (r.configurations) {
    ordered_json list = ordered_json::array();
    for (const auto& cfg : *r.configurations) list.push_back(ordered_json::parse(to_json(cfg)));
    j["configurations"] = std::move(list);
  }
  if (r.surfaces) {
    ordered_json list = ordered_json::array();
    for (const auto& s : *r.surfaces) list.push_back(surface_json(s));
    j["surfaces"] = std::move(list);
  }
  if (r.oracle_agrees) j["oracle_agrees"] = *r.oracle_agrees;
  ordered_json stats;
  stats["nodes"] = r.stats.nodes;
  stats["leaves"] = r.stats.leaves;
  stats["placements"] = r.stats.placements;
  ordered_json prunes = ordered_json::object();
  for (const auto& [rule, count] : r.stats.prunes) prunes[rule] = count;
  stats["prunes"] = std::move(prunes);
  stats["elapsed_ms"] = static_cast<std::int64_t>(std::llround(r.stats.elapsed_ms));
  j["stats"] = std::move(stats);
  return j.dump(indent);
}

std::string rejection_json(const std::string& name, const std::string& status, const std::string& error) {
  ordered_json j;
  j["name"] = name;
  j["status"] = status;
  j["error"] = error;
  return j.dump();
}

std::string csv_header() { return "name,n,components,target,chi,bound,configuration_count,status,two_strand_torus,nodes,elapsed_ms"; }

std::string to_csv(const CensusReport& r) {
  std::ostringstream out;
  out << r.name << ',' << r.n << ',' << r.components << ','
      << (r.target.mode() == TargetSpec::Mode::seifert_genus ? "genus" : "chi") << ',' << r.target.chi() << ','
      << r.bound.str() << ',' << r.configuration_count << ',' << to_string(r.status) << ','
      << (r.two_strand_torus ? "true" : "false") << ',' << r.stats.nodes << ',' << format_ms(r.stats.elapsed_ms);
  return out.str();
}

std::string to_text(const CensusReport& r) {
  std::ostringstream out;
  out << r.name << ": n=" << r.n << ", " << r.target.describe() << ", " << r.configuration_count
      << " configuration" << (r.configuration_count == 1 ? "" : "s") << " (" << to_string(r.status)
      << "), bound " << r.bound.str();
  if (r.two_strand_torus) out << ", (2,n)-torus diagram";
  out << '\n';
  if (r.configurations) {
    for (std::size_t i = 0; i < r.configurations->size(); ++i) {
      const Configuration& cfg = (*r.configurations)[i];
      out << "  configuration " << i + 1 << ": saddles";
      for (int k : cfg.placement.saddles) out << ' ' << k;
      out << "; edges";
      for (const auto& s : edge_order_strings(cfg.placement)) out << ' ' << s;
      out << '\n';
      for (const Curve& c : cfg.curves) out << "    " << to_string(c) << "   [" << word_of(c).str() << "]\n";
    }
  }
  return out.str();
}

}  // namespace altsurf
