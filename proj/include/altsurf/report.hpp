#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "altsurf/enumerate.hpp"
#include "altsurf/surface.hpp"

namespace altsurf {

struct SurfaceSummary {
  long chi = 0;
  bool connected = false;
  bool orientable = false;
  int boundary_components = 0;
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::size_t faces = 0;
  std::optional<int> genus;
  std::string parameter;  // (1 - chi)/2
};

SurfaceSummary summarize(const SurfaceComplex& sc, const TargetSpec& t);

struct ReportOptions {
  bool include_configurations = false;
  bool emit_surfaces = false;
};

struct CensusReport {
  std::string name;
  std::string pd;
  int n = 0;
  int components = 0;
  TargetSpec target;
  BigInt bound;
  std::uint64_t configuration_count = 0;
  SearchStatus status = SearchStatus::complete;
  bool two_strand_torus = false;
  std::vector<std::string> notes;
  std::optional<std::vector<Configuration>> configurations;
  std::optional<std::vector<SurfaceSummary>> surfaces;
  std::optional<bool> oracle_agrees;
  SearchStats stats;
};

CensusReport make_report(const std::string& name, const Diagram& d, const TargetSpec& t,
                         const EnumerationResult& result, const ReportOptions& options = {});

/// Single-line JSON unless indent >= 0. Field order is fixed.
std::string to_json(const CensusReport& r, int indent = -1);

/// A census line for a table entry that could not be enumerated.
std::string rejection_json(const std::string& name, const std::string& status, const std::string& error);

std::string csv_header();
std::string to_csv(const CensusReport& r);
std::string to_text(const CensusReport& r);

}  // namespace altsurf
