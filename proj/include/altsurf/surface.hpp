#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "altsurf/config.hpp"

namespace altsurf {

/// A configuration whose pieces do not glue into a surface.
class GluingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The cell complex cut out by the arc system: one disk per curve, glued
/// along interior arcs; boundary arcs run along the link.
struct SurfaceComplex {
  struct Vertex {
    bool saddle = false;
    int crossing = -1;  // saddle
    int level = -1;
    int edge = -1;  // B-point
    int index = -1;
    int valence = 0;
  };
  struct Edge {
    enum class Kind { interior, boundary } kind = Kind::interior;
    std::array<int, 2> vertices{};
    std::vector<int> faces;  // two for interior arcs, one for boundary arcs
  };
  struct Face {
    int curve = -1;
    BSWord word;
    std::vector<int> vertices;  // in curve order, one per corner
    std::vector<int> edges;
  };

  std::vector<Vertex> vertices;
  std::vector<Edge> edges;
  std::vector<Face> faces;

  bool connected = false;
  bool orientable = false;
  int boundary_components = 0;
  /// Boundary arcs run over every segment of the link exactly once.
  bool boundary_covers_link = false;
};

/// Throws GluingError if the curves do not close up into a surface.
SurfaceComplex assemble(const Configuration& cfg, const Diagram& d);

/// v - e + f.
long euler(const SurfaceComplex& sc);

/// The same number summed locally: +1/4 per saddle corner, +1/2 per B corner,
/// -1/2 per interior side, -1 per boundary side, +1 per face.
Quarters allocated_euler(const SurfaceComplex& sc);

struct GenusReport {
  long chi = 0;
  bool orientable = false;
  bool connected = false;
  int boundary_components = 0;
  std::optional<int> genus;  // orientable, connected, b = 1
  Quarters parameter;        // (1 - chi) / 2
  std::string annotation;
};

GenusReport genus_report(const SurfaceComplex& sc, const TargetSpec& t);

}  // namespace altsurf
