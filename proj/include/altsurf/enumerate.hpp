#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "altsurf/config.hpp"
#include "altsurf/diagram.hpp"

namespace altsurf {

using BigInt = boost::multiprecision::cpp_int;

/// (4n)^(64g^2 - 48g). Throws std::invalid_argument unless n >= 1 and g >= 1.
BigInt bound(int n, int g);

/// The same bound with the genus replaced by (1 - chi)/2:
/// (4n)^(16h^2 - 24h) with h = 1 - chi. Throws unless n >= 1 and chi <= -1.
BigInt spanning_bound(int n, int chi);

/// bound(n, g) in genus mode, spanning_bound(n, chi) otherwise.
BigInt bound_for(int n, const TargetSpec& t);

struct IntermediateBounds {
  BigInt per_curve;  // (4n)^(8g-4)
  BigInt c1_total;   // (4n)^((8g-4)^2)
  BigInt c2_total;   // (4n)^(4(4g-4))
};

IntermediateBounds intermediate_bounds(int n, int g);

/// An input the enumerator does not accept (non-prime diagram, target that
/// does not match the link, diagram too large for the search state).
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SearchBudget {
  Caps caps;
  std::uint64_t node_limit = 0;     // 0: unlimited
  double time_limit_seconds = 0.0;  // 0: unlimited
  int threads = 1;

  static SearchBudget for_target(const TargetSpec& t);
};

enum class SearchStatus { complete, budget_exhausted };

std::string_view to_string(SearchStatus s) noexcept;

struct SearchStats {
  std::uint64_t nodes = 0;
  std::uint64_t leaves = 0;
  std::uint64_t placements = 0;
  std::map<std::string, std::uint64_t> prunes;
  double elapsed_ms = 0.0;
};

struct EnumerationResult {
  /// Canonical configurations sorted by their JSON text.
  std::vector<Configuration> configurations;
  SearchStatus status = SearchStatus::complete;
  SearchStats stats;
};

/// Surface-level acceptance shared by both enumerators: the assembled complex
/// is connected, has the target's boundary count, and is orientable in genus
/// mode.
bool accept_surface(const Configuration& cfg, const Diagram& d);

/// Pruned enumeration of every canonical configuration that passes check()
/// under budget.caps, has chi equal to the target, and passes accept_surface.
EnumerationResult enumerate(const Diagram& d, const TargetSpec& t, const SearchBudget& budget);

/// Exhaustive reference enumeration with post-hoc filters only.
/// Single-threaded; refuses diagrams with more than 4 crossings or chi < -3.
std::vector<Configuration> oracle_enumerate(const Diagram& d, const TargetSpec& t);
std::vector<Configuration> oracle_enumerate(const Diagram& d, const TargetSpec& t, const Caps& caps);

/// Throws PreconditionError unless d is prime and t matches its component count.
void require_enumerable(const Diagram& d, const TargetSpec& t);

}  // namespace altsurf
