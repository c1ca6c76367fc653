#pragma once

#include <string>
#include <vector>

#include "altsurf/curve.hpp"
#include "altsurf/diagram.hpp"
#include "altsurf/words.hpp"

namespace altsurf {

/// What the enumeration is looking for. Genus mode is for knots
/// (chi = 1 - 2g, one boundary component); spanning mode fixes chi directly.
class TargetSpec {
 public:
  enum class Mode { seifert_genus, spanning_chi };

  TargetSpec() = default;

  /// Throws std::invalid_argument unless g >= 1.
  static TargetSpec seifert(int genus);
  /// Throws std::invalid_argument unless chi <= -1 and boundary_components >= 1.
  static TargetSpec spanning(int chi, int boundary_components);

  Mode mode() const noexcept { return mode_; }
  int genus() const noexcept { return genus_; }  // 0 in spanning mode
  int chi() const noexcept { return chi_; }
  int boundary_components() const noexcept { return boundary_; }

  /// (1 - chi) / 2, the genus in genus mode.
  Quarters genus_like() const noexcept { return Quarters::from_quarters(2 * (1 - chi_)); }

  /// Seifert surfaces must be orientable; spanning surfaces need not be.
  bool requires_orientable() const noexcept { return mode_ == Mode::seifert_genus; }

  /// "genus 1" or "chi -2, 1 boundary component".
  std::string describe() const;

  friend bool operator==(const TargetSpec&, const TargetSpec&) = default;

 private:
  Mode mode_ = Mode::seifert_genus;
  int genus_ = 1;
  int chi_ = -1;
  int boundary_ = 1;
};

/// Per-target limits on curve classes and saddles.
struct Caps {
  int max_c1 = 0;
  int max_word_len = 0;
  int max_c2 = 0;
  int saddle_budget = 0;

  /// max_c1 = -4 chi, max_word_len = 4 - 4 chi, saddle_budget = -chi - b,
  /// max_c2 = 2 * saddle_budget.
  static Caps for_target(const TargetSpec& t);

  friend bool operator==(const Caps&, const Caps&) = default;
};

/// A full curve system on both spheres together with where it meets the
/// diagram.
struct Configuration {
  TargetSpec target;
  Placement placement;
  std::vector<Curve> curves;

  friend bool operator==(const Configuration&, const Configuration&) = default;
};

struct ValidationResult {
  bool ok = true;
  std::string rule;  // empty when ok
  int item = 0;      // standard-position property item, 0 if the rule has none
  std::string reason;

  explicit operator bool() const noexcept { return ok; }
};

/// Checks run in this order, reporting the first failure: shape,
/// edge-coverage (3), edge-parity, word (7-10), bbbb-excluded, c1-cap,
/// word-length-cap, c2-cap, saddle-budget, curve (2, 4, 6 and face/boundary
/// realizability), pairing (5), non-crossing, chi-target.
ValidationResult check(const Configuration& cfg, const Diagram& d);
ValidationResult check(const Configuration& cfg, const Diagram& d, const Caps& caps);

/// Sum of word contributions. Throws std::invalid_argument on an invalid word.
Quarters chi(const Configuration& cfg);

/// Curves in canonical rotation, sorted by sphere then text.
Configuration canonical_config(const Configuration& cfg);

/// Edge orders as strings such as "LRL", one per edge.
std::vector<std::string> edge_order_strings(const Placement& p);

/// Stable JSON text (fixed field order): target, saddles, edge_orders, curves.
std::string to_json(const Configuration& cfg, int indent = -1);
/// Throws std::invalid_argument on malformed input.
Configuration configuration_from_json(const std::string& text);

}  // namespace altsurf
