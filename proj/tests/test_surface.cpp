#include <doctest.h>

#include "altsurf/enumerate.hpp"
#include "altsurf/surface.hpp"
#include "test_support.hpp"

using namespace altsurf;

namespace {

const Diagram& trefoil() {
  static const Diagram d = parse_pd(testing::kTrefoil);
  return d;
}

void check_surface(const Configuration& cfg, const Diagram& d) {
  const SurfaceComplex sc = assemble(cfg, d);
  const long target = cfg.target.chi();
  CHECK(euler(sc) == target);
  CHECK(Quarters::whole(euler(sc)) == chi(cfg));
  CHECK(allocated_euler(sc) == chi(cfg));
  CHECK(sc.connected);
  CHECK(sc.boundary_covers_link);
  CHECK(sc.boundary_components == cfg.target.boundary_components());
  if (cfg.target.requires_orientable()) CHECK(sc.orientable);
  REQUIRE(sc.faces.size() == cfg.curves.size());
  for (std::size_t i = 0; i < sc.faces.size(); ++i) CHECK(sc.faces[i].word == word_of(cfg.curves[sc.faces[i].curve]));
  for (const auto& v : sc.vertices) CHECK(v.valence == (v.saddle ? 4 : 3));
  for (const auto& e : sc.edges)
    CHECK(e.faces.size() == (e.kind == SurfaceComplex::Edge::Kind::interior ? 2u : 1u));
}

}  // namespace

TEST_CASE("the genus-one trefoil configuration assembles into a once-punctured torus") {
  const Configuration cfg = testing::trefoil_genus_one();
  const SurfaceComplex sc = assemble(cfg, trefoil());
  CHECK(sc.vertices.size() == 6);
  CHECK(sc.edges.size() == 9);
  CHECK(sc.faces.size() == 2);
  CHECK(euler(sc) == -1);
  CHECK(allocated_euler(sc) == Quarters::whole(-1));
  CHECK(sc.connected);
  CHECK(sc.orientable);
  CHECK(sc.boundary_components == 1);
  CHECK(sc.boundary_covers_link);
  check_surface(cfg, trefoil());

  const GenusReport g = genus_report(sc, cfg.target);
  CHECK(g.chi == -1);
  REQUIRE(g.genus.has_value());
  CHECK(*g.genus == 1);
  CHECK(g.parameter == Quarters::whole(1));
}

TEST_CASE("every trefoil and figure-eight output glues into a surface at the target") {
  const Diagram eight = parse_pd(testing::kFigureEight);
  struct Case {
    const Diagram* d;
    TargetSpec t;
  };
  std::size_t total = 0;
  for (const Case& c : {Case{&trefoil(), TargetSpec::seifert(1)}, Case{&eight, TargetSpec::seifert(1)},
                        Case{&trefoil(), TargetSpec::spanning(-2, 1)}, Case{&eight, TargetSpec::spanning(-2, 1)}}) {
    const auto result = enumerate(*c.d, c.t, SearchBudget::for_target(c.t));
    REQUIRE(result.status == SearchStatus::complete);
    for (const auto& cfg : result.configurations) {
      CAPTURE(to_json(cfg));
      check_surface(cfg, *c.d);
    }
    total += result.configurations.size();
  }
  CHECK(total == 11);
}

TEST_CASE("the chi -2 figure-eight surfaces report the spanning parameter 3/2") {
  const Diagram eight = parse_pd(testing::kFigureEight);
  const TargetSpec t = TargetSpec::spanning(-2, 1);
  const auto result = enumerate(eight, t, SearchBudget::for_target(t));
  REQUIRE_FALSE(result.configurations.empty());
  for (const auto& cfg : result.configurations) {
    const GenusReport g = genus_report(assemble(cfg, eight), t);
    CHECK(g.chi == -2);
    CHECK(g.parameter.to_string() == "3/2");
    CHECK_FALSE(g.genus.has_value());
    CHECK_FALSE(g.annotation.empty());
  }
}

TEST_CASE("a curve moved to the wrong sphere does not glue") {
  Configuration cfg = testing::trefoil_genus_one();
  cfg.curves[1].sphere = Sphere::upper;
  CHECK_THROWS_AS(assemble(cfg, trefoil()), GluingError);
}

TEST_CASE("a lone curve leaves its B-points without a second disk") {
  // Every B-point needs one disk above and one below, so no configuration
  // with a single curve closes up.
  Configuration cfg = testing::trefoil_genus_one();
  cfg.curves.pop_back();
  CHECK_THROWS_AS(assemble(cfg, trefoil()), GluingError);
}

TEST_CASE("mismatched side alternation does not glue") {
  Configuration cfg = testing::trefoil_genus_one();
  for (auto& order : cfg.placement.edge_orders) order[0] = opposite(order[0]);
  CHECK_THROWS_AS(assemble(cfg, trefoil()), GluingError);
}
