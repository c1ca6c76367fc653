#include <doctest.h>

#include <algorithm>
#include <stdexcept>
#include <string>

#include "altsurf/enumerate.hpp"
#include "test_support.hpp"

using namespace altsurf;

namespace {

// Decimal power by repeated schoolbook multiplication on digit strings.
std::string decimal_power(int base, long exponent) {
  std::string digits = "1";  // least significant digit first
  for (long k = 0; k < exponent; ++k) {
    int carry = 0;
    for (char& c : digits) {
      const int v = (c - '0') * base + carry;
      c = static_cast<char>('0' + v % 10);
      carry = v / 10;
    }
    while (carry) {
      digits += static_cast<char>('0' + carry % 10);
      carry /= 10;
    }
  }
  return {digits.rbegin(), digits.rend()};
}

std::vector<std::string> json_lines(const EnumerationResult& r) {
  std::vector<std::string> lines;
  for (const auto& cfg : r.configurations) lines.push_back(to_json(cfg));
  return lines;
}

}  // namespace

TEST_CASE("bound values at genus one") {
  CHECK(bound(3, 1).str() == "184884258895036416");
  CHECK(bound(4, 1).str() == "18446744073709551616");
  CHECK(bound(4, 1) == BigInt(1) << 64);
}

TEST_CASE("bounds agree with a decimal power oracle") {
  for (int n = 1; n <= 9; ++n) {
    for (int g = 1; g <= 3; ++g) {
      CAPTURE(n);
      CAPTURE(g);
      CHECK(bound(n, g).str() == decimal_power(4 * n, 64L * g * g - 48L * g));
      const IntermediateBounds ib = intermediate_bounds(n, g);
      CHECK(ib.per_curve.str() == decimal_power(4 * n, 8L * g - 4));
      CHECK(ib.c1_total.str() == decimal_power(4 * n, (8L * g - 4) * (8L * g - 4)));
      CHECK(ib.c2_total.str() == decimal_power(4 * n, 4 * (4L * g - 4)));
    }
    for (int chi = -1; chi >= -5; --chi) {
      const long h = 1 - chi;
      CHECK(spanning_bound(n, chi).str() == decimal_power(4 * n, 16 * h * h - 24 * h));
    }
  }
  CHECK(intermediate_bounds(3, 1).per_curve == 20736);
  CHECK(intermediate_bounds(4, 1).per_curve == 65536);
  CHECK(intermediate_bounds(4, 1).c2_total == 1);
}

TEST_CASE("spanning bound at odd chi equals the genus bound") {
  for (int n = 1; n <= 7; ++n)
    for (int g = 1; g <= 3; ++g) CHECK(spanning_bound(n, 1 - 2 * g) == bound(n, g));
  CHECK(bound_for(3, TargetSpec::seifert(1)) == bound(3, 1));
  CHECK(bound_for(3, TargetSpec::spanning(-2, 1)) == spanning_bound(3, -2));
}

TEST_CASE("bounds grow with n and g") {
  for (int n = 1; n <= 8; ++n) {
    for (int g = 1; g <= 3; ++g) {
      CHECK(bound(n + 1, g) > bound(n, g));
      CHECK(bound(n, g + 1) > bound(n, g));
    }
  }
}

TEST_CASE("the bound needs positive genus and crossing number") {
  CHECK_THROWS_AS(bound(3, 0), std::invalid_argument);
  CHECK_THROWS_AS(bound(0, 1), std::invalid_argument);
  CHECK_THROWS_AS(intermediate_bounds(3, 0), std::invalid_argument);
  CHECK_THROWS_AS(spanning_bound(3, 0), std::invalid_argument);
}

TEST_CASE("the trefoil has exactly one genus-one configuration") {
  const Diagram d = parse_pd(testing::kTrefoil);
  const TargetSpec t = TargetSpec::seifert(1);
  const auto result = enumerate(d, t, SearchBudget::for_target(t));
  CHECK(result.status == SearchStatus::complete);
  REQUIRE(result.configurations.size() == 1);
  CHECK(result.configurations[0] == canonical_config(testing::trefoil_genus_one()));
  CHECK(BigInt(result.configurations.size()) <= bound(3, 1));
}

TEST_CASE("genus-one outputs use no saddles and only B letters") {
  const TargetSpec t = TargetSpec::seifert(1);
  for (const auto& entry : testing::knot_table()) {
    CAPTURE(entry.name);
    const Diagram d = parse_pd(entry.pd);
    const auto result = enumerate(d, t, SearchBudget::for_target(t));
    CHECK(result.status == SearchStatus::complete);
    CHECK(BigInt(result.configurations.size()) <= bound(d.crossing_count(), 1));
    for (const auto& cfg : result.configurations) {
      CHECK(cfg.placement.saddle_total() == 0);
      for (const auto& c : cfg.curves) CHECK(word_of(c).s_count() == 0);
    }
  }
}

TEST_CASE("every output passes the configuration check, including the balance rule") {
  for (const std::string& pd : {testing::kTrefoil, testing::kFigureEight}) {
    const Diagram d = parse_pd(pd);
    for (const TargetSpec& t : {TargetSpec::seifert(1), TargetSpec::spanning(-2, 1)}) {
      const auto result = enumerate(d, t, SearchBudget::for_target(t));
      for (const auto& cfg : result.configurations) {
        const ValidationResult r = check(cfg, d);
        CHECK_MESSAGE(r.ok, r.rule << ": " << r.reason);
        CHECK(accept_surface(cfg, d));
        CHECK(canonical_config(cfg) == cfg);
      }
      CHECK(std::is_sorted(result.configurations.begin(), result.configurations.end(),
                           [](const auto& a, const auto& b) { return to_json(a) < to_json(b); }));
    }
  }
}

TEST_CASE("pruned search matches the exhaustive oracle at genus one") {
  for (const std::string& pd : {testing::kTrefoil, testing::kFigureEight}) {
    const Diagram d = parse_pd(pd);
    const TargetSpec t = TargetSpec::seifert(1);
    CHECK(enumerate(d, t, SearchBudget::for_target(t)).configurations == oracle_enumerate(d, t));
  }
}

TEST_CASE("a zero C1 cap leaves nothing to find") {
  const Diagram d = parse_pd(testing::kTrefoil);
  const TargetSpec t = TargetSpec::seifert(1);
  SearchBudget budget = SearchBudget::for_target(t);
  budget.caps.max_c1 = 0;
  const auto result = enumerate(d, t, budget);
  CHECK(result.configurations.empty());
  CHECK(result.status == SearchStatus::complete);
}

TEST_CASE("a node limit stops the search and says so") {
  const Diagram d = parse_pd(testing::kFigureEight);
  const TargetSpec t = TargetSpec::spanning(-2, 1);
  SearchBudget budget = SearchBudget::for_target(t);
  budget.node_limit = 50;
  const auto result = enumerate(d, t, budget);
  CHECK(result.status == SearchStatus::budget_exhausted);
  CHECK(result.stats.nodes <= 50 + 8);
}

TEST_CASE("thread count does not change the output") {
  const Diagram d = parse_pd(testing::kFigureEight);
  const TargetSpec t = TargetSpec::spanning(-2, 1);
  SearchBudget one = SearchBudget::for_target(t);
  SearchBudget four = one;
  four.threads = 4;
  const auto a = enumerate(d, t, one);
  const auto b = enumerate(d, t, four);
  CHECK(a.configurations.size() == 10);
  CHECK(json_lines(a) == json_lines(b));
  CHECK(a.stats.nodes == b.stats.nodes);
}

TEST_CASE("inputs outside the supported class are refused") {
  const TargetSpec g1 = TargetSpec::seifert(1);
  CHECK_THROWS_AS(enumerate(parse_pd(testing::kTrefoilSum), g1, SearchBudget::for_target(g1)), PreconditionError);
  const Diagram hopf = parse_pd("X[4,2,3,1] X[1,3,2,4]");
  CHECK_THROWS_AS(require_enumerable(hopf, g1), PreconditionError);
  CHECK_THROWS_AS(require_enumerable(hopf, TargetSpec::spanning(-1, 2)), PreconditionError);
  CHECK_THROWS_AS(require_enumerable(parse_pd(testing::kTrefoil), TargetSpec::spanning(-3, 2)), PreconditionError);
  CHECK_NOTHROW(require_enumerable(hopf, TargetSpec::spanning(-2, 2)));
  CHECK_THROWS_AS(oracle_enumerate(parse_pd(testing::table_pd("5_1")), g1), PreconditionError);
}

TEST_CASE("search status names") {
  CHECK(to_string(SearchStatus::complete) == "complete");
  CHECK(to_string(SearchStatus::budget_exhausted) == "budget_exhausted");
}
