// Acceptance run: one PASS/FAIL line per criterion. Exit status is nonzero if
// any criterion fails.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "altsurf/cli.hpp"
#include "altsurf/enumerate.hpp"
#include "altsurf/surface.hpp"
#include "altsurf/words.hpp"

using namespace altsurf;
using Clock = std::chrono::steady_clock;

namespace {

// Pinned limits.
constexpr double kBoundLimitMs = 1.0;
constexpr double kEulerLimitMs = 10 * 60 * 1000.0;
constexpr double kOracleLimitMs = 30 * 60 * 1000.0;
constexpr int kWordMaxLength = 12;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

int failures = 0;

void report(int id, bool pass, const std::string& detail) {
  std::cout << (pass ? "PASS" : "FAIL") << "  criterion " << id << ": " << detail << std::endl;
  if (!pass) ++failures;
}

struct Entry {
  std::string name;
  Diagram diagram;
};

std::vector<Entry> load(const std::string& path) {
  std::vector<Entry> out;
  for (const auto& e : read_knot_table_file(path)) out.push_back({e.name, parse_pd(e.pd)});
  return out;
}

const Entry& find(const std::vector<Entry>& table, const std::string& name) {
  return *std::find_if(table.begin(), table.end(), [&](const Entry& e) { return e.name == name; });
}

EnumerationResult run_enumerate(const Diagram& d, const TargetSpec& t) {
  return enumerate(d, t, SearchBudget::for_target(t));
}

// Item of the first violated word condition, 0 when valid; each maximal
// cyclic block of B's must have even length.
int reference_item(const std::string& w) {
  if (w.empty()) return 7;
  if (w.find('B') == std::string::npos) return 9;
  const std::size_t n = w.size();
  if (w.find('S') != std::string::npos) {
    for (std::size_t i = 0; i < n; ++i) {
      if (w[i] != 'B' || w[(i + n - 1) % n] == 'B') continue;
      std::size_t run = 0;
      while (w[(i + run) % n] == 'B') ++run;
      if (run % 2 != 0) return 8;
    }
  } else if (n % 2 != 0) {
    return 8;
  }
  return n < 4 ? 10 : 0;
}

void bound_formula() {
  double worst = 0;
  bool exact = true;
  for (int rep = 0; rep < 5; ++rep) {
    const auto start = Clock::now();
    const BigInt a = bound(3, 1);
    const BigInt b = bound(4, 1);
    worst = std::max(worst, ms_since(start));
    exact = exact && a.str() == "184884258895036416" && b == (BigInt(1) << 64);
  }
  std::ostringstream d;
  d << "bound(3,1) = " << bound(3, 1) << ", bound(4,1) = 2^64 " << (exact ? "exact" : "MISMATCH")
    << "; slowest of 5 paired evaluations " << worst << " ms (limit " << kBoundLimitMs << " ms)";
  report(1, exact && worst < kBoundLimitMs, d.str());
}

void word_suite() {
  const std::vector<std::pair<std::string, int>> table = {
      {"SS", 9},    {"SB", 8},    {"BB", 10},   {"SSS", 9},   {"BBS", 10}, {"BSBS", 8}, {"SSSS", 9},
      {"BSBBSB", 0}, {"BBBB", 0}, {"BBSS", 0},  {"BBSSS", 0}, {"BBBBBB", 0}};
  int table_bad = 0;
  for (const auto& [w, item] : table)
    if (check_word(BSWord(w)).item() != item) ++table_bad;
  for (int k = 1; k <= 64; ++k)
    if (check_word(BSWord(std::string(k, 'S'))).item() != 9) ++table_bad;
  long mismatches = 0, words = 0;
  for (int len = 0; len <= kWordMaxLength; ++len) {
    for (unsigned bits = 0; bits < (1U << len); ++bits) {
      std::string w;
      for (int i = 0; i < len; ++i) w += (bits >> i) & 1U ? 'S' : 'B';
      ++words;
      if (check_word(BSWord(w)).item() != reference_item(w)) ++mismatches;
    }
  }
  std::ostringstream d;
  d << table_bad << " table errors; " << mismatches << " mismatches over " << words
    << " words of length <= " << kWordMaxLength;
  report(2, table_bad == 0 && mismatches == 0, d.str());
}

void euler_bookkeeping(const std::vector<Entry>& table) {
  const auto start = Clock::now();
  std::size_t checked = 0, bad = 0;
  std::ostringstream counts;
  for (const char* name : {"3_1", "4_1"}) {
    for (const TargetSpec& t : {TargetSpec::seifert(1), TargetSpec::spanning(-2, 1)}) {
      const auto r = run_enumerate(find(table, name).diagram, t);
      if (r.status != SearchStatus::complete) ++bad;
      counts << ' ' << name << '@' << t.chi() << '=' << r.configurations.size();
      for (const auto& cfg : r.configurations) {
        ++checked;
        try {
          const SurfaceComplex sc = assemble(cfg, find(table, name).diagram);
          const long v = euler(sc);
          if (Quarters::whole(v) != chi(cfg) || allocated_euler(sc) != chi(cfg) || v != t.chi()) ++bad;
        } catch (const GluingError&) {
          ++bad;
        }
      }
    }
  }
  const double elapsed = ms_since(start);
  std::ostringstream d;
  d << "v-e+f == word sum == target chi on " << checked - bad << "/" << checked << " configurations ("
    << counts.str().substr(1) << "); " << elapsed / 1000 << " s (limit " << kEulerLimitMs / 60000 << " min)";
  report(3, bad == 0 && checked > 0 && elapsed < kEulerLimitMs, d.str());
}

void saddle_budget(const std::vector<Entry>& table) {
  const auto r = run_enumerate(find(table, "3_1").diagram, TargetSpec::seifert(1));
  std::size_t bad = 0;
  for (const auto& cfg : r.configurations) {
    bool ok = cfg.placement.saddle_total() == 0;
    for (const auto& c : cfg.curves) ok = ok && word_of(c).s_count() == 0;
    if (!ok) ++bad;
  }
  std::ostringstream d;
  d << "trefoil genus 1: " << r.configurations.size() << " configurations, " << bad
    << " with a saddle or an S letter; search " << to_string(r.status);
  report(4, bad == 0 && r.status == SearchStatus::complete, d.str());
}

void oracle_equivalence(const std::vector<Entry>& table) {
  const auto start = Clock::now();
  int cases = 0, equal = 0;
  std::ostringstream counts;
  for (const Entry& e : table) {
    if (e.diagram.crossing_count() > 4 || e.diagram.component_count() != 1) continue;
    for (const TargetSpec& t : {TargetSpec::seifert(1), TargetSpec::spanning(-1, 1), TargetSpec::spanning(-2, 1)}) {
      ++cases;
      const auto pruned = run_enumerate(e.diagram, t);
      const auto oracle = oracle_enumerate(e.diagram, t);
      const bool same = pruned.status == SearchStatus::complete && pruned.configurations == oracle;
      if (same) ++equal;
      counts << ' ' << e.name << '[' << t.describe() << "]=" << oracle.size() << (same ? "" : "(differs)");
    }
  }
  const double elapsed = ms_since(start);
  std::ostringstream d;
  d << equal << "/" << cases << " sets equal:" << counts.str() << "; " << elapsed / 1000 << " s (limit "
    << kOracleLimitMs / 60000 << " min)";
  report(5, cases > 0 && equal == cases && elapsed < kOracleLimitMs, d.str());
}

void bound_compliance(const std::vector<Entry>& table) {
  int over = 0, entries = 0;
  std::size_t trefoil = 0;
  for (const Entry& e : table) {
    if (e.diagram.component_count() != 1 || e.diagram.crossing_count() > 7) continue;
    ++entries;
    const auto r = run_enumerate(e.diagram, TargetSpec::seifert(1));
    if (BigInt(r.configurations.size()) > bound(e.diagram.crossing_count(), 1)) ++over;
    if (e.name == "3_1") trefoil = r.configurations.size();
  }
  std::ostringstream d;
  d << entries << " knots with n <= 7 at genus 1, " << over << " above bound(n,1); trefoil count " << trefoil
    << " (needs >= 1)";
  report(6, entries > 0 && over == 0 && trefoil >= 1, d.str());
}

std::string census(const std::string& table, const std::string& threads) {
  const char* argv[] = {"altsurf", "census", "--table", table.c_str(), "--genus", "1", "--threads", threads.c_str()};
  std::ostringstream out, err;
  const int code = run_cli(8, argv, out, err);
  static const std::regex elapsed(R"("elapsed_ms":\d+)");
  return std::to_string(code) + "\n" + std::regex_replace(out.str(), elapsed, "\"elapsed_ms\":0");
}

void determinism(const std::string& table) {
  const std::string a = census(table, "1");
  const std::string b = census(table, "4");
  std::ostringstream d;
  d << "two census runs (1 and 4 threads), " << a.size() << " bytes after masking elapsed_ms: "
    << (a == b ? "identical" : "different");
  report(7, a == b && a.rfind("0\n", 0) == 0, d.str());
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: acceptance <knot-table.tsv>\n";
    return 2;
  }
  const std::string table_path = argv[1];
  const auto table = load(table_path);

  bound_formula();
  word_suite();
  euler_bookkeeping(table);
  saddle_budget(table);
  oracle_equivalence(table);
  bound_compliance(table);
  determinism(table_path);
  std::cout << "N/A   criterion 8: asymptotic polynomial-vs-exponential comparison and large-genus behaviour are "
               "excluded; not reproducible at desk scale\n";

  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
