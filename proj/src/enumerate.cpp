#include "altsurf/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <bitset>
#include <chrono>
#include <exception>
#include <mutex>
#include <set>
#include <thread>
#include <tuple>

#include "altsurf/surface.hpp"

namespace altsurf {

std::string_view to_string(SearchStatus s) noexcept {
  return s == SearchStatus::complete ? "complete" : "budget_exhausted";
}

SearchBudget SearchBudget::for_target(const TargetSpec& t) {
  SearchBudget b;
  b.caps = Caps::for_target(t);
  return b;
}

void require_enumerable(const Diagram& d, const TargetSpec& t) {
  if (!d.is_prime()) throw PreconditionError("diagram is not prime");
  if (t.mode() == TargetSpec::Mode::seifert_genus && d.component_count() != 1)
    throw PreconditionError("genus mode needs a knot; this diagram has " + std::to_string(d.component_count()) +
                            " components (use a chi target)");
  if (-t.chi() - t.boundary_components() < 0)
    throw PreconditionError("chi " + std::to_string(t.chi()) + " leaves a negative saddle budget for " +
                            std::to_string(t.boundary_components()) + " boundary components");
  if (t.boundary_components() != d.component_count())
    throw PreconditionError("target has " + std::to_string(t.boundary_components()) +
                            " boundary components but the link has " + std::to_string(d.component_count()));
}

bool accept_surface(const Configuration& cfg, const Diagram& d) {
  const SurfaceComplex sc = assemble(cfg, d);
  if (!sc.connected) return false;
  if (sc.boundary_components != cfg.target.boundary_components()) return false;
  return !cfg.target.requires_orientable() || sc.orientable;
}

namespace {

using Clock = std::chrono::steady_clock;

constexpr int kMaxCrossings = 64;

/// Totals of B-points M for which some split of the words over the two
/// spheres meets every cap with the right number of curves.
std::vector<int> feasible_b_totals(int n, int saddles, const TargetSpec& t, const Caps& caps) {
  std::vector<int> out;
  const int max_curves = caps.max_c1 + caps.max_c2;
  const int hi = 2 * (max_curves - t.chi() - saddles);
  const int s_letters = 2 * saddles;
  struct Type {
    int b, s;
    bool c2;
  };
  std::vector<Type> types;
  for (int b = 2; b <= caps.max_word_len; b += 2) {
    for (int s = 0; s <= std::min(n, s_letters) && b + s <= caps.max_word_len; ++s) {
      if (b + s < 4 || (b == 4 && s == 0)) continue;
      types.push_back({b, s, b + s == 4});
    }
  }
  for (int m = 2 * n; m <= hi; m += 2) {
    const int curves = t.chi() + m / 2 + saddles;
    if (curves < 2) continue;
    using State = std::tuple<int, int, int>;  // curves, c1, c2
    std::vector<std::vector<std::set<State>>> reach(m + 1, std::vector<std::set<State>>(s_letters + 1));
    reach[0][0].insert({0, 0, 0});
    for (const Type& w : types) {
      for (int bu = 0; bu + w.b <= m; ++bu) {
        for (int su = 0; su + w.s <= s_letters; ++su) {
          for (const auto& [k, c1, c2] : reach[bu][su]) {
            const State next{k + 1, c1 + (w.c2 ? 0 : 1), c2 + (w.c2 ? 1 : 0)};
            if (std::get<1>(next) > caps.max_c1 || std::get<2>(next) > caps.max_c2) continue;
            reach[bu + w.b][su + w.s].insert(next);
          }
        }
      }
    }
    const auto& per_sphere = reach[m][s_letters];
    bool ok = false;
    for (const auto& [ku, c1u, c2u] : per_sphere) {
      for (const auto& [kl, c1l, c2l] : per_sphere) {
        if (ku >= 1 && kl >= 1 && ku + kl == curves && c1u + c1l <= caps.max_c1 && c2u + c2l <= caps.max_c2)
          ok = true;
      }
    }
    if (ok) out.push_back(m);
  }
  return out;
}

/// Every vector of `slots` nonnegative entries summing to `total`.
void compositions(int slots, int total, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == slots - 1) {
    cur.push_back(total);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int v = 0; v <= total; ++v) {
    cur.push_back(v);
    compositions(slots, total - v, cur, out);
    cur.pop_back();
  }
}

struct Job {
  std::vector<int> saddles;
  std::vector<int> b_counts;  // odd, per edge
};

struct Shared {
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> stop{false};
  std::uint64_t node_limit = 0;
  double time_limit = 0.0;
  Clock::time_point start;
};

struct LocalStats {
  std::uint64_t nodes = 0;
  std::uint64_t leaves = 0;
  std::uint64_t placements = 0;
  std::map<std::string, std::uint64_t> prunes;
};

/// Open piece of a curve on one sphere, stored at both of its free ends.
struct Fragment {
  int b = 0;
  int s = 0;
  std::uint64_t crossings = 0;
  std::bitset<4 * kMaxCrossings> sides;
};

/// Depth-first search over the non-crossing interior-arc systems of one
/// placement.
class ArcSearch {
 public:
  ArcSearch(const Diagram& d, const TargetSpec& t, const Caps& caps, const PointIndex& index, Shared& shared,
            LocalStats& stats, std::vector<Configuration>& out)
      : d_(d), target_(t), caps_(caps), index_(index), shared_(shared), stats_(stats), out_(out) {
    const int size = index.size();
    curves_needed_ = t.chi() + index.placement().b_point_total() / 2 + index.placement().saddle_total();
    arc_.assign(size, -1);
    for (int s = 0; s < 2; ++s) {
      const Sphere sphere = s == 0 ? Sphere::upper : Sphere::lower;
      other_[s].assign(size, -1);
      frag_[s].assign(size, {});
      for (int p = 0; p < size; ++p) {
        const int q = index.link_partner(sphere, p);
        other_[s][p] = q;
        Fragment f;
        for (int x : {p, q}) {
          const AttachPoint& pt = index.at(x);
          if (pt.is_saddle) {
            f.s = 1;
            f.crossings |= std::uint64_t{1} << pt.crossing;
          } else {
            ++f.b;
            f.sides.set(2 * pt.edge + index_of(pt.side));
          }
        }
        frag_[s][p] = f;
      }
      open_[s] = size / 2;
    }
    for (int f = 0; f < index.face_count(); ++f) {
      if (!index.face_order(f).empty()) pending_.push_back({f, 0, static_cast<int>(index.face_order(f).size())});
    }
  }

  void run() { search(); }

 private:
  struct Interval {
    int face, lo, hi;
  };

  struct Undo {
    int ends[2][2];
    Fragment saved[2][2];
    bool closed[2];
    int closed_count, c1, c2, chi4;
  };

  void prune(const char* rule) { ++stats_.prunes[rule]; }

  bool tick() {
    ++stats_.nodes;
    if (shared_.node_limit && shared_.nodes.fetch_add(1) >= shared_.node_limit) {
      shared_.stop = true;
      return false;
    }
    if ((stats_.nodes & 1023) == 0) {
      if (shared_.time_limit > 0) {
        const std::chrono::duration<double> el = Clock::now() - shared_.start;
        if (el.count() >= shared_.time_limit) shared_.stop = true;
      }
    }
    return !shared_.stop.load(std::memory_order_relaxed);
  }

  /// Closed-word rules for a finished curve; returns the prune rule or null.
  const char* closed_rule(const Fragment& f, int& c1, int& c2) const {
    const int len = f.b + f.s;
    if (f.b == 0) return "closed-word";
    if (len < 4) return "closed-word";
    if (f.b == 4 && f.s == 0) return "bbbb";
    if (len > caps_.max_word_len) return "word-length";
    if (len == 4) {
      if (++c2 > caps_.max_c2) return "c2-cap";
    } else if (++c1 > caps_.max_c1) {
      return "c1-cap";
    }
    return nullptr;
  }

  bool place(int a, int b, Undo& u) {
    const AttachPoint& pa = index_.at(a);
    const AttachPoint& pb = index_.at(b);
    if (pa.is_saddle != pb.is_saddle) {
      const AttachPoint& s = pa.is_saddle ? pa : pb;
      const AttachPoint& e = pa.is_saddle ? pb : pa;
      if (d_.incident(e.edge, s.crossing)) {
        prune("saddle-adjacent");
        return false;
      }
    }
    int closed = closed_count_;
    int c1 = c1_;
    int c2 = c2_;
    int chi4 = chi4_;
    Fragment merged[2];
    bool closes[2];
    for (int s = 0; s < 2; ++s) {
      const int ea = other_[s][a];
      closes[s] = ea == b;
      if (closes[s]) {
        const Fragment& f = frag_[s][a];
        if (const char* rule = closed_rule(f, c1, c2)) {
          prune(rule);
          return false;
        }
        chi4 += 4 - (f.b + f.s);
        ++closed;
        continue;
      }
      const Fragment& fa = frag_[s][a];
      const Fragment& fb = frag_[s][b];
      if (fa.crossings & fb.crossings) {
        prune("same-bubble");
        return false;
      }
      if ((fa.sides & fb.sides).any()) {
        prune("edge-side");
        return false;
      }
      if (fa.b + fa.s + fb.b + fb.s > caps_.max_word_len) {
        prune("word-length");
        return false;
      }
      merged[s] = fa;
      merged[s].b += fb.b;
      merged[s].s += fb.s;
      merged[s].crossings |= fb.crossings;
      merged[s].sides |= fb.sides;
    }
    if (chi4 < 4 * target_.chi()) {
      prune("chi");
      return false;
    }
    int open_after[2];
    for (int s = 0; s < 2; ++s) open_after[s] = open_[s] - 1;
    const int at_least = closed + (open_after[0] > 0) + (open_after[1] > 0);
    const int at_most = closed + open_after[0] + open_after[1];
    if (at_least > curves_needed_ || at_most < curves_needed_) {
      prune("curve-count");
      return false;
    }

    u.closed_count = closed_count_;
    u.c1 = c1_;
    u.c2 = c2_;
    u.chi4 = chi4_;
    for (int s = 0; s < 2; ++s) {
      u.closed[s] = closes[s];
      if (closes[s]) continue;
      const int ea = other_[s][a];
      const int eb = other_[s][b];
      u.ends[s][0] = ea;
      u.ends[s][1] = eb;
      u.saved[s][0] = frag_[s][ea];
      u.saved[s][1] = frag_[s][eb];
      other_[s][ea] = eb;
      other_[s][eb] = ea;
      frag_[s][ea] = merged[s];
      frag_[s][eb] = merged[s];
    }
    for (int s = 0; s < 2; ++s) --open_[s];
    closed_count_ = closed;
    c1_ = c1;
    c2_ = c2;
    chi4_ = chi4;
    arc_[a] = b;
    arc_[b] = a;
    return true;
  }

  void unplace(int a, int b, const Undo& u) {
    arc_[a] = arc_[b] = -1;
    closed_count_ = u.closed_count;
    c1_ = u.c1;
    c2_ = u.c2;
    chi4_ = u.chi4;
    for (int s = 0; s < 2; ++s) {
      ++open_[s];
      if (u.closed[s]) continue;
      const int ea = u.ends[s][0];
      const int eb = u.ends[s][1];
      other_[s][ea] = a;
      other_[s][eb] = b;
      frag_[s][ea] = u.saved[s][0];
      frag_[s][eb] = u.saved[s][1];
    }
  }

  void search() {
    if (shared_.stop.load(std::memory_order_relaxed)) return;
    if (pending_.empty()) {
      leaf();
      return;
    }
    const Interval iv = pending_.back();
    pending_.pop_back();
    if (iv.lo >= iv.hi) {
      search();
      pending_.push_back(iv);
      return;
    }
    const auto& order = index_.face_order(iv.face);
    const int a = order[iv.lo];
    for (int j = iv.lo + 1; j < iv.hi; j += 2) {
      if (!tick()) break;
      const int b = order[j];
      Undo u;
      if (!place(a, b, u)) continue;
      pending_.push_back({iv.face, j + 1, iv.hi});
      pending_.push_back({iv.face, iv.lo + 1, j});
      search();
      pending_.pop_back();
      pending_.pop_back();
      unplace(a, b, u);
    }
    pending_.push_back(iv);
  }

  void leaf() {
    ++stats_.leaves;
    if (closed_count_ != curves_needed_) {
      prune("curve-count");
      return;
    }
    Configuration cfg;
    cfg.target = target_;
    cfg.placement = index_.placement();
    cfg.curves = trace_curves(index_, arc_);
    const ValidationResult v = check(cfg, d_, caps_);
    if (!v.ok)
      throw std::logic_error("search produced a configuration failing " + v.rule + ": " + v.reason + "\n" +
                             to_json(cfg));
    if (!accept_surface(cfg, d_)) {
      prune("surface");
      return;
    }
    out_.push_back(canonical_config(cfg));
  }

  const Diagram& d_;
  const TargetSpec& target_;
  const Caps& caps_;
  const PointIndex& index_;
  Shared& shared_;
  LocalStats& stats_;
  std::vector<Configuration>& out_;

  int curves_needed_ = 0;
  std::vector<int> arc_;
  std::vector<int> other_[2];
  std::vector<Fragment> frag_[2];
  int open_[2] = {0, 0};
  int closed_count_ = 0;
  int c1_ = 0;
  int c2_ = 0;
  int chi4_ = 0;
  std::vector<Interval> pending_;
};

void run_job(const Diagram& d, const TargetSpec& t, const Caps& caps, const Job& job, Shared& shared,
             LocalStats& stats, std::vector<Configuration>& out) {
  const int edges = d.edge_count();
  std::vector<int> face_points(d.face_count());
  for (std::uint64_t sigma = 0; sigma < (std::uint64_t{1} << edges); ++sigma) {
    if (shared.stop.load(std::memory_order_relaxed)) return;
    std::fill(face_points.begin(), face_points.end(), 0);
    for (int x = 0; x < d.crossing_count(); ++x) {
      for (int q = 0; q < 4; ++q) face_points[d.quadrant_face({x, q})] += job.saddles[x];
    }
    for (int e = 0; e < edges; ++e) {
      const int m = job.b_counts[e];
      const Side first = (sigma >> e) & 1 ? Side::right : Side::left;
      face_points[d.edge_side_face({e, first})] += (m + 1) / 2;
      face_points[d.edge_side_face({e, opposite(first)})] += m / 2;
    }
    if (std::any_of(face_points.begin(), face_points.end(), [](int c) { return c % 2 != 0; })) {
      ++stats.prunes["face-parity"];
      continue;
    }
    Placement placement;
    placement.saddles = job.saddles;
    placement.edge_orders.resize(edges);
    for (int e = 0; e < edges; ++e) {
      Side side = (sigma >> e) & 1 ? Side::right : Side::left;
      for (int i = 0; i < job.b_counts[e]; ++i) {
        placement.edge_orders[e].push_back(side);
        side = opposite(side);
      }
    }
    ++stats.placements;
    const PointIndex index(d, placement);
    ArcSearch(d, t, caps, index, shared, stats, out).run();
  }
}

}  // namespace

EnumerationResult enumerate(const Diagram& d, const TargetSpec& t, const SearchBudget& budget) {
  require_enumerable(d, t);
  if (d.crossing_count() > kMaxCrossings)
    throw PreconditionError("enumeration supports at most " + std::to_string(kMaxCrossings) + " crossings");
  if (d.edge_count() > 62) throw PreconditionError("too many edges for the side-phase enumeration");

  Shared shared;
  shared.start = Clock::now();
  shared.node_limit = budget.node_limit;
  shared.time_limit = budget.time_limit_seconds;
  const Caps& caps = budget.caps;

  std::vector<Job> jobs;
  std::map<std::string, std::uint64_t> setup_prunes;
  for (int k = 0; k <= std::max(0, caps.saddle_budget); ++k) {
    const auto totals = feasible_b_totals(d.crossing_count(), k, t, caps);
    if (totals.empty()) {
      ++setup_prunes["letter-budget"];
      continue;
    }
    std::vector<std::vector<int>> saddle_choices;
    std::vector<int> cur;
    compositions(d.crossing_count(), k, cur, saddle_choices);
    for (int m : totals) {
      // odd counts 2a+1 with the a's summing to (m - 2n)/2
      std::vector<std::vector<int>> extras;
      compositions(d.edge_count(), (m - d.edge_count()) / 2, cur, extras);
      for (const auto& saddles : saddle_choices) {
        for (const auto& extra : extras) {
          Job job;
          job.saddles = saddles;
          for (int a : extra) job.b_counts.push_back(2 * a + 1);
          jobs.push_back(std::move(job));
        }
      }
    }
  }

  const int workers = std::max(1, std::min<int>(budget.threads, static_cast<int>(jobs.size())));
  std::vector<std::vector<Configuration>> found(jobs.size());
  std::vector<LocalStats> stats(workers);
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&](int w) {
    try {
      for (std::size_t j = next++; j < jobs.size(); j = next++) {
        if (shared.stop) break;
        run_job(d, t, caps, jobs[j], shared, stats[w], found[j]);
      }
    } catch (...) {
      std::lock_guard lock(error_mutex);
      if (!error) error = std::current_exception();
      shared.stop = true;
    }
  };
  if (workers == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(worker, w);
    for (auto& th : pool) th.join();
  }
  if (error) std::rethrow_exception(error);

  EnumerationResult result;
  result.status = shared.stop ? SearchStatus::budget_exhausted : SearchStatus::complete;
  result.stats.prunes = setup_prunes;
  for (const auto& s : stats) {
    result.stats.nodes += s.nodes;
    result.stats.leaves += s.leaves;
    result.stats.placements += s.placements;
    for (const auto& [rule, count] : s.prunes) result.stats.prunes[rule] += count;
  }
  std::vector<std::pair<std::string, Configuration>> keyed;
  for (auto& batch : found) {
    for (auto& cfg : batch) keyed.push_back({to_json(cfg), std::move(cfg)});
  }
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  keyed.erase(std::unique(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first == b.first; }),
              keyed.end());
  for (auto& [key, cfg] : keyed) result.configurations.push_back(std::move(cfg));
  result.stats.elapsed_ms = std::chrono::duration<double, std::milli>(Clock::now() - shared.start).count();
  return result;
}

}  // namespace altsurf
