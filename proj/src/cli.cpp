#include "altsurf/cli.hpp"

#include <algorithm>
#include <atomic>
#include <condition_variable>
#include <fstream>
#include <iostream>
#include <mutex>
#include <optional>
#include <set>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "altsurf/enumerate.hpp"
#include "altsurf/render.hpp"
#include "altsurf/report.hpp"

namespace altsurf {

namespace {

struct TargetArgs {
  std::optional<int> genus;
  std::optional<int> chi;
};

struct LimitArgs {
  std::uint64_t node_limit = 0;
  double time_limit = 0.0;
  int threads = 1;
};

struct Options {
  std::string pd;
  std::string table;
  std::string name = "diagram";
  std::string format;
  std::string out_path;
  std::string config_path;
  bool emit_surfaces = false;
  bool list = false;
  bool resume = false;
  bool detail = false;
  bool check_oracle = false;
  int n = 0;
  double size = 600.0;
  TargetArgs target;
  LimitArgs limits;
};

/// Error carrying the exit code it should produce.
struct CliFailure {
  int code;
  std::string message;
};

int code_for(const DiagramError& e) { return e.is_precondition() ? exit_precondition : exit_invalid_input; }

TargetSpec target_for(const TargetArgs& t, int components) {
  if (t.genus.has_value() == t.chi.has_value())
    throw CliFailure{exit_invalid_input, "give exactly one of --genus and --chi"};
  try {
    if (t.genus) return TargetSpec::seifert(*t.genus);
    return TargetSpec::spanning(*t.chi, components);
  } catch (const std::invalid_argument& e) {
    throw CliFailure{exit_invalid_input, e.what()};
  }
}

SearchBudget budget_for(const TargetSpec& t, const LimitArgs& limits, int threads) {
  SearchBudget b = SearchBudget::for_target(t);
  b.node_limit = limits.node_limit;
  b.time_limit_seconds = limits.time_limit;
  b.threads = threads;
  return b;
}

class Sink {
 public:
  Sink(std::ostream& fallback, const std::string& path, bool append) : out_(&fallback) {
    if (path.empty()) return;
    file_.open(path, append ? std::ios::app : std::ios::trunc);
    if (!file_) throw CliFailure{exit_invalid_input, "cannot write " + path};
    out_ = &file_;
  }
  std::ostream& stream() { return *out_; }

 private:
  std::ofstream file_;
  std::ostream* out_;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CliFailure{exit_invalid_input, "cannot read " + path};
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::vector<KnotTableEntry> inputs(const Options& o) {
  if (!o.pd.empty() && !o.table.empty()) throw CliFailure{exit_invalid_input, "give --pd or --table, not both"};
  if (!o.pd.empty()) return {KnotTableEntry{o.name, o.pd, 0}};
  if (o.table.empty()) throw CliFailure{exit_invalid_input, "give --pd or --table"};
  std::ifstream in(o.table);
  if (!in) throw CliFailure{exit_invalid_input, "cannot read " + o.table};
  try {
    return read_knot_table(in);
  } catch (const DiagramError& e) {
    throw CliFailure{exit_invalid_input, e.what()};
  }
}

int cmd_validate(const Options& o, std::ostream& out) {
  const std::string format = o.format.empty() ? "text" : o.format;
  Sink sink(out, o.out_path, false);
  auto& os = sink.stream();
  if (format == "csv") os << "name,status,n,edges,faces,components,prime,two_strand_torus,error\n";
  int worst = exit_ok;
  for (const auto& entry : inputs(o)) {
    nlohmann::ordered_json j;
    j["name"] = entry.name;
    int code = exit_ok;
    std::optional<Diagram> d;
    std::string error;
    try {
      d = parse_pd(entry.pd);
      if (!d->is_prime()) {
        code = exit_precondition;
        error = "not-prime: diagram is not prime";
      }
    } catch (const DiagramError& e) {
      code = code_for(e);
      error = std::string(to_string(e.kind())) + ": " + e.what();
    }
    worst = std::max(worst, code);
    j["status"] = code == exit_ok ? "valid" : code == exit_precondition ? "precondition" : "invalid";
    if (d) {
      j["n"] = d->crossing_count();
      j["edges"] = d->edge_count();
      j["faces"] = d->face_count();
      j["components"] = d->component_count();
      j["prime"] = d->is_prime();
      j["two_strand_torus"] = d->is_two_strand_torus();
    }
    if (!error.empty()) j["error"] = error;
    if (format == "json") {
      os << j.dump() << '\n';
    } else if (format == "csv") {
      os << entry.name << ',' << j["status"].get<std::string>();
      if (d) {
        os << ',' << d->crossing_count() << ',' << d->edge_count() << ',' << d->face_count() << ','
           << d->component_count() << ',' << (d->is_prime() ? "true" : "false") << ','
           << (d->is_two_strand_torus() ? "true" : "false");
      } else {
        os << ",,,,,,";
      }
      os << ',' << error << '\n';
    } else {
      os << entry.name << ": ";
      if (d) {
        os << d->crossing_count() << " crossings, " << d->edge_count() << " edges, " << d->face_count()
           << " faces, " << d->component_count() << " component" << (d->component_count() == 1 ? "" : "s");
        if (d->is_two_strand_torus()) os << ", (2,n)-torus diagram";
      }
      if (!error.empty()) os << (d ? "; " : "") << error;
      os << '\n';
    }
  }
  return worst;
}

int cmd_bound(const Options& o, std::ostream& out) {
  const std::string format = o.format.empty() ? "text" : o.format;
  if (o.target.genus.has_value() == o.target.chi.has_value())
    throw CliFailure{exit_invalid_input, "give exactly one of --genus and --chi"};
  BigInt value;
  std::optional<IntermediateBounds> parts;
  try {
    if (o.target.genus) {
      value = bound(o.n, *o.target.genus);
      if (o.detail) parts = intermediate_bounds(o.n, *o.target.genus);
    } else {
      value = spanning_bound(o.n, *o.target.chi);
    }
  } catch (const std::invalid_argument& e) {
    throw CliFailure{exit_invalid_input, e.what()};
  }
  Sink sink(out, o.out_path, false);
  auto& os = sink.stream();
  if (format == "json") {
    nlohmann::ordered_json j;
    j["n"] = o.n;
    if (o.target.genus) {
      j["genus"] = *o.target.genus;
    } else {
      j["chi"] = *o.target.chi;
    }
    j["bound"] = value.str();
    if (parts) {
      j["per_curve"] = parts->per_curve.str();
      j["c1_total"] = parts->c1_total.str();
      j["c2_total"] = parts->c2_total.str();
    }
    os << j.dump() << '\n';
  } else {
    os << value.str() << '\n';
    if (parts) {
      os << "per_curve " << parts->per_curve.str() << '\n'
         << "c1_total " << parts->c1_total.str() << '\n'
         << "c2_total " << parts->c2_total.str() << '\n';
    }
  }
  return exit_ok;
}

/// One enumeration; returns the rendered record and its exit code.
std::pair<std::string, int> enumerate_one(const KnotTableEntry& entry, const Options& o, const std::string& format,
                                          int threads) {
  auto rejected = [&](const std::string& status, const std::string& msg, int code) {
    std::string line;
    if (format == "json") {
      line = rejection_json(entry.name, status, msg);
    } else if (format == "csv") {
      line = entry.name + ",,,,,,," + status + ",,,";
    } else {
      line = entry.name + ": " + status + ": " + msg;
    }
    return std::make_pair(line, code);
  };
  std::optional<Diagram> d;
  try {
    d = parse_pd(entry.pd);
  } catch (const DiagramError& e) {
    return rejected(code_for(e) == exit_precondition ? "precondition" : "invalid",
                    std::string(to_string(e.kind())) + ": " + e.what(), code_for(e));
  }
  const TargetSpec t = target_for(o.target, d->component_count());
  try {
    const EnumerationResult result = enumerate(*d, t, budget_for(t, o.limits, threads));
    CensusReport report = make_report(entry.name, *d, t, result, {o.list, o.emit_surfaces});
    if (o.check_oracle && result.status == SearchStatus::complete) {
      report.oracle_agrees = oracle_enumerate(*d, t) == result.configurations;
    } else if (o.check_oracle) {
      report.notes.push_back("oracle comparison skipped: search did not complete");
    }
    int code = result.status == SearchStatus::complete ? exit_ok : exit_budget_exhausted;
    if (report.oracle_agrees == false) code = std::max(code, 1);
    std::string line;
    if (format == "json") {
      line = to_json(report);
    } else if (format == "csv") {
      line = to_csv(report);
    } else {
      line = to_text(report);
      if (!line.empty() && line.back() == '\n') line.pop_back();
    }
    return {line, code};
  } catch (const PreconditionError& e) {
    return rejected("precondition", e.what(), exit_precondition);
  }
}

int cmd_enumerate(const Options& o, std::ostream& out) {
  const std::string format = o.format.empty() ? "json" : o.format;
  if (o.pd.empty()) throw CliFailure{exit_invalid_input, "enumerate needs --pd"};
  const auto [line, code] = enumerate_one({o.name, o.pd, 0}, o, format, o.limits.threads);
  Sink sink(out, o.out_path, false);
  if (format == "csv") sink.stream() << csv_header() << '\n';
  sink.stream() << line << '\n';
  return code;
}

std::set<std::string> completed_names(const std::string& path) {
  std::set<std::string> names;
  std::ifstream in(path);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    try {
      const auto j = nlohmann::json::parse(line);
      names.insert(j.at("name").get<std::string>());
    } catch (const nlohmann::json::exception&) {
      // a torn final line from an interrupted run is redone
    }
  }
  return names;
}

int cmd_census(const Options& o, std::ostream& out) {
  const std::string format = o.format.empty() ? "json" : o.format;
  if (o.table.empty()) throw CliFailure{exit_invalid_input, "census needs --table"};
  if (o.resume && (o.out_path.empty() || format != "json"))
    throw CliFailure{exit_invalid_input, "--resume needs --out with JSON output"};
  // validate the target once before any work
  (void)target_for(o.target, 1);

  auto entries = inputs(o);
  if (o.resume) {
    const auto done = completed_names(o.out_path);
    std::erase_if(entries, [&](const KnotTableEntry& e) { return done.count(e.name) > 0; });
  }

  Sink sink(out, o.out_path, o.resume);
  auto& os = sink.stream();
  if (format == "csv") os << csv_header() << '\n';

  std::vector<std::optional<std::pair<std::string, int>>> results(entries.size());
  std::mutex mutex;
  std::condition_variable ready;
  std::atomic<std::size_t> next{0};
  std::optional<CliFailure> failure;
  auto worker = [&] {
    for (std::size_t i = next++; i < entries.size(); i = next++) {
      std::pair<std::string, int> r;
      try {
        r = enumerate_one(entries[i], o, format, 1);
      } catch (const CliFailure& f) {
        std::lock_guard lock(mutex);
        if (!failure) failure = f;
        r = {"", f.code};
      }
      std::lock_guard lock(mutex);
      results[i] = std::move(r);
      ready.notify_all();
    }
  };
  const int workers = std::max(1, std::min<int>(o.limits.threads, static_cast<int>(entries.size())));
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) pool.emplace_back(worker);

  int worst = exit_ok;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    std::unique_lock lock(mutex);
    ready.wait(lock, [&] { return results[i].has_value(); });
    const auto [line, code] = *results[i];
    lock.unlock();
    if (!line.empty()) os << line << '\n' << std::flush;
    worst = std::max(worst, code);
  }
  for (auto& th : pool) th.join();
  if (failure) throw *failure;
  return worst;
}

int cmd_render(const Options& o, std::ostream& out) {
  if (o.pd.empty()) throw CliFailure{exit_invalid_input, "render needs --pd"};
  Diagram d;
  try {
    d = parse_pd(o.pd);
  } catch (const DiagramError& e) {
    throw CliFailure{code_for(e), std::string(to_string(e.kind())) + ": " + e.what()};
  }
  std::optional<Configuration> cfg;
  if (!o.config_path.empty()) {
    try {
      cfg = configuration_from_json(read_file(o.config_path));
    } catch (const std::invalid_argument& e) {
      throw CliFailure{exit_invalid_input, e.what()};
    }
    if (const ValidationResult v = check(*cfg, d); !v.ok)
      throw CliFailure{exit_invalid_input, "configuration fails " + v.rule + ": " + v.reason};
  }
  RenderOptions options;
  options.size = o.size;
  Sink sink(out, o.out_path, false);
  sink.stream() << render_svg(d, cfg ? &*cfg : nullptr, options);
  return exit_ok;
}

void add_target(CLI::App* app, Options& o) {
  auto* g = app->add_option("--genus", o.target.genus, "Seifert genus g >= 1 (knots)");
  auto* c = app->add_option("--chi", o.target.chi, "Euler characteristic of a spanning surface, <= -1");
  g->excludes(c);
}

void add_limits(CLI::App* app, Options& o) {
  app->add_option("--node-limit", o.limits.node_limit, "stop after this many search nodes")
      ->envname("ALTSURF_NODE_LIMIT")
      ->check(CLI::PositiveNumber);
  app->add_option("--time-limit", o.limits.time_limit, "stop after this many seconds")
      ->envname("ALTSURF_TIME_LIMIT")
      ->check(CLI::PositiveNumber);
  app->add_option("--threads", o.limits.threads, "worker threads")
      ->envname("ALTSURF_THREADS")
      ->check(CLI::PositiveNumber);
}

void add_format(CLI::App* app, Options& o) {
  app->add_option("--format", o.format, "json, csv or text")
      ->envname("ALTSURF_FORMAT")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  app->add_option("--out", o.out_path, "write output to this file");
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Enumerate standard-position surface configurations of alternating link diagrams", "altsurf"};
  app.require_subcommand(1);
  Options o;

  auto* validate = app.add_subcommand("validate", "check PD codes and report diagram structure");
  validate->add_option("--pd", o.pd, "PD code");
  validate->add_option("--table", o.table, "knot table file (name<TAB>pd per line)");
  add_format(validate, o);

  auto* bound_cmd = app.add_subcommand("bound", "print the configuration-count bound");
  bound_cmd->add_option("--n", o.n, "crossing number")->required();
  add_target(bound_cmd, o);
  bound_cmd->add_flag("--detail", o.detail, "also print the per-curve and per-class factors");
  add_format(bound_cmd, o);

  auto* enumerate_cmd = app.add_subcommand("enumerate", "enumerate configurations for one diagram");
  enumerate_cmd->add_option("--pd", o.pd, "PD code")->required();
  enumerate_cmd->add_option("--name", o.name, "diagram name used in the report");
  add_target(enumerate_cmd, o);
  add_format(enumerate_cmd, o);
  add_limits(enumerate_cmd, o);
  enumerate_cmd->add_flag("--list", o.list, "include the configurations in the report");
  enumerate_cmd->add_flag("--emit-surfaces", o.emit_surfaces, "include configurations and surface summaries");
  enumerate_cmd->add_flag("--check-oracle", o.check_oracle, "compare with the brute-force enumeration");

  auto* census = app.add_subcommand("census", "enumerate every diagram in a knot table");
  census->add_option("--table", o.table, "knot table file")->required();
  add_target(census, o);
  add_format(census, o);
  add_limits(census, o);
  census->add_flag("--resume", o.resume, "skip names already present in --out and append");
  census->add_flag("--list", o.list, "include the configurations in each record");
  census->add_flag("--emit-surfaces", o.emit_surfaces, "include configurations and surface summaries");

  auto* render = app.add_subcommand("render", "draw a diagram as SVG");
  render->add_option("--pd", o.pd, "PD code")->required();
  render->add_option("--config", o.config_path, "configuration JSON file to overlay");
  render->add_option("--size", o.size, "image size in pixels")->check(CLI::PositiveNumber);
  render->add_option("--out", o.out_path, "write output to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_invalid_input;
  }

  try {
    if (*validate) return cmd_validate(o, out);
    if (*bound_cmd) return cmd_bound(o, out);
    if (*enumerate_cmd) return cmd_enumerate(o, out);
    if (*census) return cmd_census(o, out);
    if (*render) return cmd_render(o, out);
  } catch (const CliFailure& f) {
    err << "altsurf: " << f.message << '\n';
    return f.code;
  } catch (const std::exception& e) {
    err << "altsurf: internal error: " << e.what() << '\n';
    return 1;
  }
  return exit_invalid_input;
}

}  // namespace altsurf
