// biobj: bi-objective shortest paths on DIMACS graphs.
//
//   biobj solve     --gr1 D.gr --gr2 T.gr --source S --target T [engine flags]
//   biobj bench     --gr1 D.gr --gr2 T.gr --pairs P.txt [--csv out.csv] [engine flags]
//   biobj gen-pairs --n-states N --count K --seed S [--out P.txt]
//   biobj verify    --gr1 D.gr --gr2 T.gr --source S --target T [--solution F] [engine flags]
//
// Exit codes: 0 success, 1 input or I/O error, 2 usage error, 3 verification
// mismatch.

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <memory>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "biobj/biobj.hpp"

namespace {

using namespace biobj;

constexpr int kExitInput = 1;
constexpr int kExitUsage = 2;
constexpr int kExitMismatch = 3;

struct GraphArgs {
  std::string gr1;
  std::string gr2;
};

struct EngineArgs {
  std::string alg = "boba";
  std::string order = "12";
  std::string direction = "fwd";
  std::string queue = "bucket";
  int threads = 2;
  std::string tuning = "on";
  std::string backtrack = "compact";

  SolveConfig config() const {
    static const std::map<std::string, Algorithm> algs{
        {"oracle", Algorithm::kOracle}, {"boa", Algorithm::kBoa}, {"boa-enh", Algorithm::kBoaEnh},
        {"boba", Algorithm::kBoba}};
    SolveConfig c;
    c.algorithm = algs.at(alg);
    c.primary = order == "12" ? Objective::kFirst : Objective::kSecond;
    c.direction = direction == "fwd" ? Direction::kForward : Direction::kBackward;
    c.queue = queue == "bucket" ? QueueMode::kBucket : QueueMode::kHeap;
    c.threads = threads;
    c.tuning = tuning == "on";
    c.backtrack = backtrack == "compact" ? Backtrack::kCompact : Backtrack::kConventional;
    return c;
  }
};

void add_graph_options(CLI::App& app, GraphArgs& g) {
  app.add_option("--gr1", g.gr1, "DIMACS .gr file with the first objective (e.g. distance)")
      ->required();
  app.add_option("--gr2", g.gr2, "DIMACS .gr file with the second objective (e.g. time)")->required();
}

void add_engine_options(CLI::App& app, EngineArgs& e) {
  app.add_option("--alg", e.alg, "Algorithm")
      ->check(CLI::IsMember({"oracle", "boa", "boa-enh", "boba"}))
      ->capture_default_str();
  app.add_option("--order", e.order, "Objective order of boa/boa-enh")
      ->check(CLI::IsMember({"12", "21"}))
      ->capture_default_str();
  app.add_option("--direction", e.direction, "Search direction of boa/boa-enh")
      ->check(CLI::IsMember({"fwd", "bwd"}))
      ->capture_default_str();
  app.add_option("--queue", e.queue, "Open list")->check(CLI::IsMember({"bucket", "heap"}))->capture_default_str();
  app.add_option("--threads", e.threads, "Worker threads")->check(CLI::Range(1, 2))->capture_default_str();
  app.add_option("--tuning", e.tuning, "Heuristic tuning between the boba searches")
      ->check(CLI::IsMember({"on", "off"}))
      ->capture_default_str();
  app.add_option("--backtrack", e.backtrack, "Path backtracking scheme")
      ->check(CLI::IsMember({"compact", "conventional"}))
      ->capture_default_str();
}

BiGraph load_graph(const GraphArgs& g) { return build_bigraph(read_dimacs_gr(g.gr1), read_dimacs_gr(g.gr2)); }

StateId to_internal(const BiGraph& g, std::uint64_t id, const char* what) {
  if (id < 1 || id > g.num_states()) {
    throw RangeError(std::string(what) + " " + std::to_string(id) + " outside [1, " +
                     std::to_string(g.num_states()) + "]");
  }
  return static_cast<StateId>(id - 1);
}

/// Output stream that is either stdout or a file.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (path.empty() || path == "-") return;
    file_ = std::make_unique<std::ofstream>(path);
    if (!*file_) throw Error("cannot write '" + path + "'");
  }
  std::ostream& get() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

void print_stats(std::ostream& os, const RunMetrics& m) {
  const auto& s = m.search;
  os << "c alg=" << m.algorithm << " wall_ms=" << std::fixed << std::setprecision(3) << m.wall_ms
     << " heuristic_ms=" << m.heuristic_ms << " solutions=" << m.solutions << " generated=" << s.generated
     << " expanded=" << s.expanded << " pruned=" << s.pruned() << " peak_open=" << s.peak_open
     << " peak_live_records=" << s.peak_live_records << " pathstore_entries=" << s.pathstore_entries
     << " memory_bytes=" << s.memory_bytes() << '\n';
}

// solve ----------------------------------------------------------------------

struct SolveArgs {
  GraphArgs graph;
  EngineArgs engine;
  std::uint64_t source = 0;
  std::uint64_t target = 0;
  bool paths = false;
  bool stats = false;
  std::string out;
  std::string dump_heuristics;
};

int run_solve(const SolveArgs& a) {
  const BiGraph g = load_graph(a.graph);
  const StateId s = to_internal(g, a.source, "source");
  const StateId t = to_internal(g, a.target, "target");
  SolveConfig cfg = a.engine.config();
  cfg.with_paths = a.paths;
  cfg.keep_heuristics = !a.dump_heuristics.empty();
  auto res = solve(g, s, t, cfg);

  Sink out(a.out);
  write_front(out.get(), res.front, a.paths);
  if (a.stats) print_stats(std::cerr, res.metrics);

  if (!a.dump_heuristics.empty()) {
    if (!res.heuristics && s != t) res.heuristics = compute_all_heuristics(g, s, t, cfg.threads);
    Sink dump(a.dump_heuristics);
    if (res.heuristics) dump_heuristics(dump.get(), *res.heuristics);
  }
  return 0;
}

// bench ----------------------------------------------------------------------

struct BenchArgs {
  GraphArgs graph;
  EngineArgs engine;
  std::string pairs;
  std::string csv;
};

std::vector<std::pair<std::uint64_t, std::uint64_t>> read_pairs(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs;
  std::string buf;
  std::size_t line_no = 0;
  while (std::getline(in, buf)) {
    ++line_no;
    std::string_view rest(buf);
    const auto first = detail::next_token(rest);
    if (first.empty() || first == "c" || first.front() == '#') continue;
    const auto src = detail::parse_unsigned(first, line_no, "source");
    const auto dst = detail::parse_unsigned(detail::next_token(rest), line_no, "target");
    if (!detail::next_token(rest).empty()) throw ParseError(line_no, "expected '<source> <target>'");
    pairs.emplace_back(src, dst);
  }
  return pairs;
}

constexpr const char* kCsvHeader =
    "pair,source,target,algorithm,wall_ms,heuristic_ms,solutions,generated,expanded,pruned,peak_open,"
    "peak_live_records,pathstore_entries,memory_bytes";

std::vector<double> metric_values(const RunMetrics& m) {
  const auto& s = m.search;
  return {m.wall_ms,
          m.heuristic_ms,
          static_cast<double>(m.solutions),
          static_cast<double>(s.generated),
          static_cast<double>(s.expanded),
          static_cast<double>(s.pruned()),
          static_cast<double>(s.peak_open),
          static_cast<double>(s.peak_live_records),
          static_cast<double>(s.pathstore_entries),
          static_cast<double>(s.memory_bytes())};
}

void write_values(std::ostream& os, const std::vector<double>& v, int time_columns) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    os << ',';
    if (static_cast<int>(i) < time_columns) {
      os << std::fixed << std::setprecision(3) << v[i];
    } else {
      os << std::defaultfloat << std::setprecision(12) << v[i];
    }
  }
  os << '\n';
}

int run_bench(const BenchArgs& a) {
  const auto pairs = read_pairs(a.pairs);
  const BiGraph g = load_graph(a.graph);
  SolveConfig cfg = a.engine.config();
  cfg.with_paths = false;

  Sink out(a.csv);
  std::ostream& os = out.get();
  os << kCsvHeader << '\n';
  std::vector<std::vector<double>> rows;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const StateId s = to_internal(g, pairs[i].first, "source");
    const StateId t = to_internal(g, pairs[i].second, "target");
    const auto res = solve(g, s, t, cfg);
    rows.push_back(metric_values(res.metrics));
    os << i + 1 << ',' << pairs[i].first << ',' << pairs[i].second << ',' << res.metrics.algorithm;
    write_values(os, rows.back(), 2);
  }
  if (rows.empty()) return 0;

  const std::size_t cols = rows.front().size();
  std::vector<double> lo(cols), hi(cols), avg(cols);
  for (std::size_t c = 0; c < cols; ++c) {
    lo[c] = hi[c] = rows.front()[c];
    double sum = 0;
    for (const auto& r : rows) {
      lo[c] = std::min(lo[c], r[c]);
      hi[c] = std::max(hi[c], r[c]);
      sum += r[c];
    }
    avg[c] = sum / static_cast<double>(rows.size());
  }
  const std::string alg(to_string(cfg.algorithm));
  for (const auto& [label, values] : {std::pair{"min", &lo}, std::pair{"avg", &avg}, std::pair{"max", &hi}}) {
    os << label << ",,," << alg;
    write_values(os, *values, label == std::string("avg") ? static_cast<int>(cols) : 2);
  }
  return 0;
}

// gen-pairs ------------------------------------------------------------------

struct GenPairsArgs {
  std::uint64_t n_states = 0;
  std::uint64_t count = 0;
  std::uint64_t seed = 1;
  std::string out;
};

int run_gen_pairs(const GenPairsArgs& a) {
  std::mt19937_64 rng(a.seed);
  std::uniform_int_distribution<std::uint64_t> first(1, a.n_states);
  std::uniform_int_distribution<std::uint64_t> second(1, a.n_states - 1);
  Sink out(a.out);
  for (std::uint64_t i = 0; i < a.count; ++i) {
    const auto s = first(rng);
    auto t = second(rng);
    if (t >= s) ++t;
    out.get() << s << ' ' << t << '\n';
  }
  return 0;
}

// verify ---------------------------------------------------------------------

struct VerifyArgs {
  GraphArgs graph;
  EngineArgs engine;
  std::uint64_t source = 0;
  std::uint64_t target = 0;
  std::string solution;
};

int run_verify(const VerifyArgs& a) {
  const BiGraph g = load_graph(a.graph);
  const StateId s = to_internal(g, a.source, "source");
  const StateId t = to_internal(g, a.target, "target");

  ParetoFront front;
  std::string what;
  if (!a.solution.empty()) {
    std::ifstream in(a.solution);
    if (!in) throw Error("cannot open '" + a.solution + "'");
    front = parse_front(in);
    what = a.solution;
  } else {
    SolveConfig cfg = a.engine.config();
    front = solve(g, s, t, cfg).front;
    what = a.engine.alg;
  }
  const auto expected = costs_of(pareto_oracle(g, s, t));
  const auto got = costs_of(front);

  int problems = 0;
  if (got != expected) {
    std::cout << "MISMATCH " << what << ": " << got.size() << " solutions, oracle has " << expected.size() << '\n';
    for (const auto& c : expected) {
      if (std::find(got.begin(), got.end(), c) == got.end()) std::cout << "  missing " << c << '\n';
    }
    for (const auto& c : got) {
      if (std::find(expected.begin(), expected.end(), c) == expected.end()) std::cout << "  extra   " << c << '\n';
    }
    ++problems;
  }
  for (const auto& sol : front) {
    if (sol.path.empty()) continue;
    if (sol.path.front() != s || sol.path.back() != t || !path_realizes(g, sol.path, sol.cost)) {
      std::cout << "BAD PATH for " << sol.cost << '\n';
      ++problems;
    }
  }
  if (problems == 0) std::cout << "OK " << what << ": " << got.size() << " solutions match the oracle\n";
  return problems == 0 ? 0 : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bi-objective shortest paths: BOA*, enhanced BOA* and BOBA* on DIMACS graphs"};
  app.require_subcommand(1);

  SolveArgs solve_args;
  auto* solve_cmd = app.add_subcommand("solve", "Compute the Pareto front of one query");
  add_graph_options(*solve_cmd, solve_args.graph);
  solve_cmd->add_option("--source", solve_args.source, "Start state (1-based)")->required();
  solve_cmd->add_option("--target", solve_args.target, "Goal state (1-based)")->required();
  add_engine_options(*solve_cmd, solve_args.engine);
  solve_cmd->add_flag("--paths", solve_args.paths, "Write the state sequence of every solution");
  solve_cmd->add_flag("--stats", solve_args.stats, "Print run metrics to stderr");
  solve_cmd->add_option("--out", solve_args.out, "Solution file (default: stdout)");
  solve_cmd->add_option("--dump-heuristics", solve_args.dump_heuristics, "Write per-state bounds to this file");

  BenchArgs bench_args;
  auto* bench_cmd = app.add_subcommand("bench", "Run every pair of a pairs file and report metrics as CSV");
  add_graph_options(*bench_cmd, bench_args.graph);
  bench_cmd->add_option("--pairs", bench_args.pairs, "Pairs file, one '<source> <target>' per line (1-based)")
      ->required();
  bench_cmd->add_option("--csv", bench_args.csv, "CSV output (default: stdout)");
  add_engine_options(*bench_cmd, bench_args.engine);

  GenPairsArgs gen_args;
  auto* gen_cmd = app.add_subcommand("gen-pairs", "Generate uniform random start/goal pairs");
  gen_cmd->add_option("--n-states", gen_args.n_states, "Number of states")->required()->check(CLI::Range(2ull, 1ull << 32));
  gen_cmd->add_option("--count", gen_args.count, "Number of pairs")->required()->check(CLI::PositiveNumber);
  gen_cmd->add_option("--seed", gen_args.seed, "Random seed")->capture_default_str();
  gen_cmd->add_option("--out", gen_args.out, "Output file (default: stdout)");

  VerifyArgs verify_args;
  auto* verify_cmd = app.add_subcommand("verify", "Compare a front against the brute-force oracle");
  add_graph_options(*verify_cmd, verify_args.graph);
  verify_cmd->add_option("--source", verify_args.source, "Start state (1-based)")->required();
  verify_cmd->add_option("--target", verify_args.target, "Goal state (1-based)")->required();
  add_engine_options(*verify_cmd, verify_args.engine);
  verify_cmd->add_option("--solution", verify_args.solution, "Check this solution file instead of running --alg");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    if (*solve_cmd) return run_solve(solve_args);
    if (*bench_cmd) return run_bench(bench_args);
    if (*gen_cmd) return run_gen_pairs(gen_args);
    if (*verify_cmd) return run_verify(verify_args);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitUsage;
}
