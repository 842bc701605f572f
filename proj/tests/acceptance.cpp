// Acceptance checks. Prints one PASS/FAIL/SKIP line per criterion and exits
// non-zero if any criterion fails.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "test_support.hpp"

using namespace biobj;
namespace fs = std::filesystem;

namespace {

struct Verdict {
  enum class Status { kPass, kFail, kSkip } status = Status::kPass;
  std::string detail;

  void fail(const std::string& why) {
    if (status != Status::kFail) detail = why;
    status = Status::kFail;
  }
  void skip(const std::string& why) {
    status = Status::kSkip;
    detail = why;
  }
  bool failed() const { return status == Status::kFail; }
};

std::string str(const CostPair& c) {
  std::ostringstream os;
  os << '(' << c.c1 << ',' << c.c2 << ')';
  return os.str();
}

std::string str(const std::vector<CostPair>& front) {
  std::string out = "[";
  for (std::size_t i = 0; i < front.size(); ++i) out += (i ? "," : "") + str(front[i]);
  return out + "]";
}

std::string where(const test::Instance& inst) { return "seed " + std::to_string(inst.seed); }

// 1. Every configuration equals the oracle on the corpus.

Verdict oracle_equivalence(const std::vector<test::Instance>& corpus) {
  Verdict v;
  std::vector<std::pair<std::string, SolveConfig>> configs;
  for (QueueMode q : {QueueMode::kBucket, QueueMode::kHeap}) {
    const std::string qn = q == QueueMode::kBucket ? "bucket" : "heap";
    for (Algorithm a : {Algorithm::kBoa, Algorithm::kBoaEnh}) {
      for (Direction d : {Direction::kForward, Direction::kBackward}) {
        for (Objective p : {Objective::kFirst, Objective::kSecond}) {
          SolveConfig c;
          c.algorithm = a;
          c.direction = d;
          c.primary = p;
          c.queue = q;
          c.threads = 1;
          configs.emplace_back(std::string(to_string(a)) + (d == Direction::kForward ? "/fwd" : "/bwd") +
                                   (p == Objective::kFirst ? "/12/" : "/21/") + qn,
                               c);
        }
      }
    }
    for (int threads : {1, 2}) {
      for (bool tuning : {true, false}) {
        SolveConfig c;
        c.algorithm = Algorithm::kBoba;
        c.queue = q;
        c.threads = threads;
        c.tuning = tuning;
        configs.emplace_back("boba/t" + std::to_string(threads) + (tuning ? "/tune/" : "/notune/") + qn, c);
      }
    }
  }
  std::size_t runs = 0;
  for (const auto& inst : corpus) {
    const auto expected = costs_of(pareto_oracle(inst.graph, inst.start, inst.goal));
    for (const auto& [name, cfg] : configs) {
      const auto got = costs_of(solve(inst.graph, inst.start, inst.goal, cfg).front);
      ++runs;
      if (got != expected) {
        v.fail(where(inst) + " " + name + ": got " + str(got) + " expected " + str(expected));
        return v;
      }
    }
  }
  v.detail = std::to_string(corpus.size()) + " instances x " + std::to_string(configs.size()) + " configurations (" +
             std::to_string(runs) + " runs)";
  return v;
}

// 2. Forward enhanced search on the five-state example.

Verdict golden_trace() {
  using K = TraceEvent::Kind;
  using namespace test;
  Verdict v;
  const BiGraph g = fig2();
  HeuristicSet hs = compute_all_heuristics(g, kS, kG, 1);

  std::vector<TraceEvent> events;
  SharedBounds shared(sat_add(hs.global_upper.c1, 1), kInfinity);
  const EngineConfig cfg{Direction::kForward, Objective::kFirst, true, QueueMode::kBucket, Backtrack::kCompact};
  SearchEngine engine(g, hs, hs.to_goal, cfg, shared, tuning_target(hs, Direction::kForward, Objective::kFirst),
                      [&](const TraceEvent& e) { events.push_back(e); });
  engine.run();

  auto expect = [&](bool ok, const std::string& what) {
    if (!ok) v.fail(what);
  };

  std::vector<StateId> pops;
  std::vector<std::pair<Cost, Cost>> bound_updates;
  std::vector<std::pair<StateId, std::pair<Cost, Cost>>> tunes;
  bool s1_pruned_at_generation = false;
  bool goal_inserted = false;
  bool s2_expanded = false;
  std::size_t s2_terminal = 0;
  for (const auto& e : events) {
    switch (e.kind) {
      case K::kPop: pops.push_back(e.state); break;
      case K::kBoundUpdate: bound_updates.push_back({e.previous, e.value}); break;
      case K::kTune: tunes.push_back({e.state, {e.previous, e.value}}); break;
      case K::kPrunedAtGeneration: s1_pruned_at_generation |= e.state == kS1; break;
      case K::kGenerate: goal_inserted |= e.state == kG; break;
      case K::kExpand: s2_expanded |= e.state == kS2; break;
      case K::kTerminal: s2_terminal += e.state == kS2; break;
      default: break;
    }
  }
  expect(pops == std::vector<StateId>{kS, kS2, kS3, kS2}, "pop sequence differs");
  const std::vector<std::pair<Cost, Cost>> want_bounds{{kInfinity, 6}, {6, 5}, {5, 3}};
  expect(bound_updates == want_bounds, "g2min(s_g) update sequence differs");
  std::vector<CostPair> sols;
  for (const auto& s : engine.solutions()) sols.push_back(s.cost);
  expect(sols == std::vector<CostPair>{{4, 6}, {5, 5}, {7, 3}}, "solutions " + str(sols));
  expect(s1_pruned_at_generation, "s_1 not pruned at generation");
  expect(!goal_inserted, "s_g inserted into Open");
  expect(!s2_expanded && s2_terminal == 2, "s_2 expanded or not terminal on both visits");
  bool tuned_s2 = false;
  for (const auto& [s, pv] : tunes) tuned_s2 |= s == kS2 && pv.first == 2 && pv.second == 3;
  expect(tuned_s2 && hs.from_start.lower[0][kS2] == 3, "tuning h1'(s_2): 2 -> 3 missing");

  const PathStore& store = *engine.path_store();
  auto parents = [&](StateId s) {
    std::vector<std::pair<StateId, PathId>> out;
    for (PathId k = 1; k <= store.entries(s).size(); ++k) {
      out.push_back({store.parent_state(s, k), store.entries(s)[k - 1].parent_path});
    }
    return out;
  };
  expect(parents(kS2) == std::vector<std::pair<StateId, PathId>>{{kS, 1}, {kS3, 1}}, "parent arrays of s_2");
  expect(parents(kS3) == std::vector<std::pair<StateId, PathId>>{{kS, 1}}, "parent arrays of s_3");

  const auto front = collect_front(engine, true);
  const std::vector<std::vector<StateId>> want_paths{{kS, kS1, kS2, kG}, {kS, kS2, kG}, {kS, kS3, kS2, kG}};
  for (std::size_t i = 0; i < front.size() && i < want_paths.size(); ++i) {
    expect(front[i].path == want_paths[i], "reconstructed path of " + str(front[i].cost));
  }
  if (!v.failed()) v.detail = "pops s_s,s_2,s_3,s_2; g2min(s_g) inf->6->5->3; h1'(s_2)=3";
  return v;
}

// 3. Consistency of all four lower-bound arrays and tree pairing.

Verdict heuristic_soundness(const std::vector<test::Instance>& corpus) {
  Verdict v;
  std::size_t arcs_checked = 0, walks_checked = 0;
  for (const auto& inst : corpus) {
    const BiGraph& g = inst.graph;
    const HeuristicSet hs = compute_all_heuristics(g, inst.start, inst.goal, 1);
    if (!hs.reachable) continue;
    for (const Arc& a : g.arcs()) {
      for (Objective k : {Objective::kFirst, Objective::kSecond}) {
        const std::size_t i = index_of(k);
        // Toward the goal: h(u) <= c(u,v) + h(v). From the start: h'(v) <= c(u,v) + h'(u).
        const Cost hu = hs.to_goal.lower[i][a.from], hv = hs.to_goal.lower[i][a.to];
        if (hu != kInfinity && hu > sat_add(a.cost[k], hv)) {
          v.fail(where(inst) + ": to-goal bound " + std::to_string(i + 1) + " inconsistent on arc " +
                 std::to_string(a.from) + "->" + std::to_string(a.to));
          return v;
        }
        const Cost pu = hs.from_start.lower[i][a.from], pv = hs.from_start.lower[i][a.to];
        if (pv != kInfinity && pv > sat_add(a.cost[k], pu)) {
          v.fail(where(inst) + ": from-start bound " + std::to_string(i + 1) + " inconsistent on arc " +
                 std::to_string(a.from) + "->" + std::to_string(a.to));
          return v;
        }
        ++arcs_checked;
      }
    }
    for (const DirectionalBounds* b : {&hs.to_goal, &hs.from_start}) {
      for (Objective p : {Objective::kFirst, Objective::kSecond}) {
        const Objective q = other(p);
        const SPTree& tree = b->tree_for(p);
        for (StateId s = 0; s < g.num_states(); ++s) {
          if (b->h(p, s) == kInfinity) continue;
          if (!tree.contains(s) || b->ub(q, s) == kInfinity) {
            v.fail(where(inst) + ": state " + std::to_string(s) + " has a bound but no tree path");
            return v;
          }
          auto walk = tree.walk(g, s);
          if (b == &hs.from_start) std::reverse(walk.begin(), walk.end());
          CostPair want;
          want[p] = b->h(p, s);
          want[q] = b->ub(q, s);
          if (!path_realizes(g, walk, want)) {
            v.fail(where(inst) + ": tree walk from state " + std::to_string(s) + " does not cost " + str(want));
            return v;
          }
          ++walks_checked;
        }
      }
    }
  }
  v.detail = std::to_string(arcs_checked) + " arc checks, " + std::to_string(walks_checked) + " tree walks";
  return v;
}

// 4. Front shape and path costs.

Verdict front_well_formed(const std::vector<test::Instance>& corpus) {
  Verdict v;
  std::size_t paths = 0;
  for (const auto& inst : corpus) {
    for (Algorithm a : {Algorithm::kBoa, Algorithm::kBoaEnh, Algorithm::kBoba}) {
      for (Backtrack b : {Backtrack::kCompact, Backtrack::kConventional}) {
        SolveConfig cfg;
        cfg.algorithm = a;
        cfg.backtrack = b;
        cfg.direction = a == Algorithm::kBoa ? Direction::kBackward : Direction::kForward;
        const auto front = solve(inst.graph, inst.start, inst.goal, cfg).front;
        if (!is_well_formed(costs_of(front))) {
          v.fail(where(inst) + " " + std::string(to_string(a)) + ": not strictly monotone");
          return v;
        }
        for (const auto& s : front) {
          if (s.path.empty() || s.path.front() != inst.start || s.path.back() != inst.goal ||
              !path_realizes(inst.graph, s.path, s.cost)) {
            v.fail(where(inst) + " " + std::string(to_string(a)) + ": path does not cost " + str(s.cost));
            return v;
          }
          ++paths;
        }
      }
    }
  }
  v.detail = std::to_string(paths) + " reconstructed paths re-summed";
  return v;
}

// 5. Enhancements and tuning never increase expansions.

std::size_t expansions(const test::Instance& inst, SolveConfig cfg) {
  return solve(inst.graph, inst.start, inst.goal, cfg).metrics.search.expanded;
}

Verdict enhancement_monotonicity(const std::vector<test::Instance>& corpus) {
  Verdict v;
  std::size_t comparisons = 0, strictly_fewer = 0;
  for (const auto& inst : corpus) {
    for (QueueMode q : {QueueMode::kBucket, QueueMode::kHeap}) {
      for (Direction d : {Direction::kForward, Direction::kBackward}) {
        for (Objective p : {Objective::kFirst, Objective::kSecond}) {
          SolveConfig cfg;
          cfg.direction = d;
          cfg.primary = p;
          cfg.queue = q;
          cfg.threads = 1;
          cfg.algorithm = Algorithm::kBoa;
          const auto plain = expansions(inst, cfg);
          cfg.algorithm = Algorithm::kBoaEnh;
          const auto enh = expansions(inst, cfg);
          ++comparisons;
          strictly_fewer += enh < plain;
          if (enh > plain) {
            v.fail(where(inst) + ": boa-enh expanded " + std::to_string(enh) + " > boa " + std::to_string(plain));
            return v;
          }
        }
      }
      SolveConfig cfg;
      cfg.algorithm = Algorithm::kBoba;
      cfg.queue = q;
      cfg.threads = 1;
      cfg.tuning = true;
      const auto tuned = expansions(inst, cfg);
      cfg.tuning = false;
      const auto untuned = expansions(inst, cfg);
      ++comparisons;
      if (tuned > untuned) {
        v.fail(where(inst) + ": boba tuning on expanded " + std::to_string(tuned) + " > off " +
               std::to_string(untuned));
        return v;
      }
    }
  }
  v.detail = std::to_string(comparisons) + " comparisons, boa-enh strictly fewer in " +
             std::to_string(strictly_fewer);
  return v;
}

// 6. Node-record recycling.

Verdict memory_model(const std::vector<test::Instance>& corpus) {
  Verdict v;
  std::size_t checked = 0;
  for (const auto& inst : corpus) {
    for (Algorithm a : {Algorithm::kBoa, Algorithm::kBoaEnh, Algorithm::kBoba}) {
      SolveConfig cfg;
      cfg.algorithm = a;
      cfg.threads = 1;
      cfg.backtrack = Backtrack::kCompact;
      const auto compact = solve(inst.graph, inst.start, inst.goal, cfg).metrics.search;
      cfg.backtrack = Backtrack::kConventional;
      const auto conventional = solve(inst.graph, inst.start, inst.goal, cfg).metrics.search;
      const std::string tag = where(inst) + " " + std::string(to_string(a));
      if (conventional.peak_live_records != conventional.generated) {
        v.fail(tag + ": conventional peak live " + std::to_string(conventional.peak_live_records) +
               " != generated " + std::to_string(conventional.generated));
        return v;
      }
      if (compact.generated <= compact.expanded) continue;
      ++checked;
      if (compact.peak_live_records >= compact.generated || compact.pool_reuse == 0) {
        v.fail(tag + ": compact peak live " + std::to_string(compact.peak_live_records) + ", generated " +
               std::to_string(compact.generated) + ", reuse " + std::to_string(compact.pool_reuse));
        return v;
      }
    }
  }
  v.detail = std::to_string(checked) + " runs with generated > expanded";
  return v;
}

// 7. BOBA* result does not depend on scheduling.

Verdict determinism(const std::vector<test::Instance>& corpus) {
  Verdict v;
  for (const auto& inst : corpus) {
    SolveConfig cfg;
    cfg.algorithm = Algorithm::kBoba;
    cfg.threads = 1;
    const auto reference = costs_of(solve(inst.graph, inst.start, inst.goal, cfg).front);
    cfg.threads = 2;
    for (int run = 0; run < 10; ++run) {
      const auto got = costs_of(solve(inst.graph, inst.start, inst.goal, cfg).front);
      if (got != reference) {
        v.fail(where(inst) + " run " + std::to_string(run) + ": " + str(got) + " vs threads=1 " + str(reference));
        return v;
      }
    }
  }
  v.detail = std::to_string(corpus.size()) + " instances x 10 two-thread runs";
  return v;
}

// 8. Optional road-network smoke benchmark.

std::optional<std::pair<fs::path, fs::path>> find_ny_files() {
  std::vector<fs::path> dirs;
  if (const char* env = std::getenv("BIOBJ_NY_DIR")) dirs.emplace_back(env);
  dirs.emplace_back(fs::path(BIOBJ_DATA_DIR) / "ny");
  dirs.emplace_back(BIOBJ_DATA_DIR);
  for (const auto& d : dirs) {
    const auto d1 = d / "USA-road-d.NY.gr", t1 = d / "USA-road-t.NY.gr";
    if (fs::exists(d1) && fs::exists(t1)) return std::make_pair(d1, t1);
  }
  return std::nullopt;
}

Verdict road_smoke() {
  Verdict v;
  const auto files = find_ny_files();
  if (!files) {
    v.skip("NY distance/time files not found (set BIOBJ_NY_DIR)");
    return v;
  }
  using Clock = std::chrono::steady_clock;
  const auto t0 = Clock::now();
  const BiGraph g = build_bigraph(read_dimacs_gr(files->first), read_dimacs_gr(files->second));
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<StateId> pick(0, static_cast<StateId>(g.num_states() - 1));
  int boba_not_slower = 0;
  constexpr int kPairs = 20;
  for (int i = 0; i < kPairs; ++i) {
    const StateId s = pick(rng);
    StateId t = pick(rng);
    while (t == s) t = pick(rng);
    SolveConfig cfg;
    cfg.with_paths = false;
    cfg.algorithm = Algorithm::kBoa;
    const auto boa = solve(g, s, t, cfg);
    cfg.algorithm = Algorithm::kBoba;
    cfg.threads = 2;
    const auto bb = solve(g, s, t, cfg);
    if (costs_of(boa.front) != costs_of(bb.front)) {
      v.fail("pair " + std::to_string(i) + ": boa and boba fronts differ");
      return v;
    }
    boba_not_slower += bb.metrics.wall_ms <= boa.metrics.wall_ms;
  }
  const double total_s = std::chrono::duration<double>(Clock::now() - t0).count();
  v.detail = "boba not slower on " + std::to_string(boba_not_slower) + "/" + std::to_string(kPairs) +
             " pairs, total " + std::to_string(total_s) + " s";
  if (boba_not_slower * 10 < kPairs * 6) v.fail(v.detail);
  if (total_s > 300) v.fail(v.detail + " (over 5 minutes)");
  return v;
}

}  // namespace

int main() {
  const auto corpus = test::corpus();
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
      {"oracle equivalence", [&] { return oracle_equivalence(corpus); }},
      {"five-state golden trace", golden_trace},
      {"heuristic soundness", [&] { return heuristic_soundness(corpus); }},
      {"front well-formedness", [&] { return front_well_formed(corpus); }},
      {"enhancement monotonicity", [&] { return enhancement_monotonicity(corpus); }},
      {"node-record recycling", [&] { return memory_model(corpus); }},
      {"determinism", [&] { return determinism(corpus); }},
      {"road-network smoke benchmark", road_smoke},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Verdict v;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      v = criteria[i].second();
    } catch (const std::exception& e) {
      v.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const char* label = v.status == Verdict::Status::kPass   ? "PASS"
                        : v.status == Verdict::Status::kSkip ? "SKIP"
                                                             : "FAIL";
    failures += v.failed();
    std::cout << label << "  " << i + 1 << ". " << criteria[i].first << " (" << std::fixed << std::setprecision(2)
              << secs << " s): " << v.detail << '\n';
  }
  return failures == 0 ? 0 : 1;
}
