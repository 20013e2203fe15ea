#pragma once

// Monte Carlo sweeps over perturbation size m. Every trial is a pure
// function of (config, m, trial index): the child seed is
// derive_seed(master, m, index), and the base, perturbation and solver
// streams are derived from it.

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <map>
#include <mutex>
#include <set>
#include <thread>

#include "json.hpp"
#include "phl/exact.hpp"
#include "phl/expansion.hpp"
#include "phl/generators.hpp"
#include "phl/hyperpipe.hpp"
#include "phl/perturb.hpp"
#include "phl/tourney.hpp"
#include "phl/witness.hpp"

namespace phl {

using json = nlohmann::json;

inline constexpr const char* kVersion = "0.1.0";
inline constexpr double kWilsonZ = 1.959963984540054;

enum class Scenario {
  digraph_pancyclic,
  hyper_matching,
  hyper_cycle,
  tournament_hamilton,
  tournament_qcycles,
  bipartite_lemma5
};

enum class SolverKind { exact, constructive, pipeline, witness };

inline std::string_view to_string(Scenario s) {
  switch (s) {
    case Scenario::digraph_pancyclic: return "digraph-pancyclic";
    case Scenario::hyper_matching: return "hyper-matching";
    case Scenario::hyper_cycle: return "hyper-cycle";
    case Scenario::tournament_hamilton: return "tournament-hamilton";
    case Scenario::tournament_qcycles: return "tournament-qcycles";
    case Scenario::bipartite_lemma5: return "bipartite-lemma5";
  }
  return "unknown";
}

inline Scenario scenario_from_string(std::string_view s) {
  for (auto x : {Scenario::digraph_pancyclic, Scenario::hyper_matching, Scenario::hyper_cycle,
                 Scenario::tournament_hamilton, Scenario::tournament_qcycles, Scenario::bipartite_lemma5}) {
    if (to_string(x) == s) return x;
  }
  throw FormatError("unknown scenario '" + std::string(s) + "'");
}

inline std::string_view to_string(SolverKind s) {
  switch (s) {
    case SolverKind::exact: return "exact";
    case SolverKind::constructive: return "constructive";
    case SolverKind::pipeline: return "pipeline";
    case SolverKind::witness: return "witness";
  }
  return "unknown";
}

inline SolverKind solver_from_string(std::string_view s) {
  for (auto x : {SolverKind::exact, SolverKind::constructive, SolverKind::pipeline, SolverKind::witness}) {
    if (to_string(x) == s) return x;
  }
  throw FormatError("unknown solver '" + std::string(s) + "'");
}

/// Generator name plus its numeric parameters, e.g.
/// {"kind": "complete-bipartite-digraph", "a": 20, "b": 40}.
struct BaseSpec {
  std::string kind;
  json params = json::object();

  int integer(const std::string& name) const {
    if (!params.contains(name)) throw FormatError("base '" + kind + "' needs integer parameter '" + name + "'");
    return params.at(name).get<int>();
  }

  double real(const std::string& name) const {
    if (!params.contains(name)) throw FormatError("base '" + kind + "' needs parameter '" + name + "'");
    return params.at(name).get<double>();
  }

  friend bool operator==(const BaseSpec& a, const BaseSpec& b) { return a.kind == b.kind && a.params == b.params; }
};

struct ScenarioOptions {
  /// Expansion parameter for the constructive digraph solver.
  int k = 1;
  /// Number of arc-disjoint Hamilton cycles (tournament-qcycles).
  int q = 1;
  double epsilon = 0.1;
  int ell = 0;
  bool mine_union = false;
  bool trust_sampled = false;
  /// Sample count for sampled expansion certificates.
  std::uint64_t budget = 10000;

  friend bool operator==(const ScenarioOptions&, const ScenarioOptions&) = default;
};

struct ExperimentConfig {
  Scenario scenario = Scenario::digraph_pancyclic;
  BaseSpec base;
  PerturbMode mode = PerturbMode::add_m;
  std::vector<std::uint64_t> m_values;
  bool fresh_only = false;
  int trials = 1;
  std::uint64_t seed = 0;
  SolverKind solver = SolverKind::exact;
  ScenarioOptions options;

  void validate() const {
    if (trials < 1) throw ParameterError("config: trials must be at least 1");
    for (std::size_t i = 1; i < m_values.size(); ++i) {
      if (m_values[i] <= m_values[i - 1]) throw ParameterError("config: sweep values must be strictly increasing");
    }
    auto need = [&](std::initializer_list<SolverKind> ok) {
      for (auto s : ok) {
        if (s == solver) return;
      }
      throw ParameterError("config: solver '" + std::string(to_string(solver)) + "' does not apply to scenario '" +
                           std::string(to_string(scenario)) + "'");
    };
    auto need_mode = [&](PerturbMode ok) {
      if (mode != ok) {
        throw ParameterError("config: scenario '" + std::string(to_string(scenario)) + "' uses perturbation mode '" +
                             std::string(to_string(ok)) + "'");
      }
    };
    switch (scenario) {
      case Scenario::digraph_pancyclic:
        need({SolverKind::exact, SolverKind::constructive, SolverKind::witness});
        need_mode(PerturbMode::add_m);
        break;
      case Scenario::hyper_matching:
      case Scenario::hyper_cycle:
        need({SolverKind::exact, SolverKind::pipeline});
        need_mode(PerturbMode::add_m);
        break;
      case Scenario::tournament_hamilton:
      case Scenario::tournament_qcycles:
        need({SolverKind::exact});
        need_mode(PerturbMode::tournament_flip);
        break;
      case Scenario::bipartite_lemma5:
        need({SolverKind::exact});
        need_mode(PerturbMode::add_m);
        break;
    }
  }

  friend bool operator==(const ExperimentConfig&, const ExperimentConfig&) = default;
};

inline PerturbMode default_mode(Scenario s) {
  return (s == Scenario::tournament_hamilton || s == Scenario::tournament_qcycles) ? PerturbMode::tournament_flip
                                                                                   : PerturbMode::add_m;
}

inline json to_json(const ExperimentConfig& c) {
  json base = c.base.params;
  base["kind"] = c.base.kind;
  return json{
      {"scenario", to_string(c.scenario)},
      {"base", base},
      {"perturb", {{"mode", to_string(c.mode)}, {"m", c.m_values}, {"fresh_only", c.fresh_only}}},
      {"trials", c.trials},
      {"seed", c.seed},
      {"solver", to_string(c.solver)},
      {"options",
       {{"k", c.options.k},
        {"q", c.options.q},
        {"epsilon", c.options.epsilon},
        {"ell", c.options.ell},
        {"mine_union", c.options.mine_union},
        {"trust_sampled", c.options.trust_sampled},
        {"budget", c.options.budget}}},
  };
}

inline ExperimentConfig config_from_json(const json& j) {
  try {
    ExperimentConfig c;
    c.scenario = scenario_from_string(j.at("scenario").get<std::string>());
    const json& base = j.at("base");
    c.base.kind = base.at("kind").get<std::string>();
    for (const auto& [key, value] : base.items()) {
      if (key != "kind") c.base.params[key] = value;
    }
    const json& p = j.at("perturb");
    c.mode = p.contains("mode") ? perturb_mode_from_string(p.at("mode").get<std::string>()) : default_mode(c.scenario);
    c.m_values = p.at("m").get<std::vector<std::uint64_t>>();
    c.fresh_only = p.value("fresh_only", false);
    c.trials = j.at("trials").get<int>();
    c.seed = j.value("seed", std::uint64_t{0});
    c.solver = solver_from_string(j.at("solver").get<std::string>());
    if (j.contains("options")) {
      const json& o = j.at("options");
      c.options.k = o.value("k", c.options.k);
      c.options.q = o.value("q", c.options.q);
      c.options.epsilon = o.value("epsilon", c.options.epsilon);
      c.options.ell = o.value("ell", c.options.ell);
      c.options.mine_union = o.value("mine_union", c.options.mine_union);
      c.options.trust_sampled = o.value("trust_sampled", c.options.trust_sampled);
      c.options.budget = o.value("budget", c.options.budget);
    }
    c.validate();
    return c;
  } catch (const json::exception& e) {
    throw FormatError(std::string("config: ") + e.what());
  }
}

inline ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open config '" + path + "'");
  try {
    return config_from_json(json::parse(in));
  } catch (const json::exception& e) {
    throw FormatError(path + ": " + e.what());
  } catch (const std::exception& e) {
    throw FormatError(path + ": " + e.what());
  }
}

/// Replaces the master seed with $PHL_SEED when set.
inline void apply_seed_override(ExperimentConfig& cfg) {
  const char* raw = std::getenv("PHL_SEED");
  if (!raw || !*raw) return;
  const std::string text(raw);
  std::size_t used = 0;
  std::uint64_t value = 0;
  try {
    value = std::stoull(text, &used, 0);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || text.front() == '-') throw FormatError("PHL_SEED must be an unsigned integer, got '" + text + "'");
  cfg.seed = value;
}

// ---------------------------------------------------------------------------
// Trials

struct TrialOutcome {
  bool success = false;
  /// "ok" on success, otherwise a short failure code.
  std::string reason;
  double ms = 0.0;
  std::uint64_t seed = 0;
  json diagnostics = json::object();
};

namespace detail {

inline Digraph make_digraph_base(const BaseSpec& b, std::uint64_t seed) {
  if (b.kind == "complete-digraph") return Digraph::complete(b.integer("n"));
  if (b.kind == "empty-digraph") return Digraph::empty(b.integer("n"));
  if (b.kind == "directed-cycle") return Digraph::directed_cycle(b.integer("n"));
  if (b.kind == "complete-bipartite-digraph") return complete_bipartite_digraph(b.integer("a"), b.integer("b"));
  if (b.kind == "random-min-degree-digraph") return random_min_degree_digraph({b.integer("n"), b.real("alpha"), seed});
  throw ParameterError("unknown digraph base '" + b.kind + "'");
}

inline KUniformHypergraph make_hypergraph_base(const BaseSpec& b, std::uint64_t seed) {
  if (b.kind == "random-min-qdegree-hypergraph") {
    return random_min_qdegree_hypergraph(b.integer("k"), b.integer("n"), b.real("alpha"), seed);
  }
  if (b.kind == "complete-hypergraph") return complete_hypergraph(b.integer("k"), b.integer("n"));
  if (b.kind == "empty-hypergraph") return KUniformHypergraph(b.integer("n"), b.integer("k"), {});
  if (b.kind == "complete-bipartite-hypergraph") return complete_bipartite_hypergraph(b.integer("k"), b.integer("n"));
  throw ParameterError("unknown hypergraph base '" + b.kind + "'");
}

inline Tournament make_tournament_base(const BaseSpec& b, std::uint64_t seed) {
  if (b.kind == "transitive-cluster-tournament") return transitive_cluster_tournament(b.integer("r"), b.integer("d"));
  if (b.kind == "transitive-tournament") return transitive_tournament(b.integer("n"));
  if (b.kind == "regular-tournament") return regular_tournament(b.integer("d"));
  if (b.kind == "random-tournament") return random_tournament(b.integer("n"), seed);
  throw ParameterError("unknown tournament base '" + b.kind + "'");
}

inline void digraph_pancyclic_trial(const ExperimentConfig& cfg, std::uint64_t m, std::uint64_t seed,
                                    TrialOutcome& out) {
  const Digraph base = make_digraph_base(cfg.base, derive_seed(seed, 1));
  PerturbSpec spec = PerturbSpec::with_m(PerturbMode::add_m, m, derive_seed(seed, 2));
  spec.fresh_only = cfg.fresh_only;
  const Digraph d = add_random_edges(base, spec);
  const int n = d.order();
  const std::uint64_t solver_seed = derive_seed(seed, 3);
  out.diagnostics["arcs"] = d.arc_count();
  switch (cfg.solver) {
    case SolverKind::exact: {
      const auto report = is_pancyclic_exact(d);
      out.success = report.pancyclic;
      out.diagnostics["missing_lengths"] = report.missing_lengths;
      if (!out.success) out.reason = "missing-lengths";
      return;
    }
    case SolverKind::witness: {
      const auto spectrum = find_cycle_spectrum_witness(d, solver_seed);
      out.success = spectrum.pancyclic(n);
      out.diagnostics["missing_lengths"] = spectrum.missing_lengths;
      out.diagnostics["hamilton_refuted"] = spectrum.hamilton_refuted;
      if (!out.success) out.reason = spectrum.hamilton_refuted ? "non-hamiltonian" : "missing-lengths";
      return;
    }
    case SolverKind::constructive: {
      const int k = cfg.options.k;
      if (2 * k > n) {
        out.reason = "k-too-large";
        return;
      }
      const bool exact = n <= kExpansionExactMaxN;
      if (!exact && !cfg.options.trust_sampled) {
        out.reason = "uncertified";
        return;
      }
      const auto cert = check_expansion(d, k, exact ? CertificateMode::exact : CertificateMode::sampled,
                                        cfg.options.budget, derive_seed(seed, 4));
      out.diagnostics["certificate_mode"] = to_string(cert.mode);
      if (!cert.holds()) {
        out.reason = "expansion-violated";
        return;
      }
      const auto run = pancyclic_via_expansion(d, k, solver_seed);
      out.success = run.complete(n);
      if (!out.success) {
        out.reason = run.failures.empty() ? "missing-lengths"
                                          : "hypothesis:" + std::string(to_string(run.failures.front().assumption));
      }
      return;
    }
    case SolverKind::pipeline:
      break;
  }
  throw ParameterError("digraph-pancyclic: unsupported solver");
}

inline void hyper_trial(const ExperimentConfig& cfg, std::uint64_t m, std::uint64_t seed, TrialOutcome& out) {
  const KUniformHypergraph h = make_hypergraph_base(cfg.base, derive_seed(seed, 1));
  const KUniformHypergraph r = random_hypergraph(h.order(), h.uniformity(), m, derive_seed(seed, 2));
  const SpanningMode mode = cfg.scenario == Scenario::hyper_matching ? SpanningMode::matching : SpanningMode::cycle;
  if (cfg.solver == SolverKind::exact) {
    const KUniformHypergraph l = h.united(r);
    out.success = mode == SpanningMode::matching ? find_perfect_matching_hypergraph_exact(l).has_value()
                                                 : find_loose_hamilton_exact(l).has_value();
    if (!out.success) out.reason = "absent";
    return;
  }
  PipelineConfig pc;
  pc.epsilon = cfg.options.epsilon;
  pc.ell = cfg.options.ell;
  pc.mine_union = cfg.options.mine_union;
  pc.seed = derive_seed(seed, 3);
  const auto res = find_spanning_structure(h, r, mode, pc);
  out.success = res.success;
  out.diagnostics["mined"] = res.mined;
  out.diagnostics["prematched"] = res.prematched;
  out.diagnostics["gab_min_degree"] = {res.gab_min_degree.min_a, res.gab_min_degree.min_b};
  if (!out.success) {
    out.reason = "hall-violator";
    out.diagnostics["certificate_size"] = res.certificate.size();
  }
}

inline void tournament_trial(const ExperimentConfig& cfg, std::uint64_t m, std::uint64_t seed, TrialOutcome& out) {
  const Tournament base = make_tournament_base(cfg.base, derive_seed(seed, 1));
  const Tournament t = tournament_flip(base, PerturbSpec::with_m(PerturbMode::tournament_flip, m, derive_seed(seed, 2)));
  if (cfg.scenario == Scenario::tournament_hamilton) {
    // A tournament is Hamiltonian iff it is strongly connected.
    out.success = t.order() >= 3 && is_t_strongly_connected(t, 1).connected;
    if (!out.success) out.reason = "not-strong";
    return;
  }
  out.success = arc_disjoint_hamilton_cycles(t, cfg.options.q).has_value();
  if (!out.success) out.reason = "absent";
}

inline void lemma5_trial(const ExperimentConfig& cfg, std::uint64_t m, std::uint64_t seed, TrialOutcome& out) {
  if (cfg.base.kind != "random-min-degree-bipartite") throw ParameterError("bipartite-lemma5 needs base random-min-degree-bipartite");
  const int n = cfg.base.integer("n");
  if (m > static_cast<std::uint64_t>(n)) throw ParameterError("bipartite-lemma5: m exceeds n");
  const BipartiteGraph g = random_min_degree_bipartite(n, cfg.base.real("alpha"), derive_seed(seed, 1));
  CounterRng rng(derive_seed(seed, 2));
  const auto full = random_perfect_matching(n, rng);
  std::vector<BipartiteGraph::IndexEdge> kept;
  for (auto i : floyd_sample(rng, static_cast<std::uint64_t>(n), m)) kept.push_back(full[static_cast<std::size_t>(i)]);
  const auto result = bipartite_max_matching(g.with_edges(kept));
  out.success = result.perfect();
  out.diagnostics["matching_size"] = result.matching.size();
  if (!out.success) {
    out.reason = "hall-violator";
    out.diagnostics["certificate_size"] = result.certificate->size();
  }
}

}  // namespace detail

inline std::uint64_t trial_seed(const ExperimentConfig& cfg, std::uint64_t m, std::uint64_t index) {
  return derive_seed(cfg.seed, m, index);
}

/// One trial. Structural and resource failures become failed trials with a
/// reason code; parameter errors propagate (the config is invalid).
inline TrialOutcome run_trial(const ExperimentConfig& cfg, std::uint64_t m, std::uint64_t index) {
  TrialOutcome out;
  out.seed = trial_seed(cfg, m, index);
  const auto start = std::chrono::steady_clock::now();
  try {
    switch (cfg.scenario) {
      case Scenario::digraph_pancyclic: detail::digraph_pancyclic_trial(cfg, m, out.seed, out); break;
      case Scenario::hyper_matching:
      case Scenario::hyper_cycle: detail::hyper_trial(cfg, m, out.seed, out); break;
      case Scenario::tournament_hamilton:
      case Scenario::tournament_qcycles: detail::tournament_trial(cfg, m, out.seed, out); break;
      case Scenario::bipartite_lemma5: detail::lemma5_trial(cfg, m, out.seed, out); break;
    }
  } catch (const HypothesisViolation& e) {
    out.success = false;
    out.reason = "hypothesis:" + std::string(to_string(e.assumption()));
    out.diagnostics["error"] = e.what();
  } catch (const StructuralError& e) {
    out.success = false;
    out.reason = "structural";
    out.diagnostics["error"] = e.what();
  } catch (const ResourceError& e) {
    out.success = false;
    out.reason = "resource";
    out.diagnostics["error"] = e.what();
  }
  if (out.success) out.reason = "ok";
  out.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return out;
}

// ---------------------------------------------------------------------------
// Sweeps

struct Interval {
  double low = 0.0;
  double high = 1.0;
};

/// Wilson score interval at 95%.
inline Interval wilson_interval(int successes, int trials, double z = kWilsonZ) {
  if (trials <= 0) return {0.0, 1.0};
  const double n = trials;
  const double p = successes / n;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / n;
  const double center = (p + z2 / (2.0 * n)) / denom;
  const double half = z / denom * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n));
  // The bounds are exactly 0 and 1 at the extremes; rounding would leave dust.
  const double low = successes == 0 ? 0.0 : std::max(0.0, center - half);
  const double high = successes == trials ? 1.0 : std::min(1.0, center + half);
  return {low, high};
}

struct SweepPoint {
  std::uint64_t m = 0;
  int trials = 0;
  int successes = 0;
  double frequency = 0.0;
  double ci_low = 0.0;
  double ci_high = 1.0;
  double mean_ms = 0.0;
  std::map<std::string, int> failure_reasons;

  /// Timing is excluded: it is the one field that is not deterministic.
  friend bool operator==(const SweepPoint& a, const SweepPoint& b) {
    return a.m == b.m && a.trials == b.trials && a.successes == b.successes && a.frequency == b.frequency &&
           a.ci_low == b.ci_low && a.ci_high == b.ci_high && a.failure_reasons == b.failure_reasons;
  }
};

struct EnvironmentStamp {
  std::string library_version = kVersion;
  std::string compiler;
  long cxx_standard = __cplusplus;
  unsigned hardware_threads = 0;
  int jobs = 1;

  static EnvironmentStamp current(int jobs) {
    EnvironmentStamp e;
#if defined(__clang__)
    e.compiler = "clang " __clang_version__;
#elif defined(__GNUC__)
    e.compiler = "gcc " __VERSION__;
#else
    e.compiler = "unknown";
#endif
    e.hardware_threads = std::thread::hardware_concurrency();
    e.jobs = jobs;
    return e;
  }
};

struct SweepResult {
  ExperimentConfig config;
  std::uint64_t master_seed = 0;
  std::vector<SweepPoint> points;
  EnvironmentStamp environment;

  /// Compares outcomes: config, seed and per-point counts. Timing and the
  /// environment stamp are ignored.
  friend bool operator==(const SweepResult& a, const SweepResult& b) {
    return a.config == b.config && a.master_seed == b.master_seed && a.points == b.points;
  }
};

inline SweepPoint aggregate(std::uint64_t m, const std::vector<TrialOutcome>& outcomes) {
  SweepPoint p;
  p.m = m;
  p.trials = static_cast<int>(outcomes.size());
  double total_ms = 0.0;
  for (const auto& o : outcomes) {
    if (o.success) {
      ++p.successes;
    } else {
      ++p.failure_reasons[o.reason];
    }
    total_ms += o.ms;
  }
  p.frequency = p.trials ? static_cast<double>(p.successes) / p.trials : 0.0;
  const auto ci = wilson_interval(p.successes, p.trials);
  p.ci_low = ci.low;
  p.ci_high = ci.high;
  p.mean_ms = p.trials ? total_ms / p.trials : 0.0;
  PHL_ENSURE(p.successes <= p.trials && p.ci_low >= 0.0 && p.ci_high <= 1.0, "sweep point invariants");
  return p;
}

/// Runs every (m, trial) pair on `jobs` worker threads. Aggregation only
/// counts, so the result does not depend on execution order.
inline SweepResult sweep(const ExperimentConfig& cfg, int jobs = 1) {
  cfg.validate();
  if (jobs < 1) throw ParameterError("sweep: jobs must be positive");
  const std::size_t per_point = static_cast<std::size_t>(cfg.trials);
  const std::size_t total = cfg.m_values.size() * per_point;

  std::set<std::uint64_t> seeds;
  for (auto m : cfg.m_values) {
    for (std::size_t i = 0; i < per_point; ++i) seeds.insert(trial_seed(cfg, m, i));
  }
  PHL_ENSURE(seeds.size() == total, "child seeds must be distinct across (m, trial)");

  std::vector<TrialOutcome> outcomes(total);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_lock;
  auto worker = [&]() {
    while (true) {
      const std::size_t task = next.fetch_add(1);
      if (task >= total) return;
      try {
        outcomes[task] = run_trial(cfg, cfg.m_values[task / per_point], task % per_point);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_lock);
        if (!failure) failure = std::current_exception();
        next.store(total);
      }
    }
  };
  const int threads = static_cast<int>(std::min<std::size_t>(static_cast<std::size_t>(jobs), std::max<std::size_t>(total, 1)));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);

  SweepResult result;
  result.config = cfg;
  result.master_seed = cfg.seed;
  result.environment = EnvironmentStamp::current(jobs);
  for (std::size_t p = 0; p < cfg.m_values.size(); ++p) {
    const std::vector<TrialOutcome> slice(outcomes.begin() + static_cast<std::ptrdiff_t>(p * per_point),
                                          outcomes.begin() + static_cast<std::ptrdiff_t>((p + 1) * per_point));
    result.points.push_back(aggregate(cfg.m_values[p], slice));
  }
  return result;
}

// ---------------------------------------------------------------------------
// Emission

inline const char* kCsvHeader = "m,trials,successes,frequency,ci_low,ci_high,mean_ms";

inline std::string to_csv(const SweepResult& r) {
  std::string out = std::string(kCsvHeader) + "\n";
  char line[256];
  for (const auto& p : r.points) {
    std::snprintf(line, sizeof line, "%llu,%d,%d,%.6f,%.6f,%.6f,%.3f\n", static_cast<unsigned long long>(p.m),
                  p.trials, p.successes, p.frequency, p.ci_low, p.ci_high, p.mean_ms);
    out += line;
  }
  return out;
}

inline json to_json(const SweepResult& r) {
  json points = json::array();
  for (const auto& p : r.points) {
    points.push_back({{"m", p.m},
                      {"trials", p.trials},
                      {"successes", p.successes},
                      {"frequency", p.frequency},
                      {"ci_low", p.ci_low},
                      {"ci_high", p.ci_high},
                      {"mean_ms", p.mean_ms},
                      {"failure_reasons", p.failure_reasons}});
  }
  return json{{"config", to_json(r.config)},
              {"master_seed", r.master_seed},
              {"points", points},
              {"environment",
               {{"library_version", r.environment.library_version},
                {"compiler", r.environment.compiler},
                {"cxx_standard", r.environment.cxx_standard},
                {"hardware_threads", r.environment.hardware_threads},
                {"jobs", r.environment.jobs}}}};
}

inline SweepResult sweep_result_from_json(const json& j) {
  try {
    SweepResult r;
    r.config = config_from_json(j.at("config"));
    r.master_seed = j.at("master_seed").get<std::uint64_t>();
    for (const auto& p : j.at("points")) {
      SweepPoint sp;
      sp.m = p.at("m").get<std::uint64_t>();
      sp.trials = p.at("trials").get<int>();
      sp.successes = p.at("successes").get<int>();
      sp.frequency = p.at("frequency").get<double>();
      sp.ci_low = p.at("ci_low").get<double>();
      sp.ci_high = p.at("ci_high").get<double>();
      sp.mean_ms = p.at("mean_ms").get<double>();
      sp.failure_reasons = p.value("failure_reasons", std::map<std::string, int>{});
      r.points.push_back(std::move(sp));
    }
    if (j.contains("environment")) {
      const json& e = j.at("environment");
      r.environment.library_version = e.value("library_version", std::string(kVersion));
      r.environment.compiler = e.value("compiler", std::string());
      r.environment.cxx_standard = e.value("cxx_standard", 0L);
      r.environment.hardware_threads = e.value("hardware_threads", 0U);
      r.environment.jobs = e.value("jobs", 1);
    }
    return r;
  } catch (const json::exception& e) {
    throw FormatError(std::string("sweep result: ") + e.what());
  }
}

inline void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError("cannot open '" + path + "' for writing");
  out << text;
  out.flush();
  if (!out) throw FormatError("write failed for '" + path + "'");
}

enum class EmitFormat { csv, json_document };

inline void emit(const SweepResult& r, EmitFormat format, const std::string& path) {
  write_text_file(path, format == EmitFormat::csv ? to_csv(r) : to_json(r).dump(2) + "\n");
}

}  // namespace phl
