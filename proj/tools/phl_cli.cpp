// phl command line: generate, perturb, solve, check tournament, sweep.
// Exit status: 0 on success (a negative answer is still success), 2 on
// usage, parameter or format errors, 3 on resource limits, 1 otherwise.

#include <iostream>

#include "CLI11.hpp"
#include "phl/phl.hpp"

namespace {

using phl::json;

phl::Digraph as_digraph(const phl::AnyStructure& s) {
  if (auto g = std::get_if<phl::Graph>(&s)) return g->as_digraph();
  if (auto d = std::get_if<phl::Digraph>(&s)) return *d;
  if (auto t = std::get_if<phl::Tournament>(&s)) return t->digraph();
  throw phl::ParameterError("expected a graph, digraph or tournament");
}

phl::KUniformHypergraph as_hypergraph(const phl::AnyStructure& s) {
  if (auto h = std::get_if<phl::KUniformHypergraph>(&s)) return *h;
  throw phl::ParameterError("expected a hypergraph");
}

phl::Tournament as_tournament(const phl::AnyStructure& s) {
  if (auto t = std::get_if<phl::Tournament>(&s)) return *t;
  if (auto d = std::get_if<phl::Digraph>(&s)) return phl::Tournament(*d);
  throw phl::ParameterError("expected a tournament");
}

void print(const json& j) { std::cout << j.dump(2) << "\n"; }

struct GenerateArgs {
  std::string kind;
  int n = 0, a = 0, b = 0, k = 0, d = 0, r = 0;
  double alpha = 0.5;
  std::uint64_t m = 0;
  std::uint64_t seed = 0;
  std::string out;
};

phl::AnyStructure generate(const GenerateArgs& g) {
  const std::string& kind = g.kind;
  if (kind == "complete-digraph") return phl::Digraph::complete(g.n);
  if (kind == "empty-digraph") return phl::Digraph::empty(g.n);
  if (kind == "directed-cycle") return phl::Digraph::directed_cycle(g.n);
  if (kind == "complete-bipartite-graph") return phl::complete_bipartite_graph(g.a, g.b);
  if (kind == "complete-bipartite-digraph") return phl::complete_bipartite_digraph(g.a, g.b);
  if (kind == "random-min-degree-digraph") return phl::random_min_degree_digraph({g.n, g.alpha, g.seed});
  if (kind == "random-min-degree-bipartite") {
    const auto bg = phl::random_min_degree_bipartite(g.n, g.alpha, g.seed);
    std::vector<phl::VertexPair> edges;
    for (auto [x, y] : bg.edges()) edges.emplace_back(bg.part_a()[static_cast<std::size_t>(x)], bg.part_b()[static_cast<std::size_t>(y)]);
    return phl::Graph(2 * g.n, edges);
  }
  if (kind == "complete-hypergraph") return phl::complete_hypergraph(g.k, g.n);
  if (kind == "complete-bipartite-hypergraph") return phl::complete_bipartite_hypergraph(g.k, g.n);
  if (kind == "random-min-qdegree-hypergraph") return phl::random_min_qdegree_hypergraph(g.k, g.n, g.alpha, g.seed);
  if (kind == "random-hypergraph") return phl::random_hypergraph(g.n, g.k, g.m, g.seed);
  if (kind == "regular-tournament") return phl::regular_tournament(g.d);
  if (kind == "transitive-tournament") return phl::transitive_tournament(g.n);
  if (kind == "transitive-cluster-tournament") return phl::transitive_cluster_tournament(g.r, g.d);
  if (kind == "random-tournament") return phl::random_tournament(g.n, g.seed);
  throw phl::ParameterError("unknown generator '" + kind + "'");
}

struct PerturbArgs {
  std::string in, out, mode = "add-m";
  std::optional<std::uint64_t> m;
  std::optional<double> p;
  std::uint64_t seed = 0;
  bool fresh_only = false;
};

phl::AnyStructure perturb(const PerturbArgs& a) {
  phl::PerturbSpec spec;
  spec.mode = phl::perturb_mode_from_string(a.mode);
  spec.m = a.m;
  spec.p = a.p;
  spec.seed = a.seed;
  spec.fresh_only = a.fresh_only;
  const auto s = phl::read_edge_list_file(a.in);
  if (auto g = std::get_if<phl::Graph>(&s)) {
    switch (spec.mode) {
      case phl::PerturbMode::symmetric_difference: return phl::symmetric_difference(*g, spec);
      case phl::PerturbMode::resample: return phl::resample(*g, spec);
      default: return phl::add_random_edges(*g, spec);
    }
  }
  if (auto d = std::get_if<phl::Digraph>(&s)) return phl::add_random_edges(*d, spec);
  if (auto h = std::get_if<phl::KUniformHypergraph>(&s)) return phl::add_random_edges(*h, spec);
  return phl::tournament_flip(std::get<phl::Tournament>(s), spec);
}

struct SolveArgs {
  std::string problem, in, dense, random, mode = "matching";
  bool exact = false, trust_sampled = false, mine_union = false;
  int k = 1, ell = 0;
  double epsilon = 0.1;
  std::uint64_t budget = 10000, seed = 0;
};

json solve(const SolveArgs& a) {
  json out{{"problem", a.problem}};
  if (a.problem == "hamilton") {
    const auto d = as_digraph(phl::read_edge_list_file(a.in));
    if (a.exact || d.order() > phl::kWitnessMaxN) {
      const auto c = phl::find_hamilton_cycle_exact(d);
      out["method"] = "exact";
      out["hamiltonian"] = c.has_value();
      out["cycle"] = c ? json(*c) : json(nullptr);
    } else {
      const auto w = phl::find_hamilton_cycle_witness(d, a.seed);
      out["method"] = "witness";
      out["hamiltonian"] = w.cycle ? json(true) : (w.refuted ? json(false) : json(nullptr));
      out["cycle"] = w.cycle ? json(*w.cycle) : json(nullptr);
      out["refuted"] = w.refuted;
    }
    return out;
  }
  if (a.problem == "pancyclic") {
    const auto d = as_digraph(phl::read_edge_list_file(a.in));
    if (a.exact || d.order() > phl::kWitnessMaxN) {
      const auto r = phl::is_pancyclic_exact(d);
      out["method"] = "exact";
      out["pancyclic"] = r.pancyclic;
      out["missing_lengths"] = r.missing_lengths;
    } else {
      const auto s = phl::find_cycle_spectrum_witness(d, a.seed);
      out["method"] = "witness";
      out["pancyclic"] = s.pancyclic(d.order()) ? json(true) : json(nullptr);
      out["missing_lengths"] = s.missing_lengths;
      json cycles = json::object();
      for (const auto& [len, c] : s.cycles) cycles[std::to_string(len)] = c;
      out["cycles"] = cycles;
    }
    return out;
  }
  if (a.problem == "matching" || a.problem == "loose-cycle") {
    const auto h = as_hypergraph(phl::read_edge_list_file(a.in));
    const auto r = a.problem == "matching" ? phl::find_perfect_matching_hypergraph_exact(h) : phl::find_loose_hamilton_exact(h);
    out["method"] = "exact";
    out["found"] = r.has_value();
    out["edges"] = r ? json(*r) : json(nullptr);
    return out;
  }
  if (a.problem == "hamilton-expansion") {
    const auto d = as_digraph(phl::read_edge_list_file(a.in));
    const bool exact = d.order() <= phl::kExpansionExactMaxN;
    if (!exact && !a.trust_sampled) {
      throw phl::ParameterError("n > " + std::to_string(phl::kExpansionExactMaxN) +
                                " needs a sampled certificate; pass --trust-sampled to accept it");
    }
    const auto cert = phl::check_expansion(d, a.k, exact ? phl::CertificateMode::exact : phl::CertificateMode::sampled,
                                           a.budget, a.seed);
    out["certificate"] = {{"mode", phl::to_string(cert.mode)},
                          {"k", cert.k},
                          {"holds", cert.holds()},
                          {"proven", cert.proven()},
                          {"samples_checked", cert.samples_checked}};
    if (!cert.holds()) {
      out["certificate"]["violated"] = {cert.violated->first, cert.violated->second};
      out["cycle"] = nullptr;
      return out;
    }
    const auto run = phl::hamilton_via_expansion_run(d, a.k, a.seed);
    out["cycle"] = run.cycle;
    out["rounds"] = run.rounds;
    return out;
  }
  if (a.problem == "hyper") {
    const auto h = as_hypergraph(phl::read_edge_list_file(a.dense));
    const auto r = as_hypergraph(phl::read_edge_list_file(a.random));
    phl::PipelineConfig cfg;
    cfg.epsilon = a.epsilon;
    cfg.ell = a.ell;
    cfg.seed = a.seed;
    cfg.mine_union = a.mine_union;
    const auto res = phl::find_spanning_structure(h, r, phl::spanning_mode_from_string(a.mode), cfg);
    out["mode"] = phl::to_string(res.mode);
    out["success"] = res.success;
    out["structure"] = res.success ? json(res.structure) : json(nullptr);
    out["certificate"] = res.success ? json(nullptr)
                                     : json{{"side", res.certificate_side == phl::CertificateSide::a ? "A" : "B"},
                                            {"set", res.certificate}};
    out["slots"] = res.slots;
    out["prematched"] = res.prematched;
    out["mined"] = res.mined;
    out["gab_min_degree"] = {{"a", res.gab_min_degree.min_a}, {"b", res.gab_min_degree.min_b}};
    return out;
  }
  throw phl::ParameterError("unknown problem '" + a.problem + "'");
}

json check_tournament(const std::string& in, int t, std::optional<int> q) {
  const auto tour = as_tournament(phl::read_edge_list_file(in));
  const auto rep = phl::is_t_strongly_connected(tour, t);
  json out{{"t", rep.t},
           {"connected", rep.connected},
           {"witness", rep.witness ? json(*rep.witness) : json(nullptr)},
           {"diameter", rep.diameter == phl::kInfiniteDiameter ? json(nullptr) : json(rep.diameter)}};
  if (q) {
    const auto cycles = phl::arc_disjoint_hamilton_cycles(tour, *q);
    out["q"] = *q;
    out["hamilton_cycles"] = cycles ? json(*cycles) : json(nullptr);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"phl: perturbed Hamiltonicity toolkit"};
  app.require_subcommand(1);

  GenerateArgs gen;
  auto* gen_cmd = app.add_subcommand("generate", "Build a base structure and write it as an edge list");
  gen_cmd->add_option("kind", gen.kind, "Generator name")->required();
  gen_cmd->add_option("--n", gen.n, "Order (or part size)");
  gen_cmd->add_option("--a", gen.a, "First part size");
  gen_cmd->add_option("--b", gen.b, "Second part size");
  gen_cmd->add_option("--k", gen.k, "Uniformity");
  gen_cmd->add_option("--d", gen.d, "Tournament degree parameter");
  gen_cmd->add_option("--r", gen.r, "Number of clusters");
  gen_cmd->add_option("--alpha", gen.alpha, "Density");
  gen_cmd->add_option("--m", gen.m, "Edge count");
  gen_cmd->add_option("--seed", gen.seed, "Seed");
  gen_cmd->add_option("--out", gen.out, "Output file (stdout if omitted)");

  PerturbArgs pert;
  auto* pert_cmd = app.add_subcommand("perturb", "Apply a random perturbation to an edge-list file");
  pert_cmd->add_option("--in", pert.in, "Input edge list")->required();
  pert_cmd->add_option("--mode", pert.mode, "add-m | add-p | symmetric-difference | resample | tournament-flip");
  auto* m_opt = pert_cmd->add_option("--m", pert.m, "Number of random edges");
  auto* p_opt = pert_cmd->add_option("--p", pert.p, "Edge probability");
  m_opt->excludes(p_opt);
  pert_cmd->add_option("--seed", pert.seed, "Seed");
  pert_cmd->add_flag("--fresh-only", pert.fresh_only, "Draw only absent edges (add-m)");
  pert_cmd->add_option("--out", pert.out, "Output file (stdout if omitted)");

  SolveArgs sol;
  auto* solve_cmd = app.add_subcommand("solve", "Solve a problem and print JSON");
  solve_cmd->add_option("problem", sol.problem, "hamilton | pancyclic | matching | loose-cycle | hamilton-expansion | hyper")
      ->required();
  solve_cmd->add_option("--in", sol.in, "Input edge list");
  solve_cmd->add_flag("--exact", sol.exact, "Use the exponential exact solver");
  solve_cmd->add_option("--k", sol.k, "Expansion parameter");
  solve_cmd->add_flag("--trust-sampled", sol.trust_sampled, "Accept a sampled expansion certificate");
  solve_cmd->add_option("--budget", sol.budget, "Samples for a sampled certificate");
  solve_cmd->add_option("--mode", sol.mode, "matching | cycle");
  solve_cmd->add_option("--dense", sol.dense, "Dense hypergraph H");
  solve_cmd->add_option("--random", sol.random, "Random hypergraph R");
  solve_cmd->add_option("--epsilon", sol.epsilon, "Slack parameter");
  solve_cmd->add_option("--ell", sol.ell, "Loose path length (0 = ceil(1/epsilon))");
  solve_cmd->add_option("--seed", sol.seed, "Seed");
  solve_cmd->add_flag("--mine-union", sol.mine_union, "Mine the preliminary structure from H and R together");

  std::string check_in;
  int check_t = 1;
  std::optional<int> check_q;
  auto* check_cmd = app.add_subcommand("check", "Structural checks");
  auto* tour_cmd = check_cmd->add_subcommand("tournament", "t-strong connectivity report");
  check_cmd->require_subcommand(1);
  tour_cmd->add_option("--in", check_in, "Tournament edge list")->required();
  tour_cmd->add_option("--t", check_t, "Connectivity")->required();
  tour_cmd->add_option("--q", check_q, "Also search for q arc-disjoint Hamilton cycles");

  std::string config_path, csv_path, json_path;
  int jobs = 1;
  auto* sweep_cmd = app.add_subcommand("sweep", "Run a Monte Carlo sweep");
  sweep_cmd->add_option("--config", config_path, "Experiment JSON")->required();
  sweep_cmd->add_option("--out", csv_path, "CSV output")->required();
  sweep_cmd->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  sweep_cmd->add_option("--json", json_path, "Also write the full JSON result");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // --help and --version exit 0; usage errors share the parameter-error code.
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*gen_cmd) {
      const auto s = generate(gen);
      if (gen.out.empty()) {
        phl::write_edge_list(std::cout, s);
      } else {
        phl::write_edge_list_file(gen.out, s);
      }
    } else if (*pert_cmd) {
      const auto s = perturb(pert);
      if (pert.out.empty()) {
        phl::write_edge_list(std::cout, s);
      } else {
        phl::write_edge_list_file(pert.out, s);
      }
    } else if (*solve_cmd) {
      print(solve(sol));
    } else if (*check_cmd) {
      print(check_tournament(check_in, check_t, check_q));
    } else if (*sweep_cmd) {
      auto cfg = phl::load_config(config_path);
      phl::apply_seed_override(cfg);
      const auto result = phl::sweep(cfg, jobs);
      phl::emit(result, phl::EmitFormat::csv, csv_path);
      if (!json_path.empty()) phl::emit(result, phl::EmitFormat::json_document, json_path);
      for (const auto& p : result.points) {
        std::cerr << "m=" << p.m << " " << p.successes << "/" << p.trials << "\n";
      }
    }
  } catch (const phl::ParameterError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const phl::FormatError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const phl::ResourceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
