// cascadelab: generate, attack and analyze security-model networks.

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "cascadelab/cascade.hpp"
#include "cascadelab/config.hpp"
#include "cascadelab/generators.hpp"
#include "cascadelab/graph_io.hpp"
#include "cascadelab/harness.hpp"
#include "cascadelab/metrics.hpp"
#include "cascadelab/parallel.hpp"
#include "cascadelab/rng.hpp"

namespace cl = cascadelab;

namespace {

constexpr int kExitError = 1;
constexpr int kExitConfig = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string fixed6(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  return buf;
}

std::string general(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

void write_output(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << text;
  if (!out) throw std::runtime_error("write failed for " + path);
}

std::vector<cl::NodeId> read_ids(const std::string& path, std::size_t n) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open attack id file " + path);
  std::vector<cl::NodeId> ids;
  long long x = 0;
  while (in >> x) {
    if (x < 0 || static_cast<unsigned long long>(x) >= n) {
      throw UsageError("attack id " + std::to_string(x) + " out of range");
    }
    ids.push_back(static_cast<cl::NodeId>(x));
  }
  if (!in.eof()) throw UsageError("malformed attack id file " + path);
  cl::normalize_node_set(ids, n);
  return ids;
}

std::vector<cl::NodeId> resolve_attack(const std::string& rule, std::size_t k, const cl::LabeledGraph& g) {
  if (rule == "top") {
    if (k > g.node_count()) throw UsageError("--k exceeds node count");
    return cl::top_degree_nodes(g, k);
  }
  if (rule.rfind("ids:", 0) == 0) return read_ids(rule.substr(4), g.node_count());
  throw UsageError("--attack must be 'top' or 'ids:FILE'");
}

// ---- generate ---------------------------------------------------------------

struct GenerateArgs {
  std::string model;
  std::size_t n = 0;
  std::size_t d = 0;
  double a = 1.5;
  std::uint64_t seed = 1;
  std::string out;
};

int run_generate(const GenerateArgs& args) {
  cl::GenParams p{args.n, args.d, args.a, args.seed};
  const auto g = cl::generate(cl::model_from_string(args.model), p);
  write_output(args.out, cl::serialize(g));
  return 0;
}

// ---- cascade / injure -------------------------------------------------------

struct CascadeArgs {
  std::string graph;
  std::string attack = "top";
  std::size_t k = 0;
  std::string thresholds = "random";
  std::size_t trials = 1;
  std::uint64_t seed = 1;
  std::string out;
  std::size_t jobs = 1;
};

int run_cascade(const CascadeArgs& args) {
  const auto g = cl::load_graph(args.graph);
  const auto attack = resolve_attack(args.attack, args.k, g);
  const bool random = args.thresholds == "random";
  double phi = 0.0;
  if (!random) {
    if (args.thresholds.rfind("uniform:", 0) != 0) {
      throw UsageError("--thresholds must be 'uniform:PHI' or 'random'");
    }
    try {
      phi = std::stod(args.thresholds.substr(8));
    } catch (const std::exception&) {
      throw UsageError("bad uniform threshold '" + args.thresholds + "'");
    }
  }
  if (args.trials < 1) throw UsageError("--trials must be >= 1");

  const std::size_t n = g.node_count();
  std::vector<std::string> rows(args.trials);
  cl::parallel_for(args.trials, args.jobs, [&](std::size_t t, std::size_t) {
    std::string mode;
    std::string param;
    cl::ThresholdAssignment theta;
    if (random) {
      const auto seed = cl::derive_trial_seed(args.seed, "cascade", "random", n, t);
      theta = cl::random_thresholds(g, seed);
      mode = "random";
      param = std::to_string(seed);
    } else {
      theta = cl::uniform_thresholds(g, phi);
      mode = "uniform";
      param = general(phi);
    }
    const auto outcome = cl::infection_set(g, attack, theta);
    const double frac = n ? static_cast<double>(outcome.infected.size()) / static_cast<double>(n) : 0.0;
    rows[t] = std::to_string(t) + "," + mode + "," + param + "," + std::to_string(attack.size()) + "," +
              std::to_string(outcome.infected.size()) + "," + fixed6(frac) + "," + std::to_string(outcome.rounds) +
              "\n";
  });
  std::string csv = "trial,threshold_mode,phi_or_seed,attack_size,infected,infected_fraction,rounds\n";
  for (const auto& r : rows) csv += r;
  write_output(args.out, csv);
  return 0;
}

struct InjureArgs {
  std::string graph;
  std::string attack = "top";
  std::size_t k = 0;
  std::string out;
};

int run_injure(const InjureArgs& args) {
  const auto g = cl::load_graph(args.graph);
  const auto attack = resolve_attack(args.attack, args.k, g);
  const auto injured = cl::injury_set(g, attack);
  const double frac =
      g.node_count() ? static_cast<double>(injured.size()) / static_cast<double>(g.node_count()) : 0.0;
  write_output(args.out, "attack_size,injured,injured_fraction\n" + std::to_string(attack.size()) + "," +
                             std::to_string(injured.size()) + "," + fixed6(frac) + "\n");
  return 0;
}

// ---- analyze ----------------------------------------------------------------

struct AnalyzeArgs {
  std::string graph;
  std::string report;
  std::string out;
  std::size_t pairs = 1000;
  std::uint64_t seed = 1;
  std::size_t dmin = 0;
  double a = 1.5;
  std::size_t budget = 0;
};

std::string report_communities(const cl::LabeledGraph& g) {
  const auto comms = cl::communities(g);
  const auto diameters = cl::community_diameters(g);
  std::string csv = "color,seed,seed_birth_time,size,internal_edges,cut_edges,conductance,diameter\n";
  for (std::size_t i = 0; i < comms.size(); ++i) {
    const auto& c = comms[i];
    std::size_t volume = 0;
    std::size_t internal_ends = 0;
    for (cl::NodeId x : c.members) {
      volume += g.degree(x);
      for (cl::NodeId y : g.neighbors(x))
        if (g.meta(y).color == c.color) ++internal_ends;
    }
    const std::size_t cut = volume - internal_ends;
    const std::size_t smaller = std::min(volume, g.total_volume() - volume);
    const std::string phi =
        (c.members.size() < g.node_count() && smaller > 0) ? fixed6(static_cast<double>(cut) / smaller) : "";
    csv += std::to_string(c.color) + "," + std::to_string(c.seed) + "," + std::to_string(g.meta(c.seed).birth_time) +
           "," + std::to_string(c.members.size()) + "," + std::to_string(internal_ends / 2) + "," +
           std::to_string(cut) + "," + phi + "," + (diameters[i] ? std::to_string(*diameters[i]) : "") + "\n";
  }
  return csv;
}

std::string report_conductance(const cl::LabeledGraph& g, double a) {
  const double beta = (a - 1.0) / (4.0 * (a + 1.0));
  std::string csv = "color,size,volume,cut,conductance,size_pow_neg_beta\n";
  for (const auto& c : cl::communities(g)) {
    std::size_t volume = 0;
    for (cl::NodeId x : c.members) volume += g.degree(x);
    std::string phi;
    std::size_t cut = 0;
    for (cl::NodeId x : c.members)
      for (cl::NodeId y : g.neighbors(x))
        if (g.meta(y).color != c.color) ++cut;
    try {
      phi = fixed6(cl::conductance(g, c.members));
    } catch (const std::exception&) {
    }
    csv += std::to_string(c.color) + "," + std::to_string(c.members.size()) + "," + std::to_string(volume) + "," +
           std::to_string(cut) + "," + phi + "," +
           fixed6(std::pow(static_cast<double>(c.members.size()), -beta)) + "\n";
  }
  return csv;
}

std::string report_degree_priority(const cl::LabeledGraph& g) {
  std::string csv = "node,color,is_seed,degree,length,first_degree,second_degree,own_color_first\n";
  for (cl::NodeId v = 0; v < g.node_count(); ++v) {
    const auto p = cl::degree_profile(g, v);
    csv += std::to_string(v) + "," + std::to_string(g.meta(v).color) + "," + (g.meta(v).is_seed ? "1" : "0") + "," +
           std::to_string(g.degree(v)) + "," + std::to_string(p.length) + "," + std::to_string(p.first_degree) + "," +
           std::to_string(p.second_degree) + "," + (p.own_color_first ? "1" : "0") + "\n";
  }
  return csv;
}

// Edges each node made at birth peak at d for the PA and security models.
std::size_t inferred_d(const cl::LabeledGraph& g) {
  std::size_t best = 1;
  for (cl::NodeId v = 0; v < g.node_count(); ++v) {
    const auto nb = g.neighbors(v);
    const auto earlier = static_cast<std::size_t>(std::lower_bound(nb.begin(), nb.end(), v) - nb.begin());
    best = std::max(best, earlier);
  }
  return best;
}

std::string fit_row(const std::string& scope, const std::vector<std::size_t>& values, std::size_t dmin) {
  try {
    const auto fit = cl::powerlaw_exponent(values, dmin);
    return scope + "," + std::to_string(fit.samples) + "," + std::to_string(fit.d_min) + "," + fixed6(fit.exponent) +
           "," + fixed6(fit.std_error) + "," + fixed6(fit.ccdf_r2) + "\n";
  } catch (const std::invalid_argument&) {
    std::size_t tail = 0;
    for (std::size_t x : values)
      if (x >= dmin) ++tail;
    return scope + "," + std::to_string(tail) + "," + std::to_string(dmin) + ",,,\n";
  }
}

std::string report_powerlaw(const cl::LabeledGraph& g, std::size_t dmin) {
  if (dmin == 0) dmin = inferred_d(g);
  std::string csv = "scope,samples,d_min,exponent,std_error,ccdf_r2\n";
  csv += fit_row("all", cl::degree_sequence(g), dmin);
  const bool colored =
      std::any_of(g.metas().begin(), g.metas().end(), [](const cl::NodeMeta& m) { return m.is_seed; });
  if (colored) {
    std::vector<std::size_t> internal(g.node_count(), 0);
    for (cl::NodeId v = 0; v < g.node_count(); ++v)
      for (cl::NodeId y : g.neighbors(v))
        if (g.meta(y).color == g.meta(v).color) ++internal[v];
    csv += fit_row("community_internal", internal, dmin);
  }
  return csv;
}

std::string report_distances(const cl::LabeledGraph& g, std::size_t pairs, std::uint64_t seed) {
  const auto s = cl::distance_stats(g, pairs, seed);
  const double ln_n = g.node_count() > 1 ? std::log(static_cast<double>(g.node_count())) : 0.0;
  return "pairs,unreachable,avg_distance,est_diameter,ln_n,avg_over_ln_n\n" + std::to_string(s.pairs) + "," +
         std::to_string(s.unreachable) + "," + fixed6(s.avg_distance) + "," + std::to_string(s.est_diameter) + "," +
         fixed6(ln_n) + "," + fixed6(ln_n > 0 ? s.avg_distance / ln_n : 0.0) + "\n";
}

std::string report_ptree(const cl::LabeledGraph& g) {
  const auto t = cl::infection_priority_tree(g);
  const double ln_n = g.node_count() > 1 ? std::log(static_cast<double>(g.node_count())) : 0.0;
  return "vertices,edges,is_tree,height,ln_n,violations\n" + std::to_string(t.vertices.size()) + "," +
         std::to_string(t.edges.size()) + "," + (t.is_tree ? "1" : "0") + "," + std::to_string(t.height) + "," +
         fixed6(ln_n) + "," + std::to_string(t.violations.size()) + "\n";
}

std::string report_navigate(const cl::LabeledGraph& g, std::size_t pairs, std::uint64_t seed, std::size_t budget) {
  const std::size_t n = g.node_count();
  if (n == 0) throw UsageError("graph is empty");
  if (budget == 0) budget = 4 * std::max<std::size_t>(1, cl::log_attack_size(n));
  cl::Rng rng(cl::derive_stream_seed(seed, 0x4E41));
  std::string csv = "pair,u,v,success,path_length,bfs_distance,visited\n";
  for (std::size_t i = 0; i < pairs; ++i) {
    const auto u = static_cast<cl::NodeId>(rng.below(n));
    const auto v = static_cast<cl::NodeId>(rng.below(n));
    const auto nav = cl::navigate(g, u, v, budget);
    const auto exact = cl::hop_distance(g, u, v);
    csv += std::to_string(i) + "," + std::to_string(u) + "," + std::to_string(v) + "," + (nav.path ? "1" : "0") +
           "," + (nav.path ? std::to_string(nav.path->size() - 1) : "") + "," +
           (exact ? std::to_string(*exact) : "") + "," + std::to_string(nav.visited) + "\n";
  }
  return csv;
}

int run_analyze(const AnalyzeArgs& args) {
  const auto g = cl::load_graph(args.graph);
  std::string csv;
  if (args.report == "communities") {
    csv = report_communities(g);
  } else if (args.report == "conductance") {
    csv = report_conductance(g, args.a);
  } else if (args.report == "degree-priority") {
    csv = report_degree_priority(g);
  } else if (args.report == "powerlaw") {
    csv = report_powerlaw(g, args.dmin);
  } else if (args.report == "distances") {
    csv = report_distances(g, args.pairs, args.seed);
  } else if (args.report == "ptree") {
    csv = report_ptree(g);
  } else if (args.report == "navigate") {
    csv = report_navigate(g, args.pairs, args.seed, args.budget);
  } else {
    throw UsageError("unknown report '" + args.report + "'");
  }
  write_output(args.out, csv);
  return 0;
}

// ---- experiment -------------------------------------------------------------

struct ExperimentArgs {
  std::string config;
  std::string fig;
  std::string seed;
  std::string out;
  std::string jobs;
};

int run_experiment_cmd(const ExperimentArgs& args) {
  cl::ExperimentConfig cfg;
  try {
    const auto kv = args.config.empty() ? cl::KeyValues{} : cl::load_key_values(args.config);
    std::optional<cl::Figure> fig;
    if (!args.fig.empty()) fig = cl::figure_from_string(args.fig);
    cfg = cl::config_from_key_values(kv, fig);
    if (!args.seed.empty()) cl::apply_key(cfg, "seed", args.seed);
    if (!args.out.empty()) cl::apply_key(cfg, "out", args.out);
    if (!args.jobs.empty()) cl::apply_key(cfg, "jobs", args.jobs);
    cl::validate(cfg);
  } catch (const cl::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  }
  const auto report = cl::run_experiment(cfg, std::cerr);
  for (const auto& f : report.failures) std::cerr << "failed cell: " << f << "\n";
  return report.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cascadelab: cascading-failure laboratory for security-model networks"};
  app.set_version_flag("--version", "cascadelab " + cl::tool_version());
  app.require_subcommand(1);

  GenerateArgs gen;
  auto* generate = app.add_subcommand("generate", "Generate a network and write it in graph v1 format");
  generate->add_option("--model", gen.model, "er | pa | security")
      ->required()
      ->check(CLI::IsMember({"er", "pa", "security"}));
  generate->add_option("--n", gen.n, "Node count")->required();
  generate->add_option("--d", gen.d, "Edges per new node (ER: expected average degree)")->required();
  generate->add_option("--a", gen.a, "Homophyly exponent (security model)")->capture_default_str();
  generate->add_option("--seed", gen.seed, "Master seed")->required();
  generate->add_option("--out", gen.out, "Output graph file ('-' for stdout)")->required();

  CascadeArgs cas;
  auto* cascade = app.add_subcommand("cascade", "Run threshold cascades from an attack set");
  cascade->add_option("--graph", cas.graph, "Graph file")->required();
  cascade->add_option("--attack", cas.attack, "top | ids:FILE")->capture_default_str();
  cascade->add_option("--k", cas.k, "Attack size for --attack top");
  cascade->add_option("--thresholds", cas.thresholds, "uniform:PHI | random")->capture_default_str();
  cascade->add_option("--trials", cas.trials, "Number of trials")->capture_default_str();
  cascade->add_option("--seed", cas.seed, "Master seed for random thresholds")->required();
  cascade->add_option("--out", cas.out, "Output CSV ('-' for stdout)")->required();
  cascade->add_option("--jobs", cas.jobs, "Worker threads")->capture_default_str()->check(CLI::PositiveNumber);

  InjureArgs inj;
  auto* injure = app.add_subcommand("injure", "Physical attack: delete nodes, count survivors left off the giant");
  injure->add_option("--graph", inj.graph, "Graph file")->required();
  injure->add_option("--attack", inj.attack, "top | ids:FILE")->capture_default_str();
  injure->add_option("--k", inj.k, "Attack size for --attack top");
  injure->add_option("--out", inj.out, "Output CSV ('-' for stdout)")->required();

  AnalyzeArgs ana;
  auto* analyze = app.add_subcommand("analyze", "Structural reports");
  analyze->add_option("--graph", ana.graph, "Graph file")->required();
  analyze->add_option("--report", ana.report, "Report kind")
      ->required()
      ->check(CLI::IsMember({"communities", "conductance", "degree-priority", "powerlaw", "distances", "ptree",
                             "navigate"}));
  analyze->add_option("--out", ana.out, "Output CSV ('-' for stdout)")->required();
  analyze->add_option("--pairs", ana.pairs, "Sampled pairs (distances, navigate)")->capture_default_str();
  analyze->add_option("--seed", ana.seed, "Sampling seed")->capture_default_str();
  analyze->add_option("--dmin", ana.dmin, "Power-law lower cutoff (0: inferred creation degree d)")
      ->capture_default_str();
  analyze->add_option("--a", ana.a, "Homophyly exponent for the conductance exponent beta")->capture_default_str();
  analyze->add_option("--budget", ana.budget, "Navigation hop budget (0: 4*ceil(ln n))")->capture_default_str();

  ExperimentArgs exp;
  auto* experiment = app.add_subcommand("experiment", "Reproduce a figure's data as CSV");
  experiment->add_option("--config", exp.config, "key=value config file")->required();
  experiment->add_option("--fig", exp.fig, "1 | 2 | 3 (overrides the config)");
  experiment->add_option("--seed", exp.seed, "Master seed (overrides the config)");
  experiment->add_option("--out", exp.out, "Output directory (overrides the config)");
  experiment->add_option("--jobs", exp.jobs, "Worker threads (overrides the config)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  try {
    if (*generate) return run_generate(gen);
    if (*cascade) return run_cascade(cas);
    if (*injure) return run_injure(inj);
    if (*analyze) return run_analyze(ana);
    if (*experiment) return run_experiment_cmd(exp);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
