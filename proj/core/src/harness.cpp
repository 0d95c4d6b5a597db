#include "cascadelab/harness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <set>
#include <span>
#include <sstream>

#include "cascadelab/cascade.hpp"
#include "cascadelab/parallel.hpp"
#include "cascadelab/rng.hpp"

namespace cascadelab {

std::string tool_version() {
#ifdef CASCADELAB_VERSION
  return CASCADELAB_VERSION;
#else
  return "unknown";
#endif
}

std::size_t log_attack_size(std::size_t n) {
  if (n <= 1) return 0;
  return std::min(n, static_cast<std::size_t>(std::ceil(std::log(static_cast<double>(n)))));
}

std::size_t fig1_max_attack(std::size_t n) {
  if (n <= 1) return 0;
  return std::min(n, static_cast<std::size_t>(std::ceil(5.0 * std::log(static_cast<double>(n)))));
}

std::vector<Cell> plan_cells(const ExperimentConfig& cfg) {
  std::vector<Cell> cells;
  for (Model m : cfg.models)
    for (std::size_t n : cfg.n_list) cells.push_back({m, n});
  return cells;
}

std::string csv_header(Figure f) {
  switch (f) {
    case Figure::Fig1: return "model,n,d,k,injury_fraction,max_infection_fraction\n";
    case Figure::Fig2: return "model,n,d,a,max_infection_fraction\n";
    case Figure::Fig3: return "model,n,d,a,security_threshold\n";
  }
  return "";
}

namespace {

std::string fraction(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  return buf;
}

std::string real(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

std::string tag(const ExperimentConfig& cfg, const char* what) {
  return std::string(to_string(cfg.experiment)) + "/" + what;
}

// Max infected count per attack-prefix size over all random-threshold trials.
// counts[k] covers the first k attack nodes, k = 1..max_k.
std::vector<std::size_t> max_infections(const ExperimentConfig& cfg, const Cell& cell, std::size_t graph_index,
                                        const LabeledGraph& g, const std::vector<NodeId>& attack,
                                        std::size_t min_k, std::size_t jobs) {
  const std::size_t max_k = attack.size();
  std::vector<std::vector<std::size_t>> per_trial(cfg.trials);
  std::vector<std::unique_ptr<CascadeRunner>> runners(std::max<std::size_t>(1, std::min(jobs, cfg.trials)));
  parallel_for(cfg.trials, jobs, [&](std::size_t t, std::size_t worker) {
    if (!runners[worker]) runners[worker] = std::make_unique<CascadeRunner>(g);
    CascadeRunner& runner = *runners[worker];
    const std::uint64_t seed = derive_trial_seed(cfg.master_seed, tag(cfg, "thresholds"), to_string(cell.model),
                                                 cell.n, graph_index * cfg.trials + t);
    runner.set_thresholds(random_thresholds(g, seed));
    auto& counts = per_trial[t];
    counts.assign(max_k + 1, 0);
    for (std::size_t k = min_k; k <= max_k; ++k) {
      counts[k] = runner.run_count(std::span<const NodeId>(attack.data(), k));
    }
  });
  std::vector<std::size_t> best(max_k + 1, 0);
  for (const auto& counts : per_trial)
    for (std::size_t k = 0; k <= max_k; ++k) best[k] = std::max(best[k], counts[k]);
  return best;
}

std::string fig1_rows(const ExperimentConfig& cfg, const Cell& cell, std::size_t jobs) {
  const std::size_t max_k = fig1_max_attack(cell.n);
  std::vector<double> injury(max_k + 1, 0.0);
  std::vector<std::size_t> infected(max_k + 1, 0);
  for (std::size_t gi = 0; gi < cfg.graphs_per_cell; ++gi) {
    const LabeledGraph g = cell_graph(cfg, cell, gi);
    const auto attack = cell_attack(cfg, cell, gi, g, max_k);
    for (std::size_t k = 1; k <= max_k; ++k) {
      const auto hurt = injury_set(g, std::span<const NodeId>(attack.data(), k));
      injury[k] += static_cast<double>(hurt.size()) / static_cast<double>(cell.n);
    }
    const auto best = max_infections(cfg, cell, gi, g, attack, 1, jobs);
    for (std::size_t k = 1; k <= max_k; ++k) infected[k] = std::max(infected[k], best[k]);
  }
  std::string rows;
  for (std::size_t k = 1; k <= max_k; ++k) {
    rows += std::string(to_string(cell.model)) + "," + std::to_string(cell.n) + "," + std::to_string(cfg.d) + "," +
            std::to_string(k) + "," + fraction(injury[k] / static_cast<double>(cfg.graphs_per_cell)) + "," +
            fraction(static_cast<double>(infected[k]) / static_cast<double>(cell.n)) + "\n";
  }
  return rows;
}

std::string fig2_rows(const ExperimentConfig& cfg, const Cell& cell, std::size_t jobs) {
  const std::size_t k = log_attack_size(cell.n);
  std::size_t worst = 0;
  for (std::size_t gi = 0; gi < cfg.graphs_per_cell; ++gi) {
    const LabeledGraph g = cell_graph(cfg, cell, gi);
    const auto attack = cell_attack(cfg, cell, gi, g, k);
    const auto best = max_infections(cfg, cell, gi, g, attack, k, jobs);
    worst = std::max(worst, best[k]);
  }
  return std::string(to_string(cell.model)) + "," + std::to_string(cell.n) + "," + std::to_string(cfg.d) + "," +
         real(cfg.a) + "," + fraction(static_cast<double>(worst) / static_cast<double>(cell.n)) + "\n";
}

std::string fig3_rows(const ExperimentConfig& cfg, const Cell& cell, std::size_t jobs) {
  const std::size_t k = log_attack_size(cell.n);
  std::vector<std::optional<double>> thresholds(cfg.graphs_per_cell);
  parallel_for(cfg.graphs_per_cell, jobs, [&](std::size_t gi, std::size_t) {
    const LabeledGraph g = cell_graph(cfg, cell, gi);
    const auto attack = cell_attack(cfg, cell, gi, g, k);
    thresholds[gi] = security_threshold(g, attack, cfg.phi_grid, cfg.epsilon);
  });
  // Worst case over graphs; a graph with no secure grid value dominates.
  std::optional<double> worst = thresholds.front();
  for (const auto& t : thresholds) {
    if (!t || !worst) {
      worst.reset();
      break;
    }
    worst = std::max(*worst, *t);
  }
  return std::string(to_string(cell.model)) + "," + std::to_string(cell.n) + "," + std::to_string(cfg.d) + "," +
         real(cfg.a) + "," + (worst ? real(*worst) : std::string()) + "\n";
}

}  // namespace

LabeledGraph cell_graph(const ExperimentConfig& cfg, const Cell& cell, std::size_t index) {
  GenParams p;
  p.n = cell.n;
  p.d = cfg.d;
  p.a = cfg.a;
  p.master_seed = derive_trial_seed(cfg.master_seed, tag(cfg, "graph"), to_string(cell.model), cell.n, index);
  return generate(cell.model, p);
}

std::vector<NodeId> cell_attack(const ExperimentConfig& cfg, const Cell& cell, std::size_t graph_index,
                                const LabeledGraph& g, std::size_t k) {
  if (cfg.attack == AttackRule::Top) return top_degree_nodes(g, k);
  std::vector<NodeId> order(g.node_count());
  std::iota(order.begin(), order.end(), NodeId{0});
  Rng rng(derive_trial_seed(cfg.master_seed, tag(cfg, "attack"), to_string(cell.model), cell.n, graph_index));
  // Partial Fisher-Yates: the first k entries are a uniform random k-subset in random order.
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t j = i + rng.below(order.size() - i);
    std::swap(order[i], order[j]);
  }
  order.resize(k);
  return order;
}

std::string run_cell(const ExperimentConfig& cfg, const Cell& cell, std::size_t jobs) {
  switch (cfg.experiment) {
    case Figure::Fig1: return fig1_rows(cfg, cell, jobs);
    case Figure::Fig2: return fig2_rows(cfg, cell, jobs);
    case Figure::Fig3: return fig3_rows(cfg, cell, jobs);
  }
  return {};
}

std::string run_figure(const ExperimentConfig& cfg, std::size_t jobs) {
  validate(cfg);
  std::string csv = csv_header(cfg.experiment);
  for (const Cell& cell : plan_cells(cfg)) csv += run_cell(cfg, cell, jobs);
  return csv;
}

namespace {

ExperimentConfig as_figure(ExperimentConfig cfg, Figure f) {
  cfg.experiment = f;
  return cfg;
}

}  // namespace

std::string run_fig1(const ExperimentConfig& cfg, std::size_t jobs) {
  return run_figure(as_figure(cfg, Figure::Fig1), jobs);
}
std::string run_fig2(const ExperimentConfig& cfg, std::size_t jobs) {
  return run_figure(as_figure(cfg, Figure::Fig2), jobs);
}
std::string run_fig3(const ExperimentConfig& cfg, std::size_t jobs) {
  return run_figure(as_figure(cfg, Figure::Fig3), jobs);
}

namespace {

std::string hex64(std::uint64_t x) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(x));
  return buf;
}

std::string cell_key(const ExperimentConfig& cfg, const Cell& cell) {
  return std::string(to_string(cfg.experiment)) + " " + std::string(to_string(cell.model)) + " " +
         std::to_string(cell.n);
}

std::filesystem::path fragment_path(const ExperimentConfig& cfg, const Cell& cell) {
  return cfg.out_dir / "cells" /
         (std::string(to_string(cfg.experiment)) + "_" + std::string(to_string(cell.model)) + "_" +
          std::to_string(cell.n) + ".csv");
}

void write_atomically(const std::filesystem::path& path, const std::string& text) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out << text;
    if (!out) throw std::runtime_error("write failed for " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return std::move(buf).str();
}

// Manifest lines: "tool_version V", "config_hash FIG HASH", "cell FIG MODEL N HASH".
struct Manifest {
  std::map<std::string, std::string> config_hashes;  // fig -> hash
  std::set<std::string> cells;                        // "FIG MODEL N HASH"

  static Manifest load(const std::filesystem::path& path) {
    Manifest m;
    std::ifstream in(path);
    std::string line;
    while (std::getline(in, line)) {
      std::istringstream fields(line);
      std::string kind;
      fields >> kind;
      if (kind == "config_hash") {
        std::string fig, hash;
        fields >> fig >> hash;
        m.config_hashes[fig] = hash;
      } else if (kind == "cell") {
        m.cells.insert(line.substr(5));
      }
    }
    return m;
  }

  std::string render() const {
    std::string out = "tool_version cascadelab " + tool_version() + "\n";
    for (const auto& [fig, hash] : config_hashes) out += "config_hash " + fig + " " + hash + "\n";
    for (const auto& c : cells) out += "cell " + c + "\n";
    return out;
  }
};

}  // namespace

RunReport run_experiment(const ExperimentConfig& cfg, std::ostream& log) {
  for (const auto& w : validate(cfg)) log << "warning: " << w << "\n";
  std::filesystem::create_directories(cfg.out_dir / "cells");
  const auto manifest_path = cfg.out_dir / "manifest.txt";
  Manifest manifest = Manifest::load(manifest_path);

  const std::string fig(to_string(cfg.experiment));
  const std::string hash = hex64(config_hash(cfg));
  manifest.config_hashes[fig] = hash;
  for (auto it = manifest.cells.begin(); it != manifest.cells.end();) {
    const bool same_fig = it->rfind(fig + " ", 0) == 0;
    const bool stale = same_fig && it->substr(it->size() - hash.size()) != hash;
    it = stale ? manifest.cells.erase(it) : std::next(it);
  }

  RunReport report;
  const auto cells = plan_cells(cfg);
  for (const Cell& cell : cells) {
    const std::string entry = cell_key(cfg, cell) + " " + hash;
    const auto fragment = fragment_path(cfg, cell);
    if (manifest.cells.count(entry) && std::filesystem::exists(fragment)) {
      ++report.skipped;
      log << "skip " << cell_key(cfg, cell) << " (already complete)\n";
      continue;
    }
    try {
      log << "run  " << cell_key(cfg, cell) << "\n";
      write_atomically(fragment, run_cell(cfg, cell, cfg.jobs));
      manifest.cells.insert(entry);
      write_atomically(manifest_path, manifest.render());
      ++report.completed;
    } catch (const std::exception& e) {
      report.failures.push_back(cell_key(cfg, cell) + ": " + e.what());
      log << "fail " << cell_key(cfg, cell) << ": " << e.what() << "\n";
    }
  }

  std::string csv = csv_header(cfg.experiment);
  for (const Cell& cell : cells) {
    const std::string entry = cell_key(cfg, cell) + " " + hash;
    if (manifest.cells.count(entry)) csv += read_file(fragment_path(cfg, cell));
  }
  write_atomically(cfg.out_dir / (fig + ".csv"), csv);
  write_atomically(manifest_path, manifest.render());
  return report;
}

}  // namespace cascadelab
