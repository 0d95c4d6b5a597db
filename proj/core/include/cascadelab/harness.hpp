#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <ostream>
#include <string>
#include <vector>

#include "cascadelab/config.hpp"
#include "cascadelab/generators.hpp"
#include "cascadelab/graph.hpp"

namespace cascadelab {

/// ceil(ln n), clamped to [0, n].
std::size_t log_attack_size(std::size_t n);
/// ceil(5 ln n), clamped to [0, n].
std::size_t fig1_max_attack(std::size_t n);

/// One (model, n) unit of work.
struct Cell {
  Model model = Model::Er;
  std::size_t n = 0;
};

std::vector<Cell> plan_cells(const ExperimentConfig& cfg);

std::string csv_header(Figure f);

/// CSV rows (no header) for one cell. Output depends only on cfg and cell;
/// `jobs` merely spreads trials over threads.
std::string run_cell(const ExperimentConfig& cfg, const Cell& cell, std::size_t jobs = 1);

/// Whole-figure CSV including the header.
std::string run_fig1(const ExperimentConfig& cfg, std::size_t jobs = 1);
std::string run_fig2(const ExperimentConfig& cfg, std::size_t jobs = 1);
std::string run_fig3(const ExperimentConfig& cfg, std::size_t jobs = 1);
std::string run_figure(const ExperimentConfig& cfg, std::size_t jobs = 1);

/// The graph a cell uses for its `index`-th draw.
LabeledGraph cell_graph(const ExperimentConfig& cfg, const Cell& cell, std::size_t index);

/// Attack order for a cell graph: top-degree ranking or a seeded random permutation prefix.
std::vector<NodeId> cell_attack(const ExperimentConfig& cfg, const Cell& cell, std::size_t graph_index,
                                const LabeledGraph& g, std::size_t k);

struct RunReport {
  std::size_t completed = 0;
  std::size_t skipped = 0;
  std::vector<std::string> failures;

  int exit_code() const { return failures.empty() ? 0 : 3; }
};

/// Runs every cell into cfg.out_dir, skipping cells the manifest already
/// records for the same config hash, then writes figN.csv and manifest.txt.
RunReport run_experiment(const ExperimentConfig& cfg, std::ostream& log);

std::string tool_version();

}  // namespace cascadelab
