#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cascadelab/config.hpp"
#include "cascadelab/harness.hpp"

using namespace cascadelab;

namespace {

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> fields;
    std::size_t pos = 0;
    while (true) {
      const auto comma = line.find(',', pos);
      fields.push_back(line.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos));
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    rows.push_back(fields);
  }
  return rows;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

ExperimentConfig small(Figure f) {
  auto cfg = default_config(f);
  cfg.trials = 5;
  cfg.n_list = {300};
  cfg.d = 4;
  return cfg;
}

struct TempDir {
  std::filesystem::path path;
  explicit TempDir(const std::string& name) : path(std::filesystem::temp_directory_path() / name) {
    std::filesystem::remove_all(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
};

}  // namespace

TEST(AttackSizes, NaturalLogCeiling) {
  EXPECT_EQ(log_attack_size(10000), 10u);
  EXPECT_EQ(fig1_max_attack(10000), 47u);
  EXPECT_EQ(log_attack_size(100), 5u);
  EXPECT_EQ(log_attack_size(1000), 7u);
  EXPECT_EQ(log_attack_size(100000), 12u);
  EXPECT_EQ(log_attack_size(1), 0u);
  EXPECT_EQ(fig1_max_attack(3), 3u);  // clamped to n
}

TEST(Config, Defaults) {
  const auto f2 = default_config(Figure::Fig2);
  EXPECT_EQ(f2.n_list, (std::vector<std::size_t>{100, 300, 1000, 3000, 10000}));
  EXPECT_EQ(f2.trials, 100u);
  EXPECT_EQ(f2.attack, AttackRule::Top);
  EXPECT_EQ(f2.graphs_per_cell, 1u);
  const auto f3 = default_config(Figure::Fig3);
  EXPECT_EQ(f3.n_list, (std::vector<std::size_t>{1000, 10000, 30000, 100000}));
  EXPECT_EQ(f3.d, 5u);
  EXPECT_DOUBLE_EQ(f3.epsilon, 0.1);
  EXPECT_EQ(f3.phi_grid.size(), 50u);
  EXPECT_DOUBLE_EQ(f3.phi_grid.front(), 0.01);
  EXPECT_DOUBLE_EQ(f3.phi_grid.back(), 0.50);
  const auto f1 = default_config(Figure::Fig1);
  EXPECT_EQ(f1.models, (std::vector<Model>{Model::Er, Model::Pa}));
  EXPECT_EQ(f1.n_list, (std::vector<std::size_t>{10000}));
  EXPECT_EQ(f1.d, 10u);
}

TEST(Config, ParsesKeyValueFile) {
  std::istringstream in(
      "# comment\n"
      "experiment = fig3\n"
      "models=er,security  # trailing comment\n"
      "n_list=1000,2000\n"
      "phi_grid=0.05:0.25:0.05\n"
      "seed=99\n"
      "\n"
      "graphs_per_cell=2\n");
  const auto cfg = config_from_key_values(parse_key_values(in));
  EXPECT_EQ(cfg.experiment, Figure::Fig3);
  EXPECT_EQ(cfg.models, (std::vector<Model>{Model::Er, Model::Security}));
  EXPECT_EQ(cfg.n_list, (std::vector<std::size_t>{1000, 2000}));
  ASSERT_EQ(cfg.phi_grid.size(), 5u);
  EXPECT_DOUBLE_EQ(cfg.phi_grid[2], 0.15);
  EXPECT_DOUBLE_EQ(cfg.phi_grid[4], 0.25);
  EXPECT_EQ(cfg.master_seed, 99u);
  EXPECT_EQ(cfg.graphs_per_cell, 2u);
  EXPECT_EQ(cfg.d, 5u);  // fig3 default kept
}

TEST(Config, FigureOverrideWins) {
  std::istringstream in("experiment=fig3\n");
  EXPECT_EQ(config_from_key_values(parse_key_values(in), Figure::Fig1).experiment, Figure::Fig1);
}

TEST(Config, Errors) {
  std::istringstream no_eq("experiment\n");
  EXPECT_THROW(parse_key_values(no_eq), ConfigError);
  EXPECT_THROW(config_from_key_values({{"bogus", "1"}}), ConfigError);
  EXPECT_THROW(config_from_key_values({{"trials", "ten"}}), ConfigError);
  EXPECT_THROW(config_from_key_values({{"models", "er,ws"}}), ConfigError);
  EXPECT_THROW(config_from_key_values({{"experiment", "fig4"}}), ConfigError);
  EXPECT_THROW(config_from_key_values({{"phi_grid", "0.5:0.1:0.1"}}), ConfigError);
  EXPECT_THROW(load_key_values("/nonexistent/cascadelab.cfg"), ConfigError);

  auto cfg = small(Figure::Fig2);
  cfg.trials = 0;
  EXPECT_THROW(validate(cfg), ConfigError);
  cfg = small(Figure::Fig2);
  cfg.n_list = {300, 100};
  EXPECT_THROW(validate(cfg), ConfigError);
  cfg = small(Figure::Fig2);
  cfg.n_list = {};
  EXPECT_THROW(validate(cfg), ConfigError);
  cfg = small(Figure::Fig2);
  cfg.a = 1.0;
  EXPECT_THROW(validate(cfg), ConfigError);
  cfg = small(Figure::Fig3);
  cfg.epsilon = 1.5;
  EXPECT_THROW(validate(cfg), ConfigError);
  cfg = small(Figure::Fig3);
  cfg.phi_grid = {0.3, 0.2};
  EXPECT_THROW(validate(cfg), ConfigError);
  cfg = small(Figure::Fig2);
  cfg.n_list = {4};
  EXPECT_THROW(validate(cfg), ConfigError);
}

TEST(Config, WarnsOnSmallD) {
  auto cfg = small(Figure::Fig2);
  cfg.d = 3;
  EXPECT_EQ(validate(cfg).size(), 1u);
  cfg.d = 4;
  EXPECT_TRUE(validate(cfg).empty());
}

TEST(Config, HashIgnoresOutputAndJobs) {
  auto a = small(Figure::Fig2);
  auto b = a;
  b.out_dir = "elsewhere";
  b.jobs = 8;
  EXPECT_EQ(config_hash(a), config_hash(b));
  b.trials = 6;
  EXPECT_NE(config_hash(a), config_hash(b));
}

TEST(Fig1, RowsAndBounds) {
  auto cfg = default_config(Figure::Fig1);
  cfg.trials = 3;
  cfg.n_list = {2000};
  const auto rows = parse_csv(run_fig1(cfg));
  ASSERT_EQ(rows[0], (std::vector<std::string>{"model", "n", "d", "k", "injury_fraction", "max_infection_fraction"}));
  const std::size_t per_model = fig1_max_attack(2000);
  ASSERT_EQ(rows.size(), 1 + 2 * per_model);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const std::size_t k = std::stoul(rows[i][3]);
    EXPECT_EQ(k, (i - 1) % per_model + 1);  // k starts at 1
    for (int c : {4, 5}) {
      const double f = std::stod(rows[i][c]);
      EXPECT_GE(f, 0.0);
      EXPECT_LE(f, 1.0);
    }
    if (k > 1) {  // a larger attack prefix never infects less
      EXPECT_GE(std::stod(rows[i][5]), std::stod(rows[i - 1][5]));
    }
  }
}

TEST(Fig1, FortySevenRowsAtTenThousand) {
  auto cfg = default_config(Figure::Fig1);
  cfg.trials = 1;
  cfg.models = {Model::Er};
  EXPECT_EQ(parse_csv(run_fig1(cfg)).size(), 1u + 47u);
}

TEST(Fig2, BoundaryAndDeterminism) {
  auto cfg = small(Figure::Fig2);
  cfg.n_list = {5, 300};
  const auto once = run_fig2(cfg);
  EXPECT_EQ(once, run_fig2(cfg));
  EXPECT_EQ(once, run_fig2(cfg, 4));
  const auto rows = parse_csv(once);
  ASSERT_EQ(rows.size(), 1u + 3u * 2u);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const double f = std::stod(rows[i][4]);
    EXPECT_GE(f, 0.0);
    EXPECT_LE(f, 1.0);
    EXPECT_EQ(rows[i][3], "1.5");
  }
}

TEST(Fig2, RandomAttackRuleDiffers) {
  auto cfg = small(Figure::Fig2);
  cfg.models = {Model::Pa};
  cfg.n_list = {2000};
  auto rnd = cfg;
  rnd.attack = AttackRule::Random;
  EXPECT_NE(run_fig2(cfg), run_fig2(rnd));
  const Cell cell{Model::Pa, 2000};
  const auto g = cell_graph(rnd, cell, 0);
  auto a = cell_attack(rnd, cell, 0, g, 8);
  std::sort(a.begin(), a.end());
  EXPECT_EQ(std::adjacent_find(a.begin(), a.end()), a.end());
  EXPECT_EQ(a.size(), 8u);
}

TEST(Fig3, GridOfOneAndNone) {
  auto cfg = small(Figure::Fig3);
  cfg.models = {Model::Er};
  cfg.n_list = {1000};
  cfg.phi_grid = {1.0};
  auto rows = parse_csv(run_fig3(cfg));
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[1][4], "1");
  cfg.phi_grid = {0.01};  // everything burns at 1 percent
  rows = parse_csv(run_fig3(cfg));
  EXPECT_EQ(rows[1].size(), 5u);
  EXPECT_EQ(rows[1][4], "");
}

TEST(Fig3, ThresholdNonIncreasingInEpsilon) {
  auto cfg = small(Figure::Fig3);
  cfg.n_list = {2000};
  cfg.phi_grid.clear();
  for (int i = 1; i <= 100; ++i) cfg.phi_grid.push_back(i / 100.0);
  std::vector<double> prev(3, 2.0);
  for (double eps : {0.05, 0.1, 0.2}) {
    cfg.epsilon = eps;
    const auto rows = parse_csv(run_fig3(cfg));
    for (std::size_t i = 1; i < rows.size(); ++i) {
      const double v = rows[i][4].empty() ? 2.0 : std::stod(rows[i][4]);
      EXPECT_LE(v, prev[i - 1]);
      prev[i - 1] = v;
    }
  }
}

TEST(Fig3, JobsDoNotChangeOutput) {
  auto cfg = small(Figure::Fig3);
  cfg.graphs_per_cell = 3;
  EXPECT_EQ(run_fig3(cfg, 1), run_fig3(cfg, 3));
}

TEST(Experiment, WritesResumesAndInvalidates) {
  TempDir dir("cascadelab_harness_test");
  auto cfg = small(Figure::Fig2);
  cfg.out_dir = dir.path;
  std::ostringstream log;
  auto first = run_experiment(cfg, log);
  EXPECT_EQ(first.completed, 3u);
  EXPECT_EQ(first.skipped, 0u);
  EXPECT_EQ(first.exit_code(), 0);
  const auto csv = slurp(dir.path / "fig2.csv");
  EXPECT_EQ(csv, run_fig2(cfg));
  const auto manifest = slurp(dir.path / "manifest.txt");
  EXPECT_NE(manifest.find("tool_version cascadelab " + tool_version()), std::string::npos);
  EXPECT_NE(manifest.find("config_hash fig2 "), std::string::npos);
  EXPECT_NE(manifest.find("cell fig2 security 300 "), std::string::npos);

  auto second = run_experiment(cfg, log);
  EXPECT_EQ(second.completed, 0u);
  EXPECT_EQ(second.skipped, 3u);
  EXPECT_EQ(slurp(dir.path / "fig2.csv"), csv);

  cfg.n_list = {300, 500};  // new cell, old cells stale under the new hash
  auto third = run_experiment(cfg, log);
  EXPECT_EQ(third.completed, 6u);
  EXPECT_EQ(slurp(dir.path / "fig2.csv"), run_fig2(cfg));

  // A second figure shares the directory without disturbing the first.
  auto f3 = small(Figure::Fig3);
  f3.out_dir = dir.path;
  EXPECT_EQ(run_experiment(f3, log).completed, 3u);
  EXPECT_EQ(run_experiment(cfg, log).skipped, 6u);
}

TEST(Experiment, JobsGiveIdenticalFiles) {
  TempDir a("cascadelab_jobs_a"), b("cascadelab_jobs_b");
  auto cfg = small(Figure::Fig1);
  cfg.n_list = {400};
  cfg.out_dir = a.path;
  std::ostringstream log;
  run_experiment(cfg, log);
  cfg.out_dir = b.path;
  cfg.jobs = 8;
  run_experiment(cfg, log);
  EXPECT_EQ(slurp(a.path / "fig1.csv"), slurp(b.path / "fig1.csv"));
  EXPECT_EQ(slurp(a.path / "manifest.txt"), slurp(b.path / "manifest.txt"));
}

TEST(Experiment, ExitCodes) {
  RunReport r;
  EXPECT_EQ(r.exit_code(), 0);
  r.failures.push_back("x");
  EXPECT_EQ(r.exit_code(), 3);
}
