#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <istream>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cascadelab/generators.hpp"

namespace cascadelab {

enum class Figure { Fig1 = 1, Fig2 = 2, Fig3 = 3 };
enum class AttackRule { Top, Random };

std::string_view to_string(Figure f);
std::string_view to_string(AttackRule r);
Figure figure_from_string(std::string_view s);  ///< "fig2", "2"
AttackRule attack_rule_from_string(std::string_view s);

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ExperimentConfig {
  Figure experiment = Figure::Fig2;
  std::vector<Model> models;
  std::vector<std::size_t> n_list;
  std::size_t d = 10;
  double a = 1.5;
  std::size_t trials = 100;
  double epsilon = 0.1;
  std::vector<double> phi_grid;
  std::uint64_t master_seed = 1;
  AttackRule attack = AttackRule::Top;
  std::size_t graphs_per_cell = 1;

  // Execution knobs; they never change results and are excluded from the hash.
  std::filesystem::path out_dir = "results";
  std::size_t jobs = 1;
};

/// Defaults for one figure (models, n_list, d, grid).
ExperimentConfig default_config(Figure f);

/// {0.01, 0.02, ..., 0.50}.
std::vector<double> default_phi_grid();

using KeyValues = std::vector<std::pair<std::string, std::string>>;

/// Flat `key = value` text; '#' starts a comment. Throws ConfigError naming the line.
KeyValues parse_key_values(std::istream& in);
KeyValues load_key_values(const std::filesystem::path& path);

/// Starts from default_config of the chosen figure (`fig` wins over an
/// `experiment` key) and applies every key. Throws ConfigError.
ExperimentConfig config_from_key_values(const KeyValues& kv, std::optional<Figure> fig = std::nullopt);

/// Applies one key; the CLI uses this for overrides.
void apply_key(ExperimentConfig& cfg, std::string_view key, std::string_view value);

/// Throws ConfigError on the first invalid field. Returns warnings.
std::vector<std::string> validate(const ExperimentConfig& cfg);

/// Canonical text of every result-affecting field, and its FNV-1a hash.
std::string canonical_string(const ExperimentConfig& cfg);
std::uint64_t config_hash(const ExperimentConfig& cfg);

}  // namespace cascadelab
