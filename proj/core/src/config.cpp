#include "cascadelab/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "cascadelab/rng.hpp"

namespace cascadelab {

std::string_view to_string(Figure f) {
  switch (f) {
    case Figure::Fig1: return "fig1";
    case Figure::Fig2: return "fig2";
    case Figure::Fig3: return "fig3";
  }
  return "fig1";
}

std::string_view to_string(AttackRule r) { return r == AttackRule::Top ? "top" : "random"; }

Figure figure_from_string(std::string_view s) {
  if (s == "fig1" || s == "1") return Figure::Fig1;
  if (s == "fig2" || s == "2") return Figure::Fig2;
  if (s == "fig3" || s == "3") return Figure::Fig3;
  throw ConfigError("unknown experiment '" + std::string(s) + "' (expected fig1, fig2 or fig3)");
}

AttackRule attack_rule_from_string(std::string_view s) {
  if (s == "top") return AttackRule::Top;
  if (s == "random") return AttackRule::Random;
  throw ConfigError("unknown attack rule '" + std::string(s) + "' (expected top or random)");
}

std::vector<double> default_phi_grid() {
  std::vector<double> grid;
  for (int i = 1; i <= 50; ++i) grid.push_back(i / 100.0);
  return grid;
}

ExperimentConfig default_config(Figure f) {
  ExperimentConfig cfg;
  cfg.experiment = f;
  cfg.phi_grid = default_phi_grid();
  switch (f) {
    case Figure::Fig1:
      cfg.models = {Model::Er, Model::Pa};
      cfg.n_list = {10000};
      cfg.d = 10;
      break;
    case Figure::Fig2:
      cfg.models = {Model::Er, Model::Pa, Model::Security};
      cfg.n_list = {100, 300, 1000, 3000, 10000};
      cfg.d = 10;
      break;
    case Figure::Fig3:
      cfg.models = {Model::Er, Model::Pa, Model::Security};
      cfg.n_list = {1000, 10000, 30000, 100000};
      cfg.d = 5;
      break;
  }
  return cfg;
}

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (true) {
    const auto next = s.find(sep, pos);
    out.push_back(trim(s.substr(pos, next == std::string_view::npos ? std::string_view::npos : next - pos)));
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  return out;
}

template <typename T>
T parse_number(std::string_view key, std::string_view text) {
  T value{};
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    throw ConfigError("bad value '" + std::string(text) + "' for key '" + std::string(key) + "'");
  }
  return value;
}

double parse_real(std::string_view key, std::string_view text) {
  // std::from_chars for double is available in libstdc++ 11.
  return parse_number<double>(key, text);
}

std::vector<double> parse_grid(std::string_view key, std::string_view text) {
  if (text.find(':') != std::string_view::npos) {
    const auto parts = split(text, ':');
    if (parts.size() != 3) throw ConfigError("grid range must be start:stop:step");
    const double start = parse_real(key, parts[0]);
    const double stop = parse_real(key, parts[1]);
    const double step = parse_real(key, parts[2]);
    if (!(step > 0.0) || stop < start) throw ConfigError("bad grid range '" + std::string(text) + "'");
    const auto count = static_cast<std::size_t>(std::floor((stop - start) / step + 1e-9)) + 1;
    std::vector<double> grid;
    for (std::size_t i = 0; i < count; ++i) {
      grid.push_back(std::round((start + static_cast<double>(i) * step) * 1e12) / 1e12);
    }
    return grid;
  }
  std::vector<double> grid;
  for (auto part : split(text, ',')) grid.push_back(parse_real(key, part));
  return grid;
}

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

KeyValues parse_key_values(std::istream& in) {
  KeyValues kv;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view = line;
    if (const auto hash = view.find('#'); hash != std::string_view::npos) view = view.substr(0, hash);
    view = trim(view);
    if (view.empty()) continue;
    const auto eq = view.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("config line " + std::to_string(line_no) + ": expected key=value");
    }
    const auto key = trim(view.substr(0, eq));
    const auto value = trim(view.substr(eq + 1));
    if (key.empty()) throw ConfigError("config line " + std::to_string(line_no) + ": empty key");
    kv.emplace_back(std::string(key), std::string(value));
  }
  return kv;
}

KeyValues load_key_values(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path.string());
  return parse_key_values(in);
}

void apply_key(ExperimentConfig& cfg, std::string_view key, std::string_view value) {
  if (key == "experiment" || key == "fig") {
    cfg.experiment = figure_from_string(value);
  } else if (key == "models") {
    cfg.models.clear();
    for (auto m : split(value, ',')) {
      try {
        cfg.models.push_back(model_from_string(m));
      } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
      }
    }
  } else if (key == "n_list") {
    cfg.n_list.clear();
    for (auto part : split(value, ',')) cfg.n_list.push_back(parse_number<std::size_t>(key, part));
  } else if (key == "d") {
    cfg.d = parse_number<std::size_t>(key, value);
  } else if (key == "a") {
    cfg.a = parse_real(key, value);
  } else if (key == "trials") {
    cfg.trials = parse_number<std::size_t>(key, value);
  } else if (key == "epsilon") {
    cfg.epsilon = parse_real(key, value);
  } else if (key == "phi_grid") {
    cfg.phi_grid = parse_grid(key, value);
  } else if (key == "seed" || key == "master_seed") {
    cfg.master_seed = parse_number<std::uint64_t>(key, value);
  } else if (key == "attack") {
    cfg.attack = attack_rule_from_string(value);
  } else if (key == "graphs_per_cell" || key == "graphs-per-cell") {
    cfg.graphs_per_cell = parse_number<std::size_t>(key, value);
  } else if (key == "out") {
    cfg.out_dir = std::string(value);
  } else if (key == "jobs") {
    cfg.jobs = parse_number<std::size_t>(key, value);
  } else {
    throw ConfigError("unknown config key '" + std::string(key) + "'");
  }
}

ExperimentConfig config_from_key_values(const KeyValues& kv, std::optional<Figure> fig) {
  Figure chosen = Figure::Fig2;
  for (const auto& [key, value] : kv)
    if (key == "experiment" || key == "fig") chosen = figure_from_string(value);
  if (fig) chosen = *fig;

  ExperimentConfig cfg = default_config(chosen);
  for (const auto& [key, value] : kv) {
    if (key == "experiment" || key == "fig") continue;
    apply_key(cfg, key, value);
  }
  return cfg;
}

std::vector<std::string> validate(const ExperimentConfig& cfg) {
  std::vector<std::string> warnings;
  if (cfg.models.empty()) throw ConfigError("models must not be empty");
  if (cfg.n_list.empty()) throw ConfigError("n_list must not be empty");
  for (std::size_t i = 1; i < cfg.n_list.size(); ++i) {
    if (cfg.n_list[i] <= cfg.n_list[i - 1]) throw ConfigError("n_list must be strictly ascending");
  }
  if (cfg.trials < 1) throw ConfigError("trials must be >= 1");
  if (cfg.graphs_per_cell < 1) throw ConfigError("graphs_per_cell must be >= 1");
  if (cfg.jobs < 1) throw ConfigError("jobs must be >= 1");
  if (cfg.d < 1) throw ConfigError("d must be >= 1");
  if (cfg.d < 4) warnings.push_back("d < 4: the security guarantees assume d >= 4");
  const bool has_security = std::find(cfg.models.begin(), cfg.models.end(), Model::Security) != cfg.models.end();
  if (has_security) {
    if (!(cfg.a > 1.0)) throw ConfigError("homophyly exponent a must be > 1");
    if (cfg.d < 2) throw ConfigError("security model requires d >= 2");
  }
  for (std::size_t n : cfg.n_list) {
    if (n < cfg.d + 1) {
      throw ConfigError("n=" + std::to_string(n) + " is below d+1=" + std::to_string(cfg.d + 1));
    }
  }
  if (cfg.experiment == Figure::Fig3) {
    if (!(cfg.epsilon > 0.0 && cfg.epsilon < 1.0)) throw ConfigError("epsilon must lie in (0, 1)");
    if (cfg.phi_grid.empty()) throw ConfigError("phi_grid must not be empty");
    for (std::size_t i = 0; i < cfg.phi_grid.size(); ++i) {
      if (!(cfg.phi_grid[i] > 0.0 && cfg.phi_grid[i] <= 1.0)) throw ConfigError("phi_grid values must lie in (0, 1]");
      if (i > 0 && cfg.phi_grid[i] <= cfg.phi_grid[i - 1]) throw ConfigError("phi_grid must be ascending");
    }
  }
  return warnings;
}

std::string canonical_string(const ExperimentConfig& cfg) {
  std::ostringstream out;
  out << "experiment=" << to_string(cfg.experiment) << "\nmodels=";
  for (std::size_t i = 0; i < cfg.models.size(); ++i) out << (i ? "," : "") << to_string(cfg.models[i]);
  out << "\nn_list=";
  for (std::size_t i = 0; i < cfg.n_list.size(); ++i) out << (i ? "," : "") << cfg.n_list[i];
  out << "\nd=" << cfg.d << "\na=" << format_double(cfg.a) << "\ntrials=" << cfg.trials
      << "\nepsilon=" << format_double(cfg.epsilon) << "\nphi_grid=";
  for (std::size_t i = 0; i < cfg.phi_grid.size(); ++i) out << (i ? "," : "") << format_double(cfg.phi_grid[i]);
  out << "\nseed=" << cfg.master_seed << "\nattack=" << to_string(cfg.attack)
      << "\ngraphs_per_cell=" << cfg.graphs_per_cell << "\n";
  return std::move(out).str();
}

std::uint64_t config_hash(const ExperimentConfig& cfg) { return fnv1a64(canonical_string(cfg)); }

}  // namespace cascadelab
