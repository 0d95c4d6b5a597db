// Measures the ratios behind the acceptance constants over independent runs
// and prints frozen values (max ratio plus 10% headroom, rounded up to 0.01).
//
//   cascadelab-calibrate [runs] [master_seed]

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "cascadelab/community.hpp"
#include "cascadelab/generators.hpp"
#include "cascadelab/metrics.hpp"
#include "cascadelab/rng.hpp"

namespace cl = cascadelab;

namespace {

constexpr double kA = 1.5;
constexpr std::size_t kD = 10;
constexpr std::size_t kPairs = 2000;

struct Series {
  std::string name;
  std::vector<double> ratios;

  double max() const { return *std::max_element(ratios.begin(), ratios.end()); }
  double frozen() const { return std::ceil(max() * 1.10 * 100.0) / 100.0; }
};

void report(const Series& s) {
  double mean = 0.0;
  for (double r : s.ratios) mean += r;
  mean /= static_cast<double>(s.ratios.size());
  std::printf("%-28s runs=%zu mean=%.4f max=%.4f frozen=%.2f\n", s.name.c_str(), s.ratios.size(), mean, s.max(),
              s.frozen());
}

}  // namespace

int main(int argc, char** argv) {
  const std::size_t runs = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 20;
  const std::uint64_t master = argc > 2 ? std::strtoull(argv[2], nullptr, 10) : 0xCA11B8A7EULL;

  Series c1{"C1 max_comm/(ln n)^(a+1)", {}};
  Series c2{"C2 avg_dist/ln n", {}};
  Series diam{"Cdiam max_comm_diam/lnln n", {}};
  Series cond{"Ccond phi*|W|^beta (80th pct)", {}};
  Series c3{"C3 ptree_height/ln n", {}};

  const std::size_t n5 = 100000;
  const double ln5 = std::log(static_cast<double>(n5));
  const double beta = (kA - 1.0) / (4.0 * (kA + 1.0));
  for (std::size_t r = 0; r < runs; ++r) {
    const auto g = cl::gen_security(n5, kD, kA, cl::derive_trial_seed(master, "calibrate/principles", "security", n5, r));
    const auto comms = cl::communities(g);
    std::size_t biggest = 0;
    std::vector<double> scaled;
    for (const auto& c : comms) {
      biggest = std::max(biggest, c.members.size());
      scaled.push_back(cl::conductance(g, c.members) * std::pow(static_cast<double>(c.members.size()), beta));
    }
    std::sort(scaled.begin(), scaled.end());
    c1.ratios.push_back(static_cast<double>(biggest) / std::pow(ln5, kA + 1.0));
    cond.ratios.push_back(scaled[static_cast<std::size_t>(0.8 * static_cast<double>(scaled.size() - 1))]);
    const auto stats = cl::distance_stats(g, kPairs, cl::derive_trial_seed(master, "calibrate/pairs", "security", n5, r));
    c2.ratios.push_back(stats.avg_distance / ln5);
    std::size_t worst = 0;
    for (const auto& d : cl::community_diameters(g))
      if (d) worst = std::max(worst, *d);
    diam.ratios.push_back(static_cast<double>(worst) / std::log(ln5));
  }

  for (std::size_t n : {1000u, 10000u, 100000u}) {
    const double ln_n = std::log(static_cast<double>(n));
    for (std::size_t r = 0; r < runs; ++r) {
      const auto g = cl::gen_security(n, kD, kA, cl::derive_trial_seed(master, "calibrate/ptree", "security", n, r));
      const auto t = cl::infection_priority_tree(g);
      if (!t.is_tree) std::printf("warning: n=%zu run %zu is not a tree\n", n, r);
      c3.ratios.push_back(static_cast<double>(t.height) / ln_n);
    }
  }

  std::printf("master_seed=%llu runs=%zu n=%zu d=%zu a=%.2f\n", static_cast<unsigned long long>(master), runs, n5, kD,
              kA);
  for (const auto* s : {&c1, &c2, &diam, &cond, &c3}) report(*s);
  return 0;
}
