#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "cascadelab/metrics.hpp"

namespace cascadelab {

namespace {

constexpr std::size_t kMinSamples = 100;

double ccdf_r_squared(std::vector<std::size_t> tail) {
  std::sort(tail.begin(), tail.end());
  const auto m = static_cast<double>(tail.size());
  std::vector<double> xs;
  std::vector<double> ys;
  for (std::size_t i = 0; i < tail.size();) {
    std::size_t j = i;
    while (j < tail.size() && tail[j] == tail[i]) ++j;
    // P(X >= tail[i])
    xs.push_back(std::log10(static_cast<double>(tail[i])));
    ys.push_back(std::log10(static_cast<double>(tail.size() - i) / m));
    i = j;
  }
  const auto k = static_cast<double>(xs.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sx += xs[i];
    sy += ys[i];
    sxx += xs[i] * xs[i];
    sxy += xs[i] * ys[i];
    syy += ys[i] * ys[i];
  }
  const double cov = sxy - sx * sy / k;
  const double var_x = sxx - sx * sx / k;
  const double var_y = syy - sy * sy / k;
  if (var_x <= 0.0 || var_y <= 0.0) return 0.0;
  return cov * cov / (var_x * var_y);
}

}  // namespace

PowerLawFit powerlaw_exponent(std::span<const std::size_t> values, std::size_t d_min) {
  if (d_min < 1) throw std::invalid_argument("d_min must be >= 1");
  std::vector<std::size_t> tail;
  for (std::size_t x : values)
    if (x >= d_min) tail.push_back(x);
  if (tail.size() < kMinSamples) {
    throw std::invalid_argument("power-law fit needs at least " + std::to_string(kMinSamples) +
                                " samples >= d_min, got " + std::to_string(tail.size()));
  }
  if (std::all_of(tail.begin(), tail.end(), [&](std::size_t x) { return x == tail.front(); })) {
    throw std::invalid_argument("power-law exponent undefined: all samples equal");
  }

  const double shift = static_cast<double>(d_min) - 0.5;
  double log_sum = 0.0;
  for (std::size_t x : tail) log_sum += std::log(static_cast<double>(x) / shift);

  PowerLawFit fit;
  fit.samples = tail.size();
  fit.d_min = d_min;
  fit.exponent = 1.0 + static_cast<double>(tail.size()) / log_sum;
  fit.std_error = (fit.exponent - 1.0) / std::sqrt(static_cast<double>(tail.size()));
  fit.ccdf_r2 = ccdf_r_squared(std::move(tail));
  return fit;
}

}  // namespace cascadelab
