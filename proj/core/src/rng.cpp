#include "cascadelab/rng.hpp"

namespace cascadelab {

namespace {
__extension__ using u128 = unsigned __int128;
}  // namespace

std::uint64_t derive_trial_seed(std::uint64_t master_seed, std::string_view experiment_tag,
                                std::string_view model, std::uint64_t n, std::uint64_t trial_index) {
  std::uint64_t h = splitmix64(master_seed);
  h = splitmix64(h ^ fnv1a64(experiment_tag));
  h = splitmix64(h ^ fnv1a64(model));
  h = splitmix64(h ^ n);
  return splitmix64(h ^ trial_index);
}

std::uint64_t Rng::below(std::uint64_t bound) {
  // Lemire's multiply-shift with rejection.
  u128 product = static_cast<u128>(next()) * bound;
  auto low = static_cast<std::uint64_t>(product);
  if (low < bound) {
    const std::uint64_t threshold = -bound % bound;
    while (low < threshold) {
      product = static_cast<u128>(next()) * bound;
      low = static_cast<std::uint64_t>(product);
    }
  }
  return static_cast<std::uint64_t>(product >> 64);
}

}  // namespace cascadelab
