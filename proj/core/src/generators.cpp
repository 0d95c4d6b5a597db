#include "cascadelab/generators.hpp"

#include <algorithm>
#include <cmath>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "cascadelab/rng.hpp"

namespace cascadelab {

std::string_view to_string(Model m) {
  switch (m) {
    case Model::Er: return "er";
    case Model::Pa: return "pa";
    case Model::Security: return "security";
  }
  return "er";
}

Model model_from_string(std::string_view s) {
  if (s == "er") return Model::Er;
  if (s == "pa") return Model::Pa;
  if (s == "security") return Model::Security;
  throw std::invalid_argument("unknown model '" + std::string(s) + "'");
}

double seed_probability(std::size_t i, double a) {
  const double ln_i = std::log(static_cast<double>(i));
  if (ln_i <= 1.0) return 1.0;
  return std::min(1.0, 1.0 / std::pow(ln_i, a));
}

double expected_seed_count(std::size_t n, std::size_t d, double a) {
  double sum = 0.0;
  for (std::size_t i = d + 1; i < n; ++i) sum += seed_probability(i, a);
  return sum;
}

namespace {

constexpr std::size_t kMaxRejections = 64;

bool contains(const std::vector<NodeId>& xs, NodeId x) {
  return std::find(xs.begin(), xs.end(), x) != xs.end();
}

// Exact sequential weighted draw without replacement; weights are pool
// multiplicities and entries already in `out` are excluded.
void draw_distinct_exact(std::span<const NodeId> pool, std::size_t target, Rng& rng,
                         std::vector<NodeId>& out) {
  std::vector<NodeId> sorted(pool.begin(), pool.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<std::pair<NodeId, std::size_t>> weights;
  for (std::size_t i = 0; i < sorted.size();) {
    std::size_t j = i;
    while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
    if (!contains(out, sorted[i])) weights.emplace_back(sorted[i], j - i);
    i = j;
  }
  std::size_t total = 0;
  for (const auto& [node, w] : weights) total += w;
  while (out.size() < target && !weights.empty()) {
    std::uint64_t r = rng.below(total);
    std::size_t k = 0;
    while (r >= weights[k].second) r -= weights[k++].second;
    out.push_back(weights[k].first);
    total -= weights[k].second;
    weights.erase(weights.begin() + static_cast<std::ptrdiff_t>(k));
  }
}

// Appends `count` distinct nodes to `out`, each drawn with probability
// proportional to its multiplicity in `pool`, skipping anything already in
// `out`. Rejection of repeats is the same law as sequential sampling without
// replacement; the exact path takes over when rejections pile up. The pool
// must hold at least `count` eligible distinct nodes.
void draw_distinct(std::span<const NodeId> pool, std::size_t count, Rng& rng,
                   std::vector<NodeId>& out) {
  const std::size_t target = out.size() + count;
  std::size_t rejections = 0;
  while (out.size() < target) {
    const NodeId x = pool[rng.below(pool.size())];
    if (contains(out, x)) {
      if (++rejections > kMaxRejections) {
        draw_distinct_exact(pool, target, rng, out);
        return;
      }
      continue;
    }
    out.push_back(x);
    rejections = 0;
  }
}

NodeMeta plain_meta(std::size_t id) {
  return {0, false, static_cast<std::uint32_t>(id)};
}

void check_pa_params(std::size_t n, std::size_t d) {
  if (d < 1) throw std::invalid_argument("d must be >= 1");
  if (n < d + 1) throw std::invalid_argument("n must be >= d + 1");
  if (n > std::size_t{0xFFFFFFFF}) throw std::invalid_argument("n too large");
}

}  // namespace

LabeledGraph gen_er(std::size_t n, std::size_t d, std::uint64_t master_seed) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  if (d >= n) throw std::invalid_argument("d must be < n (edge probability would exceed 1)");
  if (n > std::size_t{0xFFFFFFFF}) throw std::invalid_argument("n too large");

  const double p = n > 1 ? static_cast<double>(d) / static_cast<double>(n - 1) : 0.0;
  Rng rng(derive_stream_seed(master_seed, 0));
  GraphBuilder b(n, static_cast<std::size_t>(p * static_cast<double>(n) * static_cast<double>(n - 1) / 2.0));
  for (std::size_t i = 0; i < n; ++i) b.add_node(plain_meta(i));

  if (p >= 1.0) {
    for (NodeId u = 0; u < n; ++u)
      for (NodeId v = u + 1; v < n; ++v) b.add_edge(u, v, Provenance::Plain);
  } else if (p > 0.0) {
    // Geometric skipping over the pairs (v, w), w < v (Batagelj & Brandes).
    const double log_q = std::log1p(-p);
    std::int64_t v = 1;
    std::int64_t w = -1;
    const auto nn = static_cast<std::int64_t>(n);
    while (v < nn) {
      const double r = rng.unit();
      w += 1 + static_cast<std::int64_t>(std::floor(std::log1p(-r) / log_q));
      while (w >= v && v < nn) {
        w -= v;
        ++v;
      }
      if (v < nn) b.add_edge(static_cast<NodeId>(w), static_cast<NodeId>(v), Provenance::Plain);
    }
  }
  return std::move(b).build();
}

LabeledGraph gen_pa(std::size_t n, std::size_t d, std::uint64_t master_seed) {
  check_pa_params(n, d);
  Rng rng(derive_stream_seed(master_seed, 1));
  const std::size_t m = d * (d + 1) / 2 + d * (n - d - 1);
  GraphBuilder b(n, m);
  std::vector<NodeId> endpoints;
  endpoints.reserve(2 * m);

  for (std::size_t i = 0; i <= d; ++i) b.add_node(plain_meta(i));
  for (NodeId u = 0; u <= d; ++u) {
    for (NodeId v = u + 1; v <= d; ++v) {
      b.add_edge(u, v, Provenance::Plain);
      endpoints.push_back(u);
      endpoints.push_back(v);
    }
  }

  std::vector<NodeId> targets;
  targets.reserve(d);
  for (std::size_t t = d + 1; t < n; ++t) {
    const NodeId v = b.add_node(plain_meta(t));
    targets.clear();
    draw_distinct(endpoints, d, rng, targets);
    for (NodeId u : targets) {
      b.add_edge(v, u, Provenance::Plain);
      endpoints.push_back(v);
      endpoints.push_back(u);
    }
  }
  return std::move(b).build();
}

LabeledGraph gen_security(std::size_t n, std::size_t d, double a, std::uint64_t master_seed) {
  check_pa_params(n, d);
  if (d < 2) throw std::invalid_argument("security model requires d >= 2");
  if (!(a > 1.0)) throw std::invalid_argument("homophyly exponent a must be > 1");

  Rng rng(derive_stream_seed(master_seed, 2));
  GraphBuilder b(n, d * n);
  std::vector<NodeMeta> meta;  // mirror of builder metadata for sampling
  meta.reserve(n);
  std::vector<NodeId> endpoints;  // node x appears deg(x) times
  endpoints.reserve(2 * d * n);
  std::vector<std::vector<NodeId>> color_endpoints;
  std::vector<std::vector<NodeId>> color_members;
  std::vector<NodeId> seeds;

  auto add_node = [&](NodeMeta m) {
    const NodeId v = b.add_node(m);
    meta.push_back(m);
    if (m.is_seed) {
      seeds.push_back(v);
      color_endpoints.emplace_back();
      color_members.emplace_back();
    }
    color_members[m.color].push_back(v);
    return v;
  };
  auto add_edge = [&](NodeId x, NodeId y, Provenance tag) {
    b.add_edge(x, y, tag);
    endpoints.push_back(x);
    endpoints.push_back(y);
    color_endpoints[meta[x].color].push_back(x);
    color_endpoints[meta[y].color].push_back(y);
  };

  for (std::size_t i = 0; i <= d; ++i) {
    add_node({static_cast<ColorId>(i), true, static_cast<std::uint32_t>(i)});
  }
  for (NodeId u = 0; u <= d; ++u)
    for (NodeId v = u + 1; v <= d; ++v) add_edge(u, v, Provenance::Initial);

  std::vector<NodeId> targets;
  targets.reserve(d);
  for (std::size_t i = d + 1; i < n; ++i) {
    targets.clear();
    if (rng.bernoulli(seed_probability(i, a))) {
      // Targets are drawn from G_{i-1}, before the new node exists.
      draw_distinct(endpoints, 1, rng, targets);
      const std::size_t eligible = seeds.size() - (meta[targets[0]].is_seed ? 1 : 0);
      if (eligible <= d - 1) {
        for (NodeId s : seeds)
          if (s != targets[0]) targets.push_back(s);
      } else {
        draw_distinct(seeds, d - 1, rng, targets);
      }
      const auto color = static_cast<ColorId>(seeds.size());
      const NodeId v = add_node({color, true, static_cast<std::uint32_t>(i)});
      add_edge(v, targets[0], Provenance::PaGlobal);
      for (std::size_t j = 1; j < targets.size(); ++j) add_edge(v, targets[j], Provenance::SeedLink);
    } else {
      const auto color = static_cast<ColorId>(rng.below(seeds.size()));
      const auto& members = color_members[color];
      if (members.size() <= d) {
        targets.assign(members.begin(), members.end());
      } else {
        draw_distinct(color_endpoints[color], d, rng, targets);
      }
      const NodeId v = add_node({color, false, static_cast<std::uint32_t>(i)});
      for (NodeId u : targets) add_edge(v, u, Provenance::Homophyly);
    }
  }
  return std::move(b).build();
}

LabeledGraph generate(Model model, const GenParams& params) {
  switch (model) {
    case Model::Er: return gen_er(params.n, params.d, params.master_seed);
    case Model::Pa: return gen_pa(params.n, params.d, params.master_seed);
    case Model::Security: return gen_security(params.n, params.d, params.a, params.master_seed);
  }
  throw std::invalid_argument("unknown model");
}

}  // namespace cascadelab
