#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "cascadelab/community.hpp"
#include "cascadelab/metrics.hpp"

namespace cascadelab {

std::vector<Community> communities(const LabeledGraph& g) {
  const std::size_t n = g.node_count();
  std::vector<NodeId> order(n);
  std::iota(order.begin(), order.end(), NodeId{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](NodeId a, NodeId b) { return g.meta(a).color < g.meta(b).color; });

  std::vector<Community> out;
  for (std::size_t i = 0; i < n;) {
    Community c;
    c.color = g.meta(order[i]).color;
    bool has_seed = false;
    for (; i < n && g.meta(order[i]).color == c.color; ++i) {
      const NodeId x = order[i];
      c.members.push_back(x);
      if (g.meta(x).is_seed) {
        if (has_seed) throw GraphError("color " + std::to_string(c.color) + " has more than one seed");
        has_seed = true;
        c.seed = x;
      }
    }
    if (!has_seed) throw GraphError("color " + std::to_string(c.color) + " has no seed");
    out.push_back(std::move(c));
  }
  return out;
}

double conductance(const LabeledGraph& g, std::span<const NodeId> w) {
  const std::size_t n = g.node_count();
  std::vector<char> inside(n, 0);
  std::size_t count = 0;
  for (NodeId x : w) {
    if (x >= n) throw std::out_of_range("node id out of range");
    if (!inside[x]) {
      inside[x] = 1;
      ++count;
    }
  }
  if (count == 0 || count == n) throw std::invalid_argument("conductance needs a proper non-empty subset");

  std::size_t volume = 0;
  std::size_t cut = 0;
  for (NodeId x = 0; x < n; ++x) {
    if (!inside[x]) continue;
    volume += g.degree(x);
    for (NodeId y : g.neighbors(x))
      if (!inside[y]) ++cut;
  }
  const std::size_t smaller = std::min(volume, g.total_volume() - volume);
  if (smaller == 0) throw std::domain_error("conductance undefined: zero-volume side");
  return static_cast<double>(cut) / static_cast<double>(smaller);
}

DegreeProfile degree_profile(const LabeledGraph& g, NodeId v) {
  const ColorId own = g.meta(v).color;
  std::vector<ColorId> colors;
  colors.reserve(g.degree(v));
  for (NodeId y : g.neighbors(v)) colors.push_back(g.meta(y).color);
  std::sort(colors.begin(), colors.end());

  DegreeProfile p;
  p.node = v;
  for (std::size_t i = 0; i < colors.size();) {
    std::size_t j = i;
    while (j < colors.size() && colors[j] == colors[i]) ++j;
    p.entries.push_back({colors[i], j - i});
    i = j;
  }
  std::stable_sort(p.entries.begin(), p.entries.end(), [own](const ColorCount& a, const ColorCount& b) {
    if (a.count != b.count) return a.count > b.count;
    return a.color == own && b.color != own;
  });
  p.length = p.entries.size();
  p.first_degree = p.length > 0 ? p.entries[0].count : 0;
  p.second_degree = p.length > 1 ? p.entries[1].count : 0;
  p.own_color_first = p.length > 0 && p.entries[0].color == own;
  return p;
}

std::vector<std::optional<std::size_t>> community_diameters(const LabeledGraph& g) {
  const auto all = communities(g);
  std::vector<std::optional<std::size_t>> out;
  out.reserve(all.size());

  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> local(g.node_count(), kUnset);
  std::vector<std::size_t> dist;
  std::vector<std::size_t> queue;
  for (const Community& c : all) {
    const std::size_t size = c.members.size();
    for (std::size_t i = 0; i < size; ++i) local[c.members[i]] = i;

    std::size_t diameter = 0;
    bool connected = true;
    dist.assign(size, kUnset);
    for (std::size_t src = 0; src < size && connected; ++src) {
      std::fill(dist.begin(), dist.end(), kUnset);
      queue.assign(1, src);
      dist[src] = 0;
      for (std::size_t head = 0; head < queue.size(); ++head) {
        const std::size_t x = queue[head];
        for (NodeId y : g.neighbors(c.members[x])) {
          const std::size_t j = local[y];
          if (j == kUnset || dist[j] != kUnset) continue;
          dist[j] = dist[x] + 1;
          queue.push_back(j);
        }
      }
      if (queue.size() != size) {
        connected = false;
      } else {
        diameter = std::max(diameter, dist[queue.back()]);
      }
    }
    out.push_back(connected ? std::optional<std::size_t>(diameter) : std::nullopt);
    for (NodeId x : c.members) local[x] = kUnset;
  }
  return out;
}

}  // namespace cascadelab
