#include "ecg/pc_reach.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <queue>
#include <utility>

namespace ecg {

namespace {

constexpr Weight kUnreached = std::numeric_limits<Weight>::max();
constexpr std::uint32_t kNoParent = std::numeric_limits<std::uint32_t>::max();

}  // namespace

PcReachTree::PcReachTree(const ColoredMultigraph& g, VertexId source, Color first_color)
    : source_(source),
      first_color_(first_color),
      colors_(g.num_colors()),
      num_vertices_(g.num_vertices()) {
  if (source >= g.num_vertices()) throw DomainError("reach source out of range");
  if (first_color < 1 || first_color > colors_) throw DomainError("first color outside [1, k]");

  const std::size_t start = num_vertices_ * colors_;
  dist_.assign(start + 1, kUnreached);
  parent_state_.assign(start + 1, kNoParent);
  parent_edge_.assign(start + 1, 0);

  using Item = std::pair<Weight, std::uint32_t>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
  dist_[start] = 0;
  queue.emplace(0, static_cast<std::uint32_t>(start));

  while (!queue.empty()) {
    const auto [d, s] = queue.top();
    queue.pop();
    if (d != dist_[s]) continue;

    VertexId at;
    Color entered;
    if (s == start) {
      at = source_;
      entered = kNoColor;
    } else {
      at = static_cast<VertexId>(s / colors_);
      entered = static_cast<Color>(s % colors_) + 1;
    }
    for (EdgeId e : g.incident(at)) {
      const Edge& ed = g.edge(e);
      if (s == start ? ed.color != first_color_ : ed.color == entered) continue;
      const std::size_t t = state(ed.other(at), ed.color);
      const Weight nd = d + ed.weight;
      if (nd < dist_[t]) {
        dist_[t] = nd;
        parent_state_[t] = s;
        parent_edge_[t] = e;
        queue.emplace(nd, static_cast<std::uint32_t>(t));
      }
    }
  }
  reached_ = static_cast<std::size_t>(
      std::count_if(dist_.begin(), dist_.end() - 1, [](Weight w) { return w != kUnreached; }));
}

std::optional<Weight> PcReachTree::weight(VertexId v, Color c) const {
  if (v >= num_vertices_ || c < 1 || c > colors_) return std::nullopt;
  const Weight d = dist_[state(v, c)];
  if (d == kUnreached) return std::nullopt;
  return d;
}

std::optional<PCWalk> PcReachTree::walk(const ColoredMultigraph& g, VertexId v, Color c) const {
  if (!weight(v, c)) return std::nullopt;
  const std::size_t start = num_vertices_ * colors_;
  std::vector<EdgeId> edges;
  for (std::size_t s = state(v, c); s != start; s = parent_state_[s]) {
    edges.push_back(parent_edge_[s]);
  }
  std::reverse(edges.begin(), edges.end());
  return make_walk(g, source_, std::move(edges));
}

std::optional<PCWalk> min_pc_walk(const ColoredMultigraph& g, VertexId u, Color c1, VertexId v,
                                  Color c2) {
  return PcReachTree(g, u, c1).walk(g, v, c2);
}

}  // namespace ecg
