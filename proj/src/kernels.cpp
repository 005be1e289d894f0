#include "ecg/kernels.hpp"

#include <algorithm>
#include <limits>

#include <omp.h>

namespace ecg::kernels {

std::vector<PcReachTree> reach_trees_serial(const ColoredMultigraph& g,
                                            std::span<const ReachSource> sources) {
  std::vector<PcReachTree> trees;
  trees.reserve(sources.size());
  for (const ReachSource& s : sources) trees.emplace_back(g, s.vertex, s.first_color);
  return trees;
}

std::vector<PcReachTree> reach_trees_omp(const ColoredMultigraph& g,
                                         std::span<const ReachSource> sources) {
  std::vector<PcReachTree> trees(sources.size());
  const auto count = static_cast<std::int64_t>(sources.size());
#pragma omp parallel for schedule(dynamic, 4)
  for (std::int64_t i = 0; i < count; ++i) {
    trees[static_cast<std::size_t>(i)] =
        PcReachTree(g, sources[static_cast<std::size_t>(i)].vertex,
                    sources[static_cast<std::size_t>(i)].first_color);
  }
  return trees;
}

std::optional<std::uint64_t> multiplicity_space(std::size_t num_edges, std::uint32_t bound,
                                                std::uint64_t cap) {
  if (bound == 0) return std::nullopt;
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < num_edges; ++i) {
    if (total > cap / bound) return std::nullopt;
    total *= bound;
  }
  return total;
}

namespace {

constexpr std::uint64_t kSpaceCap = std::uint64_t{1} << 34;

// Scratch space and the feasibility/weight evaluation for one candidate.
class CandidateEvaluator {
 public:
  CandidateEvaluator(const ColoredMultigraph& g, std::uint32_t bound)
      : g_(g), bound_(bound), k_(g.num_colors() + 1) {
    q_.resize(g.num_edges());
    degree_.resize(g.num_vertices());
    by_color_.resize(g.num_vertices() * k_);
  }

  // Weight of candidate `index` if feasible.
  std::optional<Weight> evaluate(std::uint64_t index) {
    std::uint64_t rest = index;
    for (auto& q : q_) {
      q = static_cast<std::uint32_t>(rest % bound_) + 1;
      rest /= bound_;
    }
    std::fill(degree_.begin(), degree_.end(), 0);
    std::fill(by_color_.begin(), by_color_.end(), 0);
    Weight w = 0;
    const auto edges = g_.edges();
    for (std::size_t e = 0; e < edges.size(); ++e) {
      const Edge& ed = edges[e];
      degree_[ed.u] += q_[e];
      degree_[ed.v] += q_[e];
      by_color_[ed.u * k_ + ed.color] += q_[e];
      by_color_[ed.v * k_ + ed.color] += q_[e];
      w += static_cast<Weight>(q_[e]) * ed.weight;
    }
    for (std::size_t x = 0; x < degree_.size(); ++x) {
      if (degree_[x] % 2 != 0) return std::nullopt;
      for (std::size_t c = 1; c < k_; ++c) {
        if (2 * by_color_[x * k_ + c] > degree_[x]) return std::nullopt;
      }
    }
    return w;
  }

  const std::vector<std::uint32_t>& multiplicity() const { return q_; }

 private:
  const ColoredMultigraph& g_;
  std::uint32_t bound_;
  std::size_t k_;
  std::vector<std::uint32_t> q_;
  std::vector<std::uint64_t> degree_;
  std::vector<std::uint64_t> by_color_;
};

bool better(Weight w, std::uint64_t idx, const std::optional<MultiplicityBest>& best) {
  return !best || w < best->weight || (w == best->weight && idx < best->index);
}

std::uint64_t checked_space(const ColoredMultigraph& g, std::uint32_t bound) {
  auto space = multiplicity_space(g.num_edges(), bound, kSpaceCap);
  if (!space) throw DomainError("multiplicity search space too large");
  return *space;
}

}  // namespace

std::optional<MultiplicityBest> multiplicity_search_serial(const ColoredMultigraph& g,
                                                           std::uint32_t bound) {
  const std::uint64_t space = checked_space(g, bound);
  CandidateEvaluator eval(g, bound);
  std::optional<MultiplicityBest> best;
  for (std::uint64_t idx = 0; idx < space; ++idx) {
    auto w = eval.evaluate(idx);
    if (w && better(*w, idx, best)) best = MultiplicityBest{*w, idx, eval.multiplicity()};
  }
  return best;
}

std::optional<MultiplicityBest> multiplicity_search_omp(const ColoredMultigraph& g,
                                                        std::uint32_t bound) {
  const std::uint64_t space = checked_space(g, bound);
  std::optional<MultiplicityBest> best;
#pragma omp parallel
  {
    CandidateEvaluator eval(g, bound);
    std::optional<MultiplicityBest> local;
#pragma omp for schedule(static)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(space); ++i) {
      const auto idx = static_cast<std::uint64_t>(i);
      auto w = eval.evaluate(idx);
      if (w && better(*w, idx, local)) local = MultiplicityBest{*w, idx, eval.multiplicity()};
    }
#pragma omp critical(ecg_multiplicity_reduce)
    {
      if (local && better(local->weight, local->index, best)) best = std::move(local);
    }
  }
  return best;
}

}  // namespace ecg::kernels
