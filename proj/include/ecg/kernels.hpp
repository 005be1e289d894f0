#pragma once

// Data-parallel kernels. Each kernel has a serial reference and an OpenMP
// variant that must return identical results; tests compare the two and
// bench/ times them against each other.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "ecg/graph.hpp"
#include "ecg/pc_reach.hpp"

namespace ecg::kernels {

enum class Execution { serial, parallel };

struct ReachSource {
  VertexId vertex = 0;
  Color first_color = 1;
};

// One PcReachTree per source, in source order.
std::vector<PcReachTree> reach_trees_serial(const ColoredMultigraph& g,
                                            std::span<const ReachSource> sources);
std::vector<PcReachTree> reach_trees_omp(const ColoredMultigraph& g,
                                         std::span<const ReachSource> sources);

inline std::vector<PcReachTree> reach_trees(const ColoredMultigraph& g,
                                            std::span<const ReachSource> sources,
                                            Execution exec) {
  return exec == Execution::serial ? reach_trees_serial(g, sources)
                                   : reach_trees_omp(g, sources);
}

// Exhaustive search over multiplicity vectors q in {1..bound}^|E|. A vector is
// feasible when the multigraph with q_e copies of every edge has all vertices
// even and balanced. Among minimum-weight feasible vectors the one with the
// smallest enumeration index (q_0 varies fastest) is returned.
struct MultiplicityBest {
  Weight weight = 0;
  std::uint64_t index = 0;
  std::vector<std::uint32_t> multiplicity;
};

std::optional<MultiplicityBest> multiplicity_search_serial(const ColoredMultigraph& g,
                                                           std::uint32_t bound);
std::optional<MultiplicityBest> multiplicity_search_omp(const ColoredMultigraph& g,
                                                        std::uint32_t bound);

// Number of vectors in the search space, or nullopt when it exceeds `cap`.
std::optional<std::uint64_t> multiplicity_space(std::size_t num_edges, std::uint32_t bound,
                                                std::uint64_t cap);

}  // namespace ecg::kernels
