#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ecg/blossom.hpp"
#include "ecg/graph.hpp"
#include "ecg/kernels.hpp"
#include "ecg/walk.hpp"

namespace ecg {

// theta_i(u) = max{0, d(u) - 2 d_i(u)}
std::size_t theta(const ColorDegreeProfile& profile, Color i);

enum class AuxClass : std::uint8_t { x, y };

struct AuxVertex {
  VertexId owner = 0;
  AuxClass cls = AuxClass::x;
  Color color = kNoColor;  // set for X-vertices only
  std::uint32_t index = 0;  // position inside X_color(owner) or Y(owner)
};

enum class AuxEdgeKind : std::uint8_t { artificial, walk };

struct AuxEdge {
  std::uint32_t a = 0;
  std::uint32_t b = 0;
  AuxEdgeKind kind = AuxEdgeKind::artificial;
  Weight weight = 0;
  std::int32_t signature = -1;  // index into AuxGraph::signatures for walk edges
};

// Minimum-weight PC FEV walk from `from` (first color `first`) to `to` (last
// color `last`). Shared by every walk edge with these end classes.
struct WalkSignature {
  VertexId from = 0;
  Color first = kNoColor;
  VertexId to = 0;
  Color last = kNoColor;
  PCWalk witness;
};

struct OwnerClasses {
  ColorDegreeProfile profile;
  // x_begin[c] .. x_begin[c + 1] is X_c(u) (c in [1, k]); indices into vertices.
  std::vector<std::uint32_t> x_begin;
  std::uint32_t y_begin = 0;
  std::uint32_t y_end = 0;

  std::uint32_t x_size() const { return x_begin.back() - x_begin[1]; }
  std::uint32_t y_size() const { return y_end - y_begin; }
  bool balanced() const { return !profile.dominant.has_value(); }
};

/// The auxiliary graph whose minimum perfect matchings price the edge
/// duplications. For every vertex u of the (normalized) input graph:
///  - X_i(u) holds theta_i(u) vertices per color i;
///  - unbalanced u additionally gets Y(u) with (k-2) d(u) vertices, and zero
///    weight (artificial) edges inside Y(u) and between Y(u) and X(u);
///  - balanced u gets artificial edges inside X(u).
/// Every other pair a in X_i(u), b in X_j(v) is joined by a walk edge weighted
/// by the cheapest PC FEV walk u -> v with first color i and last color j,
/// when such a walk exists.
struct AuxGraph {
  Color num_colors = 0;
  std::vector<AuxVertex> vertices;
  std::vector<AuxEdge> edges;
  std::vector<WalkSignature> signatures;
  std::vector<OwnerClasses> owners;

  MatchingInstance matching_instance() const;
};

// Requires a graph without single-color vertices and an odd k >= 3 (the
// output of normalize on a feasible-looking instance). DomainError otherwise.
AuxGraph build_aux_graph(const ColoredMultigraph& g,
                         kernels::Execution exec = kernels::Execution::parallel);

struct MatchingReport {
  bool ok = true;
  std::string message;
  // Number of affected X(u) vertices (matched through a walk edge) per owner.
  std::vector<std::size_t> affected;
};

// Checks that `matching` (edge indices into aux.edges) is a perfect matching
// of H and satisfies, for every u:
//  (1) u unbalanced with dominant i: >= 2 d_i(u) - d(u) affected in X(u), and
//      X_i(u) is empty;
//  (2)/(3) the number of affected X(u) vertices has the parity of d(u).
MatchingReport validate_matching(const AuxGraph& aux, std::span<const std::size_t> matching);

// Extends a matching consisting of walk edges only to a perfect matching by
// adding artificial edges. nullopt if the completion is impossible.
std::optional<std::vector<std::size_t>> complete_with_artificial(
    const AuxGraph& aux, std::span<const std::size_t> walk_edges);

// Line-oriented text dump of H for inspection.
void dump_aux_graph(const AuxGraph& aux, std::ostream& out);

}  // namespace ecg
