#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace ecg {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;
// Colors are 1-based; 0 is reserved for "no color" (e.g. the start state of a
// layered search).
using Color = std::uint32_t;
using Weight = std::int64_t;

inline constexpr Color kNoColor = 0;

// Raised when an operation is called outside its domain (unknown vertex,
// violated precondition, oversized brute-force search, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Raised when an internal consistency check of the solver pipeline fails.
// Seeing one of these always means a bug, never a property of the input.
class SolverBug : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct Edge {
  VertexId u = 0;
  VertexId v = 0;
  Color color = 1;
  Weight weight = 0;

  VertexId other(VertexId x) const { return x == u ? v : u; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Edge-colored, nonnegatively weighted multigraph without loops.
///
/// Vertices are dense indices [0, n); the id of an edge is its position in
/// the edge list. Instances are immutable once built.
class ColoredMultigraph {
 public:
  ColoredMultigraph() = default;
  ColoredMultigraph(std::size_t num_vertices, Color num_colors, std::vector<Edge> edges);

  std::size_t num_vertices() const { return num_vertices_; }
  std::size_t num_edges() const { return edges_.size(); }
  Color num_colors() const { return num_colors_; }

  const Edge& edge(EdgeId e) const { return edges_[e]; }
  std::span<const Edge> edges() const { return edges_; }

  // Incident edge ids of x in ascending order.
  std::span<const EdgeId> incident(VertexId x) const {
    return {incidence_.data() + offsets_[x], incidence_.data() + offsets_[x + 1]};
  }
  std::size_t degree(VertexId x) const { return offsets_[x + 1] - offsets_[x]; }

  Weight total_weight() const;

  friend bool operator==(const ColoredMultigraph& a, const ColoredMultigraph& b) {
    return a.num_vertices_ == b.num_vertices_ && a.num_colors_ == b.num_colors_ &&
           a.edges_ == b.edges_;
  }

 private:
  std::size_t num_vertices_ = 0;
  Color num_colors_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_{0};
  std::vector<EdgeId> incidence_;
};

struct ColorDegreeProfile {
  VertexId vertex = 0;
  std::size_t degree = 0;
  // per_color[i] = d_i(u); index 0 is unused so colors index directly.
  std::vector<std::size_t> per_color;
  std::optional<Color> dominant;

  std::size_t count(Color c) const { return per_color[c]; }
};

ColorDegreeProfile color_degrees(const ColoredMultigraph& g, VertexId u);

bool is_balanced(const ColoredMultigraph& g, VertexId u);
bool is_even(const ColoredMultigraph& g, VertexId u);
bool is_connected(const ColoredMultigraph& g);

// Some vertex all of whose incident edges share a single color (degree-0
// vertices do not qualify). No PC closed walk can pass such a vertex.
std::optional<VertexId> single_color_vertex(const ColoredMultigraph& g);

}  // namespace ecg
