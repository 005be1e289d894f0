#include "ecg/oracle.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <random>

namespace ecg::oracle {

namespace {

// Uniform draw in [lo, hi] by rejection; std distributions are not
// reproducible across standard libraries, the engine itself is.
std::uint64_t draw(std::mt19937_64& rng, std::uint64_t lo, std::uint64_t hi) {
  const std::uint64_t span = hi - lo + 1;
  if (span == 0) return rng();
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return lo + x % span;
}

struct Dsu {
  std::vector<std::size_t> parent;
  explicit Dsu(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

class WalkEnumerator {
 public:
  WalkEnumerator(const ColoredMultigraph& g, VertexId target, Color last, std::size_t max_edges,
                 std::uint64_t node_limit)
      : g_(g), target_(target), last_(last), max_edges_(max_edges), node_limit_(node_limit) {}

  void extend(VertexId x, Color color, Weight w, std::size_t length) {
    if (++nodes_ > node_limit_) throw DomainError("walk enumeration exceeded its node limit");
    if (x == target_ && color == last_ && (!best_ || w < *best_)) best_ = w;
    if (length == max_edges_ || (best_ && w >= *best_)) return;
    for (EdgeId e : g_.incident(x)) {
      const Edge& edge = g_.edge(e);
      if (edge.color == color) continue;
      extend(edge.other(x), edge.color, w + edge.weight, length + 1);
    }
  }

  std::optional<Weight> best() const { return best_; }

 private:
  const ColoredMultigraph& g_;
  VertexId target_;
  Color last_;
  std::size_t max_edges_;
  std::uint64_t node_limit_;
  std::uint64_t nodes_ = 0;
  std::optional<Weight> best_;
};

}  // namespace

std::optional<OracleResult> oracle_solve(const ColoredMultigraph& g, std::uint32_t bound,
                                         kernels::Execution exec) {
  if (!is_connected(g)) throw DomainError("oracle_solve needs a connected graph");
  auto best = exec == kernels::Execution::serial ? kernels::multiplicity_search_serial(g, bound)
                                                 : kernels::multiplicity_search_omp(g, bound);
  if (!best) return std::nullopt;
  return OracleResult{best->weight, std::move(best->multiplicity)};
}

std::optional<Weight> enumerate_pc_walks(const ColoredMultigraph& g, VertexId u, Color c1,
                                         VertexId v, Color c2, std::size_t max_edges,
                                         std::uint64_t node_limit) {
  if (u >= g.num_vertices() || v >= g.num_vertices()) throw DomainError("unknown vertex");
  if (c1 < 1 || c1 > g.num_colors() || c2 < 1 || c2 > g.num_colors()) {
    throw DomainError("unknown color");
  }
  WalkEnumerator en(g, v, c2, max_edges, node_limit);
  if (max_edges == 0) return std::nullopt;
  for (EdgeId e : g.incident(u)) {
    const Edge& edge = g.edge(e);
    if (edge.color == c1) en.extend(edge.other(u), c1, edge.weight, 1);
  }
  return en.best();
}

std::optional<PCWalk> pc_euler_trail_bruteforce(const ColoredMultigraph& g) {
  const std::size_t m = g.num_edges();
  if (m == 0) return std::nullopt;
  std::vector<bool> used(m, false);
  std::vector<EdgeId> trail;
  trail.reserve(m);
  const Color first = g.edge(0).color;
  VertexId start = 0;

  auto search = [&](auto&& self, VertexId x, Color color) -> bool {
    if (trail.size() == m) return x == start && color != first;
    for (EdgeId e : g.incident(x)) {
      const Edge& edge = g.edge(e);
      if (used[e] || edge.color == color) continue;
      used[e] = true;
      trail.push_back(e);
      if (self(self, edge.other(x), edge.color)) return true;
      trail.pop_back();
      used[e] = false;
    }
    return false;
  };

  // Any PC Euler trail can be rotated to begin with edge 0, in one of its two
  // directions.
  for (VertexId s : {g.edge(0).u, g.edge(0).v}) {
    start = s;
    used.assign(m, false);
    trail.assign(1, 0);
    used[0] = true;
    if (search(search, g.edge(0).other(s), first)) return make_walk(g, start, trail);
  }
  return std::nullopt;
}

ColoredMultigraph encode_digraph(const Digraph& d) {
  std::vector<Edge> edges;
  edges.reserve(2 * d.arcs.size());
  for (std::size_t i = 0; i < d.arcs.size(); ++i) {
    const Arc& a = d.arcs[i];
    if (a.from >= d.num_vertices || a.to >= d.num_vertices) throw DomainError("arc out of range");
    const auto w = static_cast<VertexId>(d.num_vertices + i);
    edges.push_back(Edge{a.from, w, kBlue, a.weight});
    edges.push_back(Edge{w, a.to, kRed, 0});
  }
  return ColoredMultigraph(d.num_vertices + d.arcs.size(), 2, std::move(edges));
}

std::optional<Weight> directed_cpp_bruteforce(const Digraph& d, std::uint32_t bound) {
  if (d.arcs.empty() || d.num_vertices == 0) return std::nullopt;
  Dsu dsu(d.num_vertices);
  for (const Arc& a : d.arcs) dsu.unite(a.from, a.to);
  for (std::size_t x = 1; x < d.num_vertices; ++x) {
    if (dsu.find(x) != dsu.find(0)) return std::nullopt;
  }
  if (!kernels::multiplicity_space(d.arcs.size(), bound, std::uint64_t{1} << 30)) {
    throw DomainError("directed search space too large");
  }

  std::vector<std::uint32_t> q(d.arcs.size(), 1);
  std::vector<long> balance(d.num_vertices);
  std::optional<Weight> best;
  while (true) {
    std::fill(balance.begin(), balance.end(), 0);
    Weight w = 0;
    for (std::size_t i = 0; i < q.size(); ++i) {
      balance[d.arcs[i].from] += q[i];
      balance[d.arcs[i].to] -= q[i];
      w += static_cast<Weight>(q[i]) * d.arcs[i].weight;
    }
    if (std::all_of(balance.begin(), balance.end(), [](long b) { return b == 0; }) &&
        (!best || w < *best)) {
      best = w;
    }
    std::size_t i = 0;
    while (i < q.size() && q[i] == bound) q[i++] = 1;
    if (i == q.size()) break;
    ++q[i];
  }
  return best;
}

ColoredMultigraph gen_random_instance(std::size_t n, Color k, std::size_t m, Weight max_w,
                                      std::uint64_t seed) {
  if (n < 2 || k < 1 || max_w < 0 || m + 1 < n) {
    throw DomainError("gen_random_instance: need n >= 2, k >= 1, max_w >= 0, m >= n - 1");
  }
  std::mt19937_64 rng(seed);
  constexpr int kAttempts = 100000;
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    std::vector<Edge> edges;
    edges.reserve(m);
    Dsu dsu(n);
    for (std::size_t i = 0; i < m; ++i) {
      const auto u = static_cast<VertexId>(draw(rng, 0, n - 1));
      auto v = static_cast<VertexId>(draw(rng, 0, n - 2));
      if (v >= u) ++v;
      const auto c = static_cast<Color>(draw(rng, 1, k));
      const auto w = static_cast<Weight>(draw(rng, 0, static_cast<std::uint64_t>(max_w)));
      edges.push_back(Edge{u, v, c, w});
      dsu.unite(u, v);
    }
    bool connected = true;
    for (std::size_t x = 1; x < n && connected; ++x) connected = dsu.find(x) == dsu.find(0);
    if (connected) return ColoredMultigraph(n, k, std::move(edges));
  }
  throw DomainError("gen_random_instance: no connected draw within the attempt limit");
}

Digraph gen_random_digraph(std::size_t n, std::size_t arcs, Weight max_w, std::uint64_t seed) {
  if (n < 1 || max_w < 0) throw DomainError("gen_random_digraph: need n >= 1, max_w >= 0");
  std::mt19937_64 rng(seed);
  Digraph d;
  d.num_vertices = n;
  for (std::size_t i = 0; i < arcs; ++i) {
    const auto from = static_cast<std::uint32_t>(draw(rng, 0, n - 1));
    const auto to = static_cast<std::uint32_t>(draw(rng, 0, n - 1));
    const auto w = static_cast<Weight>(draw(rng, 0, static_cast<std::uint64_t>(max_w)));
    d.arcs.push_back(Arc{from, to, w});
  }
  return d;
}

}  // namespace ecg::oracle
