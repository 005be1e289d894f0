#include "ecg/aux_graph.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <tuple>
#include <unordered_map>

namespace ecg {

std::size_t theta(const ColorDegreeProfile& profile, Color i) {
  const std::size_t twice = 2 * profile.count(i);
  return profile.degree > twice ? profile.degree - twice : 0;
}

MatchingInstance AuxGraph::matching_instance() const {
  MatchingInstance inst;
  inst.num_vertices = vertices.size();
  inst.edges.reserve(edges.size());
  for (const AuxEdge& e : edges) inst.edges.push_back(WeightedEdge{e.a, e.b, e.weight});
  return inst;
}

AuxGraph build_aux_graph(const ColoredMultigraph& g, kernels::Execution exec) {
  const Color k = g.num_colors();
  if (k < 3 || k % 2 == 0) throw DomainError("auxiliary graph needs an odd color count >= 3");
  if (auto x = single_color_vertex(g)) {
    throw DomainError("vertex " + std::to_string(*x) + " sees a single color");
  }

  AuxGraph aux;
  aux.num_colors = k;
  aux.owners.reserve(g.num_vertices());

  auto add_vertex = [&](AuxVertex v) {
    aux.vertices.push_back(v);
    return static_cast<std::uint32_t>(aux.vertices.size() - 1);
  };
  auto add_artificial = [&](std::uint32_t a, std::uint32_t b) {
    aux.edges.push_back(AuxEdge{a, b, AuxEdgeKind::artificial, 0, -1});
  };

  std::vector<kernels::ReachSource> sources;
  for (VertexId u = 0; u < g.num_vertices(); ++u) {
    OwnerClasses oc;
    oc.profile = color_degrees(g, u);
    oc.x_begin.assign(k + 2, 0);
    oc.x_begin[1] = static_cast<std::uint32_t>(aux.vertices.size());
    for (Color c = 1; c <= k; ++c) {
      const std::size_t size = theta(oc.profile, c);
      if (size > 0) sources.push_back({u, c});
      for (std::size_t i = 0; i < size; ++i) {
        add_vertex(AuxVertex{u, AuxClass::x, c, static_cast<std::uint32_t>(i)});
      }
      oc.x_begin[c + 1] = static_cast<std::uint32_t>(aux.vertices.size());
    }
    oc.x_begin[0] = oc.x_begin[1];
    oc.y_begin = oc.y_end = static_cast<std::uint32_t>(aux.vertices.size());
    if (!oc.balanced()) {
      const std::size_t size = (k - 2) * oc.profile.degree;
      for (std::size_t i = 0; i < size; ++i) {
        add_vertex(AuxVertex{u, AuxClass::y, kNoColor, static_cast<std::uint32_t>(i)});
      }
      oc.y_end = static_cast<std::uint32_t>(aux.vertices.size());
    }

    const std::uint32_t xb = oc.x_begin[1], xe = oc.x_begin[k + 1];
    if (oc.balanced()) {
      for (std::uint32_t a = xb; a < xe; ++a) {
        for (std::uint32_t b = a + 1; b < xe; ++b) add_artificial(a, b);
      }
    } else {
      for (std::uint32_t a = xb; a < xe; ++a) {
        for (std::uint32_t y = oc.y_begin; y < oc.y_end; ++y) add_artificial(a, y);
      }
      for (std::uint32_t a = oc.y_begin; a < oc.y_end; ++a) {
        for (std::uint32_t b = a + 1; b < oc.y_end; ++b) add_artificial(a, b);
      }
    }
    aux.owners.push_back(std::move(oc));
  }

  const std::vector<PcReachTree> trees = kernels::reach_trees(g, sources, exec);
  std::map<std::pair<VertexId, Color>, std::size_t> tree_of;
  for (std::size_t i = 0; i < sources.size(); ++i) {
    tree_of.emplace(std::pair{sources[i].vertex, sources[i].first_color}, i);
  }

  std::map<std::tuple<VertexId, Color, VertexId, Color>, std::int32_t> signature_of;
  auto signature = [&](VertexId u, Color i, VertexId v, Color j) -> std::int32_t {
    // Walk weights are symmetric; store each unordered signature once, with
    // the witness taken from the smaller (vertex, color) side.
    if (std::pair{v, j} < std::pair{u, i}) {
      std::swap(u, v);
      std::swap(i, j);
    }
    auto key = std::tuple{u, i, v, j};
    if (auto it = signature_of.find(key); it != signature_of.end()) return it->second;
    const PcReachTree& tree = trees[tree_of.at({u, i})];
    std::int32_t id = -1;
    if (auto walk = tree.walk(g, v, j)) {
      id = static_cast<std::int32_t>(aux.signatures.size());
      aux.signatures.push_back(WalkSignature{u, i, v, j, std::move(*walk)});
    }
    signature_of.emplace(key, id);
    return id;
  };

  std::vector<std::uint32_t> xs;
  for (std::uint32_t a = 0; a < aux.vertices.size(); ++a) {
    if (aux.vertices[a].cls == AuxClass::x) xs.push_back(a);
  }
  for (std::size_t p = 0; p < xs.size(); ++p) {
    const AuxVertex& va = aux.vertices[xs[p]];
    for (std::size_t q = p + 1; q < xs.size(); ++q) {
      const AuxVertex& vb = aux.vertices[xs[q]];
      if (va.owner == vb.owner && aux.owners[va.owner].balanced()) continue;
      const std::int32_t sig = signature(va.owner, va.color, vb.owner, vb.color);
      if (sig < 0) continue;
      aux.edges.push_back(AuxEdge{xs[p], xs[q], AuxEdgeKind::walk,
                                  aux.signatures[static_cast<std::size_t>(sig)].witness.weight,
                                  sig});
    }
  }
  return aux;
}

MatchingReport validate_matching(const AuxGraph& aux, std::span<const std::size_t> matching) {
  MatchingReport r;
  r.affected.assign(aux.owners.size(), 0);
  auto fail = [&](std::string msg) {
    r.ok = false;
    r.message = std::move(msg);
    return r;
  };

  std::vector<bool> covered(aux.vertices.size(), false);
  for (std::size_t i : matching) {
    if (i >= aux.edges.size()) return fail("matching refers to an unknown edge");
    const AuxEdge& e = aux.edges[i];
    if (covered[e.a] || covered[e.b]) return fail("matching edges are not disjoint");
    covered[e.a] = covered[e.b] = true;
    if (e.kind == AuxEdgeKind::walk) {
      ++r.affected[aux.vertices[e.a].owner];
      ++r.affected[aux.vertices[e.b].owner];
    }
  }
  if (std::find(covered.begin(), covered.end(), false) != covered.end()) {
    return fail("matching is not perfect");
  }

  for (VertexId u = 0; u < aux.owners.size(); ++u) {
    const OwnerClasses& oc = aux.owners[u];
    const std::size_t d = oc.profile.degree;
    if (oc.profile.dominant) {
      const Color i = *oc.profile.dominant;
      const std::size_t need = 2 * oc.profile.count(i) - d;
      if (oc.x_begin[i + 1] != oc.x_begin[i]) {
        return fail("X_" + std::to_string(i) + "(" + std::to_string(u) +
                    ") is not empty for the dominant color");
      }
      if (r.affected[u] < need) {
        return fail("vertex " + std::to_string(u) + " has " + std::to_string(r.affected[u]) +
                    " affected X vertices, needs " + std::to_string(need));
      }
    }
    if (r.affected[u] % 2 != d % 2) {
      return fail("vertex " + std::to_string(u) + ": affected count parity differs from degree");
    }
  }
  return r;
}

std::optional<std::vector<std::size_t>> complete_with_artificial(
    const AuxGraph& aux, std::span<const std::size_t> walk_edges) {
  const std::uint64_t n = aux.vertices.size();
  std::unordered_map<std::uint64_t, std::size_t> artificial;
  for (std::size_t i = 0; i < aux.edges.size(); ++i) {
    const AuxEdge& e = aux.edges[i];
    if (e.kind != AuxEdgeKind::artificial) continue;
    artificial.emplace(std::uint64_t{std::min(e.a, e.b)} * n + std::max(e.a, e.b), i);
  }

  std::vector<bool> covered(n, false);
  std::vector<std::size_t> result;
  for (std::size_t i : walk_edges) {
    if (i >= aux.edges.size() || aux.edges[i].kind != AuxEdgeKind::walk) return std::nullopt;
    const AuxEdge& e = aux.edges[i];
    if (covered[e.a] || covered[e.b]) return std::nullopt;
    covered[e.a] = covered[e.b] = true;
    result.push_back(i);
  }

  auto pair_up = [&](std::uint32_t a, std::uint32_t b) {
    auto it = artificial.find(std::uint64_t{std::min(a, b)} * n + std::max(a, b));
    if (it == artificial.end()) return false;
    result.push_back(it->second);
    covered[a] = covered[b] = true;
    return true;
  };

  for (const OwnerClasses& oc : aux.owners) {
    std::vector<std::uint32_t> free_x;
    for (std::uint32_t a = oc.x_begin[1]; a < oc.x_begin.back(); ++a) {
      if (!covered[a]) free_x.push_back(a);
    }
    if (oc.balanced()) {
      if (free_x.size() % 2 != 0) return std::nullopt;
      for (std::size_t i = 0; i < free_x.size(); i += 2) {
        if (!pair_up(free_x[i], free_x[i + 1])) return std::nullopt;
      }
      continue;
    }
    if (free_x.size() > oc.y_size() || (oc.y_size() - free_x.size()) % 2 != 0) return std::nullopt;
    std::uint32_t y = oc.y_begin;
    for (std::uint32_t a : free_x) {
      if (!pair_up(a, y++)) return std::nullopt;
    }
    for (; y < oc.y_end; y += 2) {
      if (!pair_up(y, y + 1)) return std::nullopt;
    }
  }
  std::sort(result.begin(), result.end());
  return result;
}

void dump_aux_graph(const AuxGraph& aux, std::ostream& out) {
  out << "# auxiliary matching graph; all ids 0-based, owners are vertices of the normalized graph\n";
  out << "aux " << aux.vertices.size() << ' ' << aux.edges.size() << ' ' << aux.num_colors << '\n';
  for (VertexId u = 0; u < aux.owners.size(); ++u) {
    const OwnerClasses& oc = aux.owners[u];
    out << "owner " << u << " degree " << oc.profile.degree << " dominant ";
    if (oc.profile.dominant) {
      out << *oc.profile.dominant;
    } else {
      out << '-';
    }
    out << " X";
    for (Color c = 1; c <= aux.num_colors; ++c) out << ' ' << oc.x_begin[c + 1] - oc.x_begin[c];
    out << " Y " << oc.y_size() << '\n';
  }
  for (std::uint32_t a = 0; a < aux.vertices.size(); ++a) {
    const AuxVertex& v = aux.vertices[a];
    out << "vertex " << a << " owner " << v.owner;
    if (v.cls == AuxClass::x) {
      out << " X " << v.color << ' ' << v.index << '\n';
    } else {
      out << " Y " << v.index << '\n';
    }
  }
  for (const AuxEdge& e : aux.edges) {
    out << "edge " << e.a << ' ' << e.b << ' '
        << (e.kind == AuxEdgeKind::artificial ? "artificial" : "walk") << ' ' << e.weight;
    if (e.kind == AuxEdgeKind::walk) out << " signature " << e.signature;
    out << '\n';
  }
  for (std::size_t s = 0; s < aux.signatures.size(); ++s) {
    const WalkSignature& sig = aux.signatures[s];
    out << "signature " << s << ' ' << sig.from << ' ' << sig.first << ' ' << sig.to << ' '
        << sig.last << " weight " << sig.witness.weight << " walk";
    for (std::size_t i = 0; i < sig.witness.edges.size(); ++i) {
      out << ' ' << sig.witness.vertices[i] << " -" << sig.witness.edges[i] << '-';
    }
    out << ' ' << sig.witness.vertices.back() << '\n';
  }
}

}  // namespace ecg
