#include "ecg/blossom.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <utility>

namespace ecg {

namespace {

// Maximum-weight maximum-cardinality matching on a general graph.
//
// Follows the classic O(n^3) formulation with explicit blossoms (labels S=1,
// T=2, edges addressed by endpoint indices 2k / 2k+1). Dual variables are
// kept doubled so that every quantity stays integral for integer weights.
class MaxWeightMatcher {
 public:
  MaxWeightMatcher(std::size_t n, std::vector<WeightedEdge> edges)
      : nvertex_(static_cast<int>(n)), edges_(std::move(edges)) {
    nedge_ = static_cast<int>(edges_.size());
    Weight maxweight = 0;
    for (const auto& e : edges_) maxweight = std::max(maxweight, e.weight);

    endpoint_.resize(2 * static_cast<std::size_t>(nedge_));
    for (int p = 0; p < 2 * nedge_; ++p) {
      const auto& e = edges_[static_cast<std::size_t>(p / 2)];
      endpoint_[static_cast<std::size_t>(p)] = static_cast<int>(p % 2 == 0 ? e.u : e.v);
    }
    neighbend_.assign(n, {});
    for (int k = 0; k < nedge_; ++k) {
      const auto& e = edges_[static_cast<std::size_t>(k)];
      neighbend_[e.u].push_back(2 * k + 1);
      neighbend_[e.v].push_back(2 * k);
    }
    const auto n2 = 2 * n;
    mate_.assign(n, -1);
    label_.assign(n2, 0);
    labelend_.assign(n2, -1);
    inblossom_.resize(n);
    for (int v = 0; v < nvertex_; ++v) inblossom_[static_cast<std::size_t>(v)] = v;
    blossomparent_.assign(n2, -1);
    blossomchilds_.assign(n2, {});
    blossombase_.assign(n2, -1);
    for (int v = 0; v < nvertex_; ++v) blossombase_[static_cast<std::size_t>(v)] = v;
    blossomendps_.assign(n2, {});
    bestedge_.assign(n2, -1);
    blossombestedges_.assign(n2, {});
    has_bestedges_.assign(n2, 0);
    for (int b = 2 * nvertex_ - 1; b >= nvertex_; --b) unusedblossoms_.push_back(b);
    dualvar_.assign(n2, 0);
    for (int v = 0; v < nvertex_; ++v) dualvar_[static_cast<std::size_t>(v)] = maxweight;
    allowedge_.assign(static_cast<std::size_t>(nedge_), 0);
  }

  // mate[v] = matched vertex or -1.
  std::vector<int> run() {
    for (int stage = 0; stage < nvertex_; ++stage) {
      std::fill(label_.begin(), label_.end(), 0);
      std::fill(bestedge_.begin(), bestedge_.end(), -1);
      for (int b = nvertex_; b < 2 * nvertex_; ++b) {
        blossombestedges_[at(b)].clear();
        has_bestedges_[at(b)] = 0;
      }
      std::fill(allowedge_.begin(), allowedge_.end(), 0);
      queue_.clear();

      for (int v = 0; v < nvertex_; ++v) {
        if (mate_[at(v)] == -1 && label_[at(inblossom_[at(v)])] == 0) assign_label(v, 1, -1);
      }

      bool augmented = false;
      while (true) {
        while (!queue_.empty() && !augmented) {
          const int v = queue_.back();
          queue_.pop_back();
          assert(label_[at(inblossom_[at(v)])] == 1);
          for (int p : neighbend_[at(v)]) {
            const int k = p / 2;
            const int w = endpoint_[at(p)];
            if (inblossom_[at(v)] == inblossom_[at(w)]) continue;
            Weight kslack = 0;
            if (!allowedge_[at(k)]) {
              kslack = slack(k);
              if (kslack <= 0) allowedge_[at(k)] = 1;
            }
            if (allowedge_[at(k)]) {
              if (label_[at(inblossom_[at(w)])] == 0) {
                assign_label(w, 2, p ^ 1);
              } else if (label_[at(inblossom_[at(w)])] == 1) {
                const int base = scan_blossom(v, w);
                if (base >= 0) {
                  add_blossom(base, k);
                } else {
                  augment_matching(k);
                  augmented = true;
                  break;
                }
              } else if (label_[at(w)] == 0) {
                assert(label_[at(inblossom_[at(w)])] == 2);
                label_[at(w)] = 2;
                labelend_[at(w)] = p ^ 1;
              }
            } else if (label_[at(inblossom_[at(w)])] == 1) {
              const int b = inblossom_[at(v)];
              if (bestedge_[at(b)] == -1 || kslack < slack(bestedge_[at(b)])) bestedge_[at(b)] = k;
            } else if (label_[at(w)] == 0) {
              if (bestedge_[at(w)] == -1 || kslack < slack(bestedge_[at(w)])) bestedge_[at(w)] = k;
            }
          }
        }
        if (augmented) break;

        // Dual adjustment. Max-cardinality mode: no delta1 unless nothing
        // else applies.
        int deltatype = -1;
        Weight delta = 0;
        int deltaedge = -1;
        int deltablossom = -1;

        for (int v = 0; v < nvertex_; ++v) {
          if (label_[at(inblossom_[at(v)])] == 0 && bestedge_[at(v)] != -1) {
            const Weight d = slack(bestedge_[at(v)]);
            if (deltatype == -1 || d < delta) {
              delta = d;
              deltatype = 2;
              deltaedge = bestedge_[at(v)];
            }
          }
        }
        for (int b = 0; b < 2 * nvertex_; ++b) {
          if (blossomparent_[at(b)] == -1 && label_[at(b)] == 1 && bestedge_[at(b)] != -1) {
            const Weight kslack = slack(bestedge_[at(b)]);
            assert(kslack % 2 == 0);
            const Weight d = kslack / 2;
            if (deltatype == -1 || d < delta) {
              delta = d;
              deltatype = 3;
              deltaedge = bestedge_[at(b)];
            }
          }
        }
        for (int b = nvertex_; b < 2 * nvertex_; ++b) {
          if (blossombase_[at(b)] >= 0 && blossomparent_[at(b)] == -1 && label_[at(b)] == 2 &&
              (deltatype == -1 || dualvar_[at(b)] < delta)) {
            delta = dualvar_[at(b)];
            deltatype = 4;
            deltablossom = b;
          }
        }
        if (deltatype == -1) {
          deltatype = 1;
          Weight lo = dualvar_[0];
          for (int v = 1; v < nvertex_; ++v) lo = std::min(lo, dualvar_[at(v)]);
          delta = std::max<Weight>(0, lo);
        }

        for (int v = 0; v < nvertex_; ++v) {
          const int l = label_[at(inblossom_[at(v)])];
          if (l == 1) {
            dualvar_[at(v)] -= delta;
          } else if (l == 2) {
            dualvar_[at(v)] += delta;
          }
        }
        for (int b = nvertex_; b < 2 * nvertex_; ++b) {
          if (blossombase_[at(b)] >= 0 && blossomparent_[at(b)] == -1) {
            if (label_[at(b)] == 1) {
              dualvar_[at(b)] += delta;
            } else if (label_[at(b)] == 2) {
              dualvar_[at(b)] -= delta;
            }
          }
        }

        if (deltatype == 1) {
          break;
        } else if (deltatype == 2) {
          allowedge_[at(deltaedge)] = 1;
          int i = static_cast<int>(edges_[at(deltaedge)].u);
          int j = static_cast<int>(edges_[at(deltaedge)].v);
          if (label_[at(inblossom_[at(i)])] == 0) std::swap(i, j);
          assert(label_[at(inblossom_[at(i)])] == 1);
          queue_.push_back(i);
        } else if (deltatype == 3) {
          allowedge_[at(deltaedge)] = 1;
          const int i = static_cast<int>(edges_[at(deltaedge)].u);
          assert(label_[at(inblossom_[at(i)])] == 1);
          queue_.push_back(i);
        } else {
          expand_blossom(deltablossom, false);
        }
      }

      if (!augmented) break;

      for (int b = nvertex_; b < 2 * nvertex_; ++b) {
        if (blossomparent_[at(b)] == -1 && blossombase_[at(b)] >= 0 && label_[at(b)] == 1 &&
            dualvar_[at(b)] == 0) {
          expand_blossom(b, true);
        }
      }
    }

    std::vector<int> result(static_cast<std::size_t>(nvertex_), -1);
    for (int v = 0; v < nvertex_; ++v) {
      if (mate_[at(v)] >= 0) result[at(v)] = endpoint_[at(mate_[at(v)])];
    }
    return result;
  }

 private:
  static std::size_t at(int i) { return static_cast<std::size_t>(i); }

  Weight slack(int k) const {
    const auto& e = edges_[at(k)];
    return dualvar_[e.u] + dualvar_[e.v] - 2 * e.weight;
  }

  void leaves(int b, std::vector<int>& out) const {
    if (b < nvertex_) {
      out.push_back(b);
      return;
    }
    for (int t : blossomchilds_[at(b)]) leaves(t, out);
  }

  std::vector<int> leaves(int b) const {
    std::vector<int> out;
    leaves(b, out);
    return out;
  }

  void assign_label(int w, int t, int p) {
    const int b = inblossom_[at(w)];
    assert(label_[at(w)] == 0 && label_[at(b)] == 0);
    label_[at(w)] = label_[at(b)] = t;
    labelend_[at(w)] = labelend_[at(b)] = p;
    bestedge_[at(w)] = bestedge_[at(b)] = -1;
    if (t == 1) {
      leaves(b, queue_);
    } else if (t == 2) {
      const int base = blossombase_[at(b)];
      assert(mate_[at(base)] >= 0);
      assign_label(endpoint_[at(mate_[at(base)])], 1, mate_[at(base)] ^ 1);
    }
  }

  int scan_blossom(int v, int w) {
    std::vector<int> path;
    int base = -1;
    while (v != -1 || w != -1) {
      int b = inblossom_[at(v)];
      if (label_[at(b)] & 4) {
        base = blossombase_[at(b)];
        break;
      }
      assert(label_[at(b)] == 1);
      path.push_back(b);
      label_[at(b)] = 5;
      assert(labelend_[at(b)] == mate_[at(blossombase_[at(b)])]);
      if (labelend_[at(b)] == -1) {
        v = -1;
      } else {
        v = endpoint_[at(labelend_[at(b)])];
        b = inblossom_[at(v)];
        assert(label_[at(b)] == 2);
        assert(labelend_[at(b)] >= 0);
        v = endpoint_[at(labelend_[at(b)])];
      }
      if (w != -1) std::swap(v, w);
    }
    for (int b : path) label_[at(b)] = 1;
    return base;
  }

  void add_blossom(int base, int k) {
    int v = static_cast<int>(edges_[at(k)].u);
    int w = static_cast<int>(edges_[at(k)].v);
    const int bb = inblossom_[at(base)];
    int bv = inblossom_[at(v)];
    int bw = inblossom_[at(w)];
    const int b = unusedblossoms_.back();
    unusedblossoms_.pop_back();
    blossombase_[at(b)] = base;
    blossomparent_[at(b)] = -1;
    blossomparent_[at(bb)] = b;
    std::vector<int>& path = blossomchilds_[at(b)];
    std::vector<int>& endps = blossomendps_[at(b)];
    path.clear();
    endps.clear();
    while (bv != bb) {
      blossomparent_[at(bv)] = b;
      path.push_back(bv);
      endps.push_back(labelend_[at(bv)]);
      assert(labelend_[at(bv)] >= 0);
      v = endpoint_[at(labelend_[at(bv)])];
      bv = inblossom_[at(v)];
    }
    path.push_back(bb);
    std::reverse(path.begin(), path.end());
    std::reverse(endps.begin(), endps.end());
    endps.push_back(2 * k);
    while (bw != bb) {
      blossomparent_[at(bw)] = b;
      path.push_back(bw);
      endps.push_back(labelend_[at(bw)] ^ 1);
      assert(labelend_[at(bw)] >= 0);
      w = endpoint_[at(labelend_[at(bw)])];
      bw = inblossom_[at(w)];
    }
    assert(label_[at(bb)] == 1);
    label_[at(b)] = 1;
    labelend_[at(b)] = labelend_[at(bb)];
    dualvar_[at(b)] = 0;
    for (int leaf : leaves(b)) {
      if (label_[at(inblossom_[at(leaf)])] == 2) queue_.push_back(leaf);
      inblossom_[at(leaf)] = b;
    }

    std::vector<int> bestedgeto(2 * at(nvertex_), -1);
    for (int child : path) {
      std::vector<int> candidates;
      if (!has_bestedges_[at(child)]) {
        for (int leaf : leaves(child)) {
          for (int p : neighbend_[at(leaf)]) candidates.push_back(p / 2);
        }
      } else {
        candidates = blossombestedges_[at(child)];
      }
      for (int kk : candidates) {
        int j = static_cast<int>(edges_[at(kk)].v);
        if (inblossom_[at(j)] == b) j = static_cast<int>(edges_[at(kk)].u);
        const int bj = inblossom_[at(j)];
        if (bj != b && label_[at(bj)] == 1 &&
            (bestedgeto[at(bj)] == -1 || slack(kk) < slack(bestedgeto[at(bj)]))) {
          bestedgeto[at(bj)] = kk;
        }
      }
      blossombestedges_[at(child)].clear();
      has_bestedges_[at(child)] = 0;
      bestedge_[at(child)] = -1;
    }
    auto& best = blossombestedges_[at(b)];
    best.clear();
    for (int kk : bestedgeto) {
      if (kk != -1) best.push_back(kk);
    }
    has_bestedges_[at(b)] = 1;
    bestedge_[at(b)] = -1;
    for (int kk : best) {
      if (bestedge_[at(b)] == -1 || slack(kk) < slack(bestedge_[at(b)])) bestedge_[at(b)] = kk;
    }
  }

  void expand_blossom(int b, bool endstage) {
    for (int s : blossomchilds_[at(b)]) {
      blossomparent_[at(s)] = -1;
      if (s < nvertex_) {
        inblossom_[at(s)] = s;
      } else if (endstage && dualvar_[at(s)] == 0) {
        expand_blossom(s, endstage);
      } else {
        for (int leaf : leaves(s)) inblossom_[at(leaf)] = s;
      }
    }
    if (!endstage && label_[at(b)] == 2) {
      const auto& childs = blossomchilds_[at(b)];
      const auto& endps = blossomendps_[at(b)];
      const int len = static_cast<int>(childs.size());
      auto child = [&](int j) { return childs[at(((j % len) + len) % len)]; };
      auto endp = [&](int j) { return endps[at(((j % len) + len) % len)]; };

      assert(labelend_[at(b)] >= 0);
      const int entrychild = inblossom_[at(endpoint_[at(labelend_[at(b)] ^ 1)])];
      int j = static_cast<int>(std::find(childs.begin(), childs.end(), entrychild) - childs.begin());
      int jstep, endptrick;
      if (j & 1) {
        j -= len;
        jstep = 1;
        endptrick = 0;
      } else {
        jstep = -1;
        endptrick = 1;
      }
      int p = labelend_[at(b)];
      while (j != 0) {
        label_[at(endpoint_[at(p ^ 1)])] = 0;
        label_[at(endpoint_[at(endp(j - endptrick) ^ endptrick ^ 1)])] = 0;
        assign_label(endpoint_[at(p ^ 1)], 2, p);
        allowedge_[at(endp(j - endptrick) / 2)] = 1;
        j += jstep;
        p = endp(j - endptrick) ^ endptrick;
        allowedge_[at(p / 2)] = 1;
        j += jstep;
      }
      int bv = child(j);
      label_[at(endpoint_[at(p ^ 1)])] = label_[at(bv)] = 2;
      labelend_[at(endpoint_[at(p ^ 1)])] = labelend_[at(bv)] = p;
      bestedge_[at(bv)] = -1;
      j += jstep;
      while (child(j) != entrychild) {
        bv = child(j);
        if (label_[at(bv)] == 1) {
          j += jstep;
          continue;
        }
        int found = -1;
        for (int leaf : leaves(bv)) {
          if (label_[at(leaf)] != 0) {
            found = leaf;
            break;
          }
        }
        if (found >= 0) {
          assert(label_[at(found)] == 2);
          assert(inblossom_[at(found)] == bv);
          label_[at(found)] = 0;
          label_[at(endpoint_[at(mate_[at(blossombase_[at(bv)])])])] = 0;
          assign_label(found, 2, labelend_[at(found)]);
        }
        j += jstep;
      }
    }
    label_[at(b)] = labelend_[at(b)] = -1;
    blossomchilds_[at(b)].clear();
    blossomendps_[at(b)].clear();
    blossombase_[at(b)] = -1;
    blossombestedges_[at(b)].clear();
    has_bestedges_[at(b)] = 0;
    bestedge_[at(b)] = -1;
    unusedblossoms_.push_back(b);
  }

  void augment_blossom(int b, int v) {
    int t = v;
    while (blossomparent_[at(t)] != b) t = blossomparent_[at(t)];
    if (t >= nvertex_) augment_blossom(t, v);

    auto& childs = blossomchilds_[at(b)];
    auto& endps = blossomendps_[at(b)];
    const int len = static_cast<int>(childs.size());
    auto wrap = [&](int j) { return at(((j % len) + len) % len); };

    const int i = static_cast<int>(std::find(childs.begin(), childs.end(), t) - childs.begin());
    int j = i;
    int jstep, endptrick;
    if (i & 1) {
      j -= len;
      jstep = 1;
      endptrick = 0;
    } else {
      jstep = -1;
      endptrick = 1;
    }
    while (j != 0) {
      j += jstep;
      t = childs[wrap(j)];
      const int p = endps[wrap(j - endptrick)] ^ endptrick;
      if (t >= nvertex_) augment_blossom(t, endpoint_[at(p)]);
      j += jstep;
      t = childs[wrap(j)];
      if (t >= nvertex_) augment_blossom(t, endpoint_[at(p ^ 1)]);
      mate_[at(endpoint_[at(p)])] = p ^ 1;
      mate_[at(endpoint_[at(p ^ 1)])] = p;
    }
    std::rotate(childs.begin(), childs.begin() + i, childs.end());
    std::rotate(endps.begin(), endps.begin() + i, endps.end());
    blossombase_[at(b)] = blossombase_[at(childs.front())];
    assert(blossombase_[at(b)] == v);
  }

  void augment_matching(int k) {
    const int v = static_cast<int>(edges_[at(k)].u);
    const int w = static_cast<int>(edges_[at(k)].v);
    const std::pair<int, int> starts[2] = {{v, 2 * k + 1}, {w, 2 * k}};
    for (auto [s, p] : starts) {
      while (true) {
        const int bs = inblossom_[at(s)];
        assert(label_[at(bs)] == 1);
        assert(labelend_[at(bs)] == mate_[at(blossombase_[at(bs)])]);
        if (bs >= nvertex_) augment_blossom(bs, s);
        mate_[at(s)] = p;
        if (labelend_[at(bs)] == -1) break;
        const int t = endpoint_[at(labelend_[at(bs)])];
        const int bt = inblossom_[at(t)];
        assert(label_[at(bt)] == 2);
        assert(labelend_[at(bt)] >= 0);
        s = endpoint_[at(labelend_[at(bt)])];
        const int j = endpoint_[at(labelend_[at(bt)] ^ 1)];
        assert(blossombase_[at(bt)] == t);
        if (bt >= nvertex_) augment_blossom(bt, j);
        mate_[at(j)] = labelend_[at(bt)];
        p = labelend_[at(bt)] ^ 1;
      }
    }
  }

  int nvertex_;
  int nedge_ = 0;
  std::vector<WeightedEdge> edges_;
  std::vector<int> endpoint_;
  std::vector<std::vector<int>> neighbend_;
  std::vector<int> mate_;
  std::vector<int> label_;
  std::vector<int> labelend_;
  std::vector<int> inblossom_;
  std::vector<int> blossomparent_;
  std::vector<std::vector<int>> blossomchilds_;
  std::vector<int> blossombase_;
  std::vector<std::vector<int>> blossomendps_;
  std::vector<int> bestedge_;
  std::vector<std::vector<int>> blossombestedges_;
  std::vector<char> has_bestedges_;
  std::vector<int> unusedblossoms_;
  std::vector<Weight> dualvar_;
  std::vector<char> allowedge_;
  std::vector<int> queue_;
};

void check_instance(const MatchingInstance& inst) {
  for (const auto& e : inst.edges) {
    if (e.u >= inst.num_vertices || e.v >= inst.num_vertices) {
      throw DomainError("matching edge endpoint out of range");
    }
    if (e.u == e.v) throw DomainError("matching instance has a loop");
    if (e.weight < 0) throw DomainError("matching instance has a negative weight");
  }
}

Matching collect(const MatchingInstance& inst, std::vector<std::size_t> chosen) {
  std::sort(chosen.begin(), chosen.end());
  Matching m;
  for (std::size_t i : chosen) m.weight += inst.edges[i].weight;
  m.edges = std::move(chosen);
  return m;
}

}  // namespace

std::optional<Matching> min_weight_perfect_matching(const MatchingInstance& inst) {
  check_instance(inst);
  const std::size_t n = inst.num_vertices;
  if (n % 2 != 0) return std::nullopt;
  if (n == 0) return Matching{};

  // Collapse parallel edges to the lightest representative.
  std::map<std::pair<std::uint32_t, std::uint32_t>, std::size_t> best;
  for (std::size_t i = 0; i < inst.edges.size(); ++i) {
    const auto& e = inst.edges[i];
    auto key = std::minmax(e.u, e.v);
    auto [it, inserted] = best.emplace(key, i);
    if (!inserted && e.weight < inst.edges[it->second].weight) it->second = i;
  }
  std::vector<std::size_t> kept;
  kept.reserve(best.size());
  for (const auto& [key, i] : best) kept.push_back(i);
  std::sort(kept.begin(), kept.end());

  std::vector<std::size_t> deg(n, 0);
  Weight maxw = 0;
  for (std::size_t i : kept) {
    ++deg[inst.edges[i].u];
    ++deg[inst.edges[i].v];
    maxw = std::max(maxw, inst.edges[i].weight);
  }
  if (std::find(deg.begin(), deg.end(), 0U) != deg.end()) return std::nullopt;

  // Maximum cardinality first, then maximum of (maxw + 1 - w): on perfect
  // matchings this is exactly minimum total weight.
  std::vector<WeightedEdge> flipped;
  flipped.reserve(kept.size());
  for (std::size_t i : kept) {
    const auto& e = inst.edges[i];
    flipped.push_back(WeightedEdge{e.u, e.v, maxw + 1 - e.weight});
  }
  const std::vector<int> mate = MaxWeightMatcher(n, flipped).run();

  std::map<std::pair<std::uint32_t, std::uint32_t>, std::size_t> lookup;
  for (std::size_t i : kept) lookup.emplace(std::minmax(inst.edges[i].u, inst.edges[i].v), i);
  std::vector<std::size_t> chosen;
  for (std::uint32_t v = 0; v < n; ++v) {
    if (mate[v] < 0) return std::nullopt;
    const auto w = static_cast<std::uint32_t>(mate[v]);
    if (v < w) chosen.push_back(lookup.at({v, w}));
  }
  return collect(inst, std::move(chosen));
}

std::optional<Matching> brute_force_matching(const MatchingInstance& inst) {
  check_instance(inst);
  const std::size_t n = inst.num_vertices;
  if (n > 12) throw DomainError("brute-force matching limited to 12 vertices");
  if (n % 2 != 0) return std::nullopt;

  // Lightest edge per pair (lowest index on ties), as an adjacency matrix.
  std::vector<std::vector<long>> pick(n, std::vector<long>(n, -1));
  for (std::size_t i = 0; i < inst.edges.size(); ++i) {
    const auto& e = inst.edges[i];
    long& slot = pick[e.u][e.v];
    if (slot < 0 || e.weight < inst.edges[static_cast<std::size_t>(slot)].weight) {
      slot = static_cast<long>(i);
      pick[e.v][e.u] = slot;
    }
  }

  std::optional<Matching> best;
  std::vector<bool> used(n, false);
  std::vector<std::size_t> current;
  Weight weight = 0;
  // Pair the lowest unmatched vertex with every possible partner.
  auto recurse = [&](auto&& self) -> void {
    std::size_t a = 0;
    while (a < n && used[a]) ++a;
    if (a == n) {
      if (!best || weight < best->weight) best = collect(inst, current);
      return;
    }
    used[a] = true;
    for (std::size_t b = a + 1; b < n; ++b) {
      if (used[b] || pick[a][b] < 0) continue;
      const auto i = static_cast<std::size_t>(pick[a][b]);
      used[b] = true;
      current.push_back(i);
      weight += inst.edges[i].weight;
      self(self);
      weight -= inst.edges[i].weight;
      current.pop_back();
      used[b] = false;
    }
    used[a] = false;
  };
  recurse(recurse);
  return best;
}

bool is_perfect_matching(const MatchingInstance& inst, const Matching& m) {
  std::vector<bool> covered(inst.num_vertices, false);
  Weight w = 0;
  for (std::size_t i : m.edges) {
    if (i >= inst.edges.size()) return false;
    const auto& e = inst.edges[i];
    if (covered[e.u] || covered[e.v]) return false;
    covered[e.u] = covered[e.v] = true;
    w += e.weight;
  }
  return w == m.weight && std::all_of(covered.begin(), covered.end(), [](bool c) { return c; });
}

}  // namespace ecg
