#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "contrakt/graph.hpp"

namespace testutil {

using contrakt::Contraction;
using contrakt::ContractionSequence;
using contrakt::GraphBuilder;
using contrakt::Label;
using contrakt::LabeledGraph;

using Rng = std::mt19937;

inline int rand_int(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline bool rand_bool(Rng& rng, double p = 0.5) {
  return std::uniform_real_distribution<double>(0.0, 1.0)(rng) < p;
}

inline Label vlabel(int i) { return "v" + std::to_string(i); }

inline LabeledGraph graph_of(const std::vector<std::pair<Label, Label>>& edges,
                             const std::vector<Label>& isolated = {}) {
  GraphBuilder b;
  for (const auto& v : isolated) b.add_vertex(v);
  for (const auto& [x, y] : edges) b.add_edge(x, y);
  return b.build();
}

inline LabeledGraph path_graph(const std::vector<Label>& vs) {
  GraphBuilder b;
  for (const auto& v : vs) b.add_vertex(v);
  for (size_t i = 1; i < vs.size(); ++i) b.add_edge(vs[i - 1], vs[i]);
  return b.build();
}

inline LabeledGraph complete_graph(const std::vector<Label>& vs) {
  GraphBuilder b;
  for (size_t i = 0; i < vs.size(); ++i) {
    b.add_vertex(vs[i]);
    for (size_t j = i + 1; j < vs.size(); ++j) b.add_edge(vs[i], vs[j]);
  }
  return b.build();
}

inline LabeledGraph cycle_graph(const std::vector<Label>& vs) {
  GraphBuilder b;
  for (size_t i = 0; i < vs.size(); ++i) b.add_edge(vs[i], vs[(i + 1) % vs.size()]);
  return b.build();
}

// Connected graph on n vertices: random spanning tree plus random extra edges.
inline LabeledGraph random_connected_graph(Rng& rng, int n, double extra_p = 0.3) {
  GraphBuilder b;
  b.add_vertex(vlabel(0));
  for (int i = 1; i < n; ++i) b.add_edge(vlabel(rand_int(rng, 0, i - 1)), vlabel(i));
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (rand_bool(rng, extra_p)) b.add_edge(vlabel(i), vlabel(j));
    }
  }
  return b.build();
}

inline LabeledGraph random_graph(Rng& rng, int n, double p) {
  GraphBuilder b;
  for (int i = 0; i < n; ++i) b.add_vertex(vlabel(i));
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (rand_bool(rng, p)) b.add_edge(vlabel(i), vlabel(j));
    }
  }
  return b.build();
}

// Vertices added one at a time, each wired to at most d earlier ones; the
// result has degeneracy at most d.
inline LabeledGraph random_degenerate_graph(Rng& rng, int n, int d) {
  GraphBuilder b;
  b.add_vertex(vlabel(0));
  for (int i = 1; i < n; ++i) {
    b.add_vertex(vlabel(i));
    int picks = rand_int(rng, 1, std::min(d, i));
    std::set<int> chosen;
    while (static_cast<int>(chosen.size()) < picks) chosen.insert(rand_int(rng, 0, i - 1));
    for (int j : chosen) b.add_edge(vlabel(j), vlabel(i));
  }
  return b.build();
}

// Random graph with max degree <= cap: sprinkle edges, skipping saturated
// endpoints.
inline LabeledGraph random_bounded_degree_graph(Rng& rng, int n, int cap, int tries) {
  GraphBuilder b;
  std::vector<int> deg(static_cast<size_t>(n), 0);
  std::set<std::pair<int, int>> used;
  for (int i = 0; i < n; ++i) b.add_vertex(vlabel(i));
  for (int t = 0; t < tries; ++t) {
    int i = rand_int(rng, 0, n - 1);
    int j = rand_int(rng, 0, n - 1);
    if (i == j || deg[static_cast<size_t>(i)] >= cap || deg[static_cast<size_t>(j)] >= cap) continue;
    if (!used.insert({std::min(i, j), std::max(i, j)}).second) continue;
    b.add_edge(vlabel(i), vlabel(j));
    ++deg[static_cast<size_t>(i)];
    ++deg[static_cast<size_t>(j)];
  }
  return b.build();
}

inline std::vector<Contraction> all_contractions(const LabeledGraph& g) {
  std::vector<Contraction> out;
  for (const auto& [a, b] : g.edge_list()) {
    out.push_back({a, b});
    out.push_back({b, a});
  }
  return out;
}

// Applies `steps` random contractions (fewer if the graph runs out of edges).
inline std::pair<LabeledGraph, ContractionSequence> random_contraction_of(Rng& rng,
                                                                          const LabeledGraph& g,
                                                                          int steps) {
  LabeledGraph cur = g;
  ContractionSequence seq;
  for (int i = 0; i < steps; ++i) {
    auto cands = all_contractions(cur);
    if (cands.empty()) break;
    Contraction c = cands[static_cast<size_t>(rand_int(rng, 0, static_cast<int>(cands.size()) - 1))];
    cur = contrakt::contract(cur, c);
    seq.push_back(c);
  }
  return {cur, seq};
}

// Random structural damage: toggles an edge or drops a vertex.
inline LabeledGraph perturb(Rng& rng, const LabeledGraph& g) {
  if (g.vertex_count() < 2) return g;
  GraphBuilder b;
  int drop = rand_bool(rng, 0.3) ? rand_int(rng, 0, g.vertex_count() - 1) : -1;
  int ti = rand_int(rng, 0, g.vertex_count() - 1);
  int tj = rand_int(rng, 0, g.vertex_count() - 1);
  for (int i = 0; i < g.vertex_count(); ++i) {
    if (i != drop) b.add_vertex(g.label_at(i));
  }
  for (const auto& [x, y] : g.edge_list()) {
    int ix = g.index_of(x), iy = g.index_of(y);
    if (ix == drop || iy == drop) continue;
    bool toggled = (ix == std::min(ti, tj) && iy == std::max(ti, tj));
    if (!toggled) b.add_edge(x, y);
  }
  if (drop < 0 && ti != tj && !g.has_edge(g.label_at(ti), g.label_at(tj)))
    b.add_edge(g.label_at(ti), g.label_at(tj));
  return b.build();
}

// Swaps two labels in a graph.
inline LabeledGraph transpose_labels(const LabeledGraph& g, const Label& u, const Label& v) {
  auto ren = [&](const Label& x) { return x == u ? v : x == v ? u : x; };
  GraphBuilder b;
  for (const auto& x : g.labels()) b.add_vertex(ren(x));
  for (const auto& [x, y] : g.edge_list()) b.add_edge(ren(x), ren(y));
  return b.build();
}

// ---- independent oracles (test-side only) --------------------------------

// Naive search over every contraction sequence of length exactly k.
inline bool oracle_seq_search(const LabeledGraph& g, const LabeledGraph& h, int k) {
  if (k == 0) return contrakt::graph_equal(g, h);
  for (const auto& c : all_contractions(g)) {
    if (oracle_seq_search(contrakt::contract(g, c), h, k - 1)) return true;
  }
  return false;
}

// Contractibility by unrestricted sequence enumeration.
inline bool oracle_contractible(const LabeledGraph& g, const LabeledGraph& h) {
  int k = g.vertex_count() - h.vertex_count();
  if (k < 0) return false;
  return oracle_seq_search(g, h, k);
}

// MCC by naive enumeration of all split sequence pairs with |s1|+|s2| <= k.
inline bool oracle_mcc(const LabeledGraph& g, const LabeledGraph& h, int k) {
  for (int total = 0; total <= k; ++total) {
    for (int i = 0; i <= total; ++i) {
      // enumerate all length-i sequences from g, then length-(total-i) from h
      struct Walker {
        static bool go(const LabeledGraph& a, int left, const LabeledGraph& b, int right) {
          if (left == 0) {
            if (right == 0) return contrakt::graph_equal(a, b);
            for (const auto& c : all_contractions(b)) {
              if (go(a, 0, contrakt::contract(b, c), right - 1)) return true;
            }
            return false;
          }
          for (const auto& c : all_contractions(a)) {
            if (go(contrakt::contract(a, c), left - 1, b, right)) return true;
          }
          return false;
        }
      };
      if (Walker::go(g, i, h, total - i)) return true;
    }
  }
  return false;
}

}  // namespace testutil
