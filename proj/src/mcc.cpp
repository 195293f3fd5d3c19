#include "contrakt/mcc.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>
#include <unordered_map>

namespace contrakt {

namespace {

struct LevelEntry {
  LabeledGraph graph;
  int parent = -1;  // index into the previous level, -1 at the root
  Contraction step;
};

using LevelMap = std::map<std::string, int>;  // canonical key -> entry index

struct SideLevels {
  std::vector<std::vector<LevelEntry>> levels;
  std::vector<LevelMap> maps;

  void init(const LabeledGraph& g) {
    levels.push_back({LevelEntry{g, -1, {}}});
    maps.push_back({{canonical_key(g), 0}});
  }

  // Expands one more level of distinct reachable graphs.
  void expand(SolveStats& stats) {
    const auto& prev = levels.back();
    std::vector<LevelEntry> next;
    LevelMap next_map;
    for (size_t pi = 0; pi < prev.size(); ++pi) {
      const LabeledGraph& cur = prev[pi].graph;
      for (const auto& [a, b] : cur.edge_list()) {
        for (const auto& c : {Contraction{a, b}, Contraction{b, a}}) {
          LabeledGraph nxt = contract(cur, c);
          ++stats.nodes_explored;
          std::string key = canonical_key(nxt);
          if (next_map.emplace(key, static_cast<int>(next.size())).second)
            next.push_back({std::move(nxt), static_cast<int>(pi), c});
        }
      }
    }
    levels.push_back(std::move(next));
    maps.push_back(std::move(next_map));
  }

  ContractionSequence trace(int level, int index) const {
    ContractionSequence seq;
    for (int l = level; l > 0; --l) {
      seq.push_back(levels[static_cast<size_t>(l)][static_cast<size_t>(index)].step);
      index = levels[static_cast<size_t>(l)][static_cast<size_t>(index)].parent;
    }
    std::reverse(seq.begin(), seq.end());
    return seq;
  }
};

}  // namespace

MccResult solve_mcc_bruteforce(const LabeledGraph& g, const LabeledGraph& h, int k, int cap) {
  if (k > cap)
    throw BudgetTooLarge("solve_mcc_bruteforce: budget " + std::to_string(k) + " exceeds cap " +
                         std::to_string(cap));
  MccResult res;
  if (k < 0) return res;

  SideLevels gs, hs;
  gs.init(g);
  hs.init(h);

  // Graphs can only coincide when their vertex counts do, which pins the
  // budget split: i - j = |V(g)| - |V(h)|.
  int dn = g.vertex_count() - h.vertex_count();
  for (int total = 0; total <= k; ++total) {
    if ((total - dn) % 2 != 0) continue;
    int i = (total + dn) / 2;
    int j = (total - dn) / 2;
    if (i < 0 || j < 0 || i >= g.vertex_count() || j >= h.vertex_count()) continue;
    while (static_cast<int>(gs.levels.size()) <= i) gs.expand(res.stats);
    while (static_cast<int>(hs.levels.size()) <= j) hs.expand(res.stats);

    const LevelMap& gm = gs.maps[static_cast<size_t>(i)];
    const LevelMap& hm = hs.maps[static_cast<size_t>(j)];
    // Both maps are key-sorted; the first common key is deterministic.
    auto git = gm.begin();
    auto hit = hm.begin();
    while (git != gm.end() && hit != hm.end()) {
      if (git->first < hit->first) {
        ++git;
      } else if (hit->first < git->first) {
        ++hit;
      } else {
        res.decision = true;
        res.s1 = gs.trace(i, git->second);
        res.s2 = hs.trace(j, hit->second);
        res.common = gs.levels[static_cast<size_t>(i)][static_cast<size_t>(git->second)].graph;
        res.k_used = total;
        res.max_common_size = res.common->vertex_count();
        res.stats.max_depth = total;
        return res;
      }
    }
  }
  return res;
}

namespace {

struct MccBranchCtx {
  const MccBranchingOptions* options = nullptr;
  SolveStats stats;
  ContractionSequence s1, s2;
  std::unordered_map<std::string, int> failed;
};

bool mcc_rec(const LabeledGraph& g, const LabeledGraph& h, int k, int depth, MccBranchCtx& ctx,
             MccResult& out);

bool mcc_try(const LabeledGraph& g, const LabeledGraph& h, bool on_g, const Contraction& c, int k,
             int depth, MccBranchCtx& ctx, MccResult& out) {
  auto& side = on_g ? ctx.s1 : ctx.s2;
  side.push_back(c);
  bool ok = on_g ? mcc_rec(contract(g, c), h, k - 1, depth + 1, ctx, out)
                 : mcc_rec(g, contract(h, c), k - 1, depth + 1, ctx, out);
  if (ok) return true;
  side.pop_back();
  return false;
}

bool mcc_rec(const LabeledGraph& g, const LabeledGraph& h, int k, int depth, MccBranchCtx& ctx,
             MccResult& out) {
  ++ctx.stats.nodes_explored;
  ctx.stats.max_depth = std::max(ctx.stats.max_depth, depth);

  if (graph_equal(g, h)) {
    out.common = g;
    return true;
  }
  if (k <= 0) return false;

  std::string key;
  if (ctx.options->use_cache) {
    key = canonical_key(g) + '\x01' + canonical_key(h);
    auto it = ctx.failed.find(key);
    if (it != ctx.failed.end() && k <= it->second) return false;
  }
  auto fail = [&]() {
    if (ctx.options->use_cache) {
      auto [it, inserted] = ctx.failed.emplace(key, k);
      if (!inserted) it->second = std::max(it->second, k);
    }
    return false;
  };

  int children = 0;
  auto note = [&]() {
    ctx.stats.max_branch_children = std::max(ctx.stats.max_branch_children, children);
  };

  // A vertex in exactly one graph must disappear there; g-side differences
  // first, smallest label first.
  for (int pass = 0; pass < 2; ++pass) {
    const LabeledGraph& a = pass == 0 ? g : h;
    const LabeledGraph& b = pass == 0 ? h : g;
    for (int v = 0; v < a.vertex_count(); ++v) {
      const Label& vl = a.label_at(v);
      if (b.has_vertex(vl)) continue;
      for (int w : a.neighbors_of(v)) {
        ++children;
        if (mcc_try(g, h, pass == 0, {a.label_at(w), vl}, k, depth, ctx, out)) return true;
      }
      note();
      return fail();
    }
  }

  // V(g) == V(h); attack the first differing edge with every ordered
  // contraction incident to it, in either graph.
  std::pair<Label, Label> diff;
  bool found = false;
  for (const auto& e : g.edge_list()) {
    if (!h.has_edge(e.first, e.second)) {
      diff = e;
      found = true;
      break;
    }
  }
  if (!found) {
    for (const auto& e : h.edge_list()) {
      if (!g.has_edge(e.first, e.second)) {
        diff = e;
        found = true;
        break;
      }
    }
  }
  if (!found) return fail();  // unreachable: graphs differ but share V and E

  for (int pass = 0; pass < 2; ++pass) {
    const LabeledGraph& a = pass == 0 ? g : h;
    std::set<Contraction> branches;
    for (const Label& end : {diff.first, diff.second}) {
      if (!a.has_vertex(end)) continue;
      for (const auto& w : a.neighbor_labels(end)) {
        branches.insert({end, w});
        branches.insert({w, end});
      }
    }
    for (const auto& c : branches) {
      ++children;
      if (mcc_try(g, h, pass == 0, c, k, depth, ctx, out)) return true;
    }
  }
  note();
  return fail();
}

}  // namespace

MccResult solve_mcc_branching(const LabeledGraph& g, const LabeledGraph& h, int k,
                              const MccBranchingOptions& options) {
  MccResult res;
  if (k < 0) return res;
  MccBranchCtx ctx;
  ctx.options = &options;
  res.decision = mcc_rec(g, h, k, 0, ctx, res);
  res.stats = ctx.stats;
  if (res.decision) {
    res.s1 = ctx.s1;
    res.s2 = ctx.s2;
    res.k_used = static_cast<int>(ctx.s1.size() + ctx.s2.size());
    res.max_common_size = res.common->vertex_count();
  } else {
    res.common.reset();
  }
  return res;
}

MatchingResult min_cost_perfect_matching(
    const std::vector<std::vector<std::optional<long long>>>& costs) {
  const int n = static_cast<int>(costs.size());
  for (const auto& row : costs) {
    if (static_cast<int>(row.size()) != n) throw NotSquare("cost matrix is not square");
  }
  MatchingResult res;
  if (n == 0) {
    res.feasible = true;
    return res;
  }

  const long long INF = std::numeric_limits<long long>::max() / 4;
  auto cost_at = [&](int r, int c) { return costs[static_cast<size_t>(r)][static_cast<size_t>(c)].value_or(INF); };

  // Kuhn-Munkres with potentials, rows added one at a time.
  std::vector<long long> u(static_cast<size_t>(n + 1)), v(static_cast<size_t>(n + 1));
  std::vector<int> p(static_cast<size_t>(n + 1)), way(static_cast<size_t>(n + 1));
  for (int i = 1; i <= n; ++i) {
    p[0] = i;
    int j0 = 0;
    std::vector<long long> minv(static_cast<size_t>(n + 1), INF);
    std::vector<char> used(static_cast<size_t>(n + 1), 0);
    do {
      used[static_cast<size_t>(j0)] = 1;
      int i0 = p[static_cast<size_t>(j0)], j1 = 0;
      long long delta = INF;
      for (int j = 1; j <= n; ++j) {
        if (used[static_cast<size_t>(j)]) continue;
        long long cur = cost_at(i0 - 1, j - 1) - u[static_cast<size_t>(i0)] - v[static_cast<size_t>(j)];
        if (cur < minv[static_cast<size_t>(j)]) {
          minv[static_cast<size_t>(j)] = cur;
          way[static_cast<size_t>(j)] = j0;
        }
        if (minv[static_cast<size_t>(j)] < delta) {
          delta = minv[static_cast<size_t>(j)];
          j1 = j;
        }
      }
      if (delta >= INF) return res;  // no finite augmenting path: infeasible
      for (int j = 0; j <= n; ++j) {
        if (used[static_cast<size_t>(j)]) {
          u[static_cast<size_t>(p[static_cast<size_t>(j)])] += delta;
          v[static_cast<size_t>(j)] -= delta;
        } else {
          minv[static_cast<size_t>(j)] -= delta;
        }
      }
      j0 = j1;
    } while (p[static_cast<size_t>(j0)] != 0);
    do {
      int j1 = way[static_cast<size_t>(j0)];
      p[static_cast<size_t>(j0)] = p[static_cast<size_t>(j1)];
      j0 = j1;
    } while (j0);
  }

  res.assignment.assign(static_cast<size_t>(n), -1);
  for (int j = 1; j <= n; ++j) {
    if (p[static_cast<size_t>(j)]) res.assignment[static_cast<size_t>(p[static_cast<size_t>(j)] - 1)] = j - 1;
  }
  long long total = 0;
  for (int r = 0; r < n; ++r) {
    const auto& cell = costs[static_cast<size_t>(r)][static_cast<size_t>(res.assignment[static_cast<size_t>(r)])];
    if (!cell) return MatchingResult{};  // an infeasible pairing was forced
    total += *cell;
  }
  res.feasible = true;
  res.total = total;
  return res;
}

MccResult solve_mcc_components(const LabeledGraph& g, const LabeledGraph& h, int k,
                               const MccSolver& inner) {
  MccResult res;
  if (k < 0) return res;
  auto g_comps = components(g);
  auto h_comps = components(h);
  if (g_comps.size() != h_comps.size()) return res;
  const int n = static_cast<int>(g_comps.size());
  if (n == 0) {
    res.decision = true;
    res.s1 = ContractionSequence{};
    res.s2 = ContractionSequence{};
    res.common = g;
    res.k_used = 0;
    res.max_common_size = 0;
    return res;
  }

  // Per-pair minimum contraction counts, independently up to the full budget.
  std::vector<std::vector<std::optional<long long>>> costs(
      static_cast<size_t>(n), std::vector<std::optional<long long>>(static_cast<size_t>(n)));
  std::vector<std::vector<MccResult>> best(static_cast<size_t>(n),
                                           std::vector<MccResult>(static_cast<size_t>(n)));
  for (int i = 0; i < n; ++i) {
    auto sub_g = induced_subgraph(g, g_comps[static_cast<size_t>(i)]);
    for (int j = 0; j < n; ++j) {
      auto sub_h = induced_subgraph(h, h_comps[static_cast<size_t>(j)]);
      for (int t = 0; t <= k; ++t) {
        MccResult r = inner(sub_g, sub_h, t);
        res.stats.nodes_explored += r.stats.nodes_explored;
        if (r.decision) {
          costs[static_cast<size_t>(i)][static_cast<size_t>(j)] = r.k_used;
          best[static_cast<size_t>(i)][static_cast<size_t>(j)] = std::move(r);
          break;
        }
      }
    }
  }

  MatchingResult match = min_cost_perfect_matching(costs);
  if (!match.feasible || match.total > k) return res;

  ContractionSequence s1, s2;
  GraphBuilder common;
  int common_size = 0;
  for (int i = 0; i < n; ++i) {
    const MccResult& r = best[static_cast<size_t>(i)][static_cast<size_t>(match.assignment[static_cast<size_t>(i)])];
    if (r.s1) s1.insert(s1.end(), r.s1->begin(), r.s1->end());
    if (r.s2) s2.insert(s2.end(), r.s2->begin(), r.s2->end());
    for (const auto& v : r.common->labels()) common.add_vertex(v);
    for (const auto& [a, b] : r.common->edge_list()) common.add_edge(a, b);
    common_size += r.common->vertex_count();
  }
  res.decision = true;
  res.s1 = std::move(s1);
  res.s2 = std::move(s2);
  res.common = common.build();
  res.k_used = static_cast<int>(match.total);
  res.max_common_size = common_size;
  return res;
}

}  // namespace contrakt
