#include "contrakt/contractibility.hpp"

#include <algorithm>
#include <unordered_map>

namespace contrakt {

namespace {

struct BranchCtx {
  const BranchingOptions* options = nullptr;
  SolveStats stats;
  ContractionSequence path;
  std::unordered_map<std::string, int> failed;  // state -> largest budget known to fail
};

std::string state_key(const LabeledGraph& g, const LabeledGraph& h) {
  return canonical_key(g) + '\x01' + canonical_key(h);
}

// Vertices of g absent from h, as ids of g. Returns -1 in `missing_from_g`
// position semantics: the bool out-param flags an h-vertex missing from g.
std::vector<int> g_minus_h(const LabeledGraph& g, const LabeledGraph& h, bool& h_subset_of_g) {
  std::vector<int> extra;
  h_subset_of_g = true;
  for (const auto& v : h.labels()) {
    if (!g.has_vertex(v)) {
      h_subset_of_g = false;
      return extra;
    }
  }
  for (int u = 0; u < g.vertex_count(); ++u) {
    if (!h.has_vertex(g.label_at(u))) extra.push_back(u);
  }
  return extra;
}

bool branch_rec(const LabeledGraph& g, const LabeledGraph& h, int k, int depth, BranchCtx& ctx);

bool try_branch(const LabeledGraph& g, const LabeledGraph& h, const Contraction& c, int k,
                int depth, BranchCtx& ctx) {
  ctx.path.push_back(c);
  if (branch_rec(contract(g, c), h, k - 1, depth + 1, ctx)) return true;
  ctx.path.pop_back();
  return false;
}

bool branch_rec(const LabeledGraph& g, const LabeledGraph& h, int k, int depth, BranchCtx& ctx) {
  ++ctx.stats.nodes_explored;
  ctx.stats.max_depth = std::max(ctx.stats.max_depth, depth);

  if (graph_equal(g, h)) return true;
  if (k < 0) return false;
  bool h_subset = true;
  std::vector<int> extra = g_minus_h(g, h, h_subset);
  if (!h_subset || static_cast<int>(extra.size()) > k) return false;

  std::string key;
  if (ctx.options->use_cache) {
    key = state_key(g, h);
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

  // An edge of g between two h-vertices that is not an edge of h can never
  // disappear: contractions only remove vertices outside V(h) and only add
  // edges. Detecting it anywhere kills the whole subtree.
  for (int u = 0; u < g.vertex_count(); ++u) {
    int hu = h.index_of(g.label_at(u));
    if (hu < 0) continue;
    for (int w : g.neighbors_of(u)) {
      if (u >= w) continue;
      int hw = h.index_of(g.label_at(w));
      if (hw >= 0 && !h.has_edge_ids(hu, hw)) return fail();
    }
  }

  // Minimum-degree vertex, ties by label.
  int u = 0;
  for (int v = 1; v < g.vertex_count(); ++v) {
    if (g.degree_at(v) < g.degree_at(u)) u = v;
  }
  const Label& ul = g.label_at(u);
  int hu = h.index_of(ul);

  int children = 0;
  auto note_children = [&]() {
    ctx.stats.max_branch_children = std::max(ctx.stats.max_branch_children, children);
    if (ctx.options->verify_branch_bound) {
      int bound = std::max({g.degree_at(u), 2 * k, degeneracy(g).value + 2 * k});
      if (children > bound) ++ctx.stats.branch_bound_violations;
    }
  };

  if (hu < 0) {
    // u must disappear; merge it into one of its neighbors.
    for (int v : g.neighbors_of(u)) {
      ++children;
      if (try_branch(g, h, {g.label_at(v), ul}, k, depth, ctx)) return true;
    }
    note_children();
    return fail();
  }

  // u is kept from here on.
  std::vector<Label> gu_labels;
  for (int v : g.neighbors_of(u)) gu_labels.push_back(g.label_at(v));
  std::vector<Label> hu_labels;
  for (int v : h.neighbors_of(hu)) hu_labels.push_back(h.label_at(v));

  if (gu_labels == hu_labels) {
    // Neighborhoods already agree; u can be ignored in both graphs.
    if (branch_rec(remove_vertex(g, ul), remove_vertex(h, ul), k, depth, ctx)) return true;
    return fail();
  }

  // Missing edge: u needs a neighbor v in h that it lacks in g. Some
  // contraction must merge a non-h vertex into u's or v's block first.
  Label missing;
  bool has_missing = false;
  for (const auto& v : hu_labels) {
    if (!g.has_edge(ul, v)) {
      missing = v;
      has_missing = true;
      break;
    }
  }
  if (has_missing) {
    for (const auto& w : gu_labels) {
      if (!h.has_vertex(w)) {
        ++children;
        if (try_branch(g, h, {ul, w}, k, depth, ctx)) return true;
      }
    }
    for (const auto& w : g.neighbor_labels(missing)) {
      if (!h.has_vertex(w)) {
        ++children;
        if (try_branch(g, h, {missing, w}, k, depth, ctx)) return true;
      }
    }
    note_children();
    return fail();
  }

  // Forbidden edge: a g-neighbor of u that is in h but not adjacent to u
  // there. (Already caught by the global scan above; kept for the full case
  // analysis.)
  for (const auto& v : gu_labels) {
    if (h.has_vertex(v) && !h.has_edge(ul, v)) return fail();
  }

  // Surplus neighbor v outside h: contract it into u, or into any of its
  // neighbors except h-vertices outside N_h[u].
  Label surplus;
  bool has_surplus = false;
  for (const auto& v : gu_labels) {
    if (!h.has_vertex(v)) {
      surplus = v;
      has_surplus = true;
      break;
    }
  }
  if (!has_surplus) return fail();  // unreachable: some neighborhood difference must exist

  ++children;
  if (try_branch(g, h, {ul, surplus}, k, depth, ctx)) return true;
  for (const auto& w : g.neighbor_labels(surplus)) {
    if (w == ul) continue;
    if (h.has_vertex(w) && !h.has_edge(ul, w)) continue;  // would complete N_h(u) wrongly
    ++children;
    if (try_branch(g, h, {w, surplus}, k, depth, ctx)) return true;
  }
  note_children();
  return fail();
}

}  // namespace

ContractibilityResult solve_branching(const LabeledGraph& g, const LabeledGraph& h,
                                      const BranchingOptions& options) {
  BranchCtx ctx;
  ctx.options = &options;
  int k = g.vertex_count() - h.vertex_count();
  ContractibilityResult res;
  res.decision = branch_rec(g, h, k, 0, ctx);
  res.stats = ctx.stats;
  if (res.decision) res.certificate = ctx.path;
  return res;
}

namespace {

struct XpCtx {
  const LabeledGraph* h = nullptr;
  SolveStats stats;
  ContractionSequence path;
};

bool xp_rec(const LabeledGraph& g, int k, int depth, XpCtx& ctx) {
  ++ctx.stats.nodes_explored;
  ctx.stats.max_depth = std::max(ctx.stats.max_depth, depth);
  if (k == 0) return graph_equal(g, *ctx.h);
  for (int x = 0; x < g.vertex_count(); ++x) {
    const Label& xl = g.label_at(x);
    if (ctx.h->has_vertex(xl)) continue;
    for (int w : g.neighbors_of(x)) {
      Contraction c{g.label_at(w), xl};
      ctx.path.push_back(c);
      if (xp_rec(contract(g, c), k - 1, depth + 1, ctx)) return true;
      ctx.path.pop_back();
    }
  }
  return false;
}

}  // namespace

ContractibilityResult solve_xp(const LabeledGraph& g, const LabeledGraph& h, int cap) {
  int k = g.vertex_count() - h.vertex_count();
  if (k > cap)
    throw BudgetTooLarge("solve_xp: budget " + std::to_string(k) + " exceeds cap " +
                         std::to_string(cap));
  ContractibilityResult res;
  if (k < 0) return res;
  for (const auto& v : h.labels()) {
    if (!g.has_vertex(v)) return res;
  }
  XpCtx ctx;
  ctx.h = &h;
  res.decision = xp_rec(g, k, 0, ctx);
  res.stats = ctx.stats;
  if (res.decision) res.certificate = ctx.path;
  return res;
}

ContractibilityResult solve_by_components(const LabeledGraph& g, const LabeledGraph& h,
                                          const ContractibilitySolver& inner) {
  ContractibilityResult res;
  auto g_comps = components(g);
  auto h_comps = components(h);
  if (g_comps.size() != h_comps.size()) return res;

  // Every h-component must sit inside exactly one g-component, one per
  // component of g.
  std::vector<int> g_comp_of(h_comps.size(), -1);
  std::vector<int> used(g_comps.size(), 0);
  for (size_t hi = 0; hi < h_comps.size(); ++hi) {
    int target = -1;
    for (const auto& v : h_comps[hi]) {
      int found = -1;
      for (size_t gi = 0; gi < g_comps.size(); ++gi) {
        if (std::binary_search(g_comps[gi].begin(), g_comps[gi].end(), v)) {
          found = static_cast<int>(gi);
          break;
        }
      }
      if (found < 0) return res;  // h vertex not in g at all
      if (target < 0) target = found;
      if (target != found) return res;  // h-component split across g-components
    }
    if (used[static_cast<size_t>(target)]++) return res;  // two h-components in one g-component
    g_comp_of[hi] = target;
  }

  ContractionSequence cert;
  std::vector<std::optional<ContractionSequence>> parts(g_comps.size());
  for (size_t hi = 0; hi < h_comps.size(); ++hi) {
    auto sub_g = induced_subgraph(g, g_comps[static_cast<size_t>(g_comp_of[hi])]);
    auto sub_h = induced_subgraph(h, h_comps[hi]);
    auto part = inner(sub_g, sub_h);
    res.stats.nodes_explored += part.stats.nodes_explored;
    res.stats.max_depth = std::max(res.stats.max_depth, part.stats.max_depth);
    if (!part.decision) return res;
    if (part.certificate) parts[static_cast<size_t>(g_comp_of[hi])] = std::move(part.certificate);
  }
  for (auto& p : parts) {
    if (p) cert.insert(cert.end(), p->begin(), p->end());
  }
  res.decision = true;
  res.certificate = std::move(cert);
  return res;
}

}  // namespace contrakt
