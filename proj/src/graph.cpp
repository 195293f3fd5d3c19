#include "contrakt/graph.hpp"

#include <algorithm>
#include <cctype>
#include <queue>
#include <sstream>

namespace contrakt {

namespace {

void check_label(const Label& l) {
  if (l.empty()) throw BadGraph("empty vertex label");
  for (char c : l) {
    if (std::isspace(static_cast<unsigned char>(c)))
      throw BadGraph("vertex label contains whitespace: '" + l + "'");
  }
}

}  // namespace

void GraphBuilder::add_vertex(const Label& v) {
  check_label(v);
  vertices_.insert(v);
}

void GraphBuilder::add_edge(const Label& a, const Label& b) {
  check_label(a);
  check_label(b);
  if (a == b) throw BadGraph("self-loop on vertex '" + a + "'");
  vertices_.insert(a);
  vertices_.insert(b);
  edges_.insert(a < b ? std::make_pair(a, b) : std::make_pair(b, a));
}

LabeledGraph GraphBuilder::build() const {
  LabeledGraph g;
  g.labels_.assign(vertices_.begin(), vertices_.end());
  g.adj_.assign(g.labels_.size(), {});
  for (const auto& [a, b] : edges_) {
    int ia = g.index_of(a);
    int ib = g.index_of(b);
    g.adj_[static_cast<size_t>(ia)].push_back(ib);
    g.adj_[static_cast<size_t>(ib)].push_back(ia);
  }
  for (auto& nb : g.adj_) std::sort(nb.begin(), nb.end());
  g.edge_count_ = static_cast<int>(edges_.size());
  return g;
}

LabeledGraph LabeledGraph::from(const std::vector<Label>& vertices,
                                const std::vector<std::pair<Label, Label>>& edges) {
  GraphBuilder b;
  for (const auto& v : vertices) b.add_vertex(v);
  for (const auto& [x, y] : edges) b.add_edge(x, y);
  return b.build();
}

int LabeledGraph::index_of(const Label& v) const {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), v);
  if (it == labels_.end() || *it != v) return -1;
  return static_cast<int>(it - labels_.begin());
}

bool LabeledGraph::has_edge_ids(int u, int v) const {
  const auto& nb = adj_[static_cast<size_t>(u)];
  return std::binary_search(nb.begin(), nb.end(), v);
}

bool LabeledGraph::has_edge(const Label& a, const Label& b) const {
  int ia = index_of(a);
  int ib = index_of(b);
  if (ia < 0 || ib < 0) return false;
  return has_edge_ids(ia, ib);
}

int LabeledGraph::degree(const Label& v) const {
  int id = index_of(v);
  if (id < 0) throw UnknownLabel("degree: unknown vertex '" + v + "'");
  return degree_at(id);
}

std::vector<Label> LabeledGraph::neighbor_labels(const Label& v) const {
  int id = index_of(v);
  if (id < 0) throw UnknownLabel("neighbor_labels: unknown vertex '" + v + "'");
  std::vector<Label> out;
  out.reserve(adj_[static_cast<size_t>(id)].size());
  for (int w : adj_[static_cast<size_t>(id)]) out.push_back(labels_[static_cast<size_t>(w)]);
  return out;
}

std::vector<std::pair<Label, Label>> LabeledGraph::edge_list() const {
  std::vector<std::pair<Label, Label>> out;
  out.reserve(static_cast<size_t>(edge_count_));
  for (int u = 0; u < vertex_count(); ++u) {
    for (int v : adj_[static_cast<size_t>(u)]) {
      if (u < v) out.emplace_back(labels_[static_cast<size_t>(u)], labels_[static_cast<size_t>(v)]);
    }
  }
  return out;
}

LabeledGraph contract(const LabeledGraph& g, const Contraction& c) {
  int kept = g.index_of(c.kept);
  int removed = g.index_of(c.removed);
  if (kept < 0) throw UnknownLabel("contract: unknown vertex '" + c.kept + "'");
  if (removed < 0) throw UnknownLabel("contract: unknown vertex '" + c.removed + "'");
  if (kept == removed || !g.has_edge_ids(kept, removed))
    throw NonEdge("contract: (" + c.kept + ", " + c.removed + ") is not an edge");

  int n = g.vertex_count();
  auto remap = [removed](int id) { return id < removed ? id : id - 1; };

  LabeledGraph out;
  out.labels_.reserve(static_cast<size_t>(n - 1));
  for (int i = 0; i < n; ++i) {
    if (i != removed) out.labels_.push_back(g.labels_[static_cast<size_t>(i)]);
  }
  out.adj_.assign(static_cast<size_t>(n - 1), {});

  long long degree_sum = 0;
  for (int v = 0; v < n; ++v) {
    if (v == removed) continue;
    auto& dst = out.adj_[static_cast<size_t>(remap(v))];
    if (v == kept) {
      const auto& a = g.neighbors_of(kept);
      const auto& b = g.neighbors_of(removed);
      std::vector<int> merged;
      merged.reserve(a.size() + b.size());
      std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(merged));
      for (int w : merged) {
        if (w != kept && w != removed) dst.push_back(remap(w));
      }
    } else {
      bool saw_removed = false;
      for (int w : g.neighbors_of(v)) {
        if (w == removed) {
          saw_removed = true;
        } else {
          dst.push_back(remap(w));
        }
      }
      if (saw_removed && !g.has_edge_ids(v, kept)) {
        int nk = remap(kept);
        dst.insert(std::lower_bound(dst.begin(), dst.end(), nk), nk);
      }
    }
    degree_sum += static_cast<long long>(dst.size());
  }
  out.edge_count_ = static_cast<int>(degree_sum / 2);
  return out;
}

LabeledGraph apply_sequence(const LabeledGraph& g, const ContractionSequence& s) {
  LabeledGraph cur = g;
  for (size_t i = 0; i < s.size(); ++i) {
    try {
      cur = contract(cur, s[i]);
    } catch (const NonEdge& e) {
      throw NonEdge("step " + std::to_string(i) + ": " + e.what());
    } catch (const UnknownLabel& e) {
      throw UnknownLabel("step " + std::to_string(i) + ": " + e.what());
    }
  }
  return cur;
}

bool graph_equal(const LabeledGraph& g, const LabeledGraph& h) { return g == h; }

DegeneracyResult degeneracy(const LabeledGraph& g) {
  int n = g.vertex_count();
  DegeneracyResult res;
  res.ordering.reserve(static_cast<size_t>(n));
  std::vector<int> deg(static_cast<size_t>(n));
  std::vector<char> gone(static_cast<size_t>(n), 0);
  for (int v = 0; v < n; ++v) deg[static_cast<size_t>(v)] = g.degree_at(v);

  for (int step = 0; step < n; ++step) {
    int u = -1;
    for (int v = 0; v < n; ++v) {
      if (!gone[static_cast<size_t>(v)] && (u < 0 || deg[static_cast<size_t>(v)] < deg[static_cast<size_t>(u)]))
        u = v;  // ties keep the smaller id, i.e. the smaller label
    }
    res.value = std::max(res.value, deg[static_cast<size_t>(u)]);
    res.ordering.push_back(g.label_at(u));
    gone[static_cast<size_t>(u)] = 1;
    for (int w : g.neighbors_of(u)) {
      if (!gone[static_cast<size_t>(w)]) --deg[static_cast<size_t>(w)];
    }
  }
  return res;
}

int max_degree(const LabeledGraph& g) {
  int best = 0;
  for (int v = 0; v < g.vertex_count(); ++v) best = std::max(best, g.degree_at(v));
  return best;
}

std::vector<std::vector<Label>> components(const LabeledGraph& g) {
  int n = g.vertex_count();
  std::vector<char> seen(static_cast<size_t>(n), 0);
  std::vector<std::vector<Label>> out;
  for (int s = 0; s < n; ++s) {
    if (seen[static_cast<size_t>(s)]) continue;
    std::vector<Label> comp;
    std::queue<int> q;
    q.push(s);
    seen[static_cast<size_t>(s)] = 1;
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      comp.push_back(g.label_at(u));
      for (int w : g.neighbors_of(u)) {
        if (!seen[static_cast<size_t>(w)]) {
          seen[static_cast<size_t>(w)] = 1;
          q.push(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  // BFS starts at increasing ids, so components are already ordered by
  // smallest label.
  return out;
}

LabeledGraph induced_subgraph(const LabeledGraph& g, const std::vector<Label>& keep) {
  GraphBuilder b;
  for (const auto& v : keep) {
    if (!g.has_vertex(v)) throw UnknownLabel("induced_subgraph: unknown vertex '" + v + "'");
    b.add_vertex(v);
  }
  for (const auto& v : keep) {
    for (const auto& w : g.neighbor_labels(v)) {
      if (b.has_vertex(w)) b.add_edge(v, w);
    }
  }
  return b.build();
}

bool is_connected(const LabeledGraph& g, const std::vector<Label>& subset) {
  if (subset.empty()) return true;
  std::set<int> ids;
  for (const auto& v : subset) {
    int id = g.index_of(v);
    if (id < 0) throw UnknownLabel("is_connected: unknown vertex '" + v + "'");
    ids.insert(id);
  }
  std::set<int> seen;
  std::queue<int> q;
  q.push(*ids.begin());
  seen.insert(*ids.begin());
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int w : g.neighbors_of(u)) {
      if (ids.count(w) && !seen.count(w)) {
        seen.insert(w);
        q.push(w);
      }
    }
  }
  return seen.size() == ids.size();
}

LabeledGraph remove_vertex(const LabeledGraph& g, const Label& v) {
  int rid = g.index_of(v);
  if (rid < 0) throw UnknownLabel("remove_vertex: unknown vertex '" + v + "'");
  int n = g.vertex_count();
  auto remap = [rid](int id) { return id < rid ? id : id - 1; };

  LabeledGraph out;
  out.labels_.reserve(static_cast<size_t>(n - 1));
  for (int i = 0; i < n; ++i) {
    if (i != rid) out.labels_.push_back(g.labels_[static_cast<size_t>(i)]);
  }
  out.adj_.assign(static_cast<size_t>(n - 1), {});
  long long degree_sum = 0;
  for (int u = 0; u < n; ++u) {
    if (u == rid) continue;
    auto& dst = out.adj_[static_cast<size_t>(remap(u))];
    for (int w : g.neighbors_of(u)) {
      if (w != rid) dst.push_back(remap(w));
    }
    degree_sum += static_cast<long long>(dst.size());
  }
  out.edge_count_ = static_cast<int>(degree_sum / 2);
  return out;
}

LabeledGraph union_graph(const LabeledGraph& a, const LabeledGraph& b) {
  GraphBuilder builder;
  for (const auto& v : a.labels()) builder.add_vertex(v);
  for (const auto& v : b.labels()) builder.add_vertex(v);
  for (const auto& [x, y] : a.edge_list()) builder.add_edge(x, y);
  for (const auto& [x, y] : b.edge_list()) builder.add_edge(x, y);
  return builder.build();
}

std::string canonical_key(const LabeledGraph& g) {
  std::ostringstream os;
  for (const auto& l : g.labels()) os << l << ' ';
  os << '\n';
  for (int u = 0; u < g.vertex_count(); ++u) {
    for (int w : g.neighbors_of(u)) {
      if (u < w) os << u << '-' << w << ';';
    }
  }
  return os.str();
}

}  // namespace contrakt
