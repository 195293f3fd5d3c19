#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "contrakt/errors.hpp"

namespace contrakt {

using Label = std::string;

/// One labeled contraction: the edge {kept, removed} is contracted and the
/// surviving vertex keeps the label `kept`.
struct Contraction {
  Label kept;
  Label removed;

  friend bool operator==(const Contraction& a, const Contraction& b) {
    return a.kept == b.kept && a.removed == b.removed;
  }
  friend bool operator<(const Contraction& a, const Contraction& b) {
    return a.kept != b.kept ? a.kept < b.kept : a.removed < b.removed;
  }
};

using ContractionSequence = std::vector<Contraction>;

/// Simple undirected graph over unique string labels. Immutable after
/// construction; all operations return new values. Labels are kept sorted and
/// double as a dense integer re-indexing (vertex id = position in labels()),
/// which the solvers use for their hot loops.
class LabeledGraph {
 public:
  LabeledGraph() = default;

  static LabeledGraph from(const std::vector<Label>& vertices,
                           const std::vector<std::pair<Label, Label>>& edges);

  int vertex_count() const { return static_cast<int>(labels_.size()); }
  int edge_count() const { return edge_count_; }
  bool empty() const { return labels_.empty(); }

  const std::vector<Label>& labels() const { return labels_; }
  const Label& label_at(int id) const { return labels_[static_cast<size_t>(id)]; }

  /// Dense id of a label, -1 if absent.
  int index_of(const Label& v) const;
  bool has_vertex(const Label& v) const { return index_of(v) >= 0; }

  const std::vector<int>& neighbors_of(int id) const { return adj_[static_cast<size_t>(id)]; }
  bool has_edge_ids(int u, int v) const;
  bool has_edge(const Label& a, const Label& b) const;

  int degree_at(int id) const { return static_cast<int>(adj_[static_cast<size_t>(id)].size()); }
  int degree(const Label& v) const;
  std::vector<Label> neighbor_labels(const Label& v) const;

  /// Edges in canonical order: smaller endpoint first, pairs sorted.
  std::vector<std::pair<Label, Label>> edge_list() const;

  friend bool operator==(const LabeledGraph& a, const LabeledGraph& b) {
    return a.labels_ == b.labels_ && a.adj_ == b.adj_;
  }

 private:
  std::vector<Label> labels_;          // sorted, unique
  std::vector<std::vector<int>> adj_;  // sorted neighbor ids per vertex
  int edge_count_ = 0;

  friend class GraphBuilder;
  friend LabeledGraph contract(const LabeledGraph&, const Contraction&);
  friend LabeledGraph remove_vertex(const LabeledGraph&, const Label&);
};

/// Accumulates vertices and edges, then produces a LabeledGraph. Edge
/// endpoints are auto-declared as vertices.
class GraphBuilder {
 public:
  void add_vertex(const Label& v);
  void add_edge(const Label& a, const Label& b);
  bool has_vertex(const Label& v) const { return vertices_.count(v) > 0; }
  LabeledGraph build() const;

 private:
  std::set<Label> vertices_;
  std::set<std::pair<Label, Label>> edges_;  // normalized: first < second
};

LabeledGraph contract(const LabeledGraph& g, const Contraction& c);
LabeledGraph apply_sequence(const LabeledGraph& g, const ContractionSequence& s);
bool graph_equal(const LabeledGraph& g, const LabeledGraph& h);

struct DegeneracyResult {
  int value = 0;
  std::vector<Label> ordering;  // greedy min-degree elimination order
};
DegeneracyResult degeneracy(const LabeledGraph& g);

int max_degree(const LabeledGraph& g);

/// Connected components as sorted vertex sets, ordered by smallest label.
std::vector<std::vector<Label>> components(const LabeledGraph& g);

LabeledGraph induced_subgraph(const LabeledGraph& g, const std::vector<Label>& keep);
bool is_connected(const LabeledGraph& g, const std::vector<Label>& subset);

LabeledGraph remove_vertex(const LabeledGraph& g, const Label& v);

/// Graph with vertices V(a) ∪ V(b) and edges E(a) ∪ E(b).
LabeledGraph union_graph(const LabeledGraph& a, const LabeledGraph& b);

/// Deterministic encoding; two graphs get the same key iff graph_equal.
std::string canonical_key(const LabeledGraph& g);

}  // namespace contrakt
