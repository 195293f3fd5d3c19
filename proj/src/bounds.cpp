#include "contrakt/bounds.hpp"

#include <algorithm>
#include <queue>

namespace contrakt {

namespace {

// Adjacency over bag ids; throws NotATree unless links form a tree.
std::map<int, std::vector<int>> tree_adjacency(const TreeDecomposition& td) {
  if (td.bags.empty()) throw NotATree("decomposition has no bags");
  std::map<int, std::vector<int>> adj;
  for (const auto& [id, bag] : td.bags) adj[id];
  for (const auto& [a, b] : td.links) {
    if (a == b) throw NotATree("self-link on bag " + std::to_string(a));
    if (!td.bags.count(a) || !td.bags.count(b))
      throw NotATree("link references unknown bag");
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  if (td.links.size() + 1 != td.bags.size())
    throw NotATree("link count does not match a tree");
  // connectivity
  std::set<int> seen;
  std::queue<int> q;
  q.push(td.bags.begin()->first);
  seen.insert(td.bags.begin()->first);
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int w : adj.at(u)) {
      if (seen.insert(w).second) q.push(w);
    }
  }
  if (seen.size() != td.bags.size()) throw NotATree("bag tree is disconnected");
  return adj;
}

}  // namespace

TdCheck check_td(const LabeledGraph& g, const TreeDecomposition& td) {
  auto adj = tree_adjacency(td);
  TdCheck out;

  out.bags_in_graph = true;
  for (const auto& [id, bag] : td.bags) {
    for (const auto& v : bag) {
      if (!g.has_vertex(v)) out.bags_in_graph = false;
    }
  }

  out.vertices_covered = true;
  out.vertices_connected = true;
  for (const auto& v : g.labels()) {
    std::set<int> holding;
    for (const auto& [id, bag] : td.bags) {
      if (bag.count(v)) holding.insert(id);
    }
    if (holding.empty()) {
      out.vertices_covered = false;
      continue;
    }
    std::set<int> seen;
    std::queue<int> q;
    q.push(*holding.begin());
    seen.insert(*holding.begin());
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int w : adj.at(u)) {
        if (holding.count(w) && seen.insert(w).second) q.push(w);
      }
    }
    if (seen.size() != holding.size()) out.vertices_connected = false;
  }

  out.edges_covered = true;
  for (const auto& [u, v] : g.edge_list()) {
    bool covered = false;
    for (const auto& [id, bag] : td.bags) {
      if (bag.count(u) && bag.count(v)) {
        covered = true;
        break;
      }
    }
    if (!covered) out.edges_covered = false;
  }
  return out;
}

bool validate_td(const LabeledGraph& g, const TreeDecomposition& td) {
  return check_td(g, td).ok();
}

int width(const TreeDecomposition& td) {
  int w = -1;
  for (const auto& [id, bag] : td.bags) w = std::max(w, static_cast<int>(bag.size()) - 1);
  return w;
}

TreeDecomposition heuristic_td(const LabeledGraph& g) {
  TreeDecomposition td;
  const int n = g.vertex_count();
  if (n == 0) {
    td.bags[0] = {};
    return td;
  }

  std::map<Label, std::set<Label>> adj;
  for (const auto& v : g.labels()) {
    auto nb = g.neighbor_labels(v);
    adj[v] = std::set<Label>(nb.begin(), nb.end());
  }

  std::vector<Label> order;
  std::vector<std::set<Label>> bags;
  std::map<Label, int> position;
  while (!adj.empty()) {
    auto best = adj.begin();
    for (auto it = adj.begin(); it != adj.end(); ++it) {
      if (it->second.size() < best->second.size()) best = it;
    }
    Label v = best->first;
    std::set<Label> nb = best->second;
    position[v] = static_cast<int>(order.size());
    order.push_back(v);
    std::set<Label> bag = nb;
    bag.insert(v);
    bags.push_back(std::move(bag));
    // eliminate: clique the neighborhood, drop v
    adj.erase(v);
    for (const auto& a : nb) {
      adj.at(a).erase(v);
      for (const auto& b : nb) {
        if (a != b) adj.at(a).insert(b);
      }
    }
  }

  for (int i = 0; i < n; ++i) td.bags[i] = bags[static_cast<size_t>(i)];
  for (int i = 0; i < n; ++i) {
    // attach to the bag of the earliest-eliminated remaining neighbor
    int parent = -1;
    for (const auto& w : bags[static_cast<size_t>(i)]) {
      if (w == order[static_cast<size_t>(i)]) continue;
      int pw = position.at(w);
      if (pw > i && (parent < 0 || pw < parent)) parent = pw;
    }
    if (parent < 0 && i + 1 < n) parent = i + 1;
    if (parent >= 0) td.links.emplace_back(i, parent);
  }
  return td;
}

TreeDecomposition lift_td_contraction(const LabeledGraph& g, const TreeDecomposition& td_g,
                                      const WitnessStructure& w) {
  try {
    if (!validate_td(g, td_g)) throw InvalidInputs("decomposition is not valid for g");
    LabeledGraph h = witness_quotient(g, w);
    if (!validate_witness(g, h, w)) throw InvalidInputs("witness structure is not valid for g");
  } catch (const NotATree& e) {
    throw InvalidInputs(e.what());
  } catch (const NotAPartition& e) {
    throw InvalidInputs(e.what());
  }

  std::map<Label, Label> rep_of;
  for (const auto& blk : w.blocks) {
    for (const auto& m : blk.members) rep_of[m] = blk.representative;
  }

  TreeDecomposition out = td_g;
  for (auto& [id, bag] : out.bags) {
    std::set<Label> add;
    for (const auto& x : bag) add.insert(rep_of.at(x));
    bag.insert(add.begin(), add.end());
  }
  return out;
}

TreeDecomposition lift_td_mcc(const TreeDecomposition& td_m, const LabeledGraph& g,
                              const LabeledGraph& h, const LabeledGraph& m) {
  try {
    if (!validate_td(m, td_m)) throw InvalidInputs("decomposition is not valid for m");
  } catch (const NotATree& e) {
    throw InvalidInputs(e.what());
  }
  for (const auto& v : m.labels()) {
    if (!g.has_vertex(v) || !h.has_vertex(v))
      throw InvalidInputs("m contains vertex '" + v + "' outside V(g) ∩ V(h)");
  }

  std::set<Label> deleted;
  for (const auto& v : g.labels()) {
    if (!m.has_vertex(v)) deleted.insert(v);
  }
  for (const auto& v : h.labels()) {
    if (!m.has_vertex(v)) deleted.insert(v);
  }

  TreeDecomposition out = td_m;
  for (auto& [id, bag] : out.bags) bag.insert(deleted.begin(), deleted.end());
  return out;
}

DegeneracyGrowthReport check_degeneracy_growth(const LabeledGraph& g,
                                               const ContractionSequence& s) {
  DegeneracyGrowthReport rep;
  rep.delta_before = degeneracy(g).value;
  rep.steps = static_cast<int>(s.size());
  rep.delta_after = degeneracy(apply_sequence(g, s)).value;
  rep.holds = rep.delta_after <= rep.delta_before + rep.steps;
  return rep;
}

TightFamily build_maxdeg_tight_family(int delta, int t) {
  if (delta < 2) throw BadParams("delta must be at least 2");
  if (t < 0) throw BadParams("t must be nonnegative");

  GraphBuilder b;
  auto spine = [](int i) { return "p_" + std::to_string(i); };
  b.add_vertex(spine(0));
  for (int i = 1; i <= t; ++i) b.add_edge(spine(i - 1), spine(i));
  for (int i = 0; i <= t; ++i) {
    for (int j = 1; j <= delta - 2; ++j)
      b.add_edge(spine(i), "leaf_" + std::to_string(i) + "_" + std::to_string(j));
  }
  b.add_edge(spine(0), "end_0");
  b.add_edge(spine(t), "end_1");

  TightFamily out;
  out.g = b.build();
  for (int i = 1; i <= t; ++i) out.s.push_back({spine(0), spine(i)});
  return out;
}

}  // namespace contrakt
