#include "contrakt/witness.hpp"

#include <algorithm>
#include <map>
#include <queue>

namespace contrakt {

namespace {

// Partition-level invariants: blocks cover V(g) exactly once, are nonempty,
// contain their representative, and there is one block per vertex of h with
// representatives drawn from V(h). Violations throw NotAPartition.
void check_partition(const LabeledGraph& g, const LabeledGraph& h, const WitnessStructure& w) {
  for (const auto& v : h.labels()) {
    if (!g.has_vertex(v))
      throw NotAPartition("vertex '" + v + "' of h is not a vertex of g");
  }
  if (static_cast<int>(w.blocks.size()) != h.vertex_count())
    throw NotAPartition("expected " + std::to_string(h.vertex_count()) + " blocks, got " +
                        std::to_string(w.blocks.size()));
  std::set<Label> seen;
  for (const auto& blk : w.blocks) {
    if (blk.members.empty()) throw NotAPartition("empty block");
    if (!blk.members.count(blk.representative))
      throw NotAPartition("block does not contain its representative '" + blk.representative +
                          "'");
    if (!h.has_vertex(blk.representative))
      throw NotAPartition("representative '" + blk.representative + "' is not a vertex of h");
    for (const auto& m : blk.members) {
      if (!g.has_vertex(m)) throw NotAPartition("block member '" + m + "' is not a vertex of g");
      if (!seen.insert(m).second) throw NotAPartition("vertex '" + m + "' appears in two blocks");
    }
  }
  if (static_cast<int>(seen.size()) != g.vertex_count())
    throw NotAPartition("blocks do not cover V(g)");
}

// Block index per vertex id of g; assumes partition invariants hold.
std::vector<int> block_of_vertex(const LabeledGraph& g, const WitnessStructure& w) {
  std::vector<int> block(static_cast<size_t>(g.vertex_count()), -1);
  for (size_t b = 0; b < w.blocks.size(); ++b) {
    for (const auto& m : w.blocks[b].members)
      block[static_cast<size_t>(g.index_of(m))] = static_cast<int>(b);
  }
  return block;
}

std::set<std::pair<int, int>> block_adjacency(const LabeledGraph& g, const std::vector<int>& block) {
  std::set<std::pair<int, int>> adj;
  for (int u = 0; u < g.vertex_count(); ++u) {
    for (int v : g.neighbors_of(u)) {
      if (u >= v) continue;
      int bu = block[static_cast<size_t>(u)];
      int bv = block[static_cast<size_t>(v)];
      if (bu != bv) adj.insert({std::min(bu, bv), std::max(bu, bv)});
    }
  }
  return adj;
}

}  // namespace

bool validate_witness(const LabeledGraph& g, const LabeledGraph& h, const WitnessStructure& w) {
  check_partition(g, h, w);

  // (a) connectivity, (b) exactly one vertex of h per block
  for (const auto& blk : w.blocks) {
    int h_vertices = 0;
    for (const auto& m : blk.members) {
      if (h.has_vertex(m)) ++h_vertices;
    }
    if (h_vertices != 1) return false;
    std::vector<Label> ms(blk.members.begin(), blk.members.end());
    if (!is_connected(g, ms)) return false;
  }

  // (c) block adjacency mirrors E(h)
  auto block = block_of_vertex(g, w);
  auto adj = block_adjacency(g, block);
  std::map<Label, int> block_by_rep;
  for (size_t b = 0; b < w.blocks.size(); ++b) block_by_rep[w.blocks[b].representative] = static_cast<int>(b);
  size_t h_edges = 0;
  for (const auto& [u, v] : h.edge_list()) {
    int bu = block_by_rep.at(u);
    int bv = block_by_rep.at(v);
    if (!adj.count({std::min(bu, bv), std::max(bu, bv)})) return false;
    ++h_edges;
  }
  return adj.size() == h_edges;
}

LabeledGraph witness_quotient(const LabeledGraph& g, const WitnessStructure& w) {
  // Partition checks against the implied h (reps as vertices); block count
  // matches by construction.
  std::set<Label> seen;
  GraphBuilder hb;
  for (const auto& blk : w.blocks) {
    if (blk.members.empty()) throw NotAPartition("empty block");
    if (!blk.members.count(blk.representative))
      throw NotAPartition("block does not contain its representative '" + blk.representative +
                          "'");
    for (const auto& m : blk.members) {
      if (!g.has_vertex(m)) throw NotAPartition("block member '" + m + "' is not a vertex of g");
      if (!seen.insert(m).second) throw NotAPartition("vertex '" + m + "' appears in two blocks");
    }
    hb.add_vertex(blk.representative);
  }
  if (static_cast<int>(seen.size()) != g.vertex_count())
    throw NotAPartition("blocks do not cover V(g)");

  auto block = block_of_vertex(g, w);
  for (const auto& [bu, bv] : block_adjacency(g, block)) {
    hb.add_edge(w.blocks[static_cast<size_t>(bu)].representative,
                w.blocks[static_cast<size_t>(bv)].representative);
  }
  return hb.build();
}

ContractionSequence witness_to_sequence(const LabeledGraph& g, const WitnessStructure& w) {
  LabeledGraph h;
  bool ok = false;
  try {
    h = witness_quotient(g, w);
    ok = validate_witness(g, h, w);
  } catch (const NotAPartition& e) {
    throw InvalidWitness(e.what());
  }
  if (!ok) throw InvalidWitness("witness conditions do not hold for the implied target");

  std::vector<const WitnessBlock*> blocks;
  for (const auto& blk : w.blocks) blocks.push_back(&blk);
  std::sort(blocks.begin(), blocks.end(),
            [](const WitnessBlock* a, const WitnessBlock* b) {
              return a->representative < b->representative;
            });

  ContractionSequence seq;
  for (const WitnessBlock* blk : blocks) {
    // BFS spanning tree rooted at the representative, neighbors in label
    // order; contract discovery order reversed so each step removes a leaf.
    std::map<Label, Label> parent;
    std::vector<Label> order;
    std::set<Label> visited{blk->representative};
    std::queue<Label> q;
    q.push(blk->representative);
    while (!q.empty()) {
      Label u = q.front();
      q.pop();
      order.push_back(u);
      for (const auto& v : g.neighbor_labels(u)) {
        if (blk->members.count(v) && !visited.count(v)) {
          visited.insert(v);
          parent[v] = u;
          q.push(v);
        }
      }
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      if (*it == blk->representative) continue;
      seq.push_back({parent.at(*it), *it});
    }
  }
  return seq;
}

WitnessStructure sequence_to_witness(const LabeledGraph& g, const ContractionSequence& s) {
  std::map<Label, std::set<Label>> cls;  // surviving vertex -> absorbed set
  for (const auto& v : g.labels()) cls[v] = {v};

  LabeledGraph cur = g;
  for (size_t i = 0; i < s.size(); ++i) {
    try {
      cur = contract(cur, s[i]);
    } catch (const NonEdge& e) {
      throw NonEdge("step " + std::to_string(i) + ": " + e.what());
    } catch (const UnknownLabel& e) {
      throw UnknownLabel("step " + std::to_string(i) + ": " + e.what());
    }
    auto absorbed = std::move(cls.at(s[i].removed));
    cls.erase(s[i].removed);
    cls.at(s[i].kept).insert(absorbed.begin(), absorbed.end());
  }

  WitnessStructure w;
  for (auto& [rep, members] : cls) w.blocks.push_back({rep, std::move(members)});
  return w;
}

LabeledGraph contract_matching_first(const LabeledGraph& g, const WitnessStructure& w,
                                     const std::vector<Contraction>& r) {
  auto block = [&]() {
    std::set<Label> seen;
    for (const auto& blk : w.blocks) {
      if (blk.members.empty()) throw NotAPartition("empty block");
      if (!blk.members.count(blk.representative))
        throw NotAPartition("block does not contain its representative");
      for (const auto& m : blk.members) {
        if (!g.has_vertex(m)) throw NotAPartition("block member '" + m + "' is not a vertex of g");
        if (!seen.insert(m).second) throw NotAPartition("vertex '" + m + "' appears in two blocks");
      }
    }
    if (static_cast<int>(seen.size()) != g.vertex_count())
      throw NotAPartition("blocks do not cover V(g)");
    return block_of_vertex(g, w);
  }();

  std::set<Label> reps;
  for (const auto& blk : w.blocks) reps.insert(blk.representative);

  std::set<Label> touched;
  for (const auto& c : r) {
    if (!g.has_edge(c.kept, c.removed))
      throw NotAMatching("(" + c.kept + ", " + c.removed + ") is not an edge of g");
    if (!touched.insert(c.kept).second || !touched.insert(c.removed).second)
      throw NotAMatching("edges share endpoint");
    int bk = block[static_cast<size_t>(g.index_of(c.kept))];
    int br = block[static_cast<size_t>(g.index_of(c.removed))];
    if (bk != br)
      throw CrossesBlocks("(" + c.kept + ", " + c.removed + ") crosses witness blocks");
    if (reps.count(c.removed))
      throw RemovesRepresentative("contraction removes representative '" + c.removed + "'");
  }

  LabeledGraph cur = g;
  for (const auto& c : r) cur = contract(cur, c);
  return cur;
}

std::optional<WitnessStructure> find_witness_exhaustive(const LabeledGraph& g,
                                                        const LabeledGraph& h, int cap) {
  if (g.vertex_count() > cap)
    throw TooLarge("find_witness_exhaustive: " + std::to_string(g.vertex_count()) +
                   " vertices exceeds cap " + std::to_string(cap));
  for (const auto& v : h.labels()) {
    if (!g.has_vertex(v)) return std::nullopt;
  }
  if (h.vertex_count() == 0) return g.vertex_count() == 0 ? std::optional<WitnessStructure>{WitnessStructure{}} : std::nullopt;

  std::vector<Label> extra;
  for (const auto& v : g.labels()) {
    if (!h.has_vertex(v)) extra.push_back(v);
  }
  int nb = h.vertex_count();
  std::vector<int> assign(extra.size(), 0);
  while (true) {
    WitnessStructure w;
    for (const auto& rep : h.labels()) w.blocks.push_back({rep, {rep}});
    for (size_t i = 0; i < extra.size(); ++i)
      w.blocks[static_cast<size_t>(assign[i])].members.insert(extra[i]);
    if (validate_witness(g, h, w)) return w;

    size_t pos = 0;
    while (pos < assign.size() && assign[pos] == nb - 1) assign[pos++] = 0;
    if (pos == assign.size()) break;
    ++assign[pos];
  }
  return std::nullopt;
}

}  // namespace contrakt
