#pragma once

#include <optional>
#include <set>
#include <vector>

#include "contrakt/graph.hpp"

namespace contrakt {

struct WitnessBlock {
  Label representative;
  std::set<Label> members;  // includes the representative
};

/// Partition of V(G) into connected blocks, one vertex of V(H) per block.
/// Certificate equivalent to a contraction sequence.
struct WitnessStructure {
  std::vector<WitnessBlock> blocks;
};

/// True iff w certifies that h is a contraction of g: every block induces a
/// connected subgraph, contains exactly one vertex of h (its representative),
/// and block adjacency matches E(h) exactly. Malformed partitions throw
/// NotAPartition instead of returning false.
bool validate_witness(const LabeledGraph& g, const LabeledGraph& h, const WitnessStructure& w);

/// The graph the witness contracts g to: representatives as vertices, block
/// adjacency as edges. Throws NotAPartition on malformed partitions.
LabeledGraph witness_quotient(const LabeledGraph& g, const WitnessStructure& w);

/// Sequence realizing the witness: within each block a BFS spanning tree
/// rooted at the representative is contracted leaves-first, ties by label.
/// Throws InvalidWitness when w is not a valid witness for its implied h.
ContractionSequence witness_to_sequence(const LabeledGraph& g, const WitnessStructure& w);

WitnessStructure sequence_to_witness(const LabeledGraph& g, const ContractionSequence& s);

/// Contracts a matching of in-block edges first (Observation on contraction
/// order, generalized to matchings). Each pair is (kept, removed); the
/// removed endpoint must not be a representative.
LabeledGraph contract_matching_first(const LabeledGraph& g, const WitnessStructure& w,
                                     const std::vector<Contraction>& r);

/// Exhaustive witness search for small instances; see the solver modules for
/// anything larger. Throws TooLarge above the cap.
std::optional<WitnessStructure> find_witness_exhaustive(const LabeledGraph& g,
                                                        const LabeledGraph& h, int cap = 8);

}  // namespace contrakt
