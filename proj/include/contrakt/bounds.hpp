#pragma once

#include <map>
#include <set>
#include <utility>
#include <vector>

#include "contrakt/graph.hpp"
#include "contrakt/witness.hpp"

namespace contrakt {

struct TreeDecomposition {
  std::map<int, std::set<Label>> bags;
  std::vector<std::pair<int, int>> links;  // tree edges over bag ids
};

struct TdCheck {
  bool bags_in_graph = false;
  bool vertices_covered = false;
  bool vertices_connected = false;
  bool edges_covered = false;
  bool ok() const { return bags_in_graph && vertices_covered && vertices_connected && edges_covered; }
};

/// Per-condition diagnosis; throws NotATree if the links do not form a tree
/// over the bag ids.
TdCheck check_td(const LabeledGraph& g, const TreeDecomposition& td);
bool validate_td(const LabeledGraph& g, const TreeDecomposition& td);

/// max over bags of |bag| - 1.
int width(const TreeDecomposition& td);

/// Min-degree elimination game; always a valid decomposition, no optimality
/// claim.
TreeDecomposition heuristic_td(const LabeledGraph& g);

/// Lift of a decomposition of g to one of g ∪ h along a witness structure:
/// every bag additionally receives the representatives of the blocks its
/// members belong to, at most doubling bag sizes.
TreeDecomposition lift_td_contraction(const LabeledGraph& g, const TreeDecomposition& td_g,
                                      const WitnessStructure& w);

/// Lift of a decomposition of a common contraction m of g and h to one of
/// g ∪ h: all vertices missing from m join every bag.
TreeDecomposition lift_td_mcc(const TreeDecomposition& td_m, const LabeledGraph& g,
                              const LabeledGraph& h, const LabeledGraph& m);

struct DegeneracyGrowthReport {
  int delta_before = 0;
  int delta_after = 0;
  int steps = 0;
  bool holds = false;  // delta_after <= delta_before + steps
};

DegeneracyGrowthReport check_degeneracy_growth(const LabeledGraph& g,
                                               const ContractionSequence& s);

struct TightFamily {
  LabeledGraph g;
  ContractionSequence s;
};

/// Spine-of-stars family: max degree delta before, exactly
/// delta + t*(delta-2) after contracting the spine. Throws BadParams for
/// delta < 2 or t < 0.
TightFamily build_maxdeg_tight_family(int delta, int t);

}  // namespace contrakt
