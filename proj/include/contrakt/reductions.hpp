#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "contrakt/graph.hpp"

namespace contrakt {

struct MulticoloredCliqueInstance {
  std::vector<std::set<Label>> color_classes;
  std::set<std::pair<Label, Label>> edges;  // normalized: first < second

  void add_edge(const Label& a, const Label& b) {
    edges.insert(a < b ? std::make_pair(a, b) : std::make_pair(b, a));
  }
  bool has_edge(const Label& a, const Label& b) const {
    return edges.count(a < b ? std::make_pair(a, b) : std::make_pair(b, a)) > 0;
  }
};

struct BinPackingInstance {
  std::vector<int> item_sizes;
  int capacity = 0;
  int bins = 0;
};

struct GadgetInstance {
  LabeledGraph g;
  LabeledGraph h;
  int k = 0;  // contraction budget of the generated instance
  std::string provenance;
  std::vector<std::string> warnings;
};

void validate_instance(const MulticoloredCliqueInstance& inst);  // MalformedInstance
void validate_instance(const BinPackingInstance& inst);          // MalformedInstance

/// Multicolored clique -> contractibility. Classes are first padded with one
/// isolated vertex each so every vertex has a non-neighbor in every other
/// class; H completes each class to a clique, G adds a clique of selector
/// vertices t_i joined to their classes. Budget = number of classes.
GadgetInstance mcq_to_contractibility(const MulticoloredCliqueInstance& inst);

/// Perfect bin packing -> contractibility with clique-width <= 4 inputs.
/// Throws ImperfectTotal unless the sizes sum to capacity * bins.
GadgetInstance binpacking_to_contractibility(const BinPackingInstance& inst);

/// Multicolored clique -> maximum common contraction on degeneracy-4 graphs.
/// extra_count overrides the 4k^3 padding per group; overrides below 2K+1
/// leave the reduction's equivalence unproven and are reported as warnings.
GadgetInstance mcq_to_mcc_degen4(const MulticoloredCliqueInstance& inst,
                                 std::optional<int> extra_count = std::nullopt);

/// One vertex per class forming a clique, or nullopt. Throws TooLarge when
/// the product of class sizes exceeds the cap.
std::optional<std::vector<Label>> solve_mcq_bruteforce(const MulticoloredCliqueInstance& inst,
                                                       long long cap = 1000000);

/// Assignment phi of items to bins filling every bin exactly, or nullopt.
/// Throws TooLarge when bins^items exceeds the cap.
std::optional<std::vector<int>> solve_binpacking_bruteforce(const BinPackingInstance& inst,
                                                            long long cap = 1000000);

struct MccEmbedding {
  LabeledGraph g;
  LabeledGraph h;
  int k = 0;
};

/// Contractibility as an MCC instance at budget |V(g) \ V(h)|. Throws
/// NotSubset when V(h) is not contained in V(g).
MccEmbedding contractibility_as_mcc(const LabeledGraph& g, const LabeledGraph& h);

// Gadget label scheme, shared with the clique-width constructions.
namespace gadget_labels {
std::string bin(int i);             // b_<i>
std::string slot(int j);            // d_<j>
std::string item(int x);            // t_<x>
std::string item_unit(int x, int p);  // alpha_<x>_<p>
}  // namespace gadget_labels

}  // namespace contrakt
