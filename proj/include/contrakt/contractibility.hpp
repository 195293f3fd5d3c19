#pragma once

#include <functional>
#include <optional>

#include "contrakt/graph.hpp"

namespace contrakt {

struct SolveStats {
  long long nodes_explored = 0;
  int max_depth = 0;            // contraction depth reached
  int max_branch_children = 0;  // widest branch node
  int branch_bound_violations = 0;
};

struct ContractibilityResult {
  bool decision = false;
  std::optional<ContractionSequence> certificate;
  SolveStats stats;
};

struct BranchingOptions {
  // Negative-result cache keyed by the (G, H) state; never changes decisions.
  bool use_cache = true;
  // When set, recomputes the degeneracy at every branch node and records
  // violations of the children <= max(deg(u), 2k, delta+2k) bound.
  bool verify_branch_bound = false;
};

/// Bounded search tree solver, FPT in degeneracy + number of contractions.
/// Budget is |V(g)| - |V(h)|; the certificate applies on g and yields h.
ContractibilityResult solve_branching(const LabeledGraph& g, const LabeledGraph& h,
                                      const BranchingOptions& options = {});

/// Exhaustive depth-first search over all contractions removing a vertex of
/// V(g) \ V(h), depth exactly |V(g)| - |V(h)|. The reference oracle for
/// solve_branching. Throws BudgetTooLarge above the cap.
ContractibilityResult solve_xp(const LabeledGraph& g, const LabeledGraph& h, int cap = 8);

using ContractibilitySolver =
    std::function<ContractibilityResult(const LabeledGraph&, const LabeledGraph&)>;

/// Matches components of g and h by their shared vertices and runs the inner
/// solver per pair; contractions never merge components, so the conjunction
/// decides the whole instance.
ContractibilityResult solve_by_components(const LabeledGraph& g, const LabeledGraph& h,
                                          const ContractibilitySolver& inner);

}  // namespace contrakt
