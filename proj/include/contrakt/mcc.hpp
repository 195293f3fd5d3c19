#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "contrakt/contractibility.hpp"
#include "contrakt/graph.hpp"

namespace contrakt {

struct MccResult {
  bool decision = false;
  std::optional<ContractionSequence> s1;  // on g
  std::optional<ContractionSequence> s2;  // on h
  std::optional<LabeledGraph> common;
  SolveStats stats;
  int k_used = -1;  // |s1| + |s2| when decision holds
  std::optional<int> max_common_size;
};

/// Exhaustive search over all sequence pairs with |s1|+|s2| <= k, smallest
/// total first; reachable graphs are deduplicated level by level, which
/// preserves the search exactly. Throws BudgetTooLarge above the cap.
MccResult solve_mcc_bruteforce(const LabeledGraph& g, const LabeledGraph& h, int k, int cap = 6);

struct MccBranchingOptions {
  bool use_cache = true;
};

/// Branching solver, FPT in k + max degree: a vertex present in exactly one
/// graph is contracted with each neighbor; otherwise the first differing edge
/// is attacked with every ordered contraction incident to it, in either graph.
MccResult solve_mcc_branching(const LabeledGraph& g, const LabeledGraph& h, int k,
                              const MccBranchingOptions& options = {});

using MccSolver = std::function<MccResult(const LabeledGraph&, const LabeledGraph&, int)>;

/// Component decomposition: per-pair minimum costs (computed independently up
/// to the full budget) feed a minimum-cost perfect matching over components.
MccResult solve_mcc_components(const LabeledGraph& g, const LabeledGraph& h, int k,
                               const MccSolver& inner);

struct MatchingResult {
  bool feasible = false;
  std::vector<int> assignment;  // row -> column
  long long total = 0;
};

/// Exact minimum-cost assignment on a square matrix; empty entries are
/// infeasible pairings. Throws NotSquare.
MatchingResult min_cost_perfect_matching(
    const std::vector<std::vector<std::optional<long long>>>& costs);

}  // namespace contrakt
