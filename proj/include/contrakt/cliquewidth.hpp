#pragma once

#include <map>
#include <memory>
#include <string>

#include "contrakt/graph.hpp"
#include "contrakt/reductions.hpp"

namespace contrakt {

/// Clique-width expression: a value tree of the four construction operations.
/// The number of distinct colors appearing in an expression upper-bounds the
/// clique-width of the graph it evaluates to.
class CwExpression {
 public:
  enum class Kind { NewVertex, Union, AddEdges, Recolor };

  static CwExpression new_vertex(const Label& label, int color);
  static CwExpression make_union(CwExpression left, CwExpression right);
  static CwExpression add_edges(int i, int j, CwExpression child);
  static CwExpression recolor(int from, int to, CwExpression child);

  Kind kind() const;
  const Label& label() const;  // NewVertex
  int color() const;           // NewVertex
  int color_a() const;         // AddEdges i / Recolor from
  int color_b() const;         // AddEdges j / Recolor to
  CwExpression left() const;   // Union left, AddEdges/Recolor child
  CwExpression right() const;  // Union right

 private:
  struct Node;
  explicit CwExpression(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

struct CwEvalResult {
  LabeledGraph graph;
  std::map<Label, int> coloring;
};

/// Bottom-up evaluation. Throws DuplicateLabel when a label is introduced
/// twice, SameColorEdgeOp on AddEdges/Recolor with identical colors, and
/// BadParams on non-positive colors.
CwEvalResult eval_cw(const CwExpression& e);

/// Number of distinct color ids appearing anywhere in the expression.
int colors_used(const CwExpression& e);

/// Expression evaluating to the bin-packing gadget's H with at most 4 colors.
CwExpression build_cw_h(const BinPackingInstance& inst);

/// Expression evaluating to the bin-packing gadget's G with at most 3 colors.
CwExpression build_cw_g(const BinPackingInstance& inst);

// S-expression serialization: (new <label> <color>), (union <e> <e>),
// (edges <i> <j> <e>), (recolor <i> <j> <e>).
std::string to_sexpr(const CwExpression& e);
CwExpression parse_sexpr(const std::string& text);  // ParseError

}  // namespace contrakt
