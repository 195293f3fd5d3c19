#include "contrakt/cliquewidth.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <vector>

namespace contrakt {

struct CwExpression::Node {
  Kind kind;
  Label label;        // NewVertex
  int ca = 0, cb = 0; // NewVertex color (ca) / AddEdges i,j / Recolor from,to
  std::shared_ptr<const Node> left, right;
};

CwExpression CwExpression::new_vertex(const Label& label, int color) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::NewVertex;
  n->label = label;
  n->ca = color;
  return CwExpression(std::move(n));
}

CwExpression CwExpression::make_union(CwExpression left, CwExpression right) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Union;
  n->left = std::move(left.node_);
  n->right = std::move(right.node_);
  return CwExpression(std::move(n));
}

CwExpression CwExpression::add_edges(int i, int j, CwExpression child) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::AddEdges;
  n->ca = i;
  n->cb = j;
  n->left = std::move(child.node_);
  return CwExpression(std::move(n));
}

CwExpression CwExpression::recolor(int from, int to, CwExpression child) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Recolor;
  n->ca = from;
  n->cb = to;
  n->left = std::move(child.node_);
  return CwExpression(std::move(n));
}

CwExpression::Kind CwExpression::kind() const { return node_->kind; }
const Label& CwExpression::label() const { return node_->label; }
int CwExpression::color() const { return node_->ca; }
int CwExpression::color_a() const { return node_->ca; }
int CwExpression::color_b() const { return node_->cb; }
CwExpression CwExpression::left() const { return CwExpression(node_->left); }
CwExpression CwExpression::right() const { return CwExpression(node_->right); }

namespace {

struct EvalState {
  std::map<Label, int> coloring;
  std::set<std::pair<Label, Label>> edges;
};

void check_color(int c) {
  if (c < 1) throw BadParams("colors are positive integers, got " + std::to_string(c));
}

EvalState eval_node(const CwExpression& e) {
  switch (e.kind()) {
    case CwExpression::Kind::NewVertex: {
      check_color(e.color());
      EvalState s;
      s.coloring[e.label()] = e.color();
      return s;
    }
    case CwExpression::Kind::Union: {
      EvalState l = eval_node(e.left());
      EvalState r = eval_node(e.right());
      for (const auto& [v, c] : r.coloring) {
        if (!l.coloring.emplace(v, c).second)
          throw DuplicateLabel("label '" + v + "' introduced twice");
      }
      l.edges.insert(r.edges.begin(), r.edges.end());
      return l;
    }
    case CwExpression::Kind::AddEdges: {
      check_color(e.color_a());
      check_color(e.color_b());
      if (e.color_a() == e.color_b())
        throw SameColorEdgeOp("edge addition between identical colors " +
                              std::to_string(e.color_a()));
      EvalState s = eval_node(e.left());
      std::vector<const Label*> with_i, with_j;
      for (const auto& [v, c] : s.coloring) {
        if (c == e.color_a()) with_i.push_back(&v);
        if (c == e.color_b()) with_j.push_back(&v);
      }
      for (const Label* u : with_i) {
        for (const Label* v : with_j)
          s.edges.insert(*u < *v ? std::make_pair(*u, *v) : std::make_pair(*v, *u));
      }
      return s;
    }
    case CwExpression::Kind::Recolor: {
      check_color(e.color_a());
      check_color(e.color_b());
      if (e.color_a() == e.color_b())
        throw SameColorEdgeOp("recoloring onto the same color " + std::to_string(e.color_a()));
      EvalState s = eval_node(e.left());
      for (auto& [v, c] : s.coloring) {
        if (c == e.color_a()) c = e.color_b();
      }
      return s;
    }
  }
  throw BadParams("unreachable expression kind");
}

void collect_colors(const CwExpression& e, std::set<int>& out) {
  switch (e.kind()) {
    case CwExpression::Kind::NewVertex:
      out.insert(e.color());
      return;
    case CwExpression::Kind::Union:
      collect_colors(e.left(), out);
      collect_colors(e.right(), out);
      return;
    case CwExpression::Kind::AddEdges:
    case CwExpression::Kind::Recolor:
      out.insert(e.color_a());
      out.insert(e.color_b());
      collect_colors(e.left(), out);
      return;
  }
}

}  // namespace

CwEvalResult eval_cw(const CwExpression& e) {
  EvalState s = eval_node(e);
  GraphBuilder b;
  for (const auto& [v, c] : s.coloring) b.add_vertex(v);
  for (const auto& [u, v] : s.edges) b.add_edge(u, v);
  return {b.build(), std::move(s.coloring)};
}

int colors_used(const CwExpression& e) {
  std::set<int> colors;
  collect_colors(e, colors);
  return static_cast<int>(colors.size());
}

namespace {

// Clique on the given labels: all vertices end up with color `main`,
// `scratch` is free again afterwards.
CwExpression clique_expr(const std::vector<Label>& labels, int main, int scratch) {
  CwExpression e = CwExpression::new_vertex(labels.front(), main);
  for (size_t i = 1; i < labels.size(); ++i) {
    e = CwExpression::make_union(std::move(e), CwExpression::new_vertex(labels[i], scratch));
    e = CwExpression::add_edges(main, scratch, std::move(e));
    e = CwExpression::recolor(scratch, main, std::move(e));
  }
  return e;
}

}  // namespace

CwExpression build_cw_h(const BinPackingInstance& inst) {
  validate_instance(inst);
  long long total = 0;
  for (int a : inst.item_sizes) total += a;
  if (total != static_cast<long long>(inst.capacity) * inst.bins)
    throw ImperfectTotal("item sizes sum to " + std::to_string(total) + ", expected C*k");

  using namespace gadget_labels;
  const int C = inst.capacity;
  const int k = inst.bins;

  auto batch = [&](int i) {
    std::vector<Label> ls;
    for (int j = i * C; j < (i + 1) * C; ++j) ls.push_back(slot(j));
    return ls;
  };

  // First bin with its slots: slots color 1, bin color 2.
  CwExpression e = clique_expr(batch(0), 1, 2);
  e = CwExpression::make_union(std::move(e), CwExpression::new_vertex(bin(0), 2));
  e = CwExpression::add_edges(1, 2, std::move(e));
  // Each further bin enters under colors 3/4, is wired to its own slot batch,
  // then both cliques are extended across and folded back into colors 1/2.
  for (int i = 1; i < k; ++i) {
    e = CwExpression::make_union(std::move(e), clique_expr(batch(i), 3, 4));
    e = CwExpression::make_union(std::move(e), CwExpression::new_vertex(bin(i), 4));
    e = CwExpression::add_edges(3, 4, std::move(e));
    e = CwExpression::add_edges(1, 3, std::move(e));
    e = CwExpression::add_edges(2, 4, std::move(e));
    e = CwExpression::recolor(3, 1, std::move(e));
    e = CwExpression::recolor(4, 2, std::move(e));
  }
  return e;
}

CwExpression build_cw_g(const BinPackingInstance& inst) {
  validate_instance(inst);
  long long total = 0;
  for (int a : inst.item_sizes) total += a;
  if (total != static_cast<long long>(inst.capacity) * inst.bins)
    throw ImperfectTotal("item sizes sum to " + std::to_string(total) + ", expected C*k");

  using namespace gadget_labels;
  const int C = inst.capacity;
  const int k = inst.bins;
  const int n = static_cast<int>(inst.item_sizes.size());

  // Stars: units color 1, items color 2; edges added per star before union.
  CwExpression e = CwExpression::new_vertex(item(0), 2);
  {
    CwExpression star = std::move(e);
    for (int p = 0; p < inst.item_sizes[0]; ++p)
      star = CwExpression::make_union(std::move(star), CwExpression::new_vertex(item_unit(0, p), 1));
    e = CwExpression::add_edges(1, 2, std::move(star));
  }
  for (int x = 1; x < n; ++x) {
    CwExpression star = CwExpression::new_vertex(item(x), 2);
    for (int p = 0; p < inst.item_sizes[static_cast<size_t>(x)]; ++p)
      star = CwExpression::make_union(std::move(star), CwExpression::new_vertex(item_unit(x, p), 1));
    star = CwExpression::add_edges(1, 2, std::move(star));
    e = CwExpression::make_union(std::move(e), std::move(star));
  }

  // Bin clique in color 3, joined to the items, then merged into their color.
  std::vector<Label> bins;
  for (int i = 0; i < k; ++i) bins.push_back(bin(i));
  e = CwExpression::make_union(std::move(e), clique_expr(bins, 3, 1));
  e = CwExpression::add_edges(2, 3, std::move(e));
  e = CwExpression::recolor(3, 2, std::move(e));

  // Slot clique in color 3 again, joined to the units.
  std::vector<Label> slots;
  for (int j = 0; j < C * k; ++j) slots.push_back(slot(j));
  e = CwExpression::make_union(std::move(e), clique_expr(slots, 3, 1));
  e = CwExpression::add_edges(1, 3, std::move(e));
  return e;
}

namespace {

void write_sexpr(std::ostream& os, const CwExpression& e) {
  switch (e.kind()) {
    case CwExpression::Kind::NewVertex:
      os << "(new " << e.label() << ' ' << e.color() << ')';
      return;
    case CwExpression::Kind::Union:
      os << "(union ";
      write_sexpr(os, e.left());
      os << ' ';
      write_sexpr(os, e.right());
      os << ')';
      return;
    case CwExpression::Kind::AddEdges:
      os << "(edges " << e.color_a() << ' ' << e.color_b() << ' ';
      write_sexpr(os, e.left());
      os << ')';
      return;
    case CwExpression::Kind::Recolor:
      os << "(recolor " << e.color_a() << ' ' << e.color_b() << ' ';
      write_sexpr(os, e.left());
      os << ')';
      return;
  }
}

struct SexprParser {
  std::vector<std::string> tokens;
  size_t pos = 0;

  explicit SexprParser(const std::string& text) {
    std::string cur;
    for (char ch : text) {
      if (ch == '(' || ch == ')') {
        if (!cur.empty()) {
          tokens.push_back(cur);
          cur.clear();
        }
        tokens.push_back(std::string(1, ch));
      } else if (std::isspace(static_cast<unsigned char>(ch))) {
        if (!cur.empty()) {
          tokens.push_back(cur);
          cur.clear();
        }
      } else {
        cur.push_back(ch);
      }
    }
    if (!cur.empty()) tokens.push_back(cur);
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("s-expression: " + msg);
  }

  const std::string& next() {
    if (pos >= tokens.size()) fail("unexpected end of input");
    return tokens[pos++];
  }

  void expect(const std::string& tok) {
    if (next() != tok) fail("expected '" + tok + "'");
  }

  int number() {
    const std::string& t = next();
    try {
      size_t used = 0;
      int v = std::stoi(t, &used);
      if (used != t.size()) fail("bad number '" + t + "'");
      return v;
    } catch (const std::exception&) {
      fail("bad number '" + t + "'");
    }
  }

  CwExpression expr() {
    expect("(");
    const std::string op = next();
    if (op == "new") {
      Label l = next();
      int c = number();
      expect(")");
      return CwExpression::new_vertex(l, c);
    }
    if (op == "union") {
      CwExpression l = expr();
      CwExpression r = expr();
      expect(")");
      return CwExpression::make_union(std::move(l), std::move(r));
    }
    if (op == "edges") {
      int i = number();
      int j = number();
      CwExpression c = expr();
      expect(")");
      return CwExpression::add_edges(i, j, std::move(c));
    }
    if (op == "recolor") {
      int i = number();
      int j = number();
      CwExpression c = expr();
      expect(")");
      return CwExpression::recolor(i, j, std::move(c));
    }
    fail("unknown operation '" + op + "'");
  }
};

}  // namespace

std::string to_sexpr(const CwExpression& e) {
  std::ostringstream os;
  write_sexpr(os, e);
  return os.str();
}

CwExpression parse_sexpr(const std::string& text) {
  SexprParser p(text);
  CwExpression e = p.expr();
  if (p.pos != p.tokens.size()) p.fail("trailing tokens");
  return e;
}

}  // namespace contrakt
