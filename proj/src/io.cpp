#include "contrakt/io.hpp"

#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace contrakt::io {

namespace {

struct Line {
  int number = 0;
  std::vector<std::string> tokens;
};

std::vector<Line> tokenize(std::istream& in) {
  std::vector<Line> out;
  std::string raw;
  int num = 0;
  while (std::getline(in, raw)) {
    ++num;
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    std::istringstream ls(raw);
    Line line;
    line.number = num;
    std::string tok;
    while (ls >> tok) line.tokens.push_back(tok);
    if (!line.tokens.empty()) out.push_back(std::move(line));
  }
  return out;
}

[[noreturn]] void fail(int line, const std::string& msg) {
  throw ParseError("line " + std::to_string(line) + ": " + msg);
}

int parse_int(const Line& line, const std::string& tok) {
  try {
    size_t used = 0;
    int v = std::stoi(tok, &used);
    if (used != tok.size()) fail(line.number, "bad integer '" + tok + "'");
    return v;
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception&) {
    fail(line.number, "bad integer '" + tok + "'");
  }
}

}  // namespace

LabeledGraph read_graph(std::istream& in) {
  GraphBuilder b;
  for (const auto& line : tokenize(in)) {
    const auto& t = line.tokens;
    try {
      if (t[0] == "v" && t.size() == 2) {
        b.add_vertex(t[1]);
      } else if (t[0] == "e" && t.size() == 3) {
        b.add_edge(t[1], t[2]);
      } else {
        fail(line.number, "expected 'v <label>' or 'e <label> <label>'");
      }
    } catch (const BadGraph& e) {
      fail(line.number, e.what());
    }
  }
  return b.build();
}

void write_graph(std::ostream& out, const LabeledGraph& g) {
  for (const auto& v : g.labels()) out << "v " << v << '\n';
  for (const auto& [a, b] : g.edge_list()) out << "e " << a << ' ' << b << '\n';
}

WitnessStructure read_witness(std::istream& in) {
  WitnessStructure w;
  for (const auto& line : tokenize(in)) {
    const auto& t = line.tokens;
    if (t[0] != "w" || t.size() < 3 || t[2] != ":")
      fail(line.number, "expected 'w <representative> : <member> ...'");
    WitnessBlock blk;
    blk.representative = t[1];
    blk.members.insert(t[1]);
    for (size_t i = 3; i < t.size(); ++i) blk.members.insert(t[i]);
    w.blocks.push_back(std::move(blk));
  }
  return w;
}

void write_witness(std::ostream& out, const WitnessStructure& w) {
  for (const auto& blk : w.blocks) {
    out << "w " << blk.representative << " :";
    for (const auto& m : blk.members) out << ' ' << m;
    out << '\n';
  }
}

ContractionSequence read_sequence(std::istream& in) {
  ContractionSequence s;
  for (const auto& line : tokenize(in)) {
    const auto& t = line.tokens;
    if (t[0] != "c" || t.size() != 3) fail(line.number, "expected 'c <kept> <removed>'");
    s.push_back({t[1], t[2]});
  }
  return s;
}

void write_sequence(std::ostream& out, const ContractionSequence& s) {
  for (const auto& c : s) out << "c " << c.kept << ' ' << c.removed << '\n';
}

MulticoloredCliqueInstance read_mcq(std::istream& in) {
  MulticoloredCliqueInstance inst;
  std::map<int, std::set<Label>> classes;
  std::vector<std::pair<Label, Label>> edges;
  for (const auto& line : tokenize(in)) {
    const auto& t = line.tokens;
    if (t[0] == "class" && t.size() >= 3) {
      int idx = parse_int(line, t[1]);
      if (idx < 1) fail(line.number, "class indices start at 1");
      if (classes.count(idx)) fail(line.number, "duplicate class " + t[1]);
      std::set<Label> cls(t.begin() + 2, t.end());
      classes[idx] = std::move(cls);
    } else if (t[0] == "edge" && t.size() == 3) {
      edges.emplace_back(t[1], t[2]);
    } else {
      fail(line.number, "expected 'class <i> <label> ...' or 'edge <a> <b>'");
    }
  }
  int expect = 1;
  for (const auto& [idx, cls] : classes) {
    if (idx != expect++)
      throw ParseError("class indices must be contiguous from 1, missing class " +
                       std::to_string(expect - 1));
    inst.color_classes.push_back(cls);
  }
  for (const auto& [a, b] : edges) inst.add_edge(a, b);
  return inst;
}

void write_mcq(std::ostream& out, const MulticoloredCliqueInstance& inst) {
  for (size_t i = 0; i < inst.color_classes.size(); ++i) {
    out << "class " << (i + 1);
    for (const auto& v : inst.color_classes[i]) out << ' ' << v;
    out << '\n';
  }
  for (const auto& [a, b] : inst.edges) out << "edge " << a << ' ' << b << '\n';
}

BinPackingInstance read_binpacking(std::istream& in) {
  BinPackingInstance inst;
  auto lines = tokenize(in);
  if (lines.empty()) throw ParseError("line 1: expected 'C k' header");
  if (lines[0].tokens.size() != 2) fail(lines[0].number, "expected 'C k' header");
  inst.capacity = parse_int(lines[0], lines[0].tokens[0]);
  inst.bins = parse_int(lines[0], lines[0].tokens[1]);
  for (size_t i = 1; i < lines.size(); ++i) {
    if (lines[i].tokens.size() != 1) fail(lines[i].number, "expected one item size per line");
    inst.item_sizes.push_back(parse_int(lines[i], lines[i].tokens[0]));
  }
  return inst;
}

void write_binpacking(std::ostream& out, const BinPackingInstance& inst) {
  out << inst.capacity << ' ' << inst.bins << '\n';
  for (int a : inst.item_sizes) out << a << '\n';
}

TreeDecomposition read_td(std::istream& in) {
  TreeDecomposition td;
  for (const auto& line : tokenize(in)) {
    const auto& t = line.tokens;
    if (t[0] == "bag" && t.size() >= 2) {
      int id = parse_int(line, t[1]);
      if (td.bags.count(id)) fail(line.number, "duplicate bag " + t[1]);
      td.bags[id] = std::set<Label>(t.begin() + 2, t.end());
    } else if (t[0] == "link" && t.size() == 3) {
      td.links.emplace_back(parse_int(line, t[1]), parse_int(line, t[2]));
    } else {
      fail(line.number, "expected 'bag <id> <label> ...' or 'link <id> <id>'");
    }
  }
  return td;
}

void write_td(std::ostream& out, const TreeDecomposition& td) {
  for (const auto& [id, bag] : td.bags) {
    out << "bag " << id;
    for (const auto& v : bag) out << ' ' << v;
    out << '\n';
  }
  for (const auto& [a, b] : td.links) out << "link " << a << ' ' << b << '\n';
}

namespace {

template <typename T, typename Reader>
T parse_with(const std::string& text, Reader reader) {
  std::istringstream in(text);
  return reader(in);
}

template <typename T, typename Writer>
std::string string_with(const T& value, Writer writer) {
  std::ostringstream out;
  writer(out, value);
  return out.str();
}

}  // namespace

LabeledGraph parse_graph(const std::string& text) {
  return parse_with<LabeledGraph>(text, [](std::istream& in) { return read_graph(in); });
}
std::string graph_to_string(const LabeledGraph& g) {
  return string_with(g, [](std::ostream& out, const LabeledGraph& v) { write_graph(out, v); });
}

WitnessStructure parse_witness(const std::string& text) {
  return parse_with<WitnessStructure>(text, [](std::istream& in) { return read_witness(in); });
}
std::string witness_to_string(const WitnessStructure& w) {
  return string_with(w, [](std::ostream& out, const WitnessStructure& v) { write_witness(out, v); });
}

ContractionSequence parse_sequence(const std::string& text) {
  return parse_with<ContractionSequence>(text, [](std::istream& in) { return read_sequence(in); });
}
std::string sequence_to_string(const ContractionSequence& s) {
  return string_with(s, [](std::ostream& out, const ContractionSequence& v) { write_sequence(out, v); });
}

MulticoloredCliqueInstance parse_mcq(const std::string& text) {
  return parse_with<MulticoloredCliqueInstance>(text, [](std::istream& in) { return read_mcq(in); });
}
std::string mcq_to_string(const MulticoloredCliqueInstance& inst) {
  return string_with(inst, [](std::ostream& out, const MulticoloredCliqueInstance& v) { write_mcq(out, v); });
}

BinPackingInstance parse_binpacking(const std::string& text) {
  return parse_with<BinPackingInstance>(text, [](std::istream& in) { return read_binpacking(in); });
}
std::string binpacking_to_string(const BinPackingInstance& inst) {
  return string_with(inst, [](std::ostream& out, const BinPackingInstance& v) { write_binpacking(out, v); });
}

TreeDecomposition parse_td(const std::string& text) {
  return parse_with<TreeDecomposition>(text, [](std::istream& in) { return read_td(in); });
}
std::string td_to_string(const TreeDecomposition& td) {
  return string_with(td, [](std::ostream& out, const TreeDecomposition& v) { write_td(out, v); });
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write file '" + path + "'");
  out << content;
}

LabeledGraph load_graph(const std::string& path) { return parse_graph(read_file(path)); }

void save_graph(const std::string& path, const LabeledGraph& g) {
  write_file(path, graph_to_string(g));
}

}  // namespace contrakt::io
