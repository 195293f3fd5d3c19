#pragma once

#include <iosfwd>
#include <string>

#include "contrakt/bounds.hpp"
#include "contrakt/graph.hpp"
#include "contrakt/reductions.hpp"
#include "contrakt/witness.hpp"

namespace contrakt::io {

// Line-based text formats. '#' starts a comment, blank lines are skipped.
// Parse errors carry 1-based line numbers.

// Graph: `v <label>` declares a vertex, `e <a> <b>` an edge (endpoints
// auto-declared). The writer emits vertices sorted, then edges sorted with
// the smaller endpoint first.
LabeledGraph read_graph(std::istream& in);
void write_graph(std::ostream& out, const LabeledGraph& g);
LabeledGraph parse_graph(const std::string& text);
std::string graph_to_string(const LabeledGraph& g);

// Witness: one block per line, `w <representative> : <member> ...`.
WitnessStructure read_witness(std::istream& in);
void write_witness(std::ostream& out, const WitnessStructure& w);
WitnessStructure parse_witness(const std::string& text);
std::string witness_to_string(const WitnessStructure& w);

// Contraction sequence: one `c <kept> <removed>` per line.
ContractionSequence read_sequence(std::istream& in);
void write_sequence(std::ostream& out, const ContractionSequence& s);
ContractionSequence parse_sequence(const std::string& text);
std::string sequence_to_string(const ContractionSequence& s);

// Multicolored clique instance: `class <i> <label> ...` lines (i = 1..k),
// then `edge <a> <b>` lines.
MulticoloredCliqueInstance read_mcq(std::istream& in);
void write_mcq(std::ostream& out, const MulticoloredCliqueInstance& inst);
MulticoloredCliqueInstance parse_mcq(const std::string& text);
std::string mcq_to_string(const MulticoloredCliqueInstance& inst);

// Bin packing: first line `C k`, then one item size per line.
BinPackingInstance read_binpacking(std::istream& in);
void write_binpacking(std::ostream& out, const BinPackingInstance& inst);
BinPackingInstance parse_binpacking(const std::string& text);
std::string binpacking_to_string(const BinPackingInstance& inst);

// Tree decomposition: `bag <id> <label> ...` and `link <id> <id>` lines.
TreeDecomposition read_td(std::istream& in);
void write_td(std::ostream& out, const TreeDecomposition& td);
TreeDecomposition parse_td(const std::string& text);
std::string td_to_string(const TreeDecomposition& td);

// Whole-file helpers.
LabeledGraph load_graph(const std::string& path);
void save_graph(const std::string& path, const LabeledGraph& g);
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace contrakt::io
