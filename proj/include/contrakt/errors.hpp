#pragma once

#include <stdexcept>
#include <string>

namespace contrakt {

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct BadGraph : Error {
  explicit BadGraph(const std::string& msg) : Error(msg) {}
};
struct UnknownLabel : Error {
  explicit UnknownLabel(const std::string& msg) : Error(msg) {}
};
struct NonEdge : Error {
  explicit NonEdge(const std::string& msg) : Error(msg) {}
};
struct NotAPartition : Error {
  explicit NotAPartition(const std::string& msg) : Error(msg) {}
};
struct InvalidWitness : Error {
  explicit InvalidWitness(const std::string& msg) : Error(msg) {}
};
struct NotAMatching : Error {
  explicit NotAMatching(const std::string& msg) : Error(msg) {}
};
struct CrossesBlocks : Error {
  explicit CrossesBlocks(const std::string& msg) : Error(msg) {}
};
struct RemovesRepresentative : Error {
  explicit RemovesRepresentative(const std::string& msg) : Error(msg) {}
};
struct BudgetTooLarge : Error {
  explicit BudgetTooLarge(const std::string& msg) : Error(msg) {}
};
struct MalformedInstance : Error {
  explicit MalformedInstance(const std::string& msg) : Error(msg) {}
};
struct ImperfectTotal : Error {
  explicit ImperfectTotal(const std::string& msg) : Error(msg) {}
};
struct TooLarge : Error {
  explicit TooLarge(const std::string& msg) : Error(msg) {}
};
struct NotSubset : Error {
  explicit NotSubset(const std::string& msg) : Error(msg) {}
};
struct DuplicateLabel : Error {
  explicit DuplicateLabel(const std::string& msg) : Error(msg) {}
};
struct SameColorEdgeOp : Error {
  explicit SameColorEdgeOp(const std::string& msg) : Error(msg) {}
};
struct NotATree : Error {
  explicit NotATree(const std::string& msg) : Error(msg) {}
};
struct InvalidInputs : Error {
  explicit InvalidInputs(const std::string& msg) : Error(msg) {}
};
struct NotSquare : Error {
  explicit NotSquare(const std::string& msg) : Error(msg) {}
};
struct BadParams : Error {
  explicit BadParams(const std::string& msg) : Error(msg) {}
};
struct ParseError : Error {
  explicit ParseError(const std::string& msg) : Error(msg) {}
};

}  // namespace contrakt
