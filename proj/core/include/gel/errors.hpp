#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace gel {

// Malformed textual input (graph6 lines, generator specs). Carries the byte
// offset of the first offending character.
class parse_error : public std::runtime_error {
 public:
  parse_error(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " (byte " + std::to_string(offset) + ")"),
        offset_(offset) {}

  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

// Raised by exact solvers instead of returning a silent wrong answer when the
// node budget or wall clock limit runs out.
class budget_exceeded : public std::runtime_error {
 public:
  explicit budget_exceeded(std::uint64_t nodes)
      : std::runtime_error("solver node budget exhausted after " +
                           std::to_string(nodes) + " nodes"),
        nodes_(nodes) {}

  budget_exceeded(const std::string& what, std::uint64_t nodes)
      : std::runtime_error(what), nodes_(nodes) {}

  std::uint64_t nodes() const { return nodes_; }

 private:
  std::uint64_t nodes_;
};

// Shared limits for every backtracking solver. timeout_seconds == 0 means no
// wall clock limit. The env var GEL_NODE_BUDGET and the --budget flag feed
// node_budget at the CLI layer.
struct SearchLimits {
  std::uint64_t node_budget = 100'000'000;
  double timeout_seconds = 0.0;
};

// Nodes actually spent; callers pass a pointer when they want the count back.
struct SearchStats {
  std::uint64_t nodes = 0;
};

}  // namespace gel
