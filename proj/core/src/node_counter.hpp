#pragma once

#include <chrono>

#include "gel/errors.hpp"

namespace gel::internal {

// One per top level solver call. Destructor flushes the spent-node count into
// the caller's stats even when the search unwinds via an exception.
class NodeCounter {
 public:
  NodeCounter(const SearchLimits& limits, SearchStats* stats)
      : budget_(limits.node_budget),
        timeout_(limits.timeout_seconds),
        stats_(stats),
        start_(std::chrono::steady_clock::now()) {}

  NodeCounter(const NodeCounter&) = delete;
  NodeCounter& operator=(const NodeCounter&) = delete;

  ~NodeCounter() {
    if (stats_) stats_->nodes += nodes_;
  }

  void tick() {
    if (++nodes_ > budget_) throw budget_exceeded(nodes_);
    if (timeout_ > 0.0 && (nodes_ & 0xffff) == 0) {
      double spent = std::chrono::duration<double>(
                         std::chrono::steady_clock::now() - start_)
                         .count();
      if (spent > timeout_)
        throw budget_exceeded("wall clock limit exceeded after " +
                                  std::to_string(nodes_) + " nodes",
                              nodes_);
    }
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  std::uint64_t nodes_ = 0;
  std::uint64_t budget_;
  double timeout_;
  SearchStats* stats_;
  std::chrono::steady_clock::time_point start_;
};

}  // namespace gel::internal
