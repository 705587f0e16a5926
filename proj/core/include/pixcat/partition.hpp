#pragma once

#include "pixcat/rational.hpp"

#include <string>
#include <vector>

namespace pixcat {

// Partition of a finite label set into disjoint nonempty blocks.
class FinitePartition {
 public:
  FinitePartition() = default;
  FinitePartition(std::vector<std::string> ground, std::vector<std::vector<std::string>> blocks);

  const std::vector<std::string>& ground() const { return ground_; }
  const std::vector<std::vector<std::string>>& blocks() const { return blocks_; }
  std::size_t block_of(const std::string& label) const;

  // normalized form: blocks sorted internally and between each other
  friend bool operator==(const FinitePartition& a, const FinitePartition& b) {
    return a.ground_ == b.ground_ && a.blocks_ == b.blocks_;
  }

 private:
  std::vector<std::string> ground_;             // sorted
  std::vector<std::vector<std::string>> blocks_;  // each sorted, blocks sorted by first element
};

FinitePartition meet(const FinitePartition& a, const FinitePartition& b);

// Bipartite overlap graph of two partitions' blocks; its connected
// components compute the join.
struct JoinComplex {
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // (block of a, block of b)
  std::size_t component_count = 0;
  std::vector<std::size_t> component_of_a;  // per block of a
  std::vector<std::size_t> component_of_b;  // per block of b
};

JoinComplex join_complex(const FinitePartition& a, const FinitePartition& b);
FinitePartition join(const FinitePartition& a, const FinitePartition& b);

// Independent pushout oracle: transitive closure of "share an element"
// computed by union-find over elements, never touching the block graph.
FinitePartition join_pushout_oracle(const FinitePartition& a, const FinitePartition& b);

}  // namespace pixcat
