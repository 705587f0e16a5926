#include "pixcat/partition.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace pixcat {

namespace {

std::vector<std::vector<std::string>> normalize_blocks(std::vector<std::vector<std::string>> blocks) {
  for (auto& b : blocks) std::sort(b.begin(), b.end());
  std::sort(blocks.begin(), blocks.end());
  return blocks;
}

struct UF {
  std::vector<std::size_t> parent;
  explicit UF(std::size_t n) : parent(n) {
    for (std::size_t i = 0; i < n; ++i) parent[i] = i;
  }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

}  // namespace

FinitePartition::FinitePartition(std::vector<std::string> ground,
                                 std::vector<std::vector<std::string>> blocks) {
  std::sort(ground.begin(), ground.end());
  if (std::adjacent_find(ground.begin(), ground.end()) != ground.end())
    throw input_error("partition ground set has duplicate labels");
  blocks = normalize_blocks(std::move(blocks));
  std::vector<std::string> covered;
  for (const auto& b : blocks) {
    if (b.empty()) throw input_error("partition block is empty");
    covered.insert(covered.end(), b.begin(), b.end());
  }
  std::sort(covered.begin(), covered.end());
  if (covered != ground) throw input_error("partition blocks must cover the ground set exactly once");
  ground_ = std::move(ground);
  blocks_ = std::move(blocks);
}

std::size_t FinitePartition::block_of(const std::string& label) const {
  for (std::size_t i = 0; i < blocks_.size(); ++i)
    if (std::binary_search(blocks_[i].begin(), blocks_[i].end(), label)) return i;
  throw input_error("label '" + label + "' not in partition ground set");
}

FinitePartition meet(const FinitePartition& a, const FinitePartition& b) {
  if (a.ground() != b.ground()) throw input_error("partition meet needs a common ground set");
  std::map<std::pair<std::size_t, std::size_t>, std::vector<std::string>> cells;
  for (const auto& x : a.ground()) cells[{a.block_of(x), b.block_of(x)}].push_back(x);
  std::vector<std::vector<std::string>> blocks;
  for (auto& [key, cell] : cells) blocks.push_back(std::move(cell));
  return FinitePartition(a.ground(), std::move(blocks));
}

JoinComplex join_complex(const FinitePartition& a, const FinitePartition& b) {
  if (a.ground() != b.ground()) throw input_error("partition join needs a common ground set");
  JoinComplex jc;
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const auto& x : a.ground()) seen.insert({a.block_of(x), b.block_of(x)});
  jc.edges.assign(seen.begin(), seen.end());

  const std::size_t na = a.blocks().size();
  UF uf(na + b.blocks().size());
  for (auto [i, j] : jc.edges) uf.unite(i, na + j);

  std::map<std::size_t, std::size_t> comp_id;
  jc.component_of_a.resize(na);
  jc.component_of_b.resize(b.blocks().size());
  for (std::size_t i = 0; i < na; ++i) {
    auto r = uf.find(i);
    auto it = comp_id.find(r);
    if (it == comp_id.end()) it = comp_id.emplace(r, comp_id.size()).first;
    jc.component_of_a[i] = it->second;
  }
  for (std::size_t j = 0; j < b.blocks().size(); ++j) {
    auto r = uf.find(na + j);
    auto it = comp_id.find(r);
    if (it == comp_id.end()) it = comp_id.emplace(r, comp_id.size()).first;
    jc.component_of_b[j] = it->second;
  }
  jc.component_count = comp_id.size();
  return jc;
}

FinitePartition join(const FinitePartition& a, const FinitePartition& b) {
  JoinComplex jc = join_complex(a, b);
  std::vector<std::vector<std::string>> blocks(jc.component_count);
  for (const auto& x : a.ground()) blocks[jc.component_of_a[a.block_of(x)]].push_back(x);
  return FinitePartition(a.ground(), std::move(blocks));
}

FinitePartition join_pushout_oracle(const FinitePartition& a, const FinitePartition& b) {
  if (a.ground() != b.ground()) throw input_error("partition join needs a common ground set");
  const auto& ground = a.ground();
  std::map<std::string, std::size_t> pos;
  for (std::size_t i = 0; i < ground.size(); ++i) pos[ground[i]] = i;

  UF uf(ground.size());
  for (const auto& part : {a, b})
    for (const auto& blk : part.blocks())
      for (std::size_t i = 1; i < blk.size(); ++i) uf.unite(pos[blk[0]], pos[blk[i]]);

  std::map<std::size_t, std::vector<std::string>> groups;
  for (const auto& x : ground) groups[uf.find(pos[x])].push_back(x);
  std::vector<std::vector<std::string>> blocks;
  for (auto& [r, g] : groups) blocks.push_back(std::move(g));
  return FinitePartition(ground, std::move(blocks));
}

}  // namespace pixcat
