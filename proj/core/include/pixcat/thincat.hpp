#pragma once

#include "pixcat/partition.hpp"
#include "pixcat/rational.hpp"

#include <string>
#include <vector>

namespace pixcat {

// Finite hom-thin category given extensionally: hom(u,v) in {0,1}. The
// hom bit means the unique morphism class u -> v is nonzero. A pair with a
// chain of nonzero steps but hom = 0 is a zero relation. Paths are chains
// of covering arrows (the Hasse diagram of the nonzero homs); the image of
// a path is the set of objects it visits.
class FiniteThinCategory {
 public:
  FiniteThinCategory() = default;
  FiniteThinCategory(std::vector<std::string> objects, std::vector<std::vector<int>> hom);

  std::size_t size() const { return objects_.size(); }
  const std::vector<std::string>& objects() const { return objects_; }
  std::size_t index_of(const std::string& label) const;
  int hom(std::size_t u, std::size_t v) const { return hom_[u][v]; }
  const std::vector<std::vector<int>>& hom_matrix() const { return hom_; }

  // reachability through chains of nonzero homs (reflexive, transitive)
  bool reach(std::size_t u, std::size_t v) const { return reach_[u][v] != 0; }

  // covering arrows: u -> v nonzero with no z strictly between
  const std::vector<std::pair<std::size_t, std::size_t>>& arrows() const { return arrows_; }

  // zero relations: reachable but hom = 0
  std::vector<std::pair<std::size_t, std::size_t>> zero_relations() const;

  // hom(u,w)=1 with a chain through v forces hom(u,v)=hom(v,w)=1
  void validate_factorization_closure() const;

 private:
  std::vector<std::string> objects_;
  std::vector<std::vector<int>> hom_;
  std::vector<std::vector<int>> reach_;
  std::vector<std::pair<std::size_t, std::size_t>> arrows_;
};

// Per-axiom screen report for a finite thin category and a partition of
// its objects. Axioms follow the screen definition: thinness of blocks,
// in-block zigzag connectivity, both Ore square completions, discreteness,
// and equivalence maintenance. The last two are automatic here.
struct ScreenAxiomReport {
  struct Axiom {
    std::string name;
    bool pass = true;
    std::string witness;
  };
  std::vector<Axiom> axioms;
  bool all_pass() const {
    for (const auto& a : axioms)
      if (!a.pass) return false;
    return true;
  }
};

ScreenAxiomReport check_screen_axioms_finite(const FiniteThinCategory& cat,
                                             const FinitePartition& partition);

}  // namespace pixcat
