#pragma once

#include "pixcat/oracle.hpp"
#include "pixcat/partition.hpp"
#include "pixcat/thincat.hpp"

#include <string>
#include <vector>

namespace pixcat {

// Finite distributive lattice: elements with a partial order and the
// induced meet/join tables. Distributivity is checked exhaustively.
class FiniteLattice {
 public:
  FiniteLattice() = default;
  FiniteLattice(std::vector<std::string> elements, std::vector<std::vector<int>> leq);

  std::size_t size() const { return elements_.size(); }
  const std::vector<std::string>& elements() const { return elements_; }
  std::size_t index_of(const std::string& label) const;
  bool leq(std::size_t a, std::size_t b) const { return leq_[a][b] != 0; }
  std::size_t meet(std::size_t a, std::size_t b) const { return meet_[a][b]; }
  std::size_t join(std::size_t a, std::size_t b) const { return join_[a][b]; }

  // the thin path category with Hom(U,V) nonzero iff U <= V
  FiniteThinCategory to_thin_category() const;

  // order isomorphism modulo labels
  bool isomorphic_to(const FiniteLattice& other) const;

 private:
  std::vector<std::string> elements_;
  std::vector<std::vector<int>> leq_;
  std::vector<std::vector<std::size_t>> meet_, join_;
};

// Finite topology: points plus the lattice of open sets under inclusion.
struct FiniteTopology {
  std::vector<std::string> points;
  std::vector<std::vector<bool>> opens;  // characteristic vectors, deduplicated

  FiniteLattice open_lattice() const;
  std::string open_name(std::size_t i) const;
};

FiniteTopology make_topology(std::vector<std::string> points, std::vector<std::vector<bool>> opens);

// all topologies on the given labeled points (exhaustive enumeration)
std::vector<FiniteTopology> enumerate_topologies(const std::vector<std::string>& points);

// C must be a sublattice of L (given by element indices into L); blocks
// collect the elements of C with a common meet against Y.
FinitePartition lattice_screen(const FiniteLattice& L, const std::vector<std::size_t>& C,
                               std::size_t Y);

struct LatticePixelation {
  ScreenAxiomReport axioms;
  bool isomorphic = true;
  std::string witness;
  FiniteLattice result;                       // the pixelated lattice, labeled by meets with Y
  std::vector<std::string> canonical_labels;  // block -> element of C_Y
};

// Localize the thin category of C at the in-block homs of the lattice
// screen for Y and verify the canonical order isomorphism onto
// C_Y = { U meet Y }.
LatticePixelation pixelate_lattice(const FiniteLattice& L, const std::vector<std::size_t>& C,
                                   std::size_t Y);

// Zariski spectrum of Z/n: points are the primes dividing n, opens are
// complements of vanishing loci of divisors.
FiniteTopology spec_zn(unsigned long long n);

struct SubspaceCheck {
  bool ok = true;
  std::string witness;
};

// Top(Y) with the subspace topology against the pixelation of Top(X) at
// the lattice screen for Y inside the powerset of X.
SubspaceCheck subspace_pixelation_check(const FiniteTopology& X, const std::vector<bool>& Y);

// Top(Spec (Z/n) localized at p) against the pixelation of Top(Spec Z/n)
// at Y(p) = { q : q contained in p }.
SubspaceCheck spec_zn_localization_check(unsigned long long n, unsigned long long p);

}  // namespace pixcat
