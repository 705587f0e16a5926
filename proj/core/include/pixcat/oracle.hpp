#pragma once

#include "pixcat/thincat.hpp"

#include <vector>

namespace pixcat {

// Result of localizing a finite thin category at a class of morphisms.
// Object classes are the sigma zigzag components; classes whose objects
// carry a killed in-class morphism (or a zero object) collapse to 0.
struct LocalizedCategory {
  std::vector<std::vector<std::size_t>> classes;   // members, original indices
  std::vector<bool> dead;                          // per class
  std::vector<std::vector<int>> hom;               // localized bits, per class pair
  std::vector<std::size_t> class_of;               // per original object

  // the skeleton on the surviving classes
  FiniteThinCategory surviving(const FiniteThinCategory& base) const;
  std::vector<std::size_t> surviving_classes() const;
};

// Brute-force localization by congruence closure. sigma is a set of hom
// pairs (must be nonzero homs); a calculus of fractions is assumed, not
// checked. A localized hom bit is 1 iff some representative pair is
// reachable and no conjugation by in-class isos lands on a zero hom;
// zeroing propagates through factorizations to a fixpoint.
LocalizedCategory localization_oracle(const FiniteThinCategory& cat,
                                      const std::vector<std::pair<std::size_t, std::size_t>>& sigma);

}  // namespace pixcat
