#pragma once

#include "rbn/lattice.hpp"

#include <optional>
#include <string>
#include <vector>

namespace rbn {

struct CohomologyVector {
  Integer h0 = 0, h1 = 0, h2 = 0;

  Integer euler() const { return h0 - h1 + h2; }
  friend bool operator==(const CohomologyVector&, const CohomologyVector&) = default;
};

enum class Vanishing { Zero, Nonzero, Unknown };

std::string to_string(Vanishing v);

struct VanishingVerdict {
  Vanishing higher_cohomology = Vanishing::Unknown;
  Vanishing all_cohomology = Vanishing::Unknown;
  std::vector<std::string> derivation;
};

/// Exact (h0,h1,h2) of O(aE+bF) on F_e.
CohomologyVector hirzebruch_cohomology(const Divisor& d);

/// Independent computation through the direct image on P^1.
CohomologyVector hirzebruch_pushforward_oracle(const Divisor& d);

/// One-sided vanishing test on BlowupP2, DelPezzo and BlowupHirzebruch.
/// A Zero verdict is always correct; Unknown means no derivation was found.
VanishingVerdict vanishing_by_rules(const Divisor& d);

/// Exact cohomology when it follows from the algorithm (Hirzebruch) or from the rules and
/// duality (everything else); nullopt otherwise.
std::optional<CohomologyVector> known_cohomology(const Divisor& d);

/// Sound sufficient test for h0(D) = 0: D meets some nef class negatively.
bool h0_vanishes_by_degree(const Divisor& d);

}  // namespace rbn
