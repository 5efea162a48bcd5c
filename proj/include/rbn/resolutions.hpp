#pragma once

#include "rbn/chern.hpp"
#include "rbn/lattice.hpp"

#include <optional>
#include <string>
#include <vector>

namespace rbn {

/// Line bundles A_1, ..., A_m followed by O_X. A two-term resolution puts
/// A_1..A_split on the left and A_{split+1}..A_m on the right.
struct ExceptionalCollection {
  Surface surface;
  std::vector<Divisor> bundles;  // last entry is O_X
  int split = 1;

  /// Number of bundles that may appear in a resolution (O_X excluded).
  std::size_t resolving_size() const { return bundles.size() - 1; }
};

ExceptionalCollection builtin_collection(const Surface& s);

struct ExceptionalityFailure {
  std::size_t s = 0, t = 0;  // 1-based positions, s < t
  std::string reason;
};

/// nullopt when the collection is strong exceptional; otherwise the first failing pair.
std::optional<ExceptionalityFailure> verify_strong_exceptional(const ExceptionalCollection& coll);

/// hom(O(A), O(B)) = h0(B - A), from exact or rule-derived cohomology.
Integer hom_line_bundles(const Divisor& a, const Divisor& b);

/// Signed character of an alternating sum; rank may be any integer.
struct VirtualCharacter {
  Integer r;
  Divisor c1;
  Rational ch2;
};

struct ResolutionReport {
  ExceptionalCollection collection;
  std::vector<Integer> exponents;  // one per resolving bundle
  VirtualCharacter cokernel;
  bool feasible = true;            // every exponent nonnegative
  std::vector<std::string> notes;

  std::size_t split() const { return static_cast<std::size_t>(collection.split); }
  /// Cokernel character equals v (rank, c1 and ch2 all match).
  bool matches(const ChernCharacter& v) const;
};

/// Cokernel of the right block minus the left block.
VirtualCharacter resolution_cokernel(const ExceptionalCollection& coll, const std::vector<Integer>& exponents);

/// Exponents from the two recurrences (left block against A_s, right block from the top).
ResolutionReport solve_exponents(const ChernCharacter& v, const ExceptionalCollection& coll);

/// Closed form on F_e for a normalized character with chi(E(-E)) <= 0. The
/// O(-1,-1)^r case on F_0 has no such resolution and is rejected.
ResolutionReport hirzebruch_resolution(const ChernCharacter& v);

/// Closed form on blowups of P^2 for delta, alpha_i >= 0 and delta - sum alpha_i >= -1.
ResolutionReport blowup_resolution(const ChernCharacter& v);

/// Closed form on blowups of F_e.
ResolutionReport blowup_hirzebruch_resolution(const ChernCharacter& v);

/// Why the closed form on blowups of P^2 does not apply, or nullopt if it does.
std::optional<std::string> blowup_resolution_obstacle(const ChernCharacter& v);
/// Same for blowups of F_e.
std::optional<std::string> blowup_hirzebruch_resolution_obstacle(const ChernCharacter& v);

/// Ext vanishing that makes every sheaf with such a resolution F-prioritary.
bool prioritary_hypotheses_check(const ExceptionalCollection& coll, const Divisor& f);

}  // namespace rbn
