#pragma once

#include "rbn/chern.hpp"
#include "rbn/cohomology.hpp"
#include "rbn/goodsums.hpp"
#include "rbn/resolutions.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace rbn {

enum class WBNStatus { Holds, Fails, EmptyModuli, Unknown };

std::string to_string(WBNStatus s);

/// Rank one: O(c1) twisted down at n general points.
struct LineBundleCertificate {
  Divisor line_bundle;
  Integer points;
  CohomologyVector cohomology;
  std::string method;  // exact, rules or oracle
};

struct Obstruction {
  std::optional<Divisor> curve;
  std::optional<Integer> chi_pairing;
  int cohomology_degree = 0;  // which h^i is bounded below
  Integer lower_bound;
};

using Witness = std::variant<std::monostate, ResolutionReport, WBNWitness, LineBundleCertificate>;

struct WBNVerdict {
  WBNStatus status = WBNStatus::Unknown;
  Witness witness;
  std::optional<Obstruction> obstruction;
  std::optional<Rational> discriminant;  // set for EmptyModuli
  std::optional<ChernCharacter> witness_for;  // character the witness realizes (the Serre dual after normalization)
  std::vector<std::string> notes;
};

WBNVerdict rank_one_wbn(const Divisor& c1, const OracleOptions& opts = {});
WBNVerdict hirzebruch_wbn(const ChernCharacter& v);
WBNVerdict blowup_p2_wbn(const ChernCharacter& v, const OracleOptions& opts = {});
WBNVerdict blowup_hirzebruch_wbn(const ChernCharacter& v);
WBNVerdict delpezzo_wbn(const ChernCharacter& v, const OracleOptions& opts = {});

/// Sum of line bundles -E + b_iF and -F with no cohomology, for c1 = kE + lF with -r <= k < 0.
std::optional<GoodSum> hirzebruch_vanishing_sum(const Integer& r, const Divisor& c1);

/// Polarization (k+1)L - sum E_i used for collinear certificates.
Divisor collinear_polarization(const Surface& s);

/// h0 > 0 certificate from chi(O(C), v) > 0 when nu.H > (K + C).H. C must be effective.
std::optional<Obstruction> obstruction_certificate(const ChernCharacter& v, const Divisor& curve, const Divisor& h);

/// Dispatch on the surface family; rank one goes to rank_one_wbn. Requires chi(v) = 0.
WBNVerdict decide(const ChernCharacter& v, const OracleOptions& opts = {});

/// Re-runs the checker belonging to the witness kind.
bool witness_is_valid(const WBNVerdict& verdict, const ChernCharacter& v, const OracleOptions& opts = {});

}  // namespace rbn
