#pragma once

#include "rbn/chern.hpp"
#include "rbn/interpolation.hpp"
#include "rbn/lattice.hpp"

#include <optional>
#include <string>
#include <vector>

namespace rbn {

/// Direct sum of line bundles L_1 + ... + L_r with a nef reference class N.
struct GoodSum {
  Surface surface;
  Divisor N;
  std::vector<Divisor> summands;

  std::size_t rank() const { return summands.size(); }
  Divisor c1() const;
  /// Character of the direct sum.
  ChernCharacter character() const;
};

/// -K on del Pezzo surfaces, L on other plane blowups, F on F_e. Throws on blowups of F_e.
Divisor default_reference_class(const Surface& s);

struct GoodnessReport {
  bool vanishing_ok = true;
  bool degree_ok = true;
  std::string detail;                    // first failure, empty when good
  std::vector<std::string> provenance;   // how each summand's vanishing was established

  bool ok() const { return vanishing_ok && degree_ok; }
};

/// h1 = h2 = 0 for O(D): exact on F_e, rules elsewhere, interpolation oracle as fallback on
/// plane blowups. `how` receives "exact", "rules" or "oracle".
bool has_no_higher_cohomology(const Divisor& d, std::string* how = nullptr, const OracleOptions& opts = {});

/// Checks N-goodness. Throws std::invalid_argument when N fails -N.(F+K) >= 2.
GoodnessReport is_good_sum(const GoodSum& sum, const OracleOptions& opts = {});

/// Strict inequality N.(L_i - L_j) < -N.(F+K) for all pairs.
bool prioritary_sum_check(const GoodSum& sum, const Divisor& f);

/// Floor/ceiling construction with N = L on a blowup of P^2.
GoodSum rounding_sum(const Integer& r, const Divisor& c1, const OracleOptions& opts = {});
/// Why rounding_sum does not apply, or nullopt.
std::optional<std::string> rounding_obstacle(const Integer& r, const Divisor& c1, const OracleOptions& opts = {});

/// Replace the first summand L' with L'.E_i > L'.E_j by L' + E_i - E_j (i, j are 1-based).
GoodSum upshift_lift(const GoodSum& sum, int i, int j);

/// The summand M split off from D = dL - aE_1 on the two-point blowup.
Divisor two_point_summand(const Divisor& d, const Integer& r);

struct DecomposeTrace {
  struct Level {
    int points = 0;
    std::size_t upshift_iterations = 0;
    Integer iteration_bound;
  };
  std::vector<Level> levels;
};

/// (-K)-good sum of rank r with c1 = D, for nef D on a del Pezzo surface of degree 4..7.
GoodSum delpezzo_decompose(const Divisor& d, const Integer& r, DecomposeTrace* trace = nullptr);

struct WBNWitness {
  GoodSum sum;
  Integer modifications;
  ChernCharacter target;
};

/// Good sum plus the number of elementary modifications reaching v (chi(v) = 0).
WBNWitness wbn_witness(const ChernCharacter& v, const OracleOptions& opts = {});

}  // namespace rbn
