#pragma once

#include "rbn/lattice.hpp"

#include <utility>

namespace rbn {

/// Positive-rank Chern character (r, c1, ch2). The constructor rejects r <= 0 and
/// characters whose c1^2/2 - ch2 is not an integer.
class ChernCharacter {
 public:
  ChernCharacter(Integer r, Divisor c1, Rational ch2);

  const Surface& surface() const noexcept { return c1_.surface(); }
  const Integer& rank() const noexcept { return r_; }
  const Divisor& c1() const noexcept { return c1_; }
  const Rational& ch2() const noexcept { return ch2_; }

  /// Total slope nu = c1 / r.
  QDivisor slope() const;
  /// Delta = nu^2/2 - ch2/r.
  Rational discriminant() const;
  /// Riemann-Roch Euler characteristic.
  Rational chi() const;

  friend bool operator==(const ChernCharacter& a, const ChernCharacter& b) {
    return a.r_ == b.r_ && a.c1_ == b.c1_ && a.ch2_ == b.ch2_;
  }
  friend bool operator!=(const ChernCharacter& a, const ChernCharacter& b) { return !(a == b); }

 private:
  Integer r_;
  Divisor c1_;
  Rational ch2_;
};

ChernCharacter line_bundle_character(const Divisor& d);

/// Direct sum.
ChernCharacter operator+(const ChernCharacter& a, const ChernCharacter& b);

/// chi = r - c1.K/2 + ch2.
Rational riemann_roch_chi(const ChernCharacter& v);

/// Character with the given rank, c1 and Euler characteristic.
ChernCharacter character_from_chi(const Integer& r, const Divisor& c1, const Integer& chi_target);

/// Character of E (x) O(M).
ChernCharacter twist(const ChernCharacter& v, const Divisor& m);

/// chi(E (x) M) for chi(E) = 0: c1.M + r(chi(M) - 1).
Integer twisted_chi(const ChernCharacter& v, const Divisor& m);

/// chi(v, w) = sum (-1)^i ext^i(v, w).
Rational euler_pairing(const ChernCharacter& v, const ChernCharacter& w);

/// Character of the dual twisted by K: (r, -c1 + rK, ch2 - c1.K + rK^2/2).
ChernCharacter serre_dual_character(const ChernCharacter& v);

/// Pick v or its Serre dual so that k/r >= -1, and l/r >= -1 - e/2 when k/r = -1 (F_e only).
std::pair<ChernCharacter, bool> hirzebruch_normalize(const ChernCharacter& v);

/// Necessary condition for nonempty moduli on F_e when chi = 0: Delta >= 0.
bool bogomolov_nonempty(const ChernCharacter& v);

/// Integer Euler characteristic; throws if Riemann-Roch gives a fraction.
Integer integral_chi(const ChernCharacter& v);

}  // namespace rbn
