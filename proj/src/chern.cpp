#include "rbn/chern.hpp"

namespace rbn {

ChernCharacter::ChernCharacter(Integer r, Divisor c1, Rational ch2)
    : r_(std::move(r)), c1_(std::move(c1)), ch2_(std::move(ch2)) {
  ch2_.canonicalize();
  if (r_ <= 0) throw std::invalid_argument("characters must have positive rank, got r = " + r_.get_str());
  const Rational c2 = ratio(intersect(c1_, c1_), 2) - ch2_;
  if (c2.get_den() != 1)
    throw std::invalid_argument("malformed character: c1^2/2 - ch2 = " + c2.get_str() + " is not an integer");
}

QDivisor ChernCharacter::slope() const {
  QDivisor q = to_rational(c1_);
  q *= Rational(1) / Rational(r_);
  return q;
}

Rational ChernCharacter::discriminant() const {
  const QDivisor nu = slope();
  return intersect(nu, nu) / 2 - ch2_ / r_;
}

Rational ChernCharacter::chi() const { return riemann_roch_chi(*this); }

ChernCharacter line_bundle_character(const Divisor& d) {
  return ChernCharacter(1, d, ratio(intersect(d, d), 2));
}

ChernCharacter operator+(const ChernCharacter& a, const ChernCharacter& b) {
  return ChernCharacter(a.rank() + b.rank(), a.c1() + b.c1(), a.ch2() + b.ch2());
}

Rational riemann_roch_chi(const ChernCharacter& v) {
  const Divisor K = canonical(v.surface());
  return Rational(v.rank()) - ratio(intersect(v.c1(), K), 2) + v.ch2();
}

Integer integral_chi(const ChernCharacter& v) {
  const Rational x = riemann_roch_chi(v);
  if (x.get_den() != 1) throw std::logic_error("Euler characteristic " + x.get_str() + " is not an integer");
  return x.get_num();
}

ChernCharacter character_from_chi(const Integer& r, const Divisor& c1, const Integer& chi_target) {
  if (r <= 0) throw std::invalid_argument("characters must have positive rank");
  const Divisor K = canonical(c1.surface());
  const Rational ch2 = Rational(chi_target) - Rational(r) + ratio(intersect(c1, K), 2);
  return ChernCharacter(r, c1, ch2);
}

ChernCharacter twist(const ChernCharacter& v, const Divisor& m) {
  return ChernCharacter(v.rank(), v.c1() + v.rank() * m,
                        v.ch2() + Rational(intersect(v.c1(), m)) + ratio(v.rank() * intersect(m, m), 2));
}

Integer twisted_chi(const ChernCharacter& v, const Divisor& m) {
  if (riemann_roch_chi(v) != 0) throw std::invalid_argument("twisted_chi needs chi(v) = 0; use euler_pairing");
  return intersect(v.c1(), m) + v.rank() * (chi(m) - 1);
}

Rational euler_pairing(const ChernCharacter& v, const ChernCharacter& w) {
  v.c1().check_same(w.c1());
  const Divisor K = canonical(v.surface());
  const Divisor mixed = v.rank() * w.c1() - w.rank() * v.c1();
  return Rational(v.rank() * w.rank()) - ratio(intersect(mixed, K), 2) + Rational(v.rank()) * w.ch2() +
         Rational(w.rank()) * v.ch2() - Rational(intersect(v.c1(), w.c1()));
}

ChernCharacter serre_dual_character(const ChernCharacter& v) {
  const Divisor K = canonical(v.surface());
  return ChernCharacter(v.rank(), v.rank() * K - v.c1(),
                        v.ch2() - Rational(intersect(v.c1(), K)) + ratio(v.rank() * intersect(K, K), 2));
}

std::pair<ChernCharacter, bool> hirzebruch_normalize(const ChernCharacter& v) {
  if (v.surface().kind() != SurfaceKind::Hirzebruch)
    throw std::invalid_argument("normalization is defined on Hirzebruch surfaces");
  const Rational e = v.surface().e();
  auto normalized = [&](const ChernCharacter& w) {
    const Rational kr = ratio(w.c1()[0], w.rank());
    const Rational lr = ratio(w.c1()[1], w.rank());
    return kr > -1 || (kr == -1 && lr >= -1 - e / 2);
  };
  if (normalized(v)) return {v, false};
  ChernCharacter d = serre_dual_character(v);
  if (!normalized(d)) throw std::logic_error("neither the character nor its Serre dual is normalized");
  return {d, true};
}

bool bogomolov_nonempty(const ChernCharacter& v) {
  if (v.surface().kind() != SurfaceKind::Hirzebruch)
    throw std::invalid_argument("the Bogomolov emptiness test is only used on Hirzebruch surfaces");
  if (riemann_roch_chi(v) != 0) throw std::invalid_argument("the Bogomolov test expects chi = 0");
  return v.discriminant() >= 0;
}

}  // namespace rbn
