#include "rbn/resolutions.hpp"

#include "rbn/cohomology.hpp"

namespace rbn {

namespace {

ChernCharacter require_chi_zero(const ChernCharacter& v) {
  if (riemann_roch_chi(v) != 0)
    throw std::invalid_argument("resolutions need chi(v) = 0, got " + riemann_roch_chi(v).get_str());
  return v;
}

bool higher_vanishes(const Divisor& d) {
  if (auto h = known_cohomology(d)) return h->h1 == 0 && h->h2 == 0;
  return d.surface().kind() != SurfaceKind::Hirzebruch &&
         vanishing_by_rules(d).higher_cohomology == Vanishing::Zero;
}

bool h1_vanishes(const Divisor& d) {
  if (auto h = known_cohomology(d)) return h->h1 == 0;
  return false;
}

bool h2_vanishes(const Divisor& d) {
  if (auto h = known_cohomology(d)) return h->h2 == 0;
  return h0_vanishes_by_degree(canonical(d.surface()) - d);
}

std::optional<bool> all_vanish(const Divisor& d) {
  if (auto h = known_cohomology(d)) return h->h0 == 0 && h->h1 == 0 && h->h2 == 0;
  return std::nullopt;
}

ResolutionReport finish(ExceptionalCollection coll, std::vector<Integer> exps, const ChernCharacter& v,
                        std::string note) {
  VirtualCharacter cok = resolution_cokernel(coll, exps);
  ResolutionReport rep{std::move(coll), std::move(exps), std::move(cok), true, {std::move(note)}};
  for (const auto& a : rep.exponents)
    if (a < 0) rep.feasible = false;
  if (!rep.matches(v)) throw std::logic_error("resolution bookkeeping does not reproduce the character");
  return rep;
}

}  // namespace

ExceptionalCollection builtin_collection(const Surface& s) {
  ExceptionalCollection c{s, {}, 1};
  const Divisor O = Divisor::zero(s);
  if (s.is_ruled_over_hirzebruch()) {
    const Divisor E = section(s), F = fiber(s);
    const Integer e = s.e();
    c.bundles.push_back(-E - (e + 1) * F);
    c.bundles.push_back(-E - e * F);
    c.bundles.push_back(-F);
  } else {
    const Divisor L = hyperplane(s);
    c.bundles.push_back(Integer(-2) * L);
    c.bundles.push_back(-L);
  }
  for (int i = 1; i <= s.num_points(); ++i) c.bundles.push_back(-exceptional(s, i));
  c.bundles.push_back(O);
  return c;
}

std::optional<ExceptionalityFailure> verify_strong_exceptional(const ExceptionalCollection& coll) {
  const auto& b = coll.bundles;
  for (std::size_t s = 0; s < b.size(); ++s)
    for (std::size_t t = s + 1; t < b.size(); ++t) {
      const Divisor back = b[s] - b[t];
      const auto zero = all_vanish(back);
      if (!zero || !*zero)
        return ExceptionalityFailure{s + 1, t + 1,
                                     (zero ? "Ext^*(A_t, A_s) = H^*(" : "cannot decide H^*(") + to_string(back) +
                                         (zero ? ") is nonzero" : ")")};
      const Divisor fwd = b[t] - b[s];
      if (!higher_vanishes(fwd))
        return ExceptionalityFailure{s + 1, t + 1, "Ext^{>0}(A_s, A_t) = H^{>0}(" + to_string(fwd) + ") not shown zero"};
    }
  return std::nullopt;
}

Integer hom_line_bundles(const Divisor& a, const Divisor& b) {
  const Divisor d = b - a;
  if (auto h = known_cohomology(d)) return h->h0;
  if (h0_vanishes_by_degree(d)) return 0;
  throw std::logic_error("cannot decide h0(" + to_string(d) + ")");
}

VirtualCharacter resolution_cokernel(const ExceptionalCollection& coll, const std::vector<Integer>& exponents) {
  if (exponents.size() != coll.resolving_size()) throw std::invalid_argument("exponent count does not match the collection");
  VirtualCharacter out{0, Divisor::zero(coll.surface), 0};
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    const Integer sign = i < static_cast<std::size_t>(coll.split) ? -1 : 1;
    const Divisor& A = coll.bundles[i];
    out.r += sign * exponents[i];
    out.c1 += (sign * exponents[i]) * A;
    out.ch2 += Rational(sign * exponents[i]) * ratio(intersect(A, A), 2);
  }
  return out;
}

bool ResolutionReport::matches(const ChernCharacter& v) const {
  return cokernel.r == v.rank() && cokernel.c1 == v.c1() && cokernel.ch2 == v.ch2();
}

ResolutionReport solve_exponents(const ChernCharacter& v, const ExceptionalCollection& coll) {
  require_chi_zero(v);
  const std::size_t m = coll.resolving_size();
  const std::size_t j = static_cast<std::size_t>(coll.split);
  if (j > m) throw std::invalid_argument("split index exceeds the collection");
  std::vector<Integer> a(m);
  auto as_int = [](const Rational& x) {
    if (x.get_den() != 1) throw std::logic_error("fractional Euler pairing " + x.get_str());
    return Integer(x.get_num());
  };
  for (std::size_t s = 0; s < j; ++s) {
    Integer val = -as_int(euler_pairing(v, line_bundle_character(coll.bundles[s])));
    for (std::size_t i = 0; i < s; ++i) val -= a[i] * hom_line_bundles(coll.bundles[i], coll.bundles[s]);
    a[s] = val;
  }
  for (std::size_t t = m; t-- > j;) {
    Integer val = as_int(euler_pairing(line_bundle_character(coll.bundles[t]), v));
    for (std::size_t i = t + 1; i < m; ++i) val -= a[i] * hom_line_bundles(coll.bundles[t], coll.bundles[i]);
    a[t] = val;
  }
  VirtualCharacter cok = resolution_cokernel(coll, a);
  ResolutionReport rep{coll, std::move(a), std::move(cok), true, {"exponents from the Euler-pairing recurrences"}};
  for (const auto& x : rep.exponents)
    if (x < 0) rep.feasible = false;
  if (!rep.feasible) rep.notes.push_back("infeasible: a negative exponent appears");
  return rep;
}

ResolutionReport hirzebruch_resolution(const ChernCharacter& v) {
  const Surface& s = v.surface();
  if (s.kind() != SurfaceKind::Hirzebruch) throw std::invalid_argument("expected a character on F_e");
  require_chi_zero(v);
  if (v.rank() < 2) throw std::invalid_argument("the resolution needs rank >= 2");
  if (hirzebruch_normalize(v).second) throw std::invalid_argument("character is not normalized (dualize first)");
  const Integer e = s.e(), r = v.rank(), k = v.c1()[0], l = v.c1()[1];
  if (e == 0 && k == -r && l == -r)
    throw std::invalid_argument("direct sum of O(-1,-1): no resolution by the collection");
  const Integer b = -twisted_chi(v, -section(s));
  if (b < 0) throw std::invalid_argument("chi(E(-E)) = " + Integer(-b).get_str() + " > 0: the resolution does not exist");
  const Integer a = l - k * e + k + r;
  const Integer c = k + r;
  if (a < 0) throw std::invalid_argument("exponent a = " + a.get_str() + " < 0 for the F_e resolution");
  return finish(builtin_collection(s), {a, b, c}, v, "closed form a = l-ke+k+r, b = -chi(E(-E)), c = k+r");
}

std::optional<std::string> blowup_resolution_obstacle(const ChernCharacter& v) {
  const Surface& s = v.surface();
  if (!s.is_plane_blowup()) return "not a blowup of P^2";
  if (v.rank() < 2) return "rank < 2";
  if (riemann_roch_chi(v) != 0) return "chi != 0";
  if (v.c1()[0] < 0) return "delta < 0";
  Integer total = 0;
  for (int i = 1; i <= s.num_points(); ++i) {
    const Integer m = multiplicity(v.c1(), i);
    if (m < 0) return "alpha_" + std::to_string(i) + " < 0";
    total += m;
  }
  if (v.c1()[0] - total < -v.rank()) return "delta - sum alpha_i < -1";
  return std::nullopt;
}

ResolutionReport blowup_resolution(const ChernCharacter& v) {
  if (auto why = blowup_resolution_obstacle(v)) throw std::invalid_argument("blowup resolution hypothesis fails: " + *why);
  const Surface& s = v.surface();
  const Integer r = v.rank();
  Integer total = 0;
  std::vector<Integer> c;
  for (int i = 1; i <= s.num_points(); ++i) {
    c.push_back(multiplicity(v.c1(), i));
    total += c.back();
  }
  const Integer a = v.c1()[0] - total + r;
  const Integer x = r + a - total;
  ExceptionalCollection coll = builtin_collection(s);
  coll.split = x >= 0 ? 1 : 2;
  std::vector<Integer> exps{a, abs(x)};
  exps.insert(exps.end(), c.begin(), c.end());
  return finish(std::move(coll), std::move(exps), v,
                x >= 0 ? "form: O(-2L) on the left, O(-L) and O(-E_i) on the right"
                       : "form: O(-2L) and O(-L) on the left, O(-E_i) on the right");
}

std::optional<std::string> blowup_hirzebruch_resolution_obstacle(const ChernCharacter& v) {
  const Surface& s = v.surface();
  if (s.kind() != SurfaceKind::BlowupHirzebruch) return "not a blowup of F_e";
  if (v.rank() < 2) return "rank < 2";
  if (riemann_roch_chi(v) != 0) return "chi != 0";
  const Integer e = s.e(), r = v.rank(), K = v.c1()[0], B = v.c1()[1];
  Integer total = 0;
  for (int i = 1; i <= s.num_points(); ++i) {
    const Integer m = multiplicity(v.c1(), i);
    if (m < 0) return "alpha_" + std::to_string(i) + " < 0";
    total += m;
  }
  if (K - total < -r) return "alpha - sum alpha_i < -1";
  const Integer lhs = B - total + r;
  if (lhs < (e - 1) * K || lhs < e * K) return "beta - sum alpha_i + 1 < max((e-1) alpha, e alpha)";
  return std::nullopt;
}

ResolutionReport blowup_hirzebruch_resolution(const ChernCharacter& v) {
  if (auto why = blowup_hirzebruch_resolution_obstacle(v))
    throw std::invalid_argument("blowup-of-F_e resolution hypothesis fails: " + *why);
  const Surface& s = v.surface();
  const Integer e = s.e(), r = v.rank(), K = v.c1()[0], B = v.c1()[1];
  Integer total = 0;
  std::vector<Integer> d;
  for (int i = 1; i <= s.num_points(); ++i) {
    d.push_back(multiplicity(v.c1(), i));
    total += d.back();
  }
  std::vector<Integer> exps{B - (e - 1) * K - total + r, B - e * K - total + r, K - total + r};
  exps.insert(exps.end(), d.begin(), d.end());
  return finish(builtin_collection(s), std::move(exps), v, "closed form on the blowup of F_e");
}

bool prioritary_hypotheses_check(const ExceptionalCollection& coll, const Divisor& f) {
  const std::size_t m = coll.resolving_size();
  const std::size_t j = static_cast<std::size_t>(coll.split);
  const auto& A = coll.bundles;
  for (std::size_t i = 0; i < j && i < m; ++i)
    for (std::size_t s = j; s < m; ++s)
      if (!h1_vanishes(A[s] - A[i] - f)) return false;
  for (std::size_t i = j; i < m; ++i)
    for (std::size_t s = j; s < m; ++s)
      if (!h2_vanishes(A[s] - A[i] - f)) return false;
  return true;
}

}  // namespace rbn
