#include "rbn/decide.hpp"

#include "rbn/interpolation.hpp"

namespace rbn {

namespace {

constexpr const char* kProviso =
    "statement is about the general F-prioritary sheaf; as a semistable statement it assumes a polarization H "
    "with H.(K+F) < 0 and nonempty moduli";

void require_chi_zero(const ChernCharacter& v) {
  if (riemann_roch_chi(v) != 0)
    throw std::invalid_argument("weak Brill-Noether needs chi(v) = 0, got chi = " + riemann_roch_chi(v).get_str());
}

void require_rank_two(const ChernCharacter& v) {
  if (v.rank() < 2) throw std::invalid_argument("this decision procedure expects rank >= 2; rank one goes through rank_one_wbn");
}

WBNVerdict holds(Witness w, const ChernCharacter& target, std::string note) {
  WBNVerdict out;
  out.status = WBNStatus::Holds;
  out.witness = std::move(w);
  out.witness_for = target;
  out.notes.push_back(std::move(note));
  out.notes.push_back(kProviso);
  return out;
}

WBNVerdict unknown(std::string note) {
  WBNVerdict out;
  out.notes.push_back(std::move(note));
  return out;
}

Integer floor_div(const Integer& n, const Integer& m) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), n.get_mpz_t(), m.get_mpz_t());
  return q;
}

WBNVerdict checked(WBNVerdict out, const OracleOptions& opts) {
  if (out.status == WBNStatus::Holds && !witness_is_valid(out, *out.witness_for, opts))
    throw std::logic_error("witness failed its own checker");
  return out;
}

WBNVerdict plane_blowup_route(const ChernCharacter& v, const OracleOptions& opts) {
  if (!blowup_resolution_obstacle(v))
    return holds(blowup_resolution(v), v, "resolution by O(-2L), O(-L), O(-E_i) with nonnegative exponents");
  if (!rounding_obstacle(v.rank(), v.c1(), opts))
    return holds(wbn_witness(v, opts), v, "L-good sum from rounding the slope, then elementary modifications");
  return unknown("no resolution or rounding hypothesis holds");
}

}  // namespace

std::string to_string(WBNStatus s) {
  switch (s) {
    case WBNStatus::Holds: return "Holds";
    case WBNStatus::Fails: return "Fails";
    case WBNStatus::EmptyModuli: return "EmptyModuli";
    case WBNStatus::Unknown: return "Unknown";
  }
  return "?";
}

WBNVerdict rank_one_wbn(const Divisor& c1, const OracleOptions& opts) {
  const Surface& s = c1.surface();
  std::optional<CohomologyVector> h;
  std::string method;
  if (s.kind() == SurfaceKind::Hirzebruch) {
    h = hirzebruch_cohomology(c1);
    method = "exact";
  } else if ((h = known_cohomology(c1))) {
    method = "rules";
  } else if (chi(c1) < 0) {
    WBNVerdict out;
    out.status = WBNStatus::Fails;
    out.obstruction = Obstruction{std::nullopt, std::nullopt, 1, -chi(c1)};
    out.notes.push_back("chi(O(D)) < 0 forces h1 > 0");
    return out;
  } else if (s.is_plane_blowup()) {
    h = blowup_cohomology_oracle(c1, opts);
    method = "oracle";
  }
  if (!h) return unknown("higher cohomology of O(" + to_string(c1) + ") is not decided");
  WBNVerdict out;
  out.notes.push_back("cohomology of O(" + to_string(c1) + ") by " + method);
  if (h->h1 == 0 && h->h2 == 0) {
    out.status = WBNStatus::Holds;
    out.witness = LineBundleCertificate{c1, h->h0, *h, method};
    out.witness_for = character_from_chi(1, c1, 0);
    return out;
  }
  out.status = WBNStatus::Fails;
  if (h->h2 > 0)
    out.obstruction = Obstruction{std::nullopt, std::nullopt, 2, h->h2};
  else
    out.obstruction = Obstruction{std::nullopt, std::nullopt, 1, h->h1};
  return out;
}

std::optional<GoodSum> hirzebruch_vanishing_sum(const Integer& r, const Divisor& c1) {
  const Surface& s = c1.surface();
  if (s.kind() != SurfaceKind::Hirzebruch) return std::nullopt;
  const Integer k = c1[0], l = c1[1];
  if (k >= 0 || k < -r) return std::nullopt;
  const Integer x = -k, y = r + k;
  const Integer total = l + y;
  const Integer q = floor_div(total, x);
  const Integer extra = total - q * x;
  const Divisor E = section(s), F = fiber(s);
  GoodSum out{s, F, {}};
  for (Integer i = 0; i < x; ++i) out.summands.push_back(-E + (i < extra ? q + 1 : q) * F);
  for (Integer i = 0; i < y; ++i) out.summands.push_back(-F);
  if (out.c1() != c1) throw std::logic_error("vanishing sum lost c1");
  return out;
}

WBNVerdict hirzebruch_wbn(const ChernCharacter& v) {
  if (v.surface().kind() != SurfaceKind::Hirzebruch) throw std::invalid_argument("expected a character on F_e");
  require_rank_two(v);
  require_chi_zero(v);
  const auto [w, dualized] = hirzebruch_normalize(v);
  const std::string dual_note = dualized ? "normalized through the Serre dual; witness and bound refer to it" : "";
  if (!bogomolov_nonempty(w)) {
    WBNVerdict out;
    out.status = WBNStatus::EmptyModuli;
    out.discriminant = w.discriminant();
    out.notes.push_back("Delta = " + w.discriminant().get_str() + " < 0 with chi = 0: no semistable sheaves");
    return out;
  }
  const Surface& s = w.surface();
  const Integer e = s.e(), r = w.rank(), k = w.c1()[0], l = w.c1()[1];
  const Rational nuE = ratio(l - k * e, r);
  WBNVerdict out;
  if (nuE >= -1) {
    const bool exceptional_sum = e == 0 && k == -r && l == -r;
    const Integer a = l - k * e + k + r;
    if (!exceptional_sum && a >= 0) {
      out = holds(hirzebruch_resolution(w), w, "nu.E = " + nuE.get_str() + " >= -1: resolution by the F_e collection");
    } else if (auto sum = hirzebruch_vanishing_sum(r, w.c1())) {
      WBNWitness wit{*sum, 0, sum->character()};
      out = holds(std::move(wit), w,
                  exceptional_sum ? "direct sum of copies of O(-1,-1)"
                                  : "exponent a < 0: direct sum of O(-E+bF) and O(-F), all without cohomology");
    } else {
      return unknown("nu.E >= -1 but neither the resolution nor the vanishing sum applies");
    }
  } else {
    const Integer bound = twisted_chi(w, -section(s));
    out.status = WBNStatus::Fails;
    out.obstruction = Obstruction{section(s), bound, dualized ? 2 : 0, bound};
    out.notes.push_back("nu.E = " + nuE.get_str() + " < -1 gives chi(E(-E)) = " + bound.get_str() + " > 0");
    out.notes.push_back(kProviso);
  }
  if (dualized) out.notes.push_back(dual_note);
  return checked(std::move(out), {});
}

Divisor collinear_polarization(const Surface& s) {
  Divisor h = Integer(s.num_points() + 1) * hyperplane(s);
  for (int i = 1; i <= s.num_points(); ++i) h -= exceptional(s, i);
  return h;
}

std::optional<Obstruction> obstruction_certificate(const ChernCharacter& v, const Divisor& curve, const Divisor& h) {
  const Rational pairing = euler_pairing(line_bundle_character(curve), v);
  if (pairing <= 0 || pairing.get_den() != 1) return std::nullopt;
  const Rational lhs = intersect(v.slope(), to_rational(h));
  const Rational rhs(intersect(canonical(v.surface()) + curve, h));
  if (lhs <= rhs) return std::nullopt;
  return Obstruction{curve, pairing.get_num(), 0, pairing.get_num()};
}

WBNVerdict blowup_p2_wbn(const ChernCharacter& v, const OracleOptions& opts) {
  const Surface& s = v.surface();
  if (s.kind() != SurfaceKind::BlowupP2) throw std::invalid_argument("expected a blowup of P^2");
  require_rank_two(v);
  require_chi_zero(v);
  WBNVerdict out = plane_blowup_route(v, opts);
  if (out.status == WBNStatus::Holds || s.config().kind != PointConfig::Kind::Collinear) return checked(std::move(out), opts);
  Divisor line = hyperplane(s);
  Integer total = 0;
  for (int i : s.config().collinear) {
    line -= exceptional(s, i);
    total += multiplicity(v.c1(), i);
  }
  if (v.c1()[0] - total >= -v.rank()) return out;
  auto ob = obstruction_certificate(v, line, collinear_polarization(s));
  if (!ob) {
    out.notes.push_back("collinear line " + to_string(line) + " does not give a certificate");
    return out;
  }
  WBNVerdict fails;
  fails.status = WBNStatus::Fails;
  fails.obstruction = ob;
  fails.notes.push_back("delta - sum over the collinear points < -1: Hom(O(" + to_string(line) + "), E) != 0");
  fails.notes.push_back(kProviso);
  return fails;
}

WBNVerdict blowup_hirzebruch_wbn(const ChernCharacter& v) {
  if (v.surface().kind() != SurfaceKind::BlowupHirzebruch) throw std::invalid_argument("expected a blowup of F_e");
  require_rank_two(v);
  require_chi_zero(v);
  if (auto why = blowup_hirzebruch_resolution_obstacle(v)) return unknown("resolution hypothesis fails: " + *why);
  return checked(holds(blowup_hirzebruch_resolution(v), v, "resolution by the blown-up F_e collection"), {});
}

WBNVerdict delpezzo_wbn(const ChernCharacter& v, const OracleOptions& opts) {
  const Surface& s = v.surface();
  if (s.kind() != SurfaceKind::DelPezzo) throw std::invalid_argument("expected a del Pezzo surface");
  require_chi_zero(v);
  if (v.rank() == 1) return rank_one_wbn(v.c1(), opts);
  if (is_nef(v.c1()))
    return checked(holds(wbn_witness(v, opts), v, "c1 nef: (-K)-good sum, then elementary modifications"), opts);
  WBNVerdict out = plane_blowup_route(v, opts);
  if (out.status == WBNStatus::Unknown) out.notes.insert(out.notes.begin(), "c1 is not nef");
  return checked(std::move(out), opts);
}

WBNVerdict decide(const ChernCharacter& v, const OracleOptions& opts) {
  require_chi_zero(v);
  if (v.rank() == 1) return rank_one_wbn(v.c1(), opts);
  switch (v.surface().kind()) {
    case SurfaceKind::Hirzebruch: return hirzebruch_wbn(v);
    case SurfaceKind::BlowupP2: return blowup_p2_wbn(v, opts);
    case SurfaceKind::BlowupHirzebruch: return blowup_hirzebruch_wbn(v);
    case SurfaceKind::DelPezzo: return delpezzo_wbn(v, opts);
  }
  throw std::logic_error("unhandled surface kind");
}

bool witness_is_valid(const WBNVerdict& verdict, const ChernCharacter& v, const OracleOptions& opts) {
  if (const auto* res = std::get_if<ResolutionReport>(&verdict.witness)) {
    if (!res->feasible || !res->matches(v)) return false;
    for (const auto& a : res->exponents)
      if (a < 0) return false;
    return true;
  }
  if (const auto* wit = std::get_if<WBNWitness>(&verdict.witness)) {
    if (wit->target != v || wit->modifications < 0) return false;
    if (integral_chi(wit->sum.character()) != wit->modifications) return false;
    return is_good_sum(wit->sum, opts).ok();
  }
  if (const auto* lb = std::get_if<LineBundleCertificate>(&verdict.witness)) {
    return lb->cohomology.h1 == 0 && lb->cohomology.h2 == 0 && lb->points == chi(lb->line_bundle) &&
           lb->line_bundle == v.c1() && v.rank() == 1;
  }
  return false;
}

}  // namespace rbn
