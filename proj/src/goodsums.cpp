#include "rbn/goodsums.hpp"

#include "rbn/cohomology.hpp"

#include <variant>

namespace rbn {

namespace {

// Nef certificate for a reference class.
bool reference_is_nef(const Divisor& n) {
  const Surface& s = n.surface();
  switch (s.kind()) {
    case SurfaceKind::Hirzebruch:
    case SurfaceKind::DelPezzo:
      return is_nef(n);
    case SurfaceKind::BlowupP2:
      for (int i = 1; i <= s.num_points(); ++i)
        if (n[s.exceptional_offset() + i - 1] != 0) return false;
      return n[0] >= 0;
    case SurfaceKind::BlowupHirzebruch:
      for (int i = 1; i <= s.num_points(); ++i)
        if (n[s.exceptional_offset() + i - 1] != 0) return false;
      return n[0] >= 0 && n[1] >= s.e() * n[0];
  }
  return false;
}

void check_reference(const GoodSum& sum) {
  if (!reference_is_nef(sum.N)) throw std::invalid_argument("reference class " + to_string(sum.N) + " is not certified nef");
  const Divisor fk = ruling_fiber(sum.surface) + canonical(sum.surface);
  const Integer v = -intersect(sum.N, fk);
  if (v < 2) throw std::invalid_argument("-N.(F+K) = " + v.get_str() + " < 2 for N = " + to_string(sum.N));
}

}  // namespace

Divisor GoodSum::c1() const {
  Divisor out = Divisor::zero(surface);
  for (const auto& l : summands) out += l;
  return out;
}

ChernCharacter GoodSum::character() const {
  if (summands.empty()) throw std::invalid_argument("empty direct sum has no character");
  ChernCharacter out = line_bundle_character(summands.front());
  for (std::size_t i = 1; i < summands.size(); ++i) out = out + line_bundle_character(summands[i]);
  return out;
}

Divisor default_reference_class(const Surface& s) {
  switch (s.kind()) {
    case SurfaceKind::DelPezzo: return -canonical(s);
    case SurfaceKind::BlowupP2: return hyperplane(s);
    case SurfaceKind::Hirzebruch: return fiber(s);
    default: throw std::invalid_argument("no default reference class on " + s.name());
  }
}

bool has_no_higher_cohomology(const Divisor& d, std::string* how, const OracleOptions& opts) {
  const Surface& s = d.surface();
  if (s.kind() == SurfaceKind::Hirzebruch) {
    const auto h = hirzebruch_cohomology(d);
    if (how) *how = "exact";
    return h.h1 == 0 && h.h2 == 0;
  }
  const auto v = vanishing_by_rules(d);
  if (v.higher_cohomology == Vanishing::Zero) {
    if (how) *how = "rules";
    return true;
  }
  if (v.higher_cohomology == Vanishing::Nonzero) {
    if (how) *how = "rules";
    return false;
  }
  if (!s.is_plane_blowup()) {
    if (how) *how = "unknown";
    return false;
  }
  const auto h = blowup_cohomology_oracle(d, opts);
  if (how) *how = "oracle";
  return h.h1 == 0 && h.h2 == 0;
}

GoodnessReport is_good_sum(const GoodSum& sum, const OracleOptions& opts) {
  check_reference(sum);
  GoodnessReport rep;
  for (const auto& l : sum.summands) {
    l.check_same(sum.N);
    std::string how;
    const bool ok = has_no_higher_cohomology(l, &how, opts);
    rep.provenance.push_back(to_string(l) + ": " + how);
    if (!ok && rep.vanishing_ok) {
      rep.vanishing_ok = false;
      rep.detail = "summand " + to_string(l) + " has higher cohomology (" + how + ")";
    }
  }
  for (std::size_t i = 0; i < sum.summands.size() && rep.degree_ok; ++i)
    for (std::size_t j = 0; j < sum.summands.size(); ++j) {
      const Integer gap = intersect(sum.N, sum.summands[i] - sum.summands[j]);
      if (gap > 1) {
        rep.degree_ok = false;
        if (rep.detail.empty())
          rep.detail = "N.(" + to_string(sum.summands[i]) + " - " + to_string(sum.summands[j]) + ") = " +
                       gap.get_str() + " > 1";
        break;
      }
    }
  return rep;
}

bool prioritary_sum_check(const GoodSum& sum, const Divisor& f) {
  const Integer bound = -intersect(sum.N, f + canonical(sum.surface));
  for (const auto& a : sum.summands)
    for (const auto& b : sum.summands)
      if (intersect(sum.N, a - b) >= bound) return false;
  return true;
}

namespace {

struct Rounding {
  Integer d, p;
  std::vector<Integer> a, pa;
};

Integer floor_div(const Integer& n, const Integer& m) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), n.get_mpz_t(), m.get_mpz_t());
  return q;
}

std::variant<Rounding, std::string> rounding_data(const Integer& r, const Divisor& c1, const OracleOptions& opts) {
  const Surface& s = c1.surface();
  if (!s.is_plane_blowup()) return std::string("not a blowup of P^2");
  if (r < 1) return std::string("rank < 1");
  if (c1[0] < 0) return std::string("delta < 0");
  Rounding out;
  out.d = floor_div(c1[0], r);
  out.p = c1[0] - r * out.d;
  Divisor fc = out.d * hyperplane(s);
  for (int i = 1; i <= s.num_points(); ++i) {
    const Integer m = multiplicity(c1, i);
    if (m < 0) return "alpha_" + std::to_string(i) + " < 0";
    out.a.push_back(floor_div(m, r));
    out.pa.push_back(m - r * out.a.back());
    const Integer ceil = out.a.back() + (out.pa.back() > 0 ? 1 : 0);
    fc -= ceil * exceptional(s, i);
  }
  std::string how;
  if (!has_no_higher_cohomology(fc, &how, opts))
    return "floor/ceiling bundle " + to_string(fc) + " has higher cohomology (" + how + ")";
  return out;
}

}  // namespace

std::optional<std::string> rounding_obstacle(const Integer& r, const Divisor& c1, const OracleOptions& opts) {
  auto data = rounding_data(r, c1, opts);
  if (auto* why = std::get_if<std::string>(&data)) return *why;
  return std::nullopt;
}

GoodSum rounding_sum(const Integer& r, const Divisor& c1, const OracleOptions& opts) {
  auto data = rounding_data(r, c1, opts);
  if (auto* why = std::get_if<std::string>(&data)) throw std::invalid_argument("rounding hypothesis fails: " + *why);
  const Rounding& R = std::get<Rounding>(data);
  const Surface& s = c1.surface();
  if (!r.fits_slong_p() || r > 100000) throw std::invalid_argument("rank too large for an explicit direct sum");
  const long n = r.get_si();
  std::vector<Divisor> parts;
  for (long q = 0; q < n; ++q) parts.push_back((q < R.p ? R.d + 1 : R.d) * hyperplane(s));
  // extra multiplicities go round-robin from the back so the larger L-coefficients get them last
  long cursor = n - 1;
  for (int i = 1; i <= s.num_points(); ++i) {
    const Divisor Ei = exceptional(s, i);
    for (long q = 0; q < n; ++q) parts[q] -= R.a[i - 1] * Ei;
    for (Integer q = 0; q < R.pa[i - 1]; ++q) {
      parts[cursor] -= Ei;
      cursor = (cursor + n - 1) % n;
    }
  }
  GoodSum out{s, hyperplane(s), std::move(parts)};
  if (out.c1() != c1) throw std::logic_error("rounding lost c1");
  return out;
}

GoodSum upshift_lift(const GoodSum& sum, int i, int j) {
  const Surface& s = sum.surface;
  const Divisor Ei = exceptional(s, i), Ej = exceptional(s, j);
  std::optional<std::size_t> pick;
  for (std::size_t q = 0; q < sum.summands.size(); ++q) {
    const Integer gap = intersect(sum.summands[q], Ei) - intersect(sum.summands[q], Ej);
    if (gap <= 0) continue;
    // gap 1 is exactly a transposition image, prefer it
    if (gap == 1) {
      pick = q;
      break;
    }
    if (!pick) pick = q;
  }
  if (!pick)
    throw std::invalid_argument("no summand L' with L'.E" + std::to_string(i) + " > L'.E" + std::to_string(j));
  GoodSum out = sum;
  out.summands[*pick] += Ei - Ej;
  return out;
}

WBNWitness wbn_witness(const ChernCharacter& v, const OracleOptions& opts) {
  if (riemann_roch_chi(v) != 0) throw std::invalid_argument("witness needs chi(v) = 0");
  const Surface& s = v.surface();
  GoodSum sum = s.kind() == SurfaceKind::DelPezzo ? delpezzo_decompose(v.c1(), v.rank()) : rounding_sum(v.rank(), v.c1(), opts);
  const ChernCharacter total = sum.character();
  const Integer n = integral_chi(total);
  if (n < 0) throw std::logic_error("good sum with negative Euler characteristic");
  ChernCharacter target(total.rank(), total.c1(), total.ch2() - Rational(n));
  if (target != v) throw std::logic_error("witness bookkeeping does not reproduce the character");
  return WBNWitness{std::move(sum), n, std::move(target)};
}

}  // namespace rbn
