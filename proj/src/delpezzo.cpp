#include "rbn/goodsums.hpp"

#include <algorithm>

namespace rbn {

namespace {

Integer floor_div(const Integer& n, const Integer& m) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), n.get_mpz_t(), m.get_mpz_t());
  return q;
}

void require_del_pezzo(const Surface& s) {
  if (s.kind() != SurfaceKind::DelPezzo) throw std::invalid_argument("expected a del Pezzo surface, got " + s.name());
}

GoodSum decompose(const Divisor& D0, const Integer& r, DecomposeTrace* trace) {
  const Surface& s = D0.surface();
  const Divisor N = -canonical(s);
  if (r == 1) return GoodSum{s, N, {D0}};
  if (D0.is_zero()) {
    GoodSum out{s, N, {}};
    for (Integer q = 0; q < r; ++q) out.summands.push_back(D0);
    return out;
  }
  const int k = s.num_points();
  Divisor D = D0;

  // upshift to a fixed point
  std::vector<std::pair<int, int>> moves;
  auto potential = [&](const Divisor& x) {
    Integer p = 0;
    for (int i = 1; i <= k; ++i) {
      const Integer m = multiplicity(x, i);
      p += m * m;
    }
    return p;
  };
  const Integer bound = Integer(k) * D[0] * D[0];
  std::size_t iterations = 0;
  for (;;) {
    bool moved = false;
    for (int i = 1; i <= k && !moved; ++i)
      for (int j = 1; j <= k && !moved; ++j) {
        if (i == j || multiplicity(D, i) < multiplicity(D, j)) continue;
        Divisor next = D - exceptional(s, i) + exceptional(s, j);
        if (!is_nef(next)) continue;
        if (potential(next) <= potential(D)) throw std::logic_error("upshift potential did not increase");
        D = std::move(next);
        moves.emplace_back(i, j);
        moved = true;
      }
    if (!moved) break;
    if (++iterations > bound) throw std::logic_error("upshift loop exceeded k (D.L)^2 iterations");
  }
  if (trace) trace->levels.push_back({k, iterations, bound});

  std::vector<Divisor> parts;
  if (k == 2) {
    const Divisor E1 = exceptional(s, 1), E2 = exceptional(s, 2);
    const Divisor swap = E1 - E2;
    bool swapped = false;
    if (multiplicity(D, 2) != 0) {
      if (multiplicity(D, 1) != 0)
        throw std::logic_error("upshift fixed point " + to_string(D) + " is orthogonal to neither E1 nor E2");
      D = weyl_reflect(D, swap);
      swapped = true;
    }
    const Divisor L = hyperplane(s);
    if (r == 2 && D == L - E1) {
      parts = {L - Integer(2) * E1, E1};
    } else {
      const Divisor M = two_point_summand(D, r);
      parts = decompose(D - M, r - 1, trace).summands;
      parts.push_back(M);
    }
    if (swapped)
      for (auto& p : parts) p = weyl_reflect(p, swap);
  } else {
    std::optional<Divisor> curve;
    for (const auto& c : neg_one_curves(s))
      if (intersect(D, c) == 0) {
        curve = c;
        break;
      }
    if (!curve) throw std::logic_error("upshift fixed point " + to_string(D) + " meets every (-1)-curve positively");
    const WeylWord w = weyl_move_curve_to_last(*curve);
    const Surface smaller = Surface::del_pezzo(s.degree() + 1);
    const Divisor low = drop_last_point(w.apply(D), smaller);
    for (const auto& p : decompose(low, r, trace).summands) parts.push_back(w.apply_inverse(add_point(p, s)));
  }

  GoodSum out{s, N, std::move(parts)};
  for (auto it = moves.rbegin(); it != moves.rend(); ++it) out = upshift_lift(out, it->first, it->second);
  if (out.c1() != D0) throw std::logic_error("decomposition does not sum to " + to_string(D0));
  return out;
}

}  // namespace

Divisor two_point_summand(const Divisor& D, const Integer& r) {
  const Surface& s = D.surface();
  require_del_pezzo(s);
  if (s.num_points() != 2) throw std::invalid_argument("two_point_summand works on the blowup at two points");
  if (r < 1) throw std::invalid_argument("rank must be positive");
  const Integer d = D[0], a = multiplicity(D, 1);
  if (multiplicity(D, 2) != 0) throw std::invalid_argument("expected D = dL - aE1, got " + to_string(D));
  if (a < 0 || a > d) throw std::invalid_argument("need 0 <= a <= d, got " + to_string(D));
  const Divisor L = hyperplane(s), E1 = exceptional(s, 1), E2 = exceptional(s, 2);
  if (r == 2 && D == L - E1) throw std::invalid_argument("D = L - E1 with r = 2 is split as (L - 2E1) + E1 by the caller");

  const Divisor negK = -canonical(s);
  const Integer m = floor_div(intersect(D, negK), r);
  if (m == 0) return Divisor::zero(s);
  const Integer sq = m / 3;
  const long t = Integer(m % 3).get_si();
  Divisor M = sq * L;
  if (t >= 1) M += E1;
  if (t == 2) M += E2;

  if (!(t == 2 && a == 0)) {
    if (t == 2) M += L - Integer(2) * E1 - E2;
    const Divisor line = L - E1 - E2;
    const Integer target = intersect(D, line);
    while (intersect(M, line) > target) {
      M += L - Integer(3) * E1;
      if (multiplicity(M, 1) > a) throw std::logic_error("two-point rounding overshot a' <= a for " + to_string(D));
    }
    if (multiplicity(M, 2) > 0) throw std::logic_error("two-point rounding has b' > 0");
  }

  if (intersect(M, negK) != m) throw std::logic_error("two-point summand has the wrong (-K)-degree");
  if (!is_nef(D - M)) throw std::logic_error("D - M is not nef for D = " + to_string(D));
  if (!has_no_higher_cohomology(M)) throw std::logic_error("two-point summand " + to_string(M) + " has higher cohomology");
  return M;
}

GoodSum delpezzo_decompose(const Divisor& d, const Integer& r, DecomposeTrace* trace) {
  const Surface& s = d.surface();
  require_del_pezzo(s);
  if (r < 1) throw std::invalid_argument("rank must be positive");
  if (r > 100000) throw std::invalid_argument("rank too large for an explicit direct sum");
  if (!is_nef(d)) throw std::invalid_argument(to_string(d) + " is not nef on " + s.name());
  return decompose(d, r, trace);
}

}  // namespace rbn
