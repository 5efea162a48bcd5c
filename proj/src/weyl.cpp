#include "rbn/lattice.hpp"

#include <algorithm>
#include <numeric>

namespace rbn {

namespace {

void require_plane(const Divisor& d) {
  if (!d.surface().is_plane_blowup())
    throw std::invalid_argument("the Weyl action is defined on blowups of P^2, not " + d.surface().name());
}

Divisor transposition_root(const Surface& s, int i, int j) { return exceptional(s, i) - exceptional(s, j); }

Divisor cremona_root(const Surface& s, int a, int b, int c) {
  return hyperplane(s) - exceptional(s, a) - exceptional(s, b) - exceptional(s, c);
}

// Indices 1..k ordered by decreasing multiplicity; ties go to the larger index.
std::vector<int> by_multiplicity(const Divisor& d) {
  const int k = d.surface().num_points();
  std::vector<int> idx(static_cast<std::size_t>(k));
  std::iota(idx.begin(), idx.end(), 1);
  std::stable_sort(idx.begin(), idx.end(), [&](int x, int y) {
    const Integer mx = multiplicity(d, x), my = multiplicity(d, y);
    return mx != my ? mx > my : x > y;
  });
  return idx;
}

}  // namespace

bool is_simple_root_shape(const Divisor& root) {
  if (!root.surface().is_plane_blowup()) return false;
  const auto& c = root.coords();
  int plus = 0, minus = 0;
  for (std::size_t i = 1; i < c.size(); ++i) {
    if (c[i] == 1) ++plus;
    else if (c[i] == -1) ++minus;
    else if (c[i] != 0) return false;
  }
  if (c[0] == 0) return plus == 1 && minus == 1;
  if (c[0] == 1) return plus == 0 && minus == 3;
  return false;
}

Divisor weyl_reflect(const Divisor& d, const Divisor& root) {
  require_plane(d);
  if (!is_simple_root_shape(root))
    throw std::invalid_argument("not a Weyl root of the form E_i - E_j or L - E_i - E_j - E_m");
  return d + intersect(d, root) * root;
}

Divisor WeylWord::apply(Divisor d) const {
  for (const auto& r : roots) d = weyl_reflect(d, r);
  return d;
}

Divisor WeylWord::apply_inverse(Divisor d) const {
  for (auto it = roots.rbegin(); it != roots.rend(); ++it) d = weyl_reflect(d, *it);
  return d;
}

WeylWord weyl_move_curve_to_last(const Divisor& curve) {
  const Surface& s = curve.surface();
  const auto curves = neg_one_curves(s);
  if (std::find(curves.begin(), curves.end(), curve) == curves.end())
    throw std::invalid_argument("class is not a (-1)-curve on " + s.name());
  const int k = s.num_points();
  if (k < 3) throw std::invalid_argument("moving a curve by Cremona steps needs k >= 3");

  WeylWord w;
  Divisor c = curve;
  while (c[0] > 0) {
    const auto idx = by_multiplicity(c);
    w.roots.push_back(cremona_root(s, idx[0], idx[1], idx[2]));
    c = weyl_reflect(c, w.roots.back());
  }
  int at = 0;
  for (int i = 1; i <= k; ++i)
    if (c == exceptional(s, i)) at = i;
  if (at == 0) throw std::logic_error("Cremona reduction of a (-1)-curve did not reach an exceptional class");
  if (at != k) {
    w.roots.push_back(transposition_root(s, at, k));
    c = weyl_reflect(c, w.roots.back());
  }
  if (c != exceptional(s, k)) throw std::logic_error("Weyl word does not move the curve to E_k");
  return w;
}

Divisor weyl_dominant(const Divisor& d, WeylWord* word) {
  require_plane(d);
  const Surface& s = d.surface();
  const int k = s.num_points();
  if (k > 8) throw std::invalid_argument("dominant reduction needs a finite Weyl group (k <= 8)");
  Divisor cur = d;
  for (int guard = 0;; ++guard) {
    if (guard > 10000) throw std::logic_error("dominant reduction did not terminate");
    for (int i = 1; i <= k; ++i) {
      int best = i;
      for (int j = i + 1; j <= k; ++j)
        if (multiplicity(cur, j) > multiplicity(cur, best)) best = j;
      if (best != i) {
        const Divisor r = transposition_root(s, i, best);
        cur = weyl_reflect(cur, r);
        if (word) word->roots.push_back(r);
      }
    }
    if (k < 3) return cur;
    if (cur[0] >= multiplicity(cur, 1) + multiplicity(cur, 2) + multiplicity(cur, 3)) return cur;
    const Divisor r = cremona_root(s, 1, 2, 3);
    cur = weyl_reflect(cur, r);
    if (word) word->roots.push_back(r);
  }
}

}  // namespace rbn
