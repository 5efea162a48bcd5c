#include "rbn/cohomology.hpp"

#include "detail/small_class.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

namespace rbn {

namespace {

using detail::SmallClass;

constexpr int kNodeBudget = 2000;

// Smooth rational curves whose existence does not depend on anything beyond the
// configuration type. Exceptional curves are handled by normalization instead.
struct RuleGeometry {
  bool plane = true;
  std::int64_t e = 0;
  std::size_t off = 1;
  std::vector<SmallClass> curves;
};

SmallClass unit(std::size_t n, std::initializer_list<std::pair<std::size_t, std::int64_t>> entries) {
  SmallClass c;
  c.n = static_cast<std::uint8_t>(n);
  for (auto [i, v] : entries) c[i] = v;
  return c;
}

RuleGeometry build_geometry(const Surface& s) {
  RuleGeometry g;
  const std::size_t n = s.picard_rank();
  const int k = s.num_points();
  g.plane = s.is_plane_blowup();
  g.off = s.exceptional_offset();
  if (!g.plane) {
    g.e = s.e();
    g.curves.push_back(unit(n, {{0, 1}}));
    g.curves.push_back(unit(n, {{1, 1}}));
    g.curves.push_back(unit(n, {{0, 1}, {1, g.e}}));
    for (int i = 0; i < k; ++i) {
      g.curves.push_back(unit(n, {{1, 1}, {g.off + i, -1}}));
      g.curves.push_back(unit(n, {{0, 1}, {1, g.e}, {g.off + i, -1}}));
    }
    return g;
  }

  const PointConfig& cfg = s.config();
  const bool expl = s.kind() == SurfaceKind::BlowupP2 && cfg.kind == PointConfig::Kind::Explicit;
  auto in_s = [&](int i) { return s.kind() == SurfaceKind::BlowupP2 && cfg.in_collinear_set(i + 1); };

  g.curves.push_back(unit(n, {{0, 1}}));
  g.curves.push_back(unit(n, {{0, 2}}));
  for (int i = 0; i < k; ++i) g.curves.push_back(unit(n, {{0, 1}, {g.off + i, -1}}));
  if (expl) {
    for (int i = 0; i < k; ++i) g.curves.push_back(unit(n, {{0, 2}, {g.off + i, -1}}));
    return g;
  }
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (!(in_s(i) && in_s(j))) g.curves.push_back(unit(n, {{0, 1}, {g.off + i, -1}, {g.off + j, -1}}));
  if (!cfg.collinear.empty() && s.kind() == SurfaceKind::BlowupP2) {
    SmallClass line = unit(n, {{0, 1}});
    for (int i : cfg.collinear) line[g.off + static_cast<std::size_t>(i - 1)] = -1;
    g.curves.push_back(line);
  }
  for (unsigned mask = 1; mask < (1u << k); ++mask) {
    const int size = std::popcount(mask);
    if (size > 5) continue;
    int on_line = 0;
    for (int i = 0; i < k; ++i)
      if ((mask >> i & 1u) && in_s(i)) ++on_line;
    if (on_line > 2) continue;
    SmallClass conic = unit(n, {{0, 2}});
    for (int i = 0; i < k; ++i)
      if (mask >> i & 1u) conic[g.off + static_cast<std::size_t>(i)] = -1;
    g.curves.push_back(conic);
  }
  return g;
}

// Exceptional coefficient 1 never changes cohomology (restriction to E_i is O(-1)).
// Coefficient >= 2 is a dead end for the rules.
bool normalize(SmallClass& d, std::size_t off) {
  for (std::size_t i = off; i < d.n; ++i) {
    if (d[i] == 1) d[i] = 0;
    else if (d[i] >= 2) return false;
  }
  return true;
}

bool is_pullback(const SmallClass& d, std::size_t off) {
  for (std::size_t i = off; i < d.n; ++i)
    if (d[i] != 0) return false;
  return true;
}

std::array<std::int64_t, 3> pullback_h(const RuleGeometry& g, const SmallClass& d) {
  return g.plane ? detail::plane_h<std::int64_t>(d[0]) : detail::hirzebruch_h<std::int64_t>(g.e, d[0], d[1]);
}

class Search {
 public:
  Search(const RuleGeometry& g) : g_(g) {}

  bool run(SmallClass d) {
    budget_ = kNodeBudget;
    failed_.clear();
    path_.clear();
    return dfs(d);
  }

  const std::vector<std::size_t>& path() const { return path_; }
  const SmallClass& base() const { return base_; }

 private:
  bool dfs(SmallClass d) {
    if (!normalize(d, g_.off)) return false;
    if (failed_.count(d)) return false;
    if (--budget_ < 0) return false;
    if (is_pullback(d, g_.off)) {
      const auto h = pullback_h(g_, d);
      if (h[1] == 0 && h[2] == 0) {
        base_ = d;
        return true;
      }
      failed_.insert(d);
      return false;
    }
    if (g_.plane ? d[0] < -2 : (d[0] < -2 || d[1] < -g_.e - 2)) {
      failed_.insert(d);
      return false;
    }

    std::vector<std::pair<std::int64_t, std::size_t>> order;
    for (std::size_t c = 0; c < g_.curves.size(); ++c) {
      const SmallClass& C = g_.curves[c];
      if (detail::small_intersect(d, C, g_.plane, g_.e) < -1) continue;
      std::int64_t score = 0;
      for (std::size_t i = g_.off; i < d.n; ++i)
        if (C[i] < 0) score += -d[i];
      order.emplace_back(-score, c);
    }
    std::stable_sort(order.begin(), order.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto [neg_score, c] : order) {
      SmallClass next = d;
      for (std::size_t i = 0; i < d.n; ++i) next[i] -= g_.curves[c][i];
      path_.push_back(c);
      if (dfs(next)) return true;
      path_.pop_back();
      if (budget_ < 0) break;
    }
    failed_.insert(d);
    return false;
  }

  const RuleGeometry& g_;
  int budget_ = 0;
  std::unordered_set<SmallClass, detail::SmallClassHash> failed_;
  std::vector<std::size_t> path_;
  SmallClass base_;
};

const RuleGeometry& geometry_for(const Surface& s) {
  static std::mutex mu;
  static std::map<std::string, RuleGeometry> cache;
  std::lock_guard lock(mu);
  auto it = cache.find(s.name());
  if (it == cache.end()) it = cache.emplace(s.name(), build_geometry(s)).first;
  return it->second;
}

bool weyl_applicable(const Surface& s) {
  return s.has_general_points() && s.num_points() >= 3 && s.num_points() <= 8;
}

// Higher-cohomology derivation for one representative; appends the derivation on success.
bool derive_higher(const Divisor& d, std::vector<std::string>& out) {
  const auto small = detail::to_small(d);
  if (!small) return false;
  const RuleGeometry& g = geometry_for(d.surface());
  Search search(g);
  if (!search.run(*small)) return false;
  SmallClass cur = *small;
  for (std::size_t c : search.path()) {
    const SmallClass& C = g.curves[c];
    out.push_back("strip " + to_string(detail::from_small(C, d.surface())) + " (meets " +
                  to_string(detail::from_small(cur, d.surface())) + " in " +
                  std::to_string(detail::small_intersect(cur, C, g.plane, g.e)) + ")");
    for (std::size_t i = 0; i < cur.n; ++i) cur[i] -= C[i];
  }
  out.push_back("base " + to_string(detail::from_small(search.base(), d.surface())) +
                " (pullback with no higher cohomology)");
  return true;
}

std::optional<CohomologyVector> exact_pullback(const Divisor& d) {
  const auto small = detail::to_small(d);
  if (!small) return std::nullopt;
  SmallClass c = *small;
  const std::size_t off = d.surface().exceptional_offset();
  if (!normalize(c, off) || !is_pullback(c, off)) return std::nullopt;
  const auto h = pullback_h(geometry_for(d.surface()), c);
  return CohomologyVector{h[0], h[1], h[2]};
}

void require_blowup(const Divisor& d) {
  if (d.surface().kind() == SurfaceKind::Hirzebruch)
    throw std::invalid_argument("vanishing rules apply to blowups; use the exact algorithm on " + d.surface().name());
}

}  // namespace

VanishingVerdict vanishing_by_rules(const Divisor& d) {
  require_blowup(d);
  static std::mutex mu;
  static std::unordered_map<std::string, VanishingVerdict> memo;
  const std::string key = d.surface().name() + "|" + to_string(d);
  {
    std::lock_guard lock(mu);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
  }

  VanishingVerdict v;
  const Integer x = chi(d);
  if (auto exact = exact_pullback(d)) {
    v.higher_cohomology = (exact->h1 == 0 && exact->h2 == 0) ? Vanishing::Zero : Vanishing::Nonzero;
    v.all_cohomology = (exact->h0 == 0 && v.higher_cohomology == Vanishing::Zero) ? Vanishing::Zero : Vanishing::Nonzero;
    v.derivation.push_back("exceptional coefficients in {0,1}: same cohomology as the pullback");
  } else {
    bool ok = derive_higher(d, v.derivation);
    if (!ok && weyl_applicable(d.surface())) {
      const Divisor dom = weyl_dominant(d);
      if (dom != d) {
        std::vector<std::string> sub{"Weyl image " + to_string(dom)};
        if (derive_higher(dom, sub)) {
          ok = true;
          v.derivation = std::move(sub);
        }
      }
    }
    if (ok) {
      v.higher_cohomology = Vanishing::Zero;
      v.all_cohomology = x == 0 ? Vanishing::Zero : Vanishing::Nonzero;
    } else {
      if (x < 0) v.higher_cohomology = Vanishing::Nonzero;
      if (x != 0) v.all_cohomology = Vanishing::Nonzero;
    }
  }
  if (v.higher_cohomology == Vanishing::Zero && x < 0)
    throw std::logic_error("vanishing rules derived h1 = h2 = 0 for a class with negative Euler characteristic");

  std::lock_guard lock(mu);
  memo.emplace(key, v);
  return v;
}

bool h0_vanishes_by_degree(const Divisor& d) {
  const Surface& s = d.surface();
  if (s.kind() == SurfaceKind::Hirzebruch) return d[0] < 0 || d[1] < 0;
  if (s.is_plane_blowup()) {
    if (d[0] < 0) return true;
    for (int i = 1; i <= s.num_points(); ++i)
      if (d[0] - multiplicity(d, i) < 0) return true;
    if (weyl_applicable(s) && weyl_dominant(d)[0] < 0) return true;
    return false;
  }
  const Divisor E = section(s), F = fiber(s);
  return intersect(d, F) < 0 || intersect(d, E + Integer(s.e()) * F) < 0;
}

std::optional<CohomologyVector> known_cohomology(const Divisor& d) {
  const Surface& s = d.surface();
  if (s.kind() == SurfaceKind::Hirzebruch) return hirzebruch_cohomology(d);
  if (auto exact = exact_pullback(d)) return exact;
  const Integer x = chi(d);
  if (vanishing_by_rules(d).higher_cohomology == Vanishing::Zero) return CohomologyVector{x, 0, 0};
  if (h0_vanishes_by_degree(d)) {
    const Divisor dual = canonical(s) - d;
    if (h0_vanishes_by_degree(dual)) return CohomologyVector{0, -x, 0};
    if (vanishing_by_rules(dual).higher_cohomology == Vanishing::Zero) return CohomologyVector{0, 0, x};
  }
  return std::nullopt;
}

}  // namespace rbn
