#include "rbn/interpolation.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <random>
#include <tuple>

namespace rbn {

namespace {

using u32 = std::uint32_t;
using u64 = std::uint64_t;

u64 pow_mod(u64 b, u64 e, u64 p) {
  u64 r = 1 % p;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

struct Point {
  u64 c[3];
};

std::vector<Point> sample_points(const Surface& s, u64 seed, u32 p) {
  const int k = s.num_points();
  std::vector<Point> pts(static_cast<std::size_t>(k));
  const PointConfig& cfg = s.config();
  if (s.kind() == SurfaceKind::BlowupP2 && cfg.kind == PointConfig::Kind::Explicit) {
    for (int i = 0; i < k; ++i) {
      const auto& q = cfg.points[static_cast<std::size_t>(i)];
      pts[static_cast<std::size_t>(i)] = {{q.x % p, q.y % p, q.z % p}};
      const auto& c = pts[static_cast<std::size_t>(i)].c;
      if (c[0] == 0 && c[1] == 0 && c[2] == 0)
        throw std::invalid_argument("explicit point " + std::to_string(i + 1) + " vanishes modulo the oracle prime");
    }
    return pts;
  }
  std::mt19937_64 rng(seed);
  auto draw = [&] { return rng() % p; };
  const bool collinear = s.kind() == SurfaceKind::BlowupP2 && cfg.kind == PointConfig::Kind::Collinear;
  const u64 slope = draw(), offset = draw();
  for (int i = 0; i < k; ++i) {
    const u64 x = draw();
    const u64 y = draw();
    if (collinear && cfg.in_collinear_set(i + 1))
      pts[static_cast<std::size_t>(i)] = {{x, (slope * x + offset) % p, 1}};
    else
      pts[static_cast<std::size_t>(i)] = {{x, y, 1}};
  }
  return pts;
}

struct Binomials {
  std::vector<std::vector<u64>> c;
  Binomials(int n, u32 p) : c(static_cast<std::size_t>(n + 1)) {
    for (int i = 0; i <= n; ++i) {
      c[static_cast<std::size_t>(i)].assign(static_cast<std::size_t>(i + 1), 1);
      for (int j = 1; j < i; ++j)
        c[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
            (c[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] +
             c[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)]) % p;
    }
  }
  u64 operator()(int n, int k) const {
    return k < 0 || k > n ? 0 : c[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
  }
};

u64 nullity(int d, const std::vector<int>& mult, const std::vector<Point>& pts, u32 p,
            const simd::ModKernels& kern) {
  std::vector<std::array<int, 3>> monomials;
  for (int a = d; a >= 0; --a)
    for (int b = d - a; b >= 0; --b) monomials.push_back({a, b, d - a - b});
  const std::size_t cols = monomials.size();

  std::size_t rows = 0;
  for (int m : mult) rows += static_cast<std::size_t>(m) * static_cast<std::size_t>(m + 1) / 2;
  if (rows == 0) return cols;

  const Binomials binom(d, p);
  std::vector<u32> mat(rows * cols);
  std::size_t row = 0;
  for (std::size_t i = 0; i < mult.size(); ++i) {
    const int m = mult[i];
    if (m == 0) continue;
    const Point& P = pts[i];
    const int chart = P.c[2] ? 2 : (P.c[1] ? 1 : 0);
    const int u = chart == 0 ? 1 : 0;
    const int v = chart == 2 ? 1 : 2;
    const u64 inv = pow_mod(P.c[chart], p - 2, p);
    const u64 pu = P.c[u] * inv % p, pv = P.c[v] * inv % p;
    std::vector<u64> pow_u(static_cast<std::size_t>(d + 1)), pow_v(static_cast<std::size_t>(d + 1));
    pow_u[0] = pow_v[0] = 1;
    for (int j = 1; j <= d; ++j) {
      pow_u[static_cast<std::size_t>(j)] = pow_u[static_cast<std::size_t>(j - 1)] * pu % p;
      pow_v[static_cast<std::size_t>(j)] = pow_v[static_cast<std::size_t>(j - 1)] * pv % p;
    }
    for (int s = 0; s < m; ++s)
      for (int t = 0; s + t < m; ++t, ++row)
        for (std::size_t c = 0; c < cols; ++c) {
          const int eu = monomials[c][static_cast<std::size_t>(u)];
          const int ev = monomials[c][static_cast<std::size_t>(v)];
          if (eu < s || ev < t) continue;
          const u64 val = binom(eu, s) * binom(ev, t) % p * pow_u[static_cast<std::size_t>(eu - s)] % p *
                          pow_v[static_cast<std::size_t>(ev - t)] % p;
          mat[row * cols + c] = static_cast<u32>(val);
        }
  }
  return cols - rank_mod_p(mat, rows, cols, p, kern);
}

void check_prime(u32 p, const Integer& d) {
  if (!is_prime(p)) throw std::invalid_argument("oracle modulus " + std::to_string(p) + " is not prime");
  if (p <= 1000 || Integer(p) <= d)
    throw std::invalid_argument("oracle modulus " + std::to_string(p) + " is too small (need p > max(d, 1000))");
  if (p >= (u32{1} << 31)) throw std::invalid_argument("oracle modulus must be below 2^31");
}

using CacheKey = std::tuple<std::string, std::vector<int>, int, u64, int, u32, std::string_view>;

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (u64 q = 2; q * q <= n; ++q)
    if (n % q == 0) return false;
  return true;
}

std::size_t rank_mod_p(std::vector<std::uint32_t>& m, std::size_t rows, std::size_t cols, std::uint32_t p,
                       const simd::ModKernels& kernels) {
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && m[piv * cols + c] == 0) ++piv;
    if (piv == rows) continue;
    if (piv != rank)
      std::swap_ranges(m.begin() + static_cast<std::ptrdiff_t>(piv * cols),
                       m.begin() + static_cast<std::ptrdiff_t>((piv + 1) * cols),
                       m.begin() + static_cast<std::ptrdiff_t>(rank * cols));
    u32* pr = m.data() + rank * cols;
    kernels.scale(pr + c, cols - c, static_cast<u32>(pow_mod(pr[c], p - 2, p)), p);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      u32* rr = m.data() + r * cols;
      if (rr[c] != 0) kernels.axpy(rr + c, pr + c, cols - c, p - rr[c], p);
    }
    ++rank;
  }
  return rank;
}

std::vector<Integer> interpolation_h0_trials(const Divisor& d, const OracleOptions& opts) {
  const Surface& s = d.surface();
  if (!s.is_plane_blowup())
    throw std::invalid_argument("the interpolation oracle needs a blowup of P^2, got " + s.name());
  check_prime(opts.prime, d[0]);
  if (opts.trials < 1) throw std::invalid_argument("oracle needs at least one trial");
  if (d[0] < 0) return std::vector<Integer>(static_cast<std::size_t>(opts.trials), Integer(0));
  if (d[0] > 200) throw std::invalid_argument("interpolation oracle limited to degree <= 200");
  const int deg = static_cast<int>(d[0].get_si());

  std::vector<int> mult;
  for (int i = 1; i <= s.num_points(); ++i) {
    const Integer m = multiplicity(d, i);
    mult.push_back(m <= 0 ? 0 : (m > deg + 1 ? deg + 1 : static_cast<int>(m.get_si())));
  }
  const bool expl = s.kind() == SurfaceKind::BlowupP2 && s.config().kind == PointConfig::Kind::Explicit;
  if (s.has_general_points()) std::sort(mult.begin(), mult.end(), std::greater<>());
  const int trials = expl ? 1 : opts.trials;
  const auto& kern = opts.kernels ? *opts.kernels : simd::active_kernels();

  static std::mutex mu;
  static std::map<CacheKey, std::vector<Integer>> cache;
  const std::string surface_key = s.has_general_points() ? "general:" + std::to_string(s.num_points()) : s.name();
  CacheKey key{surface_key, mult, deg, opts.seed, trials, opts.prime, kern.name};
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }

  std::vector<Integer> out;
  for (int t = 0; t < trials; ++t) {
    const auto pts = sample_points(s, opts.seed + static_cast<u64>(t), opts.prime);
    out.emplace_back(static_cast<unsigned long>(nullity(deg, mult, pts, opts.prime, kern)));
  }
  std::lock_guard lock(mu);
  cache.emplace(std::move(key), out);
  return out;
}

Integer interpolation_h0(const Divisor& d, const OracleOptions& opts) {
  const auto all = interpolation_h0_trials(d, opts);
  return *std::min_element(all.begin(), all.end());
}

CohomologyVector blowup_cohomology_oracle(const Divisor& d, const OracleOptions& opts) {
  CohomologyVector h;
  h.h0 = interpolation_h0(d, opts);
  h.h2 = interpolation_h0(canonical(d.surface()) - d, opts);
  h.h1 = h.h0 + h.h2 - chi(d);
  if (h.h1 < 0) throw std::logic_error("oracle produced negative h1 for " + to_string(d));
  return h;
}

}  // namespace rbn
