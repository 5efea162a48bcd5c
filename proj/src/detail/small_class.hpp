#pragma once

// Fixed-capacity int64 mirror of a divisor class for the search-heavy paths.
// Conversions refuse values whose products could overflow.

#include "rbn/lattice.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <optional>

namespace rbn::detail {

inline constexpr std::size_t kSmallCapacity = 12;
inline constexpr std::int64_t kSmallLimit = std::int64_t{1} << 24;

struct SmallClass {
  std::array<std::int64_t, kSmallCapacity> v{};
  std::uint8_t n = 0;

  std::int64_t& operator[](std::size_t i) { return v[i]; }
  std::int64_t operator[](std::size_t i) const { return v[i]; }

  friend bool operator==(const SmallClass& a, const SmallClass& b) {
    if (a.n != b.n) return false;
    for (std::size_t i = 0; i < a.n; ++i)
      if (a.v[i] != b.v[i]) return false;
    return true;
  }
};

struct SmallClassHash {
  std::size_t operator()(const SmallClass& c) const noexcept {
    std::size_t h = c.n;
    for (std::size_t i = 0; i < c.n; ++i) h = h * 1000003u ^ std::hash<std::int64_t>{}(c.v[i]);
    return h;
  }
};

inline std::optional<SmallClass> to_small(const Divisor& d) {
  if (d.size() > kSmallCapacity) return std::nullopt;
  SmallClass s;
  s.n = static_cast<std::uint8_t>(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) {
    const Integer& x = d[i];
    if (x >= kSmallLimit || x <= -kSmallLimit) return std::nullopt;
    s.v[i] = x.get_si();
  }
  return s;
}

inline Divisor from_small(const SmallClass& s, const Surface& surface) {
  std::vector<Integer> c;
  c.reserve(s.n);
  for (std::size_t i = 0; i < s.n; ++i) c.emplace_back(static_cast<long>(s.v[i]));
  return Divisor(surface, std::move(c));
}

/// Intersection form: plane blowups use (L, E_i); otherwise (E, F, E_i) on F_e.
inline std::int64_t small_intersect(const SmallClass& a, const SmallClass& b, bool plane, std::int64_t e) {
  std::int64_t r;
  std::size_t first;
  if (plane) {
    r = a[0] * b[0];
    first = 1;
  } else {
    r = a[0] * b[1] + a[1] * b[0] - e * a[0] * b[0];
    first = 2;
  }
  for (std::size_t i = first; i < a.n; ++i) r -= a[i] * b[i];
  return r;
}

/// (h0, h1, h2) of O(aE+bF) on F_e, by reducing along the fixed component E.
template <class T>
std::array<T, 3> hirzebruch_h(T e, T a, T b) {
  auto chi = [&](const T& x, const T& y) -> T { return (x + 1) * (y + 1) - e * x * (x + 1) / 2; };
  if (a <= -2) {
    auto dual = hirzebruch_h<T>(e, -2 - a, -e - 2 - b);
    return {dual[2], dual[1], dual[0]};
  }
  if (a == -1) return {T(0), T(0), T(0)};
  const T c = chi(a, b);
  if (b < 0) return {T(0), -c, T(0)};
  T x = a;
  while (x >= 1 && b < x * e) x -= 1;
  const T h0 = x == 0 ? b + 1 : chi(x, b);
  return {h0, h0 - c, T(0)};
}

/// (h0, h1, h2) of O(d) on P^2.
template <class T>
std::array<T, 3> plane_h(T d) {
  if (d >= 0) return {(d + 1) * (d + 2) / 2, T(0), T(0)};
  if (d >= -2) return {T(0), T(0), T(0)};
  return {T(0), T(0), (-d - 1) * (-d - 2) / 2};
}

}  // namespace rbn::detail
