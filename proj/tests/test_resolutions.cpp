#include <doctest.h>

#include "rbn/parse.hpp"
#include "rbn/resolutions.hpp"

#include <random>

using namespace rbn;

namespace {

std::vector<Integer> ints(std::initializer_list<long> xs) { return std::vector<Integer>(xs.begin(), xs.end()); }

ChernCharacter chr(const Surface& s, long r, const char* c1) { return character_from_chi(r, parse_divisor(s, c1), 0); }

}  // namespace

TEST_CASE("builtin collections are strong exceptional") {
  for (const char* spec : {"F0", "F1", "F2", "F3", "blp2:k=3", "blp2:k=6", "dp4", "blF3:k=2", "blF2:k=3"}) {
    const auto coll = builtin_collection(parse_surface(spec));
    CHECK(coll.bundles.back().is_zero());
    const auto bad = verify_strong_exceptional(coll);
    CHECK_MESSAGE(!bad, spec << ": " << (bad ? bad->reason : ""));
  }
}

TEST_CASE("a collection in the wrong order is rejected") {
  auto coll = builtin_collection(Surface::hirzebruch(1));
  std::swap(coll.bundles[0], coll.bundles[2]);
  const auto bad = verify_strong_exceptional(coll);
  REQUIRE(bad);
  CHECK(bad->s < bad->t);
}

TEST_CASE("worked exponents") {
  const Surface b2 = Surface::blowup_p2(2);
  const auto rep = blowup_resolution(chr(b2, 2, "2L-E1-E2"));
  CHECK(rep.exponents == ints({2, 2, 1, 1}));
  CHECK(rep.split() == 1);
  CHECK(rep.feasible);
  const auto two = blowup_resolution(chr(b2, 2, "2L-2E1-2E2"));
  CHECK(two.exponents == ints({0, 2, 2, 2}));
  CHECK(two.split() == 2);

  const auto f1 = hirzebruch_resolution(chr(Surface::hirzebruch(1), 2, "0"));
  CHECK(f1.exponents == ints({2, 2, 2}));
  const auto bf = blowup_hirzebruch_resolution(chr(Surface::blowup_hirzebruch(2, 1), 2, "2F"));
  CHECK(bf.exponents == ints({4, 4, 2, 0}));
}

TEST_CASE("hom dimensions") {
  const Surface f2 = Surface::hirzebruch(2);
  CHECK(hom_line_bundles(parse_divisor(f2, "-E-3F"), parse_divisor(f2, "-E-2F")) == 2);
  CHECK(hom_line_bundles(parse_divisor(f2, "-F"), Divisor::zero(f2)) == 2);
  CHECK(hom_line_bundles(Divisor::zero(f2), parse_divisor(f2, "-F")) == 0);
}

TEST_CASE("Hirzebruch closed form guards") {
  const Surface f0 = Surface::hirzebruch(0);
  CHECK_THROWS_AS(hirzebruch_resolution(chr(f0, 2, "-2E-2F")), std::invalid_argument);
  // nu.E < -1
  CHECK_THROWS_AS(hirzebruch_resolution(chr(Surface::hirzebruch(1), 2, "2E-F")), std::invalid_argument);
  CHECK_THROWS_AS(hirzebruch_resolution(character_from_chi(2, Divisor::zero(f0), 1)), std::invalid_argument);
}

TEST_CASE("closed forms equal the recurrences") {
  std::mt19937_64 rng(6);
  int checked = 0;
  for (int t = 0; t < 400 && checked < 150; ++t) {
    const int k = 1 + static_cast<int>(rng() % 4);
    const Surface s = Surface::blowup_p2(k);
    const long r = 2 + static_cast<long>(rng() % 4);
    std::vector<Integer> c{static_cast<long>(rng() % (6 * r))};
    for (int i = 0; i < k; ++i) c.push_back(-static_cast<long>(rng() % (2 * r)));
    const Divisor c1(s, c);
    const Rational ch2 = -Rational(r) + ratio(intersect(c1, canonical(s)), 2);
    if (Rational(ratio(intersect(c1, c1), 2) - ch2).get_den() != 1) continue;
    const ChernCharacter v(r, c1, ch2);
    if (blowup_resolution_obstacle(v)) continue;
    const auto closed = blowup_resolution(v);
    const auto solved = solve_exponents(v, closed.collection);
    CHECK(closed.exponents == solved.exponents);
    CHECK(solved.matches(v));
    ++checked;
  }
  CHECK(checked >= 100);
}

TEST_CASE("solved exponents reproduce the character even when infeasible") {
  const Surface b2 = Surface::blowup_p2(2);
  const auto v = chr(b2, 2, "-4L");
  auto coll = builtin_collection(b2);
  const auto rep = solve_exponents(v, coll);
  CHECK(rep.matches(v));
  const auto cok = resolution_cokernel(rep.collection, rep.exponents);
  CHECK(cok.r == 2);
}

TEST_CASE("prioritary hypotheses") {
  for (const char* spec : {"F0", "F2", "blp2:k=3", "blF2:k=2"}) {
    const Surface s = parse_surface(spec);
    auto coll = builtin_collection(s);
    CHECK(prioritary_hypotheses_check(coll, ruling_fiber(s)));
  }
  auto coll = builtin_collection(Surface::blowup_p2(2));
  coll.split = 0;
  CHECK_FALSE(prioritary_hypotheses_check(coll, ruling_fiber(coll.surface)));
}

TEST_CASE("obstacle messages") {
  const Surface b2 = Surface::blowup_p2(2);
  CHECK(blowup_resolution_obstacle(chr(b2, 2, "2L+E1")) == std::optional<std::string>("alpha_1 < 0"));
  CHECK(blowup_resolution_obstacle(chr(b2, 2, "L-2E1-2E2")).has_value());
  CHECK(blowup_resolution_obstacle(chr(b2, 2, "4L-2E1")) == std::nullopt);
  const Surface bf = Surface::blowup_hirzebruch(2, 1);
  CHECK(blowup_hirzebruch_resolution_obstacle(chr(bf, 2, "2E+2F+E1")).has_value());
}
