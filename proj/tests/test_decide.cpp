#include <doctest.h>

#include "rbn/decide.hpp"
#include "rbn/parse.hpp"

#include <random>

using namespace rbn;

namespace {

ChernCharacter chr(const char* spec, long r, const char* c1) {
  const Surface s = parse_surface(spec);
  return character_from_chi(r, parse_divisor(s, c1), 0);
}

}  // namespace

TEST_CASE("rank one") {
  const Surface f2 = Surface::hirzebruch(2);
  const auto fib = rank_one_wbn(fiber(f2));
  CHECK(fib.status == WBNStatus::Holds);
  CHECK(std::get<LineBundleCertificate>(fib.witness).points == 2);
  const auto k = rank_one_wbn(canonical(f2));
  CHECK(k.status == WBNStatus::Fails);
  CHECK(k.obstruction->cohomology_degree == 2);
  CHECK(k.obstruction->lower_bound == 1);
  const auto b = rank_one_wbn(parse_divisor(Surface::blowup_p2(2), "-3L"));
  CHECK(b.status == WBNStatus::Fails);
  CHECK(b.obstruction->cohomology_degree == 2);
  // conics through four collinear points contain the line: h0 = 3, chi = 2, h1 = 1
  const auto c = rank_one_wbn(parse_divisor(parse_surface("blp2:k=4:collinear=1,2,3,4"), "2L-E1-E2-E3-E4"));
  CHECK(c.status == WBNStatus::Fails);
  CHECK(c.obstruction->cohomology_degree == 1);
  const auto g = decide(chr("blp2:k=3", 1, "3L-E1-E2-E3"));
  CHECK(g.status == WBNStatus::Holds);
  CHECK(witness_is_valid(g, chr("blp2:k=3", 1, "3L-E1-E2-E3")));
}

TEST_CASE("Hirzebruch verdicts") {
  const auto sum = decide(chr("F0", 2, "-2E-2F"));
  REQUIRE(sum.status == WBNStatus::Holds);
  const auto& w = std::get<WBNWitness>(sum.witness);
  CHECK(w.sum.summands.size() == 2);
  for (const auto& d : w.sum.summands) CHECK(to_string(d) == "-E-F");
  CHECK(w.modifications == 0);

  const auto fails = decide(chr("F1", 2, "2E-F"));
  CHECK(fails.status == WBNStatus::Fails);
  CHECK(fails.obstruction->lower_bound == 1);
  CHECK(fails.obstruction->cohomology_degree == 0);
  CHECK(to_string(*fails.obstruction->curve) == "E");

  const auto empty = decide(chr("F0", 2, "-E-3F"));
  CHECK(empty.status == WBNStatus::EmptyModuli);
  CHECK(*empty.discriminant == Rational(-1, 4));

  const auto res = decide(chr("F1", 2, "0"));
  CHECK(res.status == WBNStatus::Holds);
  CHECK(std::holds_alternative<ResolutionReport>(res.witness));
  CHECK_THROWS_AS(decide(character_from_chi(2, Divisor::zero(Surface::hirzebruch(1)), 1)), std::invalid_argument);
}

TEST_CASE("negative exponent region uses the vanishing sum") {
  // F_0, (2, -E-2F): nu.E = -1 and a = l + k + r = -1
  const auto v = chr("F0", 2, "-E-2F");
  const auto verdict = decide(v);
  REQUIRE(verdict.status == WBNStatus::Holds);
  CHECK(std::holds_alternative<WBNWitness>(verdict.witness));
  CHECK(witness_is_valid(verdict, *verdict.witness_for));
}

TEST_CASE("Serre dual characters get the same verdict") {
  std::mt19937_64 rng(21);
  int n = 0;
  while (n < 200) {
    const int e = static_cast<int>(rng() % 4);
    const Surface s = Surface::hirzebruch(e);
    const long r = 2 + static_cast<long>(rng() % 3);
    const Divisor c1(s, {static_cast<long>(rng() % (8 * r)) - 4 * r, static_cast<long>(rng() % (8 * r)) - 4 * r});
    const auto v = character_from_chi(r, c1, 0);
    const auto a = decide(v), b = decide(serre_dual_character(v));
    CHECK(a.status == b.status);
    if (a.obstruction && b.obstruction) CHECK(a.obstruction->lower_bound == b.obstruction->lower_bound);
    ++n;
  }
}

TEST_CASE("Hirzebruch boundary nu.E = -1 holds") {
  for (int e = 0; e <= 3; ++e)
    for (long r = 2; r <= 4; ++r)
      for (long k = -8 * r; k <= 8 * r; ++k) {
        const long l = k * e - r;  // nu.E = -1
        const Surface s = Surface::hirzebruch(e);
        const auto v = character_from_chi(r, Divisor(s, {k, l}), 0);
        const auto [w, dual] = hirzebruch_normalize(v);
        if (dual || !bogomolov_nonempty(w)) continue;
        const auto verdict = decide(v);
        CHECK(verdict.status == WBNStatus::Holds);
      }
}

TEST_CASE("blowups of P^2") {
  const auto v = chr("blp2:k=2", 2, "2L-E1-E2");
  const auto a = decide(v);
  REQUIRE(a.status == WBNStatus::Holds);
  CHECK(std::holds_alternative<ResolutionReport>(a.witness));

  const auto col = chr("blp2:k=4:collinear=1,2,3,4", 2, "2L-2E1-2E2-2E3-2E4");
  const auto f = decide(col);
  REQUIRE(f.status == WBNStatus::Fails);
  CHECK(f.obstruction->lower_bound == 4);
  CHECK(*f.obstruction->chi_pairing == 4);
  CHECK(to_string(*f.obstruction->curve) == "L-E1-E2-E3-E4");

  const auto gen = decide(chr("blp2:k=4", 2, "2L-2E1-2E2-2E3-2E4"));
  CHECK(gen.status == WBNStatus::Unknown);

  // rounding route: (3, 4L - E1 - E2 - E3 - E4) fails the resolution inequality
  const auto rv = chr("blp2:k=6", 3, "3L-E1-E2-E3-E4-E5-E6");
  const auto rr = decide(rv);
  CHECK(rr.status != WBNStatus::Fails);
}

TEST_CASE("blowups of F_e") {
  const auto v = chr("blF2:k=2", 2, "2E+4F-E1");
  const auto a = decide(v);
  CHECK(a.status == WBNStatus::Holds);
  CHECK(witness_is_valid(a, v));
  const auto neg = decide(chr("blF2:k=2", 2, "2E+4F+E1"));
  CHECK(neg.status == WBNStatus::Unknown);
}

TEST_CASE("del Pezzo verdicts") {
  const auto v = chr("dp7", 3, "2L");
  const auto a = decide(v);
  REQUIRE(a.status == WBNStatus::Holds);
  CHECK(std::get<WBNWitness>(a.witness).modifications == 5);
  const auto b = decide(chr("dp5", 2, "3L-E1-E2-E3-E4"));
  CHECK(b.status == WBNStatus::Holds);
  const auto c = decide(chr("dp6", 2, "E1"));
  CHECK(c.status == WBNStatus::Unknown);
}

TEST_CASE("obstruction certificates") {
  const auto v = chr("F1", 2, "2E-F");
  const Surface& s = v.surface();
  const Divisor H = section(s) + Integer(2) * fiber(s);
  const auto ob = obstruction_certificate(v, section(s), H);
  REQUIRE(ob);
  CHECK(*ob->chi_pairing == twisted_chi(v, -section(s)));
  CHECK_FALSE(obstruction_certificate(chr("F1", 2, "0"), section(s), H));
  CHECK(to_string(WBNStatus::EmptyModuli) == "EmptyModuli");
}
