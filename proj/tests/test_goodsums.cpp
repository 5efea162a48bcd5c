#include <doctest.h>

#include "rbn/goodsums.hpp"
#include "rbn/parse.hpp"

#include <algorithm>

using namespace rbn;

namespace {

GoodSum sum_of(const char* spec, std::initializer_list<const char*> parts) {
  const Surface s = parse_surface(spec);
  GoodSum out{s, default_reference_class(s), {}};
  for (const char* p : parts) out.summands.push_back(parse_divisor(s, p));
  return out;
}

std::vector<std::string> names(const GoodSum& g) {
  std::vector<std::string> out;
  for (const auto& d : g.summands) out.push_back(to_string(d));
  std::sort(out.begin(), out.end());
  return out;
}

Integer degree_gap(const GoodSum& g) {
  Integer lo = intersect(g.N, g.summands.front()), hi = lo;
  for (const auto& d : g.summands) {
    lo = std::min(lo, intersect(g.N, d));
    hi = std::max(hi, intersect(g.N, d));
  }
  return hi - lo;
}

}  // namespace

TEST_CASE("goodness checker") {
  const auto good = sum_of("dp7", {"L-E1", "L-E2", "E1+E2"});
  CHECK(is_good_sum(good).ok());
  const auto gap = sum_of("dp7", {"2L", "0"});
  const auto rep = is_good_sum(gap);
  CHECK(rep.vanishing_ok);
  CHECK_FALSE(rep.degree_ok);
  CHECK(rep.detail.find("6 > 1") != std::string::npos);
  CHECK(is_good_sum(sum_of("dp5", {"0", "0", "0"})).ok());
  const auto bad = sum_of("dp6", {"L-2E1-2E2"});
  CHECK_FALSE(is_good_sum(bad).vanishing_ok);
  // N = 0 is nef but violates -N.(F+K) >= 2
  GoodSum weak = good;
  weak.N = Divisor::zero(weak.surface);
  CHECK_THROWS_AS(is_good_sum(weak), std::invalid_argument);
}

TEST_CASE("prioritary inequality") {
  const auto good = sum_of("dp7", {"L-E1", "L-E2", "E1+E2"});
  CHECK(prioritary_sum_check(good, ruling_fiber(good.surface)));
  const auto gap = sum_of("dp7", {"2L", "0"});
  CHECK_FALSE(prioritary_sum_check(gap, ruling_fiber(gap.surface)));
  CHECK(prioritary_sum_check(sum_of("dp4", {"3L"}), ruling_fiber(Surface::del_pezzo(4))));
}

TEST_CASE("rounding construction") {
  const Surface b2 = Surface::blowup_p2(2);
  const auto g = rounding_sum(2, parse_divisor(b2, "3L-E1"));
  CHECK(names(g) == std::vector<std::string>{"2L", "L-E1"});
  CHECK(is_good_sum(g).ok());
  const auto one = rounding_sum(1, parse_divisor(b2, "3L-E1"));
  CHECK(names(one) == std::vector<std::string>{"3L-E1"});
  const Surface b5 = Surface::blowup_p2(5);
  const auto g5 = rounding_sum(3, parse_divisor(b5, "4L-2E1-E2"));
  CHECK(g5.rank() == 3);
  std::vector<Integer> lcoef;
  for (const auto& d : g5.summands) lcoef.push_back(d[0]);
  std::sort(lcoef.begin(), lcoef.end());
  CHECK(lcoef == std::vector<Integer>{1, 1, 2});
  CHECK(is_good_sum(g5).ok());
  CHECK(to_string(g5.c1()) == "4L-2E1-E2");
  CHECK_THROWS_AS(rounding_sum(2, parse_divisor(b2, "2L+E1")), std::invalid_argument);
  // floor/ceiling bundle L - E1 - E2 - E3 - E4 has higher cohomology
  CHECK(rounding_obstacle(2, parse_divisor(Surface::blowup_p2(4), "2L-E1-E2-E3-E4")).has_value());
}

TEST_CASE("upshift lift") {
  const auto g = sum_of("dp7", {"L-E1", "L-E1"});
  const auto lifted = upshift_lift(g, 1, 2);
  CHECK(names(lifted) == std::vector<std::string>{"L-E1", "L-E2"});
  CHECK(is_good_sum(lifted).ok());
  const Divisor negK = -canonical(g.surface);
  for (std::size_t i = 0; i < g.rank(); ++i) CHECK(intersect(lifted.summands[i], negK) == intersect(g.summands[i], negK));
  // L is symmetric in E1, E2 and never chosen
  CHECK_THROWS_AS(upshift_lift(sum_of("dp7", {"L", "L"}), 1, 2), std::invalid_argument);
}

TEST_CASE("two-point summand") {
  const Surface dp7 = Surface::del_pezzo(7);
  CHECK(to_string(two_point_summand(parse_divisor(dp7, "3L-E1"), 2)) == "L+E1");
  CHECK(two_point_summand(parse_divisor(dp7, "L-E1"), 3).is_zero());
  CHECK_THROWS_AS(two_point_summand(parse_divisor(dp7, "L-E1"), 2), std::invalid_argument);
  CHECK_THROWS_AS(two_point_summand(parse_divisor(dp7, "L-E2"), 2), std::invalid_argument);
  // postconditions on a grid: degree m, D - M nef, M without higher cohomology
  const Divisor negK = -canonical(dp7);
  for (long d = 0; d <= 9; ++d)
    for (long a = 0; a <= d; ++a)
      for (long r = 1; r <= 6; ++r) {
        const Divisor D(dp7, {d, -a, 0});
        if (r == 2 && d == 1 && a == 1) continue;
        const Divisor M = two_point_summand(D, r);
        Integer m;
        mpz_fdiv_q_ui(m.get_mpz_t(), Integer(3 * d - a).get_mpz_t(), static_cast<unsigned long>(r));
        CHECK(intersect(M, negK) == m);
        CHECK(is_nef(D - M));
        CHECK(has_no_higher_cohomology(M));
      }
}

TEST_CASE("del Pezzo decompositions") {
  const Surface dp7 = Surface::del_pezzo(7);
  const auto g = delpezzo_decompose(parse_divisor(dp7, "2L"), 3);
  CHECK(is_good_sum(g).ok());
  CHECK(to_string(g.c1()) == "2L");
  const auto h = delpezzo_decompose(parse_divisor(dp7, "3L-E1"), 2);
  CHECK(names(h) == std::vector<std::string>{"2L-2E1", "L+E1"});
  for (const auto& d : h.summands) CHECK(intersect(d, -canonical(dp7)) == 4);
  const auto z = delpezzo_decompose(Divisor::zero(Surface::del_pezzo(4)), 4);
  CHECK(names(z) == std::vector<std::string>(4, "0"));
  CHECK_THROWS_AS(delpezzo_decompose(exceptional(Surface::del_pezzo(6), 1) - exceptional(Surface::del_pezzo(6), 2), 2),
                  std::invalid_argument);
  DecomposeTrace trace;
  const auto big = delpezzo_decompose(-canonical(Surface::del_pezzo(4)) * Integer(2), 5, &trace);
  CHECK(is_good_sum(big).ok());
  CHECK(degree_gap(big) <= 1);
  CHECK_FALSE(trace.levels.empty());
  for (const auto& lvl : trace.levels) CHECK(Integer(lvl.upshift_iterations) <= lvl.iteration_bound);
}

TEST_CASE("witness bookkeeping") {
  const Surface dp7 = Surface::del_pezzo(7);
  const auto v = character_from_chi(3, parse_divisor(dp7, "2L"), 0);
  const auto w = wbn_witness(v);
  CHECK(w.modifications == 5);
  CHECK(w.target == v);
  CHECK(w.sum.character().ch2() - 5 == v.ch2());
  CHECK_THROWS_AS(wbn_witness(character_from_chi(3, parse_divisor(dp7, "2L"), 1)), std::invalid_argument);
  const auto b = character_from_chi(2, parse_divisor(Surface::blowup_p2(2), "3L-E1"), 0);
  const auto wb = wbn_witness(b);
  CHECK(wb.target == b);
  CHECK(wb.modifications == integral_chi(wb.sum.character()));
}
