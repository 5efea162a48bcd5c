#include "rbn/cohomology.hpp"

#include "detail/small_class.hpp"

namespace rbn {

std::string to_string(Vanishing v) {
  switch (v) {
    case Vanishing::Zero: return "Zero";
    case Vanishing::Nonzero: return "Nonzero";
    case Vanishing::Unknown: return "Unknown";
  }
  return "Unknown";
}

namespace {

void require_hirzebruch(const Divisor& d) {
  if (d.surface().kind() != SurfaceKind::Hirzebruch)
    throw std::invalid_argument("expected a class on a Hirzebruch surface, got " + d.surface().name());
}

}  // namespace

CohomologyVector hirzebruch_cohomology(const Divisor& d) {
  require_hirzebruch(d);
  const auto h = detail::hirzebruch_h<Integer>(Integer(d.surface().e()), d[0], d[1]);
  return {h[0], h[1], h[2]};
}

CohomologyVector hirzebruch_pushforward_oracle(const Divisor& d) {
  require_hirzebruch(d);
  const Integer e = d.surface().e();
  Integer a = d[0], b = d[1];
  bool dual = false;
  if (a == -1) return {};
  if (a <= -2) {
    dual = true;
    a = -2 - a;
    b = -e - 2 - b;
  }
  CohomologyVector h;
  for (Integer j = 0; j <= a; ++j) {
    const Integer deg = b - j * e;
    if (deg >= 0) h.h0 += deg + 1;
    else h.h1 += -deg - 1;
  }
  if (dual) std::swap(h.h0, h.h2);
  return h;
}

}  // namespace rbn
