#include "rbn/lattice.hpp"

#include <algorithm>
#include <sstream>

namespace rbn {

PointConfig PointConfig::collinear_points(std::vector<int> indices) {
  std::sort(indices.begin(), indices.end());
  if (std::adjacent_find(indices.begin(), indices.end()) != indices.end())
    throw std::invalid_argument("collinear index set has repeated entries");
  if (indices.size() < 3)
    throw std::invalid_argument("a collinear set needs at least three points (two points are always collinear)");
  PointConfig c;
  c.kind = Kind::Collinear;
  c.collinear = std::move(indices);
  return c;
}

PointConfig PointConfig::explicit_points(std::vector<ProjectivePoint> pts) {
  for (const auto& p : pts)
    if (p.x == 0 && p.y == 0 && p.z == 0) throw std::invalid_argument("projective point (0,0,0) is not a point");
  PointConfig c;
  c.kind = Kind::Explicit;
  c.points = std::move(pts);
  return c;
}

bool PointConfig::in_collinear_set(int i) const {
  return kind == Kind::Collinear && std::binary_search(collinear.begin(), collinear.end(), i);
}

Surface Surface::hirzebruch(int e) {
  if (e < 0) throw std::invalid_argument("Hirzebruch surface F_e needs e >= 0, got " + std::to_string(e));
  return Surface(Model{SurfaceKind::Hirzebruch, e, 0, 8, {}});
}

Surface Surface::blowup_p2(int k, PointConfig config) {
  if (k < 1 || k > 9) throw std::invalid_argument("blowup of P^2 needs 1 <= k <= 9, got " + std::to_string(k));
  if (config.kind == PointConfig::Kind::Collinear) {
    for (int i : config.collinear)
      if (i < 1 || i > k) throw std::invalid_argument("collinear index " + std::to_string(i) + " out of range 1.." + std::to_string(k));
  }
  if (config.kind == PointConfig::Kind::Explicit && config.points.size() != static_cast<std::size_t>(k))
    throw std::invalid_argument("explicit configuration lists " + std::to_string(config.points.size()) +
                                " points, expected " + std::to_string(k));
  return Surface(Model{SurfaceKind::BlowupP2, 0, k, 9 - k, std::move(config)});
}

Surface Surface::blowup_hirzebruch(int e, int k) {
  if (e < 2) throw std::invalid_argument("blowups of F_e are modelled with e >= 2, got " + std::to_string(e));
  if (k < 1 || k > 9) throw std::invalid_argument("blowup of F_e needs 1 <= k <= 9, got " + std::to_string(k));
  return Surface(Model{SurfaceKind::BlowupHirzebruch, e, k, 8 - k, {}});
}

Surface Surface::del_pezzo(int degree) {
  if (degree < 4 || degree > 7)
    throw std::invalid_argument("del Pezzo degree must be in [4,7], got " + std::to_string(degree));
  return Surface(Model{SurfaceKind::DelPezzo, 0, 9 - degree, degree, {}});
}

int Surface::e() const {
  if (!is_ruled_over_hirzebruch()) throw std::invalid_argument(name() + " has no Hirzebruch invariant e");
  return model_->e;
}

int Surface::degree() const { return model_->degree; }

std::size_t Surface::picard_rank() const noexcept {
  switch (kind()) {
    case SurfaceKind::Hirzebruch: return 2;
    case SurfaceKind::BlowupP2:
    case SurfaceKind::DelPezzo: return static_cast<std::size_t>(model_->k) + 1;
    case SurfaceKind::BlowupHirzebruch: return static_cast<std::size_t>(model_->k) + 2;
  }
  return 0;
}

std::string Surface::basis_symbol(std::size_t i) const {
  if (i >= picard_rank()) throw std::out_of_range("basis index out of range");
  if (is_plane_blowup()) return i == 0 ? "L" : "E" + std::to_string(i);
  if (i == 0) return "E";
  if (i == 1) return "F";
  return "E" + std::to_string(i - 1);
}

std::string Surface::name() const {
  std::ostringstream os;
  switch (kind()) {
    case SurfaceKind::Hirzebruch: os << 'F' << model_->e; break;
    case SurfaceKind::BlowupHirzebruch: os << "blF" << model_->e << ":k=" << model_->k; break;
    case SurfaceKind::DelPezzo: os << "dp" << model_->degree; break;
    case SurfaceKind::BlowupP2: {
      os << "blp2:k=" << model_->k;
      const auto& c = model_->config;
      if (c.kind == PointConfig::Kind::Collinear) {
        os << ":collinear=";
        for (std::size_t i = 0; i < c.collinear.size(); ++i) os << (i ? "," : "") << c.collinear[i];
      } else if (c.kind == PointConfig::Kind::Explicit) {
        os << ":points=";
        for (std::size_t i = 0; i < c.points.size(); ++i)
          os << (i ? "/" : "") << c.points[i].x << ',' << c.points[i].y << ',' << c.points[i].z;
      }
      break;
    }
  }
  return os.str();
}

bool operator==(const Surface& a, const Surface& b) {
  if (a.model_ == b.model_) return true;
  const auto& x = *a.model_;
  const auto& y = *b.model_;
  return x.kind == y.kind && x.e == y.e && x.k == y.k && x.degree == y.degree && x.config == y.config;
}

QDivisor to_rational(const Divisor& d) {
  std::vector<Rational> c(d.coords().begin(), d.coords().end());
  return QDivisor(d.surface(), std::move(c));
}

std::optional<Divisor> to_integral(const QDivisor& q) {
  std::vector<Integer> c;
  c.reserve(q.size());
  for (const auto& x : q.coords()) {
    if (x.get_den() != 1) return std::nullopt;
    c.push_back(x.get_num());
  }
  return Divisor(q.surface(), std::move(c));
}

std::pair<Divisor, Integer> clear_denominators(const QDivisor& q) {
  Integer n = 1;
  for (const auto& x : q.coords()) n = lcm(n, Integer(x.get_den()));
  std::vector<Integer> c;
  c.reserve(q.size());
  for (const auto& x : q.coords()) c.push_back(Integer(x.get_num() * (n / x.get_den())));
  return {Divisor(q.surface(), std::move(c)), n};
}

namespace {

template <class T>
std::string format_divisor(const BasicDivisor<T>& d) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < d.size(); ++i) {
    T c = d[i];
    if (c == 0) continue;
    if (c < 0) {
      os << '-';
      c = -c;
    } else if (!first) {
      os << '+';
    }
    if (c != 1) os << c;
    os << d.surface().basis_symbol(i);
    first = false;
  }
  if (first) os << '0';
  return os.str();
}

}  // namespace

std::string to_string(const Divisor& d) { return format_divisor(d); }
std::string to_string(const QDivisor& d) { return format_divisor(d); }

Divisor basis_class(const Surface& s, std::size_t index) {
  std::vector<Integer> c(s.picard_rank());
  c.at(index) = 1;
  return Divisor(s, std::move(c));
}

Divisor hyperplane(const Surface& s) {
  if (!s.is_plane_blowup()) throw std::invalid_argument(s.name() + " has no hyperplane class L");
  return basis_class(s, 0);
}

Divisor exceptional(const Surface& s, int i) {
  if (s.kind() == SurfaceKind::Hirzebruch || i < 1 || i > s.num_points())
    throw std::invalid_argument("no exceptional class E" + std::to_string(i) + " on " + s.name());
  return basis_class(s, s.exceptional_offset() + static_cast<std::size_t>(i - 1));
}

Divisor section(const Surface& s) {
  if (!s.is_ruled_over_hirzebruch()) throw std::invalid_argument(s.name() + " has no section class E");
  return basis_class(s, 0);
}

Divisor fiber(const Surface& s) {
  if (!s.is_ruled_over_hirzebruch()) throw std::invalid_argument(s.name() + " has no fiber class F");
  return basis_class(s, 1);
}

Divisor ruling_fiber(const Surface& s) {
  if (s.is_plane_blowup()) return hyperplane(s) - exceptional(s, 1);
  return fiber(s);
}

namespace {

template <class T>
T intersect_impl(const BasicDivisor<T>& a, const BasicDivisor<T>& b) {
  a.check_same(b);
  const auto& x = a.coords();
  const auto& y = b.coords();
  const Surface& s = a.surface();
  T r = 0;
  std::size_t first_exc = 0;
  if (s.is_plane_blowup()) {
    r = x[0] * y[0];
    first_exc = 1;
  } else {
    r = x[0] * y[1] + x[1] * y[0] - s.e() * x[0] * y[0];
    first_exc = 2;
  }
  for (std::size_t i = first_exc; i < x.size(); ++i) r -= x[i] * y[i];
  return r;
}

}  // namespace

Integer intersect(const Divisor& a, const Divisor& b) { return intersect_impl(a, b); }
Rational intersect(const QDivisor& a, const QDivisor& b) { return intersect_impl(a, b); }

Divisor canonical(const Surface& s) {
  std::vector<Integer> c(s.picard_rank(), Integer(1));
  if (s.is_plane_blowup()) {
    c[0] = -3;
  } else {
    c[0] = -2;
    c[1] = -(s.e() + 2);
  }
  return Divisor(s, std::move(c));
}

Integer chi(const Divisor& d) {
  const Integer d2 = intersect(d, d);
  const Integer dk = intersect(d, canonical(d.surface()));
  return 1 + (d2 - dk) / 2;
}

Integer multiplicity(const Divisor& d, int i) {
  const Surface& s = d.surface();
  if (s.kind() == SurfaceKind::Hirzebruch || i < 1 || i > s.num_points())
    throw std::invalid_argument("no point p" + std::to_string(i) + " on " + s.name());
  return -d[s.exceptional_offset() + static_cast<std::size_t>(i - 1)];
}

std::vector<Divisor> neg_one_curves(const Surface& s) {
  if (s.kind() != SurfaceKind::DelPezzo)
    throw std::invalid_argument("(-1)-curves are only enumerated on del Pezzo surfaces, not " + s.name());
  const int k = s.num_points();
  std::vector<Divisor> out;
  for (int i = 1; i <= k; ++i) out.push_back(exceptional(s, i));
  const Divisor L = hyperplane(s);
  for (int i = 1; i <= k; ++i)
    for (int j = i + 1; j <= k; ++j) out.push_back(L - exceptional(s, i) - exceptional(s, j));
  if (k == 5) {
    Divisor conic = Integer(2) * L;
    for (int i = 1; i <= k; ++i) conic -= exceptional(s, i);
    out.push_back(conic);
  }
  return out;
}

std::vector<Divisor> nef_test_curves(const Surface& s) {
  switch (s.kind()) {
    case SurfaceKind::Hirzebruch: return {section(s), fiber(s)};
    case SurfaceKind::DelPezzo: return neg_one_curves(s);
    default: throw std::invalid_argument("nef testing is not supported on " + s.name());
  }
}

bool is_nef(const Divisor& d) {
  for (const auto& c : nef_test_curves(d.surface()))
    if (intersect(d, c) < 0) return false;
  return true;
}

bool is_nef(const QDivisor& d) {
  for (const auto& c : nef_test_curves(d.surface()))
    if (intersect(d, to_rational(c)) < 0) return false;
  return true;
}

bool is_effective_hirzebruch(const Divisor& d) {
  if (d.surface().kind() != SurfaceKind::Hirzebruch)
    throw std::invalid_argument("effectivity criterion applies to Hirzebruch surfaces only");
  return d[0] >= 0 && d[1] >= 0;
}

Divisor drop_last_point(const Divisor& d, const Surface& smaller) {
  if (smaller.picard_rank() + 1 != d.size() || smaller.is_plane_blowup() != d.surface().is_plane_blowup())
    throw std::invalid_argument("cannot drop a point from " + d.surface().name() + " to " + smaller.name());
  if (d.coords().back() != 0)
    throw std::invalid_argument("class is not orthogonal to the last exceptional curve");
  return Divisor(smaller, std::vector<Integer>(d.coords().begin(), d.coords().end() - 1));
}

Divisor add_point(const Divisor& d, const Surface& larger) {
  if (larger.picard_rank() != d.size() + 1 || larger.is_plane_blowup() != d.surface().is_plane_blowup())
    throw std::invalid_argument("cannot pull back from " + d.surface().name() + " to " + larger.name());
  auto c = d.coords();
  c.emplace_back(0);
  return Divisor(larger, std::move(c));
}

}  // namespace rbn
