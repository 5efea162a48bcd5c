#pragma once

// Picard lattices of the rational surfaces handled by the library:
// Hirzebruch surfaces F_e, blowups of P^2 at k points, blowups of F_e at k
// points, and del Pezzo surfaces of degree 4..7.
//
// Bases are fixed:
//   Hirzebruch          (E, F)
//   BlowupP2 / DelPezzo (L, E_1, ..., E_k)
//   BlowupHirzebruch    (E, F, E_1, ..., E_k)
// A divisor stores its coefficients in that order, so 3L - 2E_1 on Bl_2 P^2
// is the vector (3, -2, 0).

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace rbn {

using Integer = mpz_class;
using Rational = mpq_class;

/// n/d in lowest terms.
inline Rational ratio(const Integer& n, const Integer& d) {
  Rational q(n, d);
  q.canonicalize();
  return q;
}

enum class SurfaceKind { Hirzebruch, BlowupP2, BlowupHirzebruch, DelPezzo };

struct ProjectivePoint {
  std::uint64_t x = 0, y = 0, z = 1;
  friend bool operator==(const ProjectivePoint&, const ProjectivePoint&) = default;
};

struct PointConfig {
  enum class Kind { General, Collinear, Explicit };

  Kind kind = Kind::General;
  std::vector<int> collinear;            // 1-based indices, sorted
  std::vector<ProjectivePoint> points;   // Explicit: coordinates over the oracle field

  static PointConfig general() { return {}; }
  static PointConfig collinear_points(std::vector<int> indices);
  static PointConfig explicit_points(std::vector<ProjectivePoint> pts);

  bool in_collinear_set(int i) const;

  friend bool operator==(const PointConfig&, const PointConfig&) = default;
};

/// Handle to an immutable surface model. Copies share the model.
class Surface {
 public:
  static Surface hirzebruch(int e);
  static Surface blowup_p2(int k, PointConfig config = PointConfig::general());
  static Surface blowup_hirzebruch(int e, int k);
  static Surface del_pezzo(int degree);

  SurfaceKind kind() const noexcept { return model_->kind; }
  int e() const;
  int num_points() const noexcept { return model_->k; }
  int degree() const;
  const PointConfig& config() const noexcept { return model_->config; }
  std::size_t picard_rank() const noexcept;

  bool is_plane_blowup() const noexcept {
    return kind() == SurfaceKind::BlowupP2 || kind() == SurfaceKind::DelPezzo;
  }
  bool is_ruled_over_hirzebruch() const noexcept {
    return kind() == SurfaceKind::Hirzebruch || kind() == SurfaceKind::BlowupHirzebruch;
  }
  bool has_general_points() const noexcept {
    return kind() == SurfaceKind::DelPezzo ||
           (kind() == SurfaceKind::BlowupP2 && config().kind == PointConfig::Kind::General);
  }
  /// Index of E_1 in the coordinate vector.
  std::size_t exceptional_offset() const noexcept { return is_plane_blowup() ? 1 : 2; }

  /// Basis symbol for coordinate i ("L", "E", "F", "E3", ...).
  std::string basis_symbol(std::size_t i) const;

  /// Surface spec string, e.g. "F2", "blp2:k=4:collinear=1,2,3", "blF3:k=2", "dp5".
  std::string name() const;

  friend bool operator==(const Surface& a, const Surface& b);
  friend bool operator!=(const Surface& a, const Surface& b) { return !(a == b); }

 private:
  struct Model {
    SurfaceKind kind = SurfaceKind::Hirzebruch;
    int e = 0;
    int k = 0;
    int degree = 0;
    PointConfig config;
  };
  explicit Surface(Model m) : model_(std::make_shared<const Model>(std::move(m))) {}
  std::shared_ptr<const Model> model_;
};

/// Divisor class with coefficients in the surface's fixed basis.
template <class T>
class BasicDivisor {
 public:
  BasicDivisor(Surface s, std::vector<T> coords) : surface_(std::move(s)), coords_(std::move(coords)) {
    if (coords_.size() != surface_.picard_rank())
      throw std::invalid_argument("divisor has " + std::to_string(coords_.size()) +
                                  " coordinates but the Picard rank of " + surface_.name() +
                                  " is " + std::to_string(surface_.picard_rank()));
  }

  static BasicDivisor zero(const Surface& s) { return BasicDivisor(s, std::vector<T>(s.picard_rank())); }

  const Surface& surface() const noexcept { return surface_; }
  const std::vector<T>& coords() const noexcept { return coords_; }
  const T& operator[](std::size_t i) const { return coords_.at(i); }
  std::size_t size() const noexcept { return coords_.size(); }

  bool is_zero() const {
    for (const auto& c : coords_)
      if (c != 0) return false;
    return true;
  }

  BasicDivisor& operator+=(const BasicDivisor& o) {
    check_same(o);
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
    return *this;
  }
  BasicDivisor& operator-=(const BasicDivisor& o) {
    check_same(o);
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
    return *this;
  }
  BasicDivisor& operator*=(const T& s) {
    for (auto& c : coords_) c *= s;
    return *this;
  }

  friend BasicDivisor operator+(BasicDivisor a, const BasicDivisor& b) { return a += b; }
  friend BasicDivisor operator-(BasicDivisor a, const BasicDivisor& b) { return a -= b; }
  friend BasicDivisor operator-(BasicDivisor a) {
    for (auto& c : a.coords_) c = -c;
    return a;
  }
  friend BasicDivisor operator*(const T& s, BasicDivisor a) { return a *= s; }
  friend BasicDivisor operator*(BasicDivisor a, const T& s) { return a *= s; }

  friend bool operator==(const BasicDivisor& a, const BasicDivisor& b) {
    return a.surface_ == b.surface_ && a.coords_ == b.coords_;
  }
  friend bool operator!=(const BasicDivisor& a, const BasicDivisor& b) { return !(a == b); }

  void check_same(const BasicDivisor& o) const {
    if (surface_ != o.surface_)
      throw std::invalid_argument("divisors live on different surfaces: " + surface_.name() + " vs " +
                                  o.surface_.name());
  }

 private:
  Surface surface_;
  std::vector<T> coords_;
};

using Divisor = BasicDivisor<Integer>;
using QDivisor = BasicDivisor<Rational>;

QDivisor to_rational(const Divisor& d);
/// Integral class if every coordinate is an integer.
std::optional<Divisor> to_integral(const QDivisor& q);
/// Returns (n*q, n) with n the least common denominator.
std::pair<Divisor, Integer> clear_denominators(const QDivisor& q);

/// Divisor expression in the basis symbols, e.g. "3L-2E1-E2", "2E+3F", "0".
std::string to_string(const Divisor& d);
std::string to_string(const QDivisor& d);

// Named basis classes.
Divisor basis_class(const Surface& s, std::size_t index);
Divisor hyperplane(const Surface& s);            // L
Divisor exceptional(const Surface& s, int i);    // E_i, 1-based
Divisor section(const Surface& s);               // E on F_e and its blowups
Divisor fiber(const Surface& s);                 // F on F_e and its blowups
/// Fiber class of the ruling used for prioritary sheaves: F, or L - E_1 on plane blowups.
Divisor ruling_fiber(const Surface& s);

Integer intersect(const Divisor& a, const Divisor& b);
Rational intersect(const QDivisor& a, const QDivisor& b);

Divisor canonical(const Surface& s);

/// Euler characteristic of O(D), by Riemann-Roch: 1 + (D^2 - D.K)/2.
Integer chi(const Divisor& d);

/// Multiplicity D.E_i of a plane-blowup class at p_i (the negative of the E_i coefficient).
Integer multiplicity(const Divisor& d, int i);

/// All (-1)-curves on a del Pezzo surface of degree 4..7.
std::vector<Divisor> neg_one_curves(const Surface& s);

/// Effective-cone generators dual to the nef cone: {E, F} on F_e, the (-1)-curves on del Pezzo.
std::vector<Divisor> nef_test_curves(const Surface& s);

bool is_nef(const Divisor& d);
bool is_nef(const QDivisor& d);

bool is_effective_hirzebruch(const Divisor& d);

// ---- Weyl group of a plane blowup --------------------------------------------------------

/// True for E_i - E_j (i != j) and L - E_i - E_j - E_m (distinct).
bool is_simple_root_shape(const Divisor& root);

/// Reflection s(D) = D + (D.root) root.
Divisor weyl_reflect(const Divisor& d, const Divisor& root);

/// A word of reflections; roots[0] is applied first.
struct WeylWord {
  std::vector<Divisor> roots;

  Divisor apply(Divisor d) const;
  Divisor apply_inverse(Divisor d) const;
};

/// Word w with w(C) = E_k for a (-1)-curve C on a del Pezzo surface with k >= 3.
WeylWord weyl_move_curve_to_last(const Divisor& curve);

/// Cremona/transposition reduction to the dominant chamber
/// (d >= m_1 + m_2 + m_3, m_1 >= ... >= m_k). Only for k <= 8, where the orbit is finite.
Divisor weyl_dominant(const Divisor& d, WeylWord* word = nullptr);

/// Forget the last exceptional class (the class must be orthogonal to E_k).
Divisor drop_last_point(const Divisor& d, const Surface& smaller);
/// Pull back along the blowup of one more point.
Divisor add_point(const Divisor& d, const Surface& larger);

}  // namespace rbn
