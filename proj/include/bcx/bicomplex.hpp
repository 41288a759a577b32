/// @file bicomplex.hpp
/// @brief Bicomplex and hyperbolic scalars: idempotent decomposition, the
///        three conjugations, zero-divisor classification, the D-valued
///        norm and the partial order on hyperbolic numbers.
///
/// A bicomplex number is Z = z + jw with z, w in C(i) and commuting
/// imaginary units i, j. Every Z splits uniquely over the idempotents
/// e1 = (1+ij)/2, e2 = (1-ij)/2 as Z = e1*z1 + e2*z2 with
///   z1 = z - iw,   z2 = z + iw,
/// and e1*e2 = 0, so arithmetic is componentwise in that basis. The ring
/// has zero divisors: exactly the nonzero Z with z1 = 0 or z2 = 0.
#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <utility>

namespace bcx {

using Complex = std::complex<double>;

/// Thrown by inverse() and operator/ on non-invertible operands. Carries
/// whether the operand was a zero divisor (nonzero with one vanishing
/// idempotent component) as opposed to zero itself.
class NotInvertibleError : public std::runtime_error {
 public:
  NotInvertibleError(const std::string& msg, bool zero_divisor)
      : std::runtime_error(msg), zero_divisor_(zero_divisor) {}
  bool zeroDivisor() const { return zero_divisor_; }

 private:
  bool zero_divisor_;
};

/// Numeric cutoffs. The ring theory is exact; a floating implementation
/// needs explicit meanings for "component is zero" and "eigenvalues match".
struct ToleranceConfig {
  double tau_zero = 1e-10;  ///< zero-divisor / invertibility cutoff
  double tau_eig = 1e-8;    ///< eigenvalue matching and rank decisions
  double tau_norm = 1e-12;  ///< slack in norm comparisons

  void validate() const {
    if (!(tau_zero > 0.0) || !(tau_eig > 0.0) || !(tau_norm > 0.0)) {
      throw std::invalid_argument("ToleranceConfig: tolerances must be strictly positive");
    }
  }
};

/// The two idempotent "sides" e1 and e2 of the ring.
enum class Side { e1, e2 };

inline bool isFinite(Complex c) { return std::isfinite(c.real()) && std::isfinite(c.imag()); }

/// Hyperbolic number x + ky with k*k = 1, stored in Cartesian form.
/// The idempotent components are alpha1 = x + y and alpha2 = x - y;
/// membership in the nonnegative cone D+ and the partial order <=' are
/// componentwise in that basis.
class Hyperbolic {
 public:
  Hyperbolic() = default;
  Hyperbolic(double x, double y) : x_(x), y_(y) {
    if (!std::isfinite(x) || !std::isfinite(y)) {
      throw std::invalid_argument("Hyperbolic: non-finite component");
    }
  }
  static Hyperbolic fromComponents(double alpha1, double alpha2) {
    return Hyperbolic((alpha1 + alpha2) / 2.0, (alpha1 - alpha2) / 2.0);
  }

  double x() const { return x_; }
  double y() const { return y_; }
  double alpha1() const { return x_ + y_; }
  double alpha2() const { return x_ - y_; }

  bool inDPlus(double slack = 0.0) const { return alpha1() >= -slack && alpha2() >= -slack; }
  bool isZero(double tol = 0.0) const {
    return std::abs(alpha1()) <= tol && std::abs(alpha2()) <= tol;
  }

  Hyperbolic operator+(const Hyperbolic& o) const { return {x_ + o.x_, y_ + o.y_}; }
  Hyperbolic operator-(const Hyperbolic& o) const { return {x_ - o.x_, y_ - o.y_}; }
  Hyperbolic operator-() const { return {-x_, -y_}; }
  // (x + ky)(x' + ky') = (xx' + yy') + k(xy' + yx')
  Hyperbolic operator*(const Hyperbolic& o) const {
    return {x_ * o.x_ + y_ * o.y_, x_ * o.y_ + y_ * o.x_};
  }
  Hyperbolic operator*(double s) const { return {x_ * s, y_ * s}; }

 private:
  double x_ = 0.0;
  double y_ = 0.0;
};

/// alpha <=' beta  iff  beta - alpha lies in D+ (componentwise comparison).
/// Reflexive, antisymmetric and transitive, but only partial: e1 and e2
/// are incomparable. `slack` absorbs floating rounding in derived bounds.
inline bool leqPrime(const Hyperbolic& a, const Hyperbolic& b, double slack = 0.0) {
  return (b - a).inDPlus(slack);
}

/// Bicomplex scalar. The Cartesian pair (z, w) is the stored
/// representation; idempotent components are derived on demand, which
/// keeps the two views consistent by construction.
class Bicomplex {
 public:
  Bicomplex() = default;
  Bicomplex(Complex z, Complex w) : z_(z), w_(w) {
    if (!isFinite(z) || !isFinite(w)) {
      throw std::invalid_argument("Bicomplex: non-finite component");
    }
  }
  /// Real/complex subring embedding: c viewed as c + j*0.
  Bicomplex(double re) : z_(re, 0.0) {}  // NOLINT(google-explicit-constructor)

  /// Rebuild Z = e1*z1 + e2*z2 from idempotent coordinates.
  static Bicomplex fromIdempotent(Complex z1, Complex z2) {
    const Complex i(0.0, 1.0);
    return Bicomplex((z1 + z2) / 2.0, i * (z1 - z2) / 2.0);
  }
  /// Hyperbolic subring embedding: x + ky  ->  z = x, w = iy  (k = ij).
  static Bicomplex fromHyperbolic(const Hyperbolic& a) {
    return Bicomplex(Complex(a.x(), 0.0), Complex(0.0, a.y()));
  }

  static Bicomplex zero() { return {}; }
  static Bicomplex one() { return Bicomplex(Complex(1.0, 0.0), Complex(0.0, 0.0)); }
  static Bicomplex e1() { return Bicomplex(Complex(0.5, 0.0), Complex(0.0, 0.5)); }
  static Bicomplex e2() { return Bicomplex(Complex(0.5, 0.0), Complex(0.0, -0.5)); }

  Complex z() const { return z_; }
  Complex w() const { return w_; }
  Complex z1() const { return z_ - Complex(0.0, 1.0) * w_; }
  Complex z2() const { return z_ + Complex(0.0, 1.0) * w_; }

  Bicomplex operator+(const Bicomplex& o) const { return {z_ + o.z_, w_ + o.w_}; }
  Bicomplex operator-(const Bicomplex& o) const { return {z_ - o.z_, w_ - o.w_}; }
  Bicomplex operator-() const { return {-z_, -w_}; }
  /// Cartesian product rule (z + jw)(u + jv) = (zu - wv) + j(wu + zv);
  /// equals the componentwise product (z1*u1, z2*u2) in idempotent form.
  Bicomplex operator*(const Bicomplex& o) const {
    return {z_ * o.z_ - w_ * o.w_, w_ * o.z_ + z_ * o.w_};
  }
  Bicomplex& operator+=(const Bicomplex& o) { return *this = *this + o; }
  Bicomplex& operator-=(const Bicomplex& o) { return *this = *this - o; }
  Bicomplex& operator*=(const Bicomplex& o) { return *this = *this * o; }

  bool operator==(const Bicomplex& o) const { return z_ == o.z_ && w_ == o.w_; }
  bool operator!=(const Bicomplex& o) const { return !(*this == o); }

 private:
  Complex z_;
  Complex w_;
};

/// Euclidean magnitude of Z seen as a vector in R^4.
inline double magnitude(const Bicomplex& Z) {
  return std::sqrt(std::norm(Z.z()) + std::norm(Z.w()));
}

/// Cutoff below which an idempotent component counts as zero, scaled so
/// that large elements are classified relative to their own size.
inline double zeroCutoff(const Bicomplex& Z, const ToleranceConfig& tol = {}) {
  return tol.tau_zero * std::max(1.0, magnitude(Z));
}

enum class Classification { zero, zeroDivisor, invertible };

/// Trichotomy on BC: zero, zero divisor (exactly one idempotent component
/// vanishes), or invertible (neither vanishes). Exactly one case holds for
/// every Z by construction.
inline Classification classify(const Bicomplex& Z, const ToleranceConfig& tol = {}) {
  const double cut = zeroCutoff(Z, tol);
  const bool a = std::abs(Z.z1()) <= cut;
  const bool b = std::abs(Z.z2()) <= cut;
  if (a && b) return Classification::zero;
  if (a != b) return Classification::zeroDivisor;
  return Classification::invertible;
}

inline bool isZero(const Bicomplex& Z, const ToleranceConfig& tol = {}) {
  return classify(Z, tol) == Classification::zero;
}
inline bool isZeroDivisor(const Bicomplex& Z, const ToleranceConfig& tol = {}) {
  return classify(Z, tol) == Classification::zeroDivisor;
}
inline bool isInvertible(const Bicomplex& Z, const ToleranceConfig& tol = {}) {
  return classify(Z, tol) == Classification::invertible;
}

/// The three conjugations of BC. In idempotent coordinates:
///   bar    (z, w) -> (conj z, conj w)   acts as (z1, z2) -> (conj z2, conj z1)
///   dagger (z, w) -> (z, -w)            acts as (z1, z2) -> (z2, z1)
///   star   (z, w) -> (conj z, -conj w)  acts as (z1, z2) -> (conj z1, conj z2)
/// Each is an involution and multiplicative. Note bar and dagger swap the
/// idempotents e1 <-> e2 while star fixes them.
enum class Conj { bar = 1, dagger = 2, star = 3 };

inline Bicomplex conjugate(const Bicomplex& Z, Conj kind) {
  switch (kind) {
    case Conj::bar:
      return {std::conj(Z.z()), std::conj(Z.w())};
    case Conj::dagger:
      return {Z.z(), -Z.w()};
    case Conj::star:
      return {std::conj(Z.z()), -std::conj(Z.w())};
  }
  throw std::invalid_argument("conjugate: unknown kind");
}

/// Idempotent coordinates (z1, z2) of Z.
inline std::pair<Complex, Complex> idempotentDecompose(const Bicomplex& Z) {
  return {Z.z1(), Z.z2()};
}

/// Componentwise reciprocal e1/z1 + e2/z2. Throws NotInvertibleError on
/// zero divisors (flag set) and on zero.
inline Bicomplex inverse(const Bicomplex& Z, const ToleranceConfig& tol = {}) {
  switch (classify(Z, tol)) {
    case Classification::zero:
      throw NotInvertibleError("inverse: zero has no inverse", false);
    case Classification::zeroDivisor:
      throw NotInvertibleError("inverse: zero divisor (one idempotent component vanishes)", true);
    case Classification::invertible:
      break;
  }
  return Bicomplex::fromIdempotent(1.0 / Z.z1(), 1.0 / Z.z2());
}

inline Bicomplex operator/(const Bicomplex& a, const Bicomplex& b) { return a * inverse(b); }

/// Hyperbolic-valued norm e1*|z1| + e2*|z2|. Lands in D+, vanishes only
/// at 0, and is multiplicative on scalars: |Z*U|_D = |Z|_D * |U|_D up to
/// rounding.
inline Hyperbolic normD(const Bicomplex& Z) {
  return Hyperbolic::fromComponents(std::abs(Z.z1()), std::abs(Z.z2()));
}

}  // namespace bcx
