/// @file ring.hpp
/// @brief Ring homomorphisms of BC, its two proper ideals I1 = e1*BC and
///        I2 = e2*BC, the complex quotient fields BC/I1 and BC/I2,
///        multiplicative functionals, and executable counterexamples: a
///        functional kernel that is not maximal, and a proper ideal whose
///        elements are invertible with respect to the ideal's own identity.
#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "bcx/bicomplex.hpp"
#include "bcx/random.hpp"
#include "bcx/report.hpp"

namespace bcx {

/// Thrown when a construction needs a specific idempotent coordinate to be
/// nonzero and it is not.
class ZeroComponentError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The ring homomorphisms realized here. The first seven are BC -> BC;
/// quotPlus (z + jw -> z + iw) and quotMinus (z + jw -> z - iw) land in the
/// complex subring C(i) and are the quotient maps by I1 and I2.
enum class HomKind {
  identity,
  bar,      // componentwise complex conjugation of z and w
  dagger,   // j-conjugation z - jw
  star,     // composite conj(z) - j conj(w)
  zero,
  projE1,   // Z -> e1*Z
  projE2,   // Z -> e2*Z
  quotPlus,
  quotMinus,
};

constexpr std::array<HomKind, 9> allHomKinds = {
    HomKind::identity, HomKind::bar,    HomKind::dagger,   HomKind::star,     HomKind::zero,
    HomKind::projE1,   HomKind::projE2, HomKind::quotPlus, HomKind::quotMinus};

std::string homKindName(HomKind kind);

/// True for the kinds whose codomain is C(i) rather than all of BC.
constexpr bool codomainIsComplex(HomKind kind) {
  return kind == HomKind::quotPlus || kind == HomKind::quotMinus;
}

/// Apply the homomorphism. Complex-valued kinds return their value through
/// the embedding C(i) -> BC (w = 0).
Bicomplex applyHom(HomKind kind, const Bicomplex& Z);

/// Complex value of the two quotient maps: quotPlus(Z) = z + iw = z2,
/// quotMinus(Z) = z - iw = z1.
Complex applyQuotientHom(HomKind kind, const Bicomplex& Z);

/// The ideals of BC form the four-element lattice {0} < I1, I2 < BC.
enum class IdealKind { zero, I1, I2, full };

std::string idealKindName(IdealKind kind);

IdealKind kernel(HomKind kind);

/// Membership: I1 = e1*BC is exactly the elements with z2 = 0, I2 = e2*BC
/// those with z1 = 0.
bool inIdeal(const Bicomplex& Z, IdealKind ideal, const ToleranceConfig& tol = {});

/// Lattice order: does `outer` contain `inner`?
bool idealIncludes(IdealKind outer, IdealKind inner);

/// Maximal ideals of BC are exactly I1 and I2.
constexpr bool isMaximalIdealBC(IdealKind kind) {
  return kind == IdealKind::I1 || kind == IdealKind::I2;
}

/// Coset representative of Z in BC/I (I must be I1 or I2): the surviving
/// idempotent coordinate. A ring homomorphism onto C(i); zero exactly on I.
Complex quotientRep(const Bicomplex& Z, IdealKind ideal);

/// The four idempotents of BC: 0, 1, e1, e2 (all solutions of Z*Z = Z,
/// coordinatewise {0,1}).
std::array<Bicomplex, 4> ringIdempotents();

struct FieldCheckResult {
  bool is_field = false;
  /// Non-invertible nonzero element found when the quotient is not a field.
  std::optional<Bicomplex> counterexample;
  int samples_checked = 0;
  double max_residual = 0.0;  ///< worst |r * r^-1 - 1| over constructed inverses
};

/// Constructive field check of the quotient BC/I. For I1 and I2 the
/// quotient is C(i): every sampled nonzero coset gets an explicit inverse
/// coset and the product is checked against the unit. For the zero ideal
/// the quotient is BC itself, which fails at the deterministic probe e1;
/// for the full ideal the quotient is the zero ring.
FieldCheckResult quotientFieldCheck(IdealKind ideal, int samples, Rng& rng,
                                    const ToleranceConfig& tol = {});

inline bool quotientIsField(IdealKind ideal, int samples, Rng& rng,
                            const ToleranceConfig& tol = {}) {
  return quotientFieldCheck(ideal, samples, rng, tol).is_field;
}

/// A BC-valued functional on BC together with the algebra identity it is
/// expected to preserve.
struct MultFunctional {
  std::string name;
  std::function<Bicomplex(const Bicomplex&)> map;
  Bicomplex identity = Bicomplex::one();
};

struct FunctionalViolation {
  std::string law;  // "multiplicative" or "unit"
  double residual = 0.0;
};

struct FunctionalCheckResult {
  std::vector<FunctionalViolation> violations;
  int samples_checked = 0;
  bool pass() const { return violations.empty(); }
};

/// Sample-based check of Def: f(xy) = f(x) f(y) on random pairs and
/// f(identity) = 1. Violations are recorded with their residuals.
FunctionalCheckResult checkMultFunctional(const MultFunctional& f, int samples, Rng& rng,
                                          const ToleranceConfig& tol = {});

/// Executable counterexample: the identity functional on BC is nonzero and
/// multiplicative, yet its kernel {0} sits strictly inside the proper ideal
/// I1 (witness e1), so kernels of multiplicative functionals need not be
/// maximal ideals.
Report kernelNotMaximalDemo(Rng& rng, int samples = 1000, const ToleranceConfig& tol = {});

/// Executable counterexample: Z = e1*z1 in I1 (z1 != 0) has the inverse
/// W = e1*(1/z1) with respect to the ideal identity e1, i.e. Z*W = e1,
/// while Z is not invertible in BC. Throws ZeroComponentError when z1
/// vanishes and std::invalid_argument when Z is not in I1.
Report invertibleInsideIdealDemo(const Bicomplex& Z, const ToleranceConfig& tol = {});

}  // namespace bcx
