#include "bcx/random.hpp"

namespace bcx {

Complex randomComplex(Rng& rng) {
  std::normal_distribution<double> n01(0.0, 1.0);
  const double re = n01(rng);
  const double im = n01(rng);
  return {re, im};
}

Bicomplex randomBicomplex(Rng& rng) {
  const Complex z = randomComplex(rng);
  const Complex w = randomComplex(rng);
  return {z, w};
}

Bicomplex randomInvertibleBicomplex(Rng& rng, const ToleranceConfig& tol) {
  for (;;) {
    Bicomplex Z = randomBicomplex(rng);
    if (isInvertible(Z, tol)) return Z;
  }
}

Bicomplex randomZeroDivisor(Rng& rng, Side side) {
  Complex lambda = randomComplex(rng);
  while (std::abs(lambda) < 1e-6) lambda = randomComplex(rng);
  // lambda*(1+ij) = e1*(2 lambda), lambda*(1-ij) = e2*(2 lambda)
  return side == Side::e1 ? Bicomplex::fromIdempotent(2.0 * lambda, 0.0)
                          : Bicomplex::fromIdempotent(0.0, 2.0 * lambda);
}

Complex randomComplexInBox(Rng& rng, double extent) {
  std::uniform_real_distribution<double> u(-extent, extent);
  const double re = u(rng);
  const double im = u(rng);
  return {re, im};
}

}  // namespace bcx
