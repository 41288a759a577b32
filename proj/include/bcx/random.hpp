/// @file random.hpp
/// @brief Seeded generators for scalars. Every randomized check in the
///        library takes an explicit engine so runs are reproducible.
#pragma once

#include <cstdint>
#include <random>

#include "bcx/bicomplex.hpp"

namespace bcx {

using Rng = std::mt19937_64;

inline Rng makeRng(std::uint64_t seed) { return Rng(seed); }

/// Standard complex Gaussian (independent N(0,1) real and imaginary parts).
Complex randomComplex(Rng& rng);

/// Entrywise Gaussian bicomplex scalar.
Bicomplex randomBicomplex(Rng& rng);

/// Gaussian scalar conditioned to be invertible (both components above the
/// zero cutoff); used where a sample must have an inverse.
Bicomplex randomInvertibleBicomplex(Rng& rng, const ToleranceConfig& tol = {});

/// Zero divisor lambda * (1 +- ij) with Gaussian lambda != 0.
Bicomplex randomZeroDivisor(Rng& rng, Side side);

/// Uniform complex in the square [-extent, extent]^2.
Complex randomComplexInBox(Rng& rng, double extent);

}  // namespace bcx
