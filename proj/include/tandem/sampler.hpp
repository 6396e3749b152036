#ifndef TANDEM_SAMPLER_HPP
#define TANDEM_SAMPLER_HPP

#include <cstdint>
#include <random>

#include "tandem/steps.hpp"

namespace tandem {

// All samplers draw from a seeded std::mt19937_64; identical (dist, n, seed)
// give identical output.
using Rng = std::mt19937_64;

// z-distributed walk of length n in the upper half-plane, from the origin,
// ending on the x-axis. Cycle-lemma sampling of the y-projection, then a
// conditional choice of each face step's level.
TandemWalk sample_halfplane(const StepDistribution& dist, long n, uint64_t seed);

// z-distributed quadrant walk of length n from the origin, obtained by
// transporting a half-plane sample through the sign-reversing involution.
TandemWalk sample_quadrant(const StepDistribution& dist, long n, uint64_t seed);

// Uniform excursion of length n (p = 1, z_0 = 0 model, n divisible by 3),
// drawn backwards with exact big-integer acceptance ratios.
TandemWalk sample_excursion_p1(long n, uint64_t seed);

struct WindowedSample {
    TandemWalk walk;     // excursion of length m in [2n, 3n]
    long m = 0;
    long w2_retries = 0; // restarts of the bridging walk
    long rejections = 0; // density-correction rejections
};

// Almost-linear excursion sampler: n-twisted construction plus the g/g0
// density correction; exact n-twisted property, asymptotically z-distributed.
WindowedSample sample_excursion_windowed(const StepDistribution& dist, long n, uint64_t seed);

} // namespace tandem

#endif
