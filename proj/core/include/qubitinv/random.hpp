#pragma once

// Seeded generators for test inputs. Nothing here touches a global generator:
// every draw is a pure function of an explicit seed.

#include <cstdint>
#include <random>

#include "qubitinv/bloch.hpp"

namespace qubitinv {

using Rng = std::mt19937_64;

/// Independent sub-seed for stream `stream` of `seed` (splitmix64 mixing).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

/// Re and Im independently uniform in [−1, 1].
cplx uniform_square(Rng& rng);
/// Uniform in the closed unit disk.
cplx uniform_disk(Rng& rng);

/// Every Bloch coordinate drawn with uniform_square; generic with probability 1.
BlochState random_bloch(int n, Rng& rng);

/// Trace-one matrix with entries drawn from the unit disk, diagonal shifted to
/// fix the trace. Not Hermitian.
DensityOperator random_trace_one(int n, Rng& rng);

/// Physical mixed state A A† / tr(A A†).
DensityOperator random_hermitian_density(int n, Rng& rng);

}  // namespace qubitinv
