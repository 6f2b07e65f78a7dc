#pragma once

#include <array>
#include <cstdint>

namespace mixlab::rng {

// Counter-based generator (Philox4x32-10). Every draw is a pure function of
// (key, stream, index), so variates can be produced in any order, on any
// thread, with identical results.
std::array<std::uint32_t, 4> philox4x32(std::array<std::uint32_t, 4> counter,
                                        std::array<std::uint32_t, 2> key);

// One 64-bit word from the Philox block at (key, stream, index).
std::uint64_t random_bits(std::uint64_t key, std::uint64_t stream, std::uint64_t index);

std::uint64_t splitmix64(std::uint64_t state);

// Replicate/sweep seed derivation: a fixed 64-bit hash of (base, index).
// Extending a run with more indices never reshuffles earlier ones.
std::uint64_t mix_seed(std::uint64_t base_seed, std::uint64_t sequence_index);

// Map 64 random bits to the open interval (0, 1); never returns 0 or 1.
double uniform_open01(std::uint64_t bits);

// Inverse standard-normal CDF (Wichura's AS241 rational approximation,
// accurate to ~1e-15). Used as the deterministic uniform-to-normal
// transform so generated datasets are stable across platforms.
double inverse_normal_cdf(double p);

// Standard normal variate at (key, stream, index): inverse CDF of the
// Philox uniform.
double standard_normal(std::uint64_t key, std::uint64_t stream, std::uint64_t index);

}  // namespace mixlab::rng
