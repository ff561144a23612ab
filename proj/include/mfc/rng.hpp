#pragma once

#include <array>
#include <cstdint>

// Counter-based random numbers (Philox4x32-10, Salmon et al. SC'11).
// Every draw is addressed absolutely by (key, stream, counter), so results do
// not depend on evaluation order or thread count, and the same (seed, particle,
// step) triple always yields the same noise across Picard/gradient iterations.

namespace mfc::rng {

std::array<uint32_t, 4> philox4x32(uint64_t key, uint64_t stream, uint64_t ctr);

// uniform in (0,1), built from 64 of the 128 output bits
double u01(uint64_t key, uint64_t stream, uint64_t ctr);

// Box-Muller pair from one philox block
void normal_pair(uint64_t key, uint64_t stream, uint64_t ctr, double& z0, double& z1);

// idx-th standard normal of stream (block idx/2, lane idx%2)
double normal_at(uint64_t key, uint64_t stream, uint64_t idx);

// derive an unrelated key from (seed, salt); splitmix64 finalizer
uint64_t mix(uint64_t seed, uint64_t salt);

// fixed salts for the independent stream namespaces used by the library
inline constexpr uint64_t salt_initial_cloud = 0x11d5;
inline constexpr uint64_t salt_sliced_dirs = 0x51cd;
inline constexpr uint64_t salt_nplayer = 0x4e50;
inline constexpr uint64_t salt_probe = 0x9b0e;

}  // namespace mfc::rng
