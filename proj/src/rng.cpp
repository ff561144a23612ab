#include "mfc/rng.hpp"

#include <cmath>

namespace mfc::rng {

namespace {

constexpr uint32_t kMul0 = 0xD2511F53u;
constexpr uint32_t kMul1 = 0xCD9E8D57u;
constexpr uint32_t kWeyl0 = 0x9E3779B9u;
constexpr uint32_t kWeyl1 = 0xBB67AE85u;

inline void round_once(uint32_t c[4], uint32_t k0, uint32_t k1) {
  const uint64_t p0 = uint64_t(kMul0) * c[0];
  const uint64_t p1 = uint64_t(kMul1) * c[2];
  const uint32_t hi0 = uint32_t(p0 >> 32), lo0 = uint32_t(p0);
  const uint32_t hi1 = uint32_t(p1 >> 32), lo1 = uint32_t(p1);
  c[0] = hi1 ^ c[1] ^ k0;
  c[1] = lo1;
  c[2] = hi0 ^ c[3] ^ k1;
  c[3] = lo0;
}

}  // namespace

std::array<uint32_t, 4> philox4x32(uint64_t key, uint64_t stream, uint64_t ctr) {
  uint32_t c[4] = {uint32_t(ctr), uint32_t(ctr >> 32), uint32_t(stream), uint32_t(stream >> 32)};
  uint32_t k0 = uint32_t(key), k1 = uint32_t(key >> 32);
  for (int r = 0; r < 10; ++r) {
    round_once(c, k0, k1);
    k0 += kWeyl0;
    k1 += kWeyl1;
  }
  return {c[0], c[1], c[2], c[3]};
}

double u01(uint64_t key, uint64_t stream, uint64_t ctr) {
  const auto o = philox4x32(key, stream, ctr);
  const uint64_t bits = (uint64_t(o[0]) << 32) | o[1];
  return (double(bits >> 11) + 0.5) * 0x1.0p-53;
}

void normal_pair(uint64_t key, uint64_t stream, uint64_t ctr, double& z0, double& z1) {
  const auto o = philox4x32(key, stream, ctr);
  const uint64_t b0 = (uint64_t(o[0]) << 32) | o[1];
  const uint64_t b1 = (uint64_t(o[2]) << 32) | o[3];
  const double u1 = (double(b0 >> 11) + 0.5) * 0x1.0p-53;
  const double u2 = (double(b1 >> 11) + 0.5) * 0x1.0p-53;
  const double rad = std::sqrt(-2.0 * std::log(u1));
  const double ang = 6.283185307179586476925286766559 * u2;
  z0 = rad * std::cos(ang);
  z1 = rad * std::sin(ang);
}

double normal_at(uint64_t key, uint64_t stream, uint64_t idx) {
  double z0, z1;
  normal_pair(key, stream, idx >> 1, z0, z1);
  return (idx & 1) ? z1 : z0;
}

uint64_t mix(uint64_t seed, uint64_t salt) {
  uint64_t z = seed + salt * 0x9E3779B97F4A7C15ull + 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

}  // namespace mfc::rng
