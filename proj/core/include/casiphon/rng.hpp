#pragma once

#include <array>
#include <cstdint>

namespace casiphon {

// Philox4x32-10 counter-based generator (stateless block cipher form).
std::array<std::uint32_t, 4> philox4x32(std::array<std::uint32_t, 4> counter,
                                        std::array<std::uint32_t, 2> key);

struct GaussianPair {
  double z0;
  double z1;
};

// Two standard-normal deviates from the (seed, stream, counter) cell via
// Box-Muller over one Philox block. Pure function: any (seed, stream,
// counter) triple always yields the same pair on every platform and thread.
GaussianPair gaussian_pair(std::uint64_t seed, std::uint64_t stream,
                           std::uint64_t counter);

// Uniform draw on (0,1] built from 53 bits of one Philox block half.
double uniform53(std::uint64_t bits);

}  // namespace casiphon
