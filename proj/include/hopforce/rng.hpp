#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

namespace hopforce {

using Rng = std::mt19937_64;

std::uint64_t splitmix64(std::uint64_t& state);

// Independent stream for (master_seed, stream_index); trial i of an
// experiment always uses stream i, whatever worker runs it.
Rng make_stream(std::uint64_t master_seed, std::uint64_t stream_index);

// Uniform integer in [0, bound).
inline std::size_t uniform_index(Rng& rng, std::size_t bound) {
  return std::uniform_int_distribution<std::size_t>(0, bound - 1)(rng);
}

}  // namespace hopforce
