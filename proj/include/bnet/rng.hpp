#ifndef BNET_RNG_HPP
#define BNET_RNG_HPP

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "bnet/error.hpp"

namespace bnet {

// splitmix64 finalizer; used to derive independent substream seeds.
inline std::uint64_t mix64(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

// Stream-splitting rule for sampling: every (block, stream) pair gets its own
// generator seed. Blocks are fixed-size row ranges, streams are per-variable
// sampling slots, so parallel block generation reproduces the sequential
// output bit for bit.
inline std::uint64_t derive_stream_seed(std::uint64_t master, std::uint64_t block,
                                        std::uint64_t stream) {
  return mix64(mix64(mix64(master) ^ block) ^ stream);
}

inline constexpr std::size_t kSampleBlockSize = 4096;

// Seedable, platform-independent generator. mt19937_64 output is fully
// specified by the standard; doubles are built from the top 53 bits, so the
// produced values are identical on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }

  double uniform01() {
    return static_cast<double>(gen_() >> 11) * (1.0 / 9007199254740992.0);
  }

  // Draws an index with probability proportional to probs[i].
  int categorical(std::span<const double> probs) {
    double total = 0.0;
    for (double p : probs) total += p;
    require(total > 0.0, errc::zero_mass, "categorical draw from all-zero weights");
    const double threshold = uniform01() * total;
    double cum = 0.0;
    for (std::size_t i = 0; i + 1 < probs.size(); ++i) {
      cum += probs[i];
      if (threshold < cum) return static_cast<int>(i);
    }
    return static_cast<int>(probs.size()) - 1;
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace bnet

#endif  // BNET_RNG_HPP
