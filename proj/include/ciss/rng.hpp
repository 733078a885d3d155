#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace ciss {

// Mixes seed material into a new 64-bit seed (splitmix64 finalizer).
// Used to derive independent streams from one master seed, e.g.
// mix_seed(master, task, epoch).
std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b);
std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b, std::uint64_t c);
std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b, std::uint64_t c,
                       std::uint64_t d);

// Deterministic random source. The engine is std::mt19937_64, which the
// standard pins bit-for-bit; the draw helpers are implemented here because
// the standard <random> distributions are implementation-defined and would
// break byte-reproducibility of run outputs across toolchains.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform double in [0, 1).
  double uniform();

  // Uniform double in [lo, hi).
  double uniform(double lo, double hi);

  // Uniform integer in [lo, hi], inclusive. Requires lo <= hi.
  int uniform_int(int lo, int hi);

  // Standard normal via Box-Muller.
  double normal();

  double normal(double mean, double stddev) { return mean + stddev * normal(); }

  // In-place Fisher-Yates shuffle.
  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(
          uniform_int(0, static_cast<int>(i) - 1));
      std::swap(v[i - 1], v[j]);
    }
  }

  // k distinct indices drawn uniformly from [0, n). Requires k <= n.
  std::vector<int> sample_indices(int n, int k);

 private:
  std::mt19937_64 engine_;
};

}  // namespace ciss
