#include "ciss/rng.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ciss {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

}  // namespace

std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b) {
  return splitmix64(splitmix64(a) ^ (b + 0x9e3779b97f4a7c15ull));
}

std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b, std::uint64_t c) {
  return mix_seed(mix_seed(a, b), c);
}

std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b, std::uint64_t c,
                       std::uint64_t d) {
  return mix_seed(mix_seed(a, b, c), d);
}

double Rng::uniform() {
  // 53 random bits -> [0, 1).
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double Rng::uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

int Rng::uniform_int(int lo, int hi) {
  if (lo > hi) throw std::invalid_argument("Rng::uniform_int: lo > hi");
  std::uint64_t n = static_cast<std::uint64_t>(hi) - lo + 1;
  // Fixed-point multiply; bias is O(n / 2^64), irrelevant at our scales.
  std::uint64_t r = static_cast<std::uint64_t>(
      (static_cast<unsigned __int128>(next_u64()) * n) >> 64);
  return lo + static_cast<int>(r);
}

double Rng::normal() {
  // u1 in (0, 1] so the log is finite.
  double u1 = (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
  double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) *
         std::cos(2.0 * std::numbers::pi * u2);
}

std::vector<int> Rng::sample_indices(int n, int k) {
  if (k > n) throw std::invalid_argument("Rng::sample_indices: k > n");
  std::vector<int> idx(n);
  for (int i = 0; i < n; ++i) idx[i] = i;
  // Partial Fisher-Yates: the first k slots end up a uniform k-subset.
  for (int i = 0; i < k; ++i) {
    int j = uniform_int(i, n - 1);
    std::swap(idx[i], idx[j]);
  }
  idx.resize(k);
  return idx;
}

}  // namespace ciss
