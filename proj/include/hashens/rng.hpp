#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

namespace hashens {

// Mixer used for all seed derivation. Engines are std::mt19937_64, whose
// output stream is fixed by the standard, and all bounded draws below avoid
// std::*_distribution, so results are identical across platforms.
constexpr uint64_t splitmix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Derives an independent child seed from (base, stream, index). Streams are
// small documented constants; see pipeline.hpp for the experiment layout.
constexpr uint64_t derive_seed(uint64_t base, uint64_t stream, uint64_t index = 0) {
  return splitmix64(splitmix64(base ^ splitmix64(stream + 1)) + index);
}

class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(seed) {}

  uint64_t next() { return engine_(); }

  // Uniform in [0, n), unbiased via rejection.
  uint64_t below(uint64_t n) {
    if (n == 0) throw std::invalid_argument("Rng::below: n must be positive");
    const uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    uint64_t r;
    do {
      r = engine_();
    } while (r >= limit);
    return r % n;
  }

  std::size_t index(std::size_t n) { return static_cast<std::size_t>(below(n)); }

  // Uniform in [0, 1) with 53 random bits.
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  // Uniform in [lo, hi); degenerate lo == hi yields exactly lo.
  double uniform(double lo, double hi) { return lo + unit() * (hi - lo); }

  bool coin() { return (engine_() & 1ULL) != 0; }

  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::swap(v[i - 1], v[static_cast<std::size_t>(below(i))]);
    }
  }

  // k distinct indices from [0, n), returned sorted ascending.
  std::vector<std::size_t> sample_without_replacement(std::size_t n, std::size_t k);

 private:
  std::mt19937_64 engine_;
};

}  // namespace hashens
