#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace cdo {

// SplitMix64 finalizer, used to derive independent sub-seeds from
// (seed, component, attempt, ...) tuples.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b) {
  return splitmix64(a ^ splitmix64(b));
}

inline std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b, std::uint64_t c) {
  return splitmix64(mix_seed(a, b) ^ splitmix64(c + 0x632be59bd9b4e019ULL));
}

// Deterministic RNG. All draws go through raw mt19937_64 output so results
// are identical across standard libraries (std distributions are not).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }

  // Uniform in [0, 1), 53-bit mantissa.
  double next_double() { return static_cast<double>(gen_() >> 11) * (1.0 / 9007199254740992.0); }

  // Uniform in [0, n). Modulo bias is irrelevant at the scales used here.
  std::uint64_t next_below(std::uint64_t n) { return gen_() % n; }

  std::int64_t next_in(std::int64_t lo, std::int64_t hi) {  // inclusive bounds
    return lo + static_cast<std::int64_t>(next_below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  bool bernoulli(double p) { return next_double() < p; }

  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::swap(v[i - 1], v[next_below(i)]);
    }
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace cdo
