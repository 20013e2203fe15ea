#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <unordered_set>
#include <vector>

namespace phl {

/// Counter-based SplitMix64.
///
/// Draw number i (1-based) of a stream keyed by `key` is
/// `mix(key + i * 0x9E3779B97F4A7C15)`, where `mix` is the SplitMix64
/// finalizer. The whole stream is a pure function of the key, so any
/// experiment can be replayed in another language from (key, counter).
///
/// Derived primitives are also fixed here rather than delegated to
/// <random> distributions, whose algorithms are implementation-defined:
///  - below(b): Lemire's multiply-shift with rejection,
///  - uniform01(): top 53 bits scaled by 2^-53,
///  - coin(): lowest bit of one draw.
class CounterRng {
 public:
  using result_type = std::uint64_t;

  static constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;

  explicit CounterRng(std::uint64_t key) : key_(key) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  static constexpr std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  result_type operator()() {
    ++counter_;
    return mix(key_ + counter_ * kGamma);
  }

  /// Uniform integer in [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound) {
    __uint128_t product = static_cast<__uint128_t>((*this)()) * bound;
    auto low = static_cast<std::uint64_t>(product);
    if (low < bound) {
      const std::uint64_t threshold = (0 - bound) % bound;
      while (low < threshold) {
        product = static_cast<__uint128_t>((*this)()) * bound;
        low = static_cast<std::uint64_t>(product);
      }
    }
    return static_cast<std::uint64_t>(product >> 64);
  }

  double uniform01() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) { return uniform01() < p; }

  bool coin() { return ((*this)() & 1U) != 0; }

  std::uint64_t key() const { return key_; }
  std::uint64_t counter() const { return counter_; }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

/// Child key for an independent stream, e.g. derive_seed(master, m, trial).
inline std::uint64_t derive_seed(std::uint64_t parent, std::uint64_t a, std::uint64_t b = 0) {
  std::uint64_t h = CounterRng::mix(parent + CounterRng::kGamma);
  h = CounterRng::mix(h ^ (a + 0xD1B54A32D192ED03ULL));
  h = CounterRng::mix(h ^ (b + 0x8CB92BA72F3D8DD7ULL));
  return h;
}

/// Floyd's algorithm: `count` distinct values from [0, population), returned
/// sorted. Consumes exactly `count` draws, independent of container order.
inline std::vector<std::uint64_t> floyd_sample(CounterRng& rng, std::uint64_t population,
                                               std::uint64_t count) {
  std::unordered_set<std::uint64_t> chosen;
  chosen.reserve(static_cast<std::size_t>(count) * 2);
  for (std::uint64_t j = population - count; j < population; ++j) {
    const std::uint64_t t = rng.below(j + 1);
    if (!chosen.insert(t).second) chosen.insert(j);
  }
  std::vector<std::uint64_t> out(chosen.begin(), chosen.end());
  std::sort(out.begin(), out.end());
  return out;
}

/// Fisher-Yates with `below`, walking from the back.
template <class T>
void shuffle(std::vector<T>& items, CounterRng& rng) {
  for (std::size_t i = items.size(); i > 1; --i) {
    const auto j = static_cast<std::size_t>(rng.below(i));
    std::swap(items[i - 1], items[j]);
  }
}

}  // namespace phl
