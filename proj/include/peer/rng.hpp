#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

namespace peer {

// 64-bit FNV-1a. Used for seed substream derivation and manifest hashing.
constexpr std::uint64_t kFnvOffset = 1469598103934665603ull;
constexpr std::uint64_t kFnvPrime = 1099511628211ull;

constexpr std::uint64_t fnv1a(std::uint64_t h, unsigned char byte) {
  return (h ^ byte) * kFnvPrime;
}

inline std::uint64_t fnv1a_bytes(std::uint64_t h, const void* data, std::size_t n) {
  const auto* p = static_cast<const unsigned char*>(data);
  for (std::size_t i = 0; i < n; ++i) h = fnv1a(h, p[i]);
  return h;
}

// All randomness flows from one root seed through named substreams, so every
// stage (split, folds, bootstrap, impute, ...) is reproducible independently
// of evaluation order or parallelism degree.
inline std::uint64_t substream(std::uint64_t root, std::string_view name,
                               std::uint64_t index = 0) {
  std::uint64_t h = fnv1a_bytes(kFnvOffset, &root, sizeof(root));
  h = fnv1a_bytes(h, name.data(), name.size());
  h = fnv1a_bytes(h, &index, sizeof(index));
  // avoid the all-zero seed corner for downstream engines
  return h == 0 ? kFnvPrime : h;
}

// mt19937_64 is fully specified by the standard; the distribution helpers are
// hand-rolled so that byte-identical streams do not depend on the standard
// library implementation.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  // [0, 1) with 53 random bits
  double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // unbiased integer in [0, n)
  std::uint64_t uniform_int(std::uint64_t n) {
    const std::uint64_t threshold = (0 - n) % n;
    for (;;) {
      std::uint64_t x = eng_();
      if (x >= threshold) return x % n;
    }
  }

  // Box-Muller without state caching
  double normal() {
    double u1 = 1.0 - uniform();  // (0, 1]
    double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
  }

  double exponential(double rate) {
    double u = 1.0 - uniform();
    return -std::log(u) / rate;
  }

  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(uniform_int(i));
      std::swap(v[i - 1], v[j]);
    }
  }

  std::vector<int> sample_with_replacement(int n, int k) {
    std::vector<int> out(static_cast<std::size_t>(k));
    for (auto& x : out) x = static_cast<int>(uniform_int(static_cast<std::uint64_t>(n)));
    return out;
  }

  // Fisher-Yates prefix; order is random as well
  std::vector<int> sample_without_replacement(int n, int k) {
    std::vector<int> idx(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) idx[static_cast<std::size_t>(i)] = i;
    for (int i = 0; i < k; ++i) {
      std::size_t j = static_cast<std::size_t>(uniform_int(static_cast<std::uint64_t>(n - i))) +
                      static_cast<std::size_t>(i);
      std::swap(idx[static_cast<std::size_t>(i)], idx[j]);
    }
    idx.resize(static_cast<std::size_t>(k));
    return idx;
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace peer
