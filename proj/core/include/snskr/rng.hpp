#pragma once

#include <cstdint>
#include <stdexcept>

namespace snskr {

constexpr std::uint64_t kGolden64 = 0x9E3779B97F4A7C15ull;

inline std::uint64_t mix64(std::uint64_t x) {
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

// Counter-based generator (splitmix64 over a keyed counter). Output i depends
// only on (key, counter position), so disjoint counter ranges give independent
// streams and results do not depend on chunking or thread scheduling.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t key, std::uint64_t counter = 0)
      : base_(mix64(key ^ 0xD2B74407B1CE6E93ull)), counter_(counter) {}

  // Stream for one simulated window: a fixed-size counter block per index.
  static CounterRng for_window(std::uint64_t key, std::uint64_t index,
                               std::uint64_t stride = 32) {
    return CounterRng(key, index * stride);
  }

  std::uint64_t next_u64() { return mix64(base_ + (++counter_) * kGolden64); }

  double next_double() {  // uniform in [0,1)
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

  bool bernoulli(double p) { return next_double() < p; }

  // CDF-inversion samplers; each consumes exactly one uniform, which keeps the
  // per-window draw budget bounded.
  int poisson(double mean) {
    if (mean <= 0.0) return 0;
    if (mean > 50.0) throw std::invalid_argument("poisson mean too large for inversion");
    double u = next_double();
    double p = std::exp(-mean);
    double cum = p;
    int k = 0;
    while (u > cum && k < 400) {
      ++k;
      p *= mean / k;
      cum += p;
    }
    return k;
  }

  int binomial(int n, double p) {
    if (n <= 0 || p <= 0.0) return 0;
    if (p >= 1.0) return n;
    if (p > 0.5) return n - binomial(n, 1.0 - p);
    double u = next_double();
    double q = std::pow(1.0 - p, n);
    double cum = q;
    double ratio = p / (1.0 - p);
    int k = 0;
    while (u > cum && k < n) {
      q *= static_cast<double>(n - k) / (k + 1) * ratio;
      ++k;
      cum += q;
    }
    return k;
  }

  std::uint64_t counter() const { return counter_; }

 private:
  std::uint64_t base_;
  std::uint64_t counter_;
};

// Derives an independent sub-key (e.g. per sweep point or per restart).
inline std::uint64_t derive_key(std::uint64_t key, std::uint64_t salt) {
  return mix64(key + salt * kGolden64);
}

}  // namespace snskr
