#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

namespace pfp {

// Deterministic uniform source. std::mt19937_64 output is specified bit for
// bit by the standard; the derived draws below deliberately avoid
// std::uniform_*_distribution, whose algorithms vary between standard
// libraries and would break cross-platform reproducibility.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform double in [0, 1) with 53-bit resolution.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  // Uniform integer in [0, n), unbiased via threshold rejection.
  std::uint64_t below(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("Rng::below: n must be positive");
    if ((n & (n - 1)) == 0) return engine_() & (n - 1);
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % n;
  }

  bool bernoulli(double p) { return uniform() < p; }

  // Standard normal, Box-Muller. Two engine draws per call.
  double normal() {
    double u1;
    do {
      u1 = uniform();
    } while (u1 == 0.0);
    const double u2 = uniform();
    constexpr double two_pi = 6.283185307179586476925286766559;
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(two_pi * u2);
  }

 private:
  std::mt19937_64 engine_;
};

// Nonnegative weights over indices 0..size()-1 with O(log n) update and
// O(log n) sampling proportional to weight (Fenwick tree over partial sums).
class WeightedPicker {
 public:
  explicit WeightedPicker(std::size_t capacity = 0) { reserve(capacity); }

  void reserve(std::size_t capacity) {
    weights_.reserve(capacity);
    if (tree_.size() < capacity + 1) rebuild(capacity);
  }

  std::size_t size() const { return weights_.size(); }
  double total() const { return total_; }
  double weight(std::size_t i) const { return weights_.at(i); }

  void push_back(double w) {
    if (w < 0) throw std::invalid_argument("WeightedPicker: negative weight");
    weights_.push_back(0.0);
    if (weights_.size() + 1 > tree_.size()) rebuild(2 * weights_.size());
    set(weights_.size() - 1, w);
  }

  void set(std::size_t i, double w) {
    if (w < 0) throw std::invalid_argument("WeightedPicker: negative weight");
    add(i + 1, w - weights_.at(i));
    total_ += w - weights_[i];
    weights_[i] = w;
  }

  // Index whose cumulative-weight interval contains u, for u in [0, total()).
  // Callers should reject zero-weight results, reachable only on fp boundary.
  std::size_t locate(double u) const {
    const std::size_t n = weights_.size();
    if (n == 0 || total_ <= 0)
      throw std::logic_error("WeightedPicker: no positive weight to sample");
    std::size_t pos = 0;
    for (std::size_t step = top_; step > 0; step >>= 1) {
      const std::size_t next = pos + step;
      if (next <= n && tree_[next] <= u) {
        pos = next;
        u -= tree_[next];
      }
    }
    return pos < n ? pos : n - 1;
  }

  std::size_t sample(Rng& rng) const { return locate(rng.uniform() * total_); }

 private:
  void add(std::size_t i, double delta) {
    for (; i < tree_.size(); i += i & (~i + 1)) tree_[i] += delta;
  }

  void rebuild(std::size_t capacity) {
    tree_.assign(capacity + 1, 0.0);
    top_ = 1;
    while (top_ * 2 < tree_.size()) top_ *= 2;
    for (std::size_t i = 0; i < weights_.size(); ++i) add(i + 1, weights_[i]);
  }

  std::vector<double> tree_;  // 1-based Fenwick partial sums
  std::vector<double> weights_;
  std::size_t top_ = 1;  // largest power of two < tree_.size()
  double total_ = 0.0;
};

}  // namespace pfp
