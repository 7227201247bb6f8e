#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace depthadapt {

/// Deterministic random stream addressed by (seed, stream_id).
///
/// Identical (seed, stream_id) pairs replay the identical draw sequence;
/// distinct stream ids decorrelate. The generator is std::mt19937_64, whose
/// output sequence is fixed by the standard, and all distribution transforms
/// are implemented here rather than with std::*_distribution (those are
/// implementation-defined and would break cross-toolchain reproducibility).
///
/// An Rng is single-owner: never share one instance across threads.
class Rng {
 public:
  Rng(uint64_t seed, std::string_view stream_id);

  uint64_t seed() const { return seed_; }
  const std::string& stream_id() const { return stream_id_; }

  uint64_t next_u64();

  /// Uniform in [0, 1) with 53 random bits.
  double uniform();
  /// Uniform in [lo, hi).
  double uniform(double lo, double hi);
  /// Standard normal via Box-Muller; pairs are cached.
  double normal();
  double normal(double mean, double stddev);
  /// Uniform integer in [0, n); n must be positive. Unbiased (rejection).
  int64_t uniform_int(int64_t n);

  /// Fisher-Yates shuffle with draws from this stream.
  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (int64_t i = static_cast<int64_t>(v.size()) - 1; i > 0; --i) {
      std::swap(v[static_cast<size_t>(i)], v[static_cast<size_t>(uniform_int(i + 1))]);
    }
  }

  /// Engine + cache state as a printable string, restorable with set_state.
  std::string state() const;
  void set_state(const std::string& s);

 private:
  uint64_t seed_ = 0;
  std::string stream_id_;
  std::mt19937_64 engine_;
  bool has_spare_normal_ = false;
  double spare_normal_ = 0.0;
};

}  // namespace depthadapt
