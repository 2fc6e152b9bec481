#pragma once

#include <cstdint>

namespace fjlimit {

// Counter-based uniform generator: a Weyl sequence fed through a 64-bit
// finalizer (SplitMix-style). Output depends only on (key, counter), so
// streams split per replication are reproducible regardless of scheduling
// order, and counters can be skipped without generating the draws between.
class SplitRng {
 public:
  explicit SplitRng(std::uint64_t key) : key_(key) {}

  // Child stream for replication `index` under master seed `master`.
  static SplitRng stream(std::uint64_t master, std::uint64_t index) {
    return SplitRng(mix(mix(master) ^ mix(index + 0x632BE59BD9B4E019ull)));
  }

  std::uint64_t next_u64() { return at(counter_++); }

  // Uniform draw in the open interval (0, 1); never 0 or 1, so inverse-CDF
  // samplers need no edge guards.
  double next_uniform() {
    return (static_cast<double>(next_u64() >> 12) + 0.5) * 0x1p-52;
  }

  // Random access: value of the `counter`-th draw of this stream.
  std::uint64_t at(std::uint64_t counter) const {
    return mix(key_ + (counter + 1) * 0x9E3779B97F4A7C15ull);
  }

  void skip(std::uint64_t n) { counter_ += n; }
  std::uint64_t counter() const { return counter_; }

 private:
  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace fjlimit
