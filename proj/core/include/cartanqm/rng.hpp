#pragma once

#include <cstdint>
#include <string>

namespace cartanqm {

/// Counter-based RNG spec: the same (seed, algorithm) pair always yields a
/// bit-identical sample stream, independent of threading or call order,
/// because every stream is a pure function of (seed, stream id, counter).
struct RngSpec {
  std::uint64_t seed = 0;
  std::string algorithm = "splitmix64-ctr/v1";
};

namespace detail {

inline std::uint64_t mix64(std::uint64_t z) {
  z ^= z >> 30;
  z *= 0xBF58476D1CE4E5B9ULL;
  z ^= z >> 27;
  z *= 0x94D049BB133111EBULL;
  z ^= z >> 31;
  return z;
}

}  // namespace detail

/// One independent stream of the counter-based generator.
class CounterRng {
 public:
  CounterRng(std::uint64_t seed, std::uint64_t stream)
      : key_(detail::mix64(seed + 0x9E3779B97F4A7C15ULL) ^
             detail::mix64(stream + 0xD1B54A32D192ED03ULL)) {}

  explicit CounterRng(const RngSpec& spec, std::uint64_t stream = 0)
      : CounterRng(spec.seed, stream) {}

  std::uint64_t next_u64() {
    std::uint64_t x = key_ + (++counter_) * 0x9E3779B97F4A7C15ULL;
    return detail::mix64(x);
  }

  /// Uniform in [0, 1).
  double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Standard normal via Box-Muller; draws come in deterministic pairs.
  double next_gaussian() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = next_unit();
    double u2 = next_unit();
    if (u1 <= 0.0) u1 = 0x1.0p-53;
    double r = std::sqrt(-2.0 * std::log(u1));
    double theta = 6.28318530717958647692 * u2;
    spare_ = r * std::sin(theta);
    have_spare_ = true;
    return r * std::cos(theta);
  }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace cartanqm
