#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <limits>

#include "conecosine/linalg.hpp"

namespace conecosine {

// Identifies one reproducible random stream. Identical (seed, stream_id)
// always yield the identical sample sequence, regardless of how many
// threads are running or how work is scheduled.
struct RngStream {
  std::uint64_t seed = 0;
  std::uint64_t stream_id = 0;
};

// Philox4x64-10 counter-based generator keyed by (seed, stream_id). The
// state is just a counter, so streams are cheap to create per work block.
class PhiloxEngine {
 public:
  using result_type = std::uint64_t;

  explicit PhiloxEngine(RngStream stream)
      : key_{stream.seed, stream.stream_id} {}
  PhiloxEngine(std::uint64_t seed, std::uint64_t stream_id)
      : key_{seed, stream_id} {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() {
    return std::numeric_limits<result_type>::max();
  }

  result_type operator()() {
    if (next_ == 4) {
      generate_block();
      next_ = 0;
    }
    return out_[next_++];
  }

 private:
  static void mulhilo(std::uint64_t a, std::uint64_t b, std::uint64_t& hi,
                      std::uint64_t& lo) {
    const unsigned __int128 p =
        static_cast<unsigned __int128>(a) * static_cast<unsigned __int128>(b);
    hi = static_cast<std::uint64_t>(p >> 64);
    lo = static_cast<std::uint64_t>(p);
  }

  void generate_block() {
    constexpr std::uint64_t kMul0 = 0xD2E7470EE14C6C93ULL;
    constexpr std::uint64_t kMul1 = 0xCA5A826395121157ULL;
    constexpr std::uint64_t kWeyl0 = 0x9E3779B97F4A7C15ULL;
    constexpr std::uint64_t kWeyl1 = 0xBB67AE8584CAA73BULL;

    std::array<std::uint64_t, 4> x = counter_;
    std::array<std::uint64_t, 2> k = key_;
    for (int round = 0; round < 10; ++round) {
      std::uint64_t hi0, lo0, hi1, lo1;
      mulhilo(kMul0, x[0], hi0, lo0);
      mulhilo(kMul1, x[2], hi1, lo1);
      x = {hi1 ^ x[1] ^ k[0], lo1, hi0 ^ x[3] ^ k[1], lo0};
      k[0] += kWeyl0;
      k[1] += kWeyl1;
    }
    out_ = x;
    if (++counter_[0] == 0)
      if (++counter_[1] == 0)
        if (++counter_[2] == 0) ++counter_[3];
  }

  std::array<std::uint64_t, 2> key_;
  std::array<std::uint64_t, 4> counter_{0, 0, 0, 0};
  std::array<std::uint64_t, 4> out_{};
  int next_ = 4;
};

// Uniform on (0, 1); never returns 0, so logs of draws are safe.
inline double uniform01(PhiloxEngine& eng) {
  return (static_cast<double>(eng() >> 11) + 0.5) * 0x1.0p-53;
}

// Box-Muller pair; trigonometric form keeps consumption fixed at two words.
inline void standard_normal_pair(PhiloxEngine& eng, double& a, double& b) {
  const double u = uniform01(eng);
  const double v = uniform01(eng);
  const double radius = std::sqrt(-2.0 * std::log(u));
  const double angle = 2.0 * M_PI * v;
  a = radius * std::cos(angle);
  b = radius * std::sin(angle);
}

inline double standard_normal(PhiloxEngine& eng) {
  double a, b;
  standard_normal_pair(eng, a, b);
  return a;
}

// Fills a matrix with independent N(0,1) entries, consuming draws pairwise.
inline void fill_standard_normal(Matrix& x, PhiloxEngine& eng) {
  double* data = x.data();
  const Eigen::Index size = x.size();
  Eigen::Index i = 0;
  for (; i + 1 < size; i += 2) standard_normal_pair(eng, data[i], data[i + 1]);
  if (i < size) {
    double spare;
    standard_normal_pair(eng, data[i], spare);
  }
}

// Marsaglia-Tsang gamma variate with unit rate; shape < 1 handled by the
// usual boosting step.
inline double gamma_variate(PhiloxEngine& eng, double shape) {
  if (!(shape > 0.0)) throw DomainError("gamma shape must be positive");
  if (shape < 1.0) {
    const double u = uniform01(eng);
    return gamma_variate(eng, shape + 1.0) * std::pow(u, 1.0 / shape);
  }
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    double x = standard_normal(eng);
    double v = 1.0 + c * x;
    if (v <= 0.0) continue;
    v = v * v * v;
    const double u = uniform01(eng);
    if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
    if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
  }
}

}  // namespace conecosine
