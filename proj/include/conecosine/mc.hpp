#pragma once

#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "conecosine/errors.hpp"
#include "conecosine/linalg.hpp"
#include "conecosine/rng.hpp"

namespace conecosine {

// Result of a Monte Carlo run. std_error is the standard deviation of the
// mean, computed per real and imaginary part and combined in quadrature.
struct McEstimate {
  Complex value{0.0, 0.0};
  double std_error = 0.0;
  std::int64_t n_samples = 0;
  std::uint64_t seed = 0;
  std::int64_t n_rejected = 0;

  McEstimate scaled(Complex c) const {
    return {value * c, std_error * std::abs(c), n_samples, seed, n_rejected};
  }
};

struct McConfig {
  std::int64_t n_samples = 100000;
  std::uint64_t seed = 0;
  int workers = 0;  // 0: CONECOSINE_THREADS or hardware concurrency
  double max_reject_fraction = 1e-3;
};

inline int worker_count(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("CONECOSINE_THREADS")) {
    const int w = std::atoi(env);
    if (w > 0) return w;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

namespace detail {

struct BlockAccumulator {
  double sum_re = 0.0, sum_im = 0.0;
  double sumsq_re = 0.0, sumsq_im = 0.0;
  std::int64_t accepted = 0, rejected = 0;
};

inline constexpr std::int64_t kMcBlockSize = 8192;

}  // namespace detail

// Runs `config.n_samples` evaluations of a kernel, sharded over worker
// threads in fixed-size blocks. Block b draws from stream (seed, b) and the
// reduction walks blocks in order, so the result is bit-identical for a
// fixed seed no matter how many workers run. `factory()` builds one kernel
// per worker (a good place for scratch matrices); the kernel maps an engine
// to an optional sample value, nullopt meaning the sample was rejected.
template <class KernelFactory>
McEstimate run_mc(const McConfig& config, KernelFactory&& factory) {
  if (config.n_samples <= 0)
    throw DomainError("sample count must be positive");

  const std::int64_t block_size = detail::kMcBlockSize;
  const std::int64_t n_blocks =
      (config.n_samples + block_size - 1) / block_size;
  std::vector<detail::BlockAccumulator> blocks(
      static_cast<size_t>(n_blocks));

  std::atomic<std::int64_t> next_block{0};
  const int workers =
      static_cast<int>(std::min<std::int64_t>(worker_count(config.workers),
                                              n_blocks));

  auto work = [&](int) {
    auto kernel = factory();
    for (;;) {
      const std::int64_t b = next_block.fetch_add(1);
      if (b >= n_blocks) break;
      PhiloxEngine eng(config.seed, static_cast<std::uint64_t>(b));
      detail::BlockAccumulator acc;
      const std::int64_t begin = b * block_size;
      const std::int64_t end =
          std::min(begin + block_size, config.n_samples);
      for (std::int64_t i = begin; i < end; ++i) {
        const std::optional<Complex> sample = kernel(eng);
        if (!sample) {
          ++acc.rejected;
          continue;
        }
        const double re = sample->real();
        const double im = sample->imag();
        acc.sum_re += re;
        acc.sum_im += im;
        acc.sumsq_re += re * re;
        acc.sumsq_im += im * im;
        ++acc.accepted;
      }
      blocks[static_cast<size_t>(b)] = acc;
    }
  };

  if (workers <= 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(workers));
    for (int w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }

  // Deterministic reduction in block order.
  long double sum_re = 0.0L, sum_im = 0.0L, sumsq_re = 0.0L, sumsq_im = 0.0L;
  std::int64_t accepted = 0, rejected = 0;
  for (const auto& acc : blocks) {
    sum_re += acc.sum_re;
    sum_im += acc.sum_im;
    sumsq_re += acc.sumsq_re;
    sumsq_im += acc.sumsq_im;
    accepted += acc.accepted;
    rejected += acc.rejected;
  }

  if (rejected > config.max_reject_fraction *
                     static_cast<double>(config.n_samples))
    throw RejectionError("rejected " + std::to_string(rejected) + " of " +
                         std::to_string(config.n_samples) +
                         " samples, above the configured budget");
  if (accepted == 0) throw RejectionError("all samples rejected");

  const long double n = static_cast<long double>(accepted);
  const long double mean_re = sum_re / n;
  const long double mean_im = sum_im / n;
  long double se = 0.0L;
  if (accepted > 1) {
    const long double var_re =
        std::max(0.0L, (sumsq_re - n * mean_re * mean_re) / (n - 1.0L));
    const long double var_im =
        std::max(0.0L, (sumsq_im - n * mean_im * mean_im) / (n - 1.0L));
    se = std::sqrt((var_re + var_im) / n);
  }

  McEstimate out;
  out.value = Complex(static_cast<double>(mean_re),
                      static_cast<double>(mean_im));
  out.std_error = static_cast<double>(se);
  out.n_samples = accepted;
  out.seed = config.seed;
  out.n_rejected = rejected;
  return out;
}

}  // namespace conecosine
