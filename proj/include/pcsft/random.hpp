#pragma once

// Seeded random streams and the partitioned Monte Carlo driver.
//
// A run of N samples is split into a fixed number of partitions; partition k
// draws from the stream (seed, k) and accumulates locally. Partials are merged
// in partition order, so the result depends only on (seed, partition count) and
// never on how many threads executed the partitions.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <thread>
#include <vector>

#include "pcsft/types.hpp"

namespace pcsft {

class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed, std::uint64_t stream = 0)
      : seed_(seed), stream_(stream) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
    engine_.seed(seq);
  }

  /// Independent child stream; deterministic in (seed, stream, child).
  RandomStream substream(std::uint64_t child) const {
    return RandomStream(seed_, splitmix(stream_ ^ splitmix(child + 0x632be59bd9b4e019ULL)));
  }

  double normal() { return normal_(engine_); }
  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(engine_); }

  template <typename Scalar>
  Vector<Scalar> normal_vector(Index size) {
    Vector<Scalar> v(size);
    for (Index i = 0; i < size; ++i) v(i) = Scalar(normal());
    return v;
  }

  std::mt19937_64& engine() { return engine_; }
  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream() const { return stream_; }

 private:
  static std::uint64_t splitmix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
  }

  std::uint64_t seed_;
  std::uint64_t stream_;
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_;
};

struct MonteCarloOptions {
  std::size_t partitions = 8;
  std::size_t threads = 1;
};

/// Running mean and sum of squared deviations of an Eigen array-valued sample
/// (scalars use a 1x1 array). Merging follows Chan et al.
template <typename Scalar>
class RunningMoments {
 public:
  using Array = Eigen::Array<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

  RunningMoments() = default;
  RunningMoments(Index rows, Index cols)
      : mean_(Array::Zero(rows, cols)), m2_(Array::Zero(rows, cols)) {}

  void add(const Array& x) {
    ++count_;
    const Array delta = x - mean_;
    mean_ += delta / Scalar(count_);
    m2_ += delta * (x - mean_);
  }

  void merge(const RunningMoments& other) {
    if (other.count_ == 0) return;
    if (count_ == 0) {
      *this = other;
      return;
    }
    const Scalar na = Scalar(count_), nb = Scalar(other.count_), n = na + nb;
    const Array delta = other.mean_ - mean_;
    mean_ += delta * (nb / n);
    m2_ += other.m2_ + delta.square() * (na * nb / n);
    count_ += other.count_;
  }

  std::size_t count() const { return count_; }
  const Array& mean() const { return mean_; }

  /// Standard error of the mean, entrywise.
  Array standard_error() const {
    if (count_ < 2) return Array::Zero(mean_.rows(), mean_.cols());
    return (m2_ / Scalar(count_ - 1) / Scalar(count_)).sqrt();
  }

 private:
  std::size_t count_ = 0;
  Array mean_;
  Array m2_;
};

/// Draws `samples` values split over partitions. `body(stream)` returns one
/// sample as an array of shape rows x cols.
template <typename Scalar, typename Body>
RunningMoments<Scalar> run_partitioned(std::size_t samples, std::uint64_t seed, Index rows,
                                       Index cols, const MonteCarloOptions& opts, Body body) {
  const std::size_t parts = std::max<std::size_t>(1, opts.partitions);
  std::vector<RunningMoments<Scalar>> partials(parts, RunningMoments<Scalar>(rows, cols));

  auto run_part = [&](std::size_t k) {
    RandomStream stream = RandomStream(seed).substream(k);
    const std::size_t count = samples / parts + (k < samples % parts ? 1 : 0);
    for (std::size_t i = 0; i < count; ++i) partials[k].add(body(stream));
  };

  const std::size_t threads = std::clamp<std::size_t>(opts.threads, 1, parts);
  if (threads == 1) {
    for (std::size_t k = 0; k < parts; ++k) run_part(k);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t) {
      pool.emplace_back([&, t] {
        for (std::size_t k = t; k < parts; k += threads) run_part(k);
      });
    }
    for (auto& th : pool) th.join();
  }

  RunningMoments<Scalar> total(rows, cols);
  for (const auto& p : partials) total.merge(p);
  return total;
}

}  // namespace pcsft
