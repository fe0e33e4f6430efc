#include "kanto/sampling.hpp"

#include <algorithm>
#include <limits>
#include <cmath>
#include <numbers>
#include <thread>

namespace kanto {

SamplePlan SamplePlan::defaults(std::size_t n, std::uint64_t seed) {
  SamplePlan p;
  p.seed = seed;
  if (n <= 2) {
    p.design_points = 4096;
  } else if (n == 3) {
    p.design_points = 100000;
  } else {
    p.random_points = 200000;
  }
  return p;
}

SamplePlan SamplePlan::scaled(double factor) const {
  SamplePlan p = *this;
  p.design_points = static_cast<std::size_t>(std::llround(design_points * factor));
  p.random_points = static_cast<std::size_t>(std::llround(random_points * factor));
  return p;
}

std::size_t SamplePlan::total(std::size_t n) const {
  return (include_probes ? probe_directions(n).size() : 0) + design_points +
         random_points;
}

std::uint64_t CounterRng::bits(std::uint64_t counter) const {
  std::uint64_t z = seed_ + (counter + 1) * 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

double CounterRng::uniform(std::uint64_t counter) const {
  return (static_cast<double>(bits(counter) >> 11) + 0.5) * 0x1.0p-53;
}

void CounterRng::unit_vector(std::uint64_t index, std::span<double> out) const {
  const std::size_t n = out.size();
  const std::uint64_t base = index * static_cast<std::uint64_t>(n + 1);
  for (;;) {
    double norm2 = 0.0;
    for (std::size_t i = 0; i < n; i += 2) {
      // Box-Muller pair.
      const double u1 = uniform(base + i);
      const double u2 = uniform(base + i + 1);
      const double r = std::sqrt(-2.0 * std::log(u1));
      out[i] = r * std::cos(2.0 * std::numbers::pi * u2);
      if (i + 1 < n) out[i + 1] = r * std::sin(2.0 * std::numbers::pi * u2);
    }
    for (double v : out) norm2 += v * v;
    if (norm2 > 1e-24) {
      const double inv = 1.0 / std::sqrt(norm2);
      for (double& v : out) v *= inv;
      return;
    }
  }
}

void circle_point(std::size_t k, std::size_t count, std::span<double> out) {
  const double t = std::numbers::pi * static_cast<double>(k) /
                   static_cast<double>(count);
  out[0] = std::cos(t);
  out[1] = std::sin(t);
}

void fibonacci_point(std::size_t k, std::size_t count, std::span<double> out) {
  static const double kGoldenAngle = std::numbers::pi * (3.0 - std::sqrt(5.0));
  const double z = 1.0 - (2.0 * static_cast<double>(k) + 1.0) /
                             static_cast<double>(count);
  const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
  const double phi = kGoldenAngle * static_cast<double>(k);
  out[0] = r * std::cos(phi);
  out[1] = r * std::sin(phi);
  out[2] = z;
}

std::vector<Vec> probe_directions(std::size_t n) {
  std::vector<Vec> out;
  const double s = 1.0 / std::sqrt(2.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      Vec plus(n, 0.0), minus(n, 0.0);
      plus[i] = s;
      plus[j] = s;
      minus[i] = s;
      minus[j] = -s;
      out.push_back(std::move(plus));
      out.push_back(std::move(minus));
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    Vec e(n, 0.0);
    e[i] = 1.0;
    out.push_back(std::move(e));
  }
  return out;
}

SphereSampler::SphereSampler(std::size_t n, const SamplePlan& plan)
    : n_(n),
      probes_(plan.include_probes ? probe_directions(n) : std::vector<Vec>{}),
      design_(n == 2 || n == 3 ? plan.design_points : 0),
      random_(plan.random_points + (n == 2 || n == 3 ? 0 : plan.design_points)),
      rng_(plan.seed) {}

void SphereSampler::point(std::size_t index, std::span<double> out) const {
  if (index < probes_.size()) {
    std::copy(probes_[index].begin(), probes_[index].end(), out.begin());
    return;
  }
  index -= probes_.size();
  if (index < design_) {
    if (n_ == 2) {
      circle_point(index, design_, out);
    } else {
      fibonacci_point(index, design_, out);
    }
    return;
  }
  index -= design_;
  if (n_ == 1) {
    out[0] = 1.0;
    return;
  }
  rng_.unit_vector(index, out);
}

namespace {

constexpr std::size_t kParallelThreshold = 1 << 15;

MinResult combine(MinResult a, MinResult b) {
  if (b.value < a.value || (b.value == a.value && b.index < a.index)) return b;
  return a;
}

}  // namespace

MinResult parallel_min_with_state(
    std::size_t count,
    const std::function<std::function<double(std::size_t)>()>& make) {
  MinResult best{std::numeric_limits<double>::infinity(), 0};
  if (count == 0) return best;
  const std::size_t hw = std::max(1u, std::thread::hardware_concurrency());
  const std::size_t workers =
      count < kParallelThreshold ? 1 : std::min<std::size_t>(hw, 64);

  auto run = [&](std::size_t lo, std::size_t hi) {
    auto f = make();
    MinResult local{std::numeric_limits<double>::infinity(), lo};
    for (std::size_t i = lo; i < hi; ++i) {
      const double v = f(i);
      // NaN never wins; a NaN-only range keeps +inf.
      if (v < local.value) local = {v, i};
    }
    return local;
  };

  if (workers == 1) return run(0, count);

  std::vector<MinResult> partial(workers);
  std::vector<std::jthread> threads;
  const std::size_t chunk = (count + workers - 1) / workers;
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t lo = std::min(count, w * chunk);
    const std::size_t hi = std::min(count, lo + chunk);
    threads.emplace_back([&, w, lo, hi] { partial[w] = run(lo, hi); });
  }
  threads.clear();
  for (const auto& p : partial) best = combine(best, p);
  return best;
}

MinResult parallel_min(std::size_t count,
                       const std::function<double(std::size_t)>& f) {
  return parallel_min_with_state(count, [&] { return f; });
}

}  // namespace kanto
