#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "kanto/matrix.hpp"

namespace kanto {

// Sampling budget for the semi-infinite condition "H(y) >= 0 for all y".
// By degree-2 homogeneity only unit vectors need to be visited.
struct SamplePlan {
  std::size_t design_points = 0;  // deterministic sphere design (n = 2, 3)
  std::size_t random_points = 0;  // seeded random unit vectors
  std::uint64_t seed = 42;
  bool include_probes = true;     // e_i + e_j and e_i - e_j
  int refine_rounds = 50;         // coordinate golden-section rounds
  double tolerance = kDefaultPsdTolerance;

  // n = 2: 4096 equispaced angles; n = 3: 100 000 Fibonacci-sphere points;
  // n >= 4: 200 000 seeded random unit vectors.
  static SamplePlan defaults(std::size_t n, std::uint64_t seed = 42);
  SamplePlan scaled(double factor) const;
  std::size_t total(std::size_t n) const;
};

// Splitmix64-based counter generator: sample k depends on (seed, k) only, so
// evaluation order never changes the drawn vectors.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed) : seed_(seed) {}
  std::uint64_t bits(std::uint64_t counter) const;
  double uniform(std::uint64_t counter) const;  // in (0, 1)
  void unit_vector(std::uint64_t index, std::span<double> out) const;

 private:
  std::uint64_t seed_;
};

// Point k of the N-point equispaced half circle (angles pi k / N).
void circle_point(std::size_t k, std::size_t count, std::span<double> out);
// Point k of the N-point Fibonacci (golden spiral) sphere.
void fibonacci_point(std::size_t k, std::size_t count, std::span<double> out);

// All (e_i + e_j)/sqrt2 and (e_i - e_j)/sqrt2 for i < j, plus every e_i.
std::vector<Vec> probe_directions(std::size_t n);

// Enumerates the unit vectors of a plan: probes first, then the design, then
// random vectors. Index order is stable.
class SphereSampler {
 public:
  SphereSampler(std::size_t n, const SamplePlan& plan);
  std::size_t size() const { return probes_.size() + design_ + random_; }
  void point(std::size_t index, std::span<double> out) const;

 private:
  std::size_t n_;
  std::vector<Vec> probes_;
  std::size_t design_;
  std::size_t random_;
  CounterRng rng_;
};

struct MinResult {
  double value = 0.0;
  std::size_t index = 0;
};

// min over [0, count) of f(index), split over hardware threads when the range
// is large. Ties go to the smaller index, so the result is independent of how
// the range is partitioned.
MinResult parallel_min(std::size_t count,
                       const std::function<double(std::size_t)>& f);

// Variant where each worker owns scratch state: make() is called once per
// worker and the returned callable is invoked for that worker's indices.
MinResult parallel_min_with_state(
    std::size_t count,
    const std::function<std::function<double(std::size_t)>()>& make);

}  // namespace kanto
