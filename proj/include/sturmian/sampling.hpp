#pragma once

// Seed-controlled sampling of exact parameters for verification sweeps.
// Values are drawn directly from the raw engine output; the distribution
// adapters in <random> are not used because their output sequences are
// implementation-defined and sweeps must reproduce byte-identically
// everywhere.

#include <cstdint>
#include <random>

#include "sturmian/exact.hpp"
#include "sturmian/iet.hpp"

namespace sturmian {

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  // integer in [0, n); n > 0
  std::uint64_t pick(std::uint64_t n) { return rng_() % n; }

  // integer in [lo, hi], both ends included
  long long pick_between(long long lo, long long hi) {
    return lo + static_cast<long long>(pick(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  // quadratic irrational (a + b*sqrt(d))/c in the open interval (0, 9/10),
  // with the radicand drawn from a small set so a sweep touches several
  // distinct quadratic fields
  QuadraticReal unit_irrational() {
    static constexpr int kRadicands[] = {2, 3, 5, 7, 13};
    for (;;) {
      const int d = kRadicands[pick(5)];
      const long long a = pick_between(-9, 9);
      long long b = pick_between(1, 9);
      if (pick(2) == 1) b = -b;
      const long long c = pick_between(1, 12);
      const QuadraticReal x = QuadraticReal::make(a, b, c, d);
      if (!(QuadraticReal::from_int(0) < x)) continue;
      if (!(x < QuadraticReal::from_ratio(9, 10))) continue;
      return x;
    }
  }

  // rational in [0, 1) with denominator at most 40
  QuadraticReal unit_rational() {
    const long long q = pick_between(1, 40);
    const long long p = static_cast<long long>(pick(static_cast<std::uint64_t>(q)));
    return QuadraticReal::from_ratio(p, q);
  }

  // intercept comparable with the given slope: either rational, or an
  // element of the slope's own quadratic field (values over different
  // radicands cannot be compared exactly)
  QuadraticReal intercept_for(const QuadraticReal& slope) {
    if (!slope.is_rational() && pick(2) == 0)
      return (slope.times(pick_between(1, 5)) + unit_rational()).fract();
    return unit_rational();
  }

  // rational in (0, 1/2), for rotation gap statistics
  QuadraticReal gap_beta() {
    const long long q = pick_between(3, 40);
    const long long p = pick_between(1, (q - 1) / 2);
    return QuadraticReal::from_ratio(p, q);
  }

  // exchange parameters on [0, 1): irrational alpha below 9/10 and a small
  // positive rational beta, so alpha + beta < 1 always holds
  IETParams iet_params() {
    const QuadraticReal alpha = unit_irrational();
    const long long q = pick_between(11, 40);
    const QuadraticReal beta = QuadraticReal::from_ratio(pick_between(1, q / 10), q);
    return IETParams(alpha, beta, QuadraticReal::from_int(1), intercept_for(alpha));
  }

 private:
  std::mt19937_64 rng_;
};

} // namespace sturmian
