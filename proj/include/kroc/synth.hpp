#pragma once

#include <cstddef>
#include <cstdint>

#include "kroc/sample.hpp"

namespace kroc {

// Generators are deterministic functions of their arguments. Random streams
// come from std::mt19937_64, whose output sequence is fixed by the C++
// standard; shuffling is a Fisher-Yates pass using rejection-sampled bounded
// integers and normal deviates use the Box-Muller transform on 53-bit
// uniforms. No implementation-defined std distribution is involved.

struct BinormalSpec {
  std::size_t n = 0;
  double prevalence = 0.5;
  double separation = 0.0;  // mean gap, unit variance in both classes
  std::uint64_t seed = 0;
};

// n_target targets scored strictly above every complement, entries listed by
// descending score. Throws BoundsViolation unless 1 <= n_target <= n - 1.
LabeledSample gen_ideal(std::size_t n, std::size_t n_target);

// Distinct descending scores with a uniformly shuffled label sequence.
LabeledSample gen_random(std::size_t n, std::size_t n_target, std::uint64_t seed);

// Target scores ~ N(separation, 1), complement ~ N(0, 1). The target count is
// round(n * prevalence) clamped to [1, n - 1].
LabeledSample gen_binormal(const BinormalSpec& spec);

// Standard normal CDF.
double normal_cdf(double z);

}  // namespace kroc
