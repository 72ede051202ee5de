#include "kroc/synth.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "kroc/errors.hpp"

namespace kroc {
namespace {

void require_class_split(std::size_t n, std::size_t n_target) {
  if (n < 2 || n_target < 1 || n_target > n - 1) {
    throw BoundsViolation("need 1 <= n_target <= n - 1, got n=" + std::to_string(n) +
                          ", n_target=" + std::to_string(n_target));
  }
}

// Uniform integer in [0, bound) without modulo bias.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    const std::uint64_t r = rng();
    if (r >= threshold) return r % bound;
  }
}

// Uniform double in [0, 1) with 53 random bits.
double uniform_unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

std::vector<Label> shuffled_labels(std::size_t n, std::size_t n_target, std::mt19937_64& rng) {
  std::vector<Label> labels(n, Label::complement);
  for (std::size_t i = 0; i < n_target; ++i) labels[i] = Label::target;
  for (std::size_t i = n - 1; i > 0; --i) {
    const auto j = static_cast<std::size_t>(uniform_below(rng, i + 1));
    std::swap(labels[i], labels[j]);
  }
  return labels;
}

// Score of the i-th entry in a descending sequence of n distinct scores.
double descending_score(std::size_t i, std::size_t n) {
  return static_cast<double>(n - i) / static_cast<double>(n);
}

}  // namespace

LabeledSample gen_ideal(std::size_t n, std::size_t n_target) {
  require_class_split(n, n_target);
  LabeledSample sample;
  sample.entries.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    sample.entries.push_back({descending_score(i, n), i < n_target ? Label::target : Label::complement});
  }
  return sample;
}

LabeledSample gen_random(std::size_t n, std::size_t n_target, std::uint64_t seed) {
  require_class_split(n, n_target);
  std::mt19937_64 rng(seed);
  const auto labels = shuffled_labels(n, n_target, rng);
  LabeledSample sample;
  sample.entries.reserve(n);
  for (std::size_t i = 0; i < n; ++i) sample.entries.push_back({descending_score(i, n), labels[i]});
  return sample;
}

LabeledSample gen_binormal(const BinormalSpec& spec) {
  if (!(spec.prevalence > 0.0 && spec.prevalence < 1.0)) {
    throw BoundsViolation("binormal prevalence must lie strictly between 0 and 1");
  }
  if (!(spec.separation >= 0.0) || !std::isfinite(spec.separation)) {
    throw BoundsViolation("separation must be finite and non-negative");
  }
  if (spec.n < 2) throw BoundsViolation("binormal sample needs n >= 2");

  const double wanted = std::round(static_cast<double>(spec.n) * spec.prevalence);
  const auto n_target = std::clamp<std::size_t>(static_cast<std::size_t>(wanted), 1, spec.n - 1);

  std::mt19937_64 rng(spec.seed);
  const auto labels = shuffled_labels(spec.n, n_target, rng);

  LabeledSample sample;
  sample.entries.reserve(spec.n);
  double spare = 0.0;
  bool has_spare = false;
  for (std::size_t i = 0; i < spec.n; ++i) {
    double z;
    if (has_spare) {
      z = spare;
      has_spare = false;
    } else {
      const double u1 = 1.0 - uniform_unit(rng);  // (0, 1]
      const double u2 = uniform_unit(rng);
      const double radius = std::sqrt(-2.0 * std::log(u1));
      const double angle = 2.0 * std::numbers::pi * u2;
      z = radius * std::cos(angle);
      spare = radius * std::sin(angle);
      has_spare = true;
    }
    const double mean = labels[i] == Label::target ? spec.separation : 0.0;
    sample.entries.push_back({mean + z, labels[i]});
  }
  return sample;
}

double normal_cdf(double z) { return 0.5 * std::erfc(-z / std::numbers::sqrt2); }

}  // namespace kroc
