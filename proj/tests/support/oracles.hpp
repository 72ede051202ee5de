#pragma once

// Test-only reference computations. They deliberately avoid the library's
// sorting, grouping and summation code paths.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <random>
#include <set>
#include <vector>

#include "kroc/sample.hpp"
#include "support/rational.hpp"

namespace kroc::testing {

struct ExactVertex {
  Rational u, v, x, y;
  std::size_t rank = 0;
};

// One vertex per distinct score s: counts of examples scoring >= s.
// O(n * distinct) brute force.
inline std::vector<ExactVertex> exact_vertices(const LabeledSample& sample) {
  std::int64_t nt = 0, nc = 0;
  std::set<double, std::greater<>> thresholds;
  for (const auto& e : sample.entries) {
    (e.label == Label::target ? nt : nc) += 1;
    thresholds.insert(e.score);
  }
  const std::int64_t n = nt + nc;
  std::vector<ExactVertex> out{{Rational(0), Rational(0), Rational(0), Rational(0), 0}};
  for (double s : thresholds) {
    std::int64_t t = 0, c = 0;
    for (const auto& e : sample.entries) {
      if (e.score >= s) (e.label == Label::target ? t : c) += 1;
    }
    out.push_back({Rational(c, nc), Rational(t, nt), Rational(t + c, n),
                   Rational(t, nt) - Rational(c, nc), static_cast<std::size_t>(t + c)});
  }
  return out;
}

inline Rational exact_roc_area(const std::vector<ExactVertex>& vs) {
  Rational area(0);
  for (std::size_t i = 1; i < vs.size(); ++i) {
    area = area + (vs[i].u - vs[i - 1].u) * (vs[i].v + vs[i - 1].v) * Rational(1, 2);
  }
  return area;
}

inline Rational exact_ks_area(const std::vector<ExactVertex>& vs) {
  Rational area(0);
  for (std::size_t i = 1; i < vs.size(); ++i) {
    area = area + (vs[i].x - vs[i - 1].x) * (vs[i].y + vs[i - 1].y) * Rational(1, 2);
  }
  return area;
}

// Labels listed in descending-score order become a sample with distinct
// scores n, n-1, ..., 1.
inline LabeledSample from_sorted_labels(const std::vector<int>& labels) {
  LabeledSample s;
  const auto n = labels.size();
  for (std::size_t i = 0; i < n; ++i) {
    s.entries.push_back({static_cast<double>(n - i), labels[i] ? Label::target : Label::complement});
  }
  return s;
}

inline const std::vector<int> kWorkedExample{1, 0, 0, 1, 0, 1, 0, 0, 0};

struct SampleShape {
  std::size_t n = 10;
  double prevalence = 0.5;
  bool ties = false;
};

// Random valid sample. Without ties the scores are continuous draws; with
// ties they come from a small integer alphabet so groups are large.
inline LabeledSample random_sample(std::mt19937_64& rng, const SampleShape& shape) {
  const std::size_t n = std::max<std::size_t>(shape.n, 2);
  const auto wanted = static_cast<std::size_t>(std::llround(static_cast<double>(n) * shape.prevalence));
  const std::size_t nt = std::clamp<std::size_t>(wanted, 1, n - 1);

  std::vector<Label> labels(n, Label::complement);
  std::fill_n(labels.begin(), nt, Label::target);
  std::shuffle(labels.begin(), labels.end(), rng);

  const std::size_t alphabet = std::max<std::size_t>(2, std::min<std::size_t>(n / 8 + 1, 50));
  std::uniform_int_distribution<std::size_t> level(0, alphabet - 1);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::normal_distribution<double> noise(0.0, 1.0);

  LabeledSample s;
  s.entries.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const bool target = labels[i] == Label::target;
    double score;
    if (shape.ties) {
      // Mild signal so curves are not pure noise.
      score = static_cast<double>(level(rng) + (target && unit(rng) < 0.5 ? alphabet / 2 : 0));
    } else {
      score = noise(rng) + (target ? 0.8 : 0.0);
    }
    s.entries.push_back({score, labels[i]});
  }
  return s;
}

inline LabeledSample random_sample(std::mt19937_64& rng, std::size_t max_n, bool ties) {
  std::uniform_int_distribution<std::size_t> size(2, max_n);
  std::uniform_real_distribution<double> prevalence(0.05, 0.95);
  return random_sample(rng, {size(rng), prevalence(rng), ties});
}

}  // namespace kroc::testing
