#pragma once

#include <cstddef>
#include <vector>

#include "kroc/sample.hpp"

namespace kroc {

// Maximal run of examples sharing one score. Cumulative counts include this
// group and every higher-scoring one.
struct TieGroup {
  double score = 0.0;
  std::size_t count_target = 0;
  std::size_t count_complement = 0;
  std::size_t cum_target = 0;
  std::size_t cum_complement = 0;

  std::size_t rank() const { return cum_target + cum_complement; }
};

// Vertices carry the cumulative class counts they were computed from, so the
// exact rational value of every coordinate can be recovered.
struct RocVertex {
  double u = 0.0;  // false-positive rate
  double v = 0.0;  // true-positive rate
  std::size_t rank = 0;
  std::size_t targets = 0;
  std::size_t complements = 0;
};

struct KsVertex {
  double x = 0.0;  // population fraction
  double y = 0.0;  // true-positive rate minus false-positive rate
  std::size_t rank = 0;
  std::size_t targets = 0;
  std::size_t complements = 0;
};

struct RocCurve {
  std::vector<RocVertex> vertices;
  ClassCounts counts;
};

struct KsCurve {
  std::vector<KsVertex> vertices;
  ClassCounts counts;
};

// Groups by strictly descending score. Only checks for non-finite scores.
std::vector<TieGroup> rank_and_group(const LabeledSample& sample);

// Both builders emit the origin plus one vertex per tie group.
RocCurve build_roc(const LabeledSample& sample);
KsCurve build_ks(const LabeledSample& sample);

// Curves from already-grouped data; groups must end at counts' totals.
RocCurve build_roc(const std::vector<TieGroup>& groups, const ClassCounts& counts);
KsCurve build_ks(const std::vector<TieGroup>& groups, const ClassCounts& counts);

// Coordinate formulas shared by every place that emits a vertex. The KS
// ordinate is literally tpr - fpr in floating point so that y == v - u holds
// bitwise between paired vertices.
double false_positive_rate(std::size_t complements, const ClassCounts& counts);
double true_positive_rate(std::size_t targets, const ClassCounts& counts);
double population_fraction(std::size_t rank, const ClassCounts& counts);
double ks_ordinate(std::size_t targets, std::size_t complements, const ClassCounts& counts);

// Exact integer numerator of tpr - fpr over the common denominator
// n_target * n_complement. Orders vertices without rounding noise.
long long ks_ordinate_key(std::size_t targets, std::size_t complements, const ClassCounts& counts);

}  // namespace kroc
