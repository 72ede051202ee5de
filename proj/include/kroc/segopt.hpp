#pragma once

#include <cstddef>
#include <vector>

#include "kroc/curves.hpp"
#include "kroc/metrics.hpp"
#include "kroc/sample.hpp"

namespace kroc {

enum class Direction { increasing, decreasing, flat };

const char* to_string(Direction d);

// Maximal run of KS chords sharing one slope sign, over ranks
// (start_rank, end_rank].
struct MonotoneSegment {
  std::size_t start_rank = 0;
  std::size_t end_rank = 0;
  Direction direction = Direction::flat;
  double y_delta = 0.0;
  std::size_t targets = 0;      // target examples inside the segment
  std::size_t complements = 0;  // complement examples inside the segment
};

// One row of the serialized remapping table. Rows are ordered by value_low.
// new_position is the transformed variable value: higher positions rank
// first, so the band holding the KS peak's left side gets the largest one.
struct RemapRange {
  double value_low = 0.0;
  double value_high = 0.0;
  std::size_t new_position = 0;
};

struct SegmentReordering {
  std::vector<MonotoneSegment> segments;  // original descending-score order
  std::vector<std::size_t> order;         // order[i] = segment placed i-th
  std::vector<RemapRange> table;
  double achieved_max_ks2 = 0.0;
  std::size_t achieved_rank = 0;
  PointMetric original_max_ks2;
};

// Chord directions are decided on exact integer counts; a tie group is never
// split across segments.
std::vector<MonotoneSegment> find_monotone_segments(const KsCurve& curve);

// Groups increasing segments first, then flat, then decreasing, each group
// keeping the original relative order.
SegmentReordering reorder_for_max_ks(const LabeledSample& sample);

// Maps a raw variable value to its new ordinal. Values outside every range
// clamp to the nearest one; an exact midpoint goes to the lower range.
double apply_remap(const std::vector<RemapRange>& table, double value);

LabeledSample remap_sample(const std::vector<RemapRange>& table, const LabeledSample& sample);

}  // namespace kroc
