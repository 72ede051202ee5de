#include "kroc/segopt.hpp"

#include <algorithm>
#include <limits>

#include "kroc/errors.hpp"

namespace kroc {
namespace {

Direction chord_direction(long long key) {
  if (key > 0) return Direction::increasing;
  if (key < 0) return Direction::decreasing;
  return Direction::flat;
}

int group_rank(Direction d) {
  switch (d) {
    case Direction::increasing: return 0;
    case Direction::flat: return 1;
    case Direction::decreasing: return 2;
  }
  return 1;
}

}  // namespace

const char* to_string(Direction d) {
  switch (d) {
    case Direction::increasing: return "increasing";
    case Direction::decreasing: return "decreasing";
    case Direction::flat: return "flat";
  }
  return "flat";
}

std::vector<MonotoneSegment> find_monotone_segments(const KsCurve& curve) {
  std::vector<MonotoneSegment> segments;
  const auto& vs = curve.vertices;
  for (std::size_t i = 1; i < vs.size(); ++i) {
    const std::size_t dt = vs[i].targets - vs[i - 1].targets;
    const std::size_t dc = vs[i].complements - vs[i - 1].complements;
    const Direction dir = chord_direction(ks_ordinate_key(dt, dc, curve.counts));
    if (segments.empty() || segments.back().direction != dir) {
      segments.push_back({vs[i - 1].rank, vs[i - 1].rank, dir, 0.0, 0, 0});
    }
    auto& seg = segments.back();
    seg.end_rank = vs[i].rank;
    seg.targets += dt;
    seg.complements += dc;
  }
  for (auto& seg : segments) seg.y_delta = ks_ordinate(seg.targets, seg.complements, curve.counts);
  return segments;
}

SegmentReordering reorder_for_max_ks(const LabeledSample& sample) {
  const ClassCounts counts = tally_classes(sample);
  const auto groups = rank_and_group(sample);
  const KsCurve ks = build_ks(groups, counts);

  SegmentReordering result;
  result.segments = find_monotone_segments(ks);
  result.original_max_ks2 = max_ks2(ks);
  const auto& segments = result.segments;
  const std::size_t count = segments.size();

  result.order.resize(count);
  for (std::size_t i = 0; i < count; ++i) result.order[i] = i;
  std::stable_sort(result.order.begin(), result.order.end(), [&](std::size_t a, std::size_t b) {
    return group_rank(segments[a].direction) < group_rank(segments[b].direction);
  });

  // Walk the reordered bands; the peak is taken on exact keys, smallest rank.
  std::size_t targets = 0;
  std::size_t complements = 0;
  long long best_key = 0;
  for (std::size_t seg_index : result.order) {
    targets += segments[seg_index].targets;
    complements += segments[seg_index].complements;
    const long long key = ks_ordinate_key(targets, complements, counts);
    if (key > best_key) {
      best_key = key;
      result.achieved_max_ks2 = ks_ordinate(targets, complements, counts);
      result.achieved_rank = targets + complements;
    }
  }

  std::vector<std::size_t> position(count);
  for (std::size_t i = 0; i < count; ++i) position[result.order[i]] = count - 1 - i;

  // Segments run in descending score, so the table is built back to front.
  const auto group_with_rank_above = [&](std::size_t rank) {
    return std::upper_bound(groups.begin(), groups.end(), rank,
                            [](std::size_t r, const TieGroup& g) { return r < g.rank(); });
  };
  result.table.reserve(count);
  for (std::size_t k = count; k-- > 0;) {
    const auto first = group_with_rank_above(segments[k].start_rank);
    const auto last = group_with_rank_above(segments[k].end_rank) - 1;
    result.table.push_back({last->score, first->score, position[k]});
  }
  return result;
}

double apply_remap(const std::vector<RemapRange>& table, double value) {
  if (table.empty()) throw BoundsViolation("remapping table is empty");
  const auto it = std::lower_bound(table.begin(), table.end(), value,
                                   [](const RemapRange& r, double v) { return r.value_high < v; });
  if (it == table.end()) return static_cast<double>(table.back().new_position);
  if (value >= it->value_low || it == table.begin()) return static_cast<double>(it->new_position);
  const auto below = it - 1;
  const bool lower_is_nearer = value - below->value_high <= it->value_low - value;
  return static_cast<double>(lower_is_nearer ? below->new_position : it->new_position);
}

LabeledSample remap_sample(const std::vector<RemapRange>& table, const LabeledSample& sample) {
  LabeledSample out;
  out.entries.reserve(sample.size());
  for (const auto& e : sample.entries) out.entries.push_back({apply_remap(table, e.score), e.label});
  return out;
}

}  // namespace kroc
