#include "kroc/curves.hpp"

#include <algorithm>
#include <cassert>

#include "kroc/errors.hpp"

namespace kroc {

double false_positive_rate(std::size_t complements, const ClassCounts& counts) {
  return static_cast<double>(complements) / static_cast<double>(counts.n_complement);
}

double true_positive_rate(std::size_t targets, const ClassCounts& counts) {
  return static_cast<double>(targets) / static_cast<double>(counts.n_target);
}

double population_fraction(std::size_t rank, const ClassCounts& counts) {
  return static_cast<double>(rank) / static_cast<double>(counts.n);
}

double ks_ordinate(std::size_t targets, std::size_t complements, const ClassCounts& counts) {
  return true_positive_rate(targets, counts) - false_positive_rate(complements, counts);
}

long long ks_ordinate_key(std::size_t targets, std::size_t complements, const ClassCounts& counts) {
  return static_cast<long long>(targets) * static_cast<long long>(counts.n_complement) -
         static_cast<long long>(complements) * static_cast<long long>(counts.n_target);
}

std::vector<TieGroup> rank_and_group(const LabeledSample& sample) {
  require_finite_scores(sample);

  std::vector<Entry> sorted = sample.entries;
  std::sort(sorted.begin(), sorted.end(),
            [](const Entry& a, const Entry& b) { return a.score > b.score; });

  std::vector<TieGroup> groups;
  std::size_t cum_target = 0;
  std::size_t cum_complement = 0;
  for (const auto& e : sorted) {
    if (groups.empty() || e.score != groups.back().score) {
      groups.push_back({e.score, 0, 0, cum_target, cum_complement});
    }
    auto& g = groups.back();
    if (e.label == Label::target) {
      ++g.count_target;
      g.cum_target = ++cum_target;
    } else {
      ++g.count_complement;
      g.cum_complement = ++cum_complement;
    }
  }
  return groups;
}

RocCurve build_roc(const std::vector<TieGroup>& groups, const ClassCounts& counts) {
  RocCurve curve;
  curve.counts = counts;
  curve.vertices.reserve(groups.size() + 1);
  curve.vertices.push_back({0.0, 0.0, 0, 0, 0});
  for (const auto& g : groups) {
    curve.vertices.push_back({false_positive_rate(g.cum_complement, counts),
                              true_positive_rate(g.cum_target, counts), g.rank(), g.cum_target,
                              g.cum_complement});
  }
  assert(curve.vertices.back().rank == counts.n);
  return curve;
}

KsCurve build_ks(const std::vector<TieGroup>& groups, const ClassCounts& counts) {
  KsCurve curve;
  curve.counts = counts;
  curve.vertices.reserve(groups.size() + 1);
  curve.vertices.push_back({0.0, 0.0, 0, 0, 0});
  for (const auto& g : groups) {
    curve.vertices.push_back({population_fraction(g.rank(), counts),
                              ks_ordinate(g.cum_target, g.cum_complement, counts), g.rank(),
                              g.cum_target, g.cum_complement});
  }
  assert(curve.vertices.back().rank == counts.n);
  return curve;
}

RocCurve build_roc(const LabeledSample& sample) {
  const ClassCounts counts = tally_classes(sample);
  return build_roc(rank_and_group(sample), counts);
}

KsCurve build_ks(const LabeledSample& sample) {
  const ClassCounts counts = tally_classes(sample);
  return build_ks(rank_and_group(sample), counts);
}

}  // namespace kroc
