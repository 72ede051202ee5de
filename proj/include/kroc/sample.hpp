#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace kroc {

enum class Label : std::uint8_t { complement = 0, target = 1 };

struct Entry {
  double score = 0.0;
  Label label = Label::complement;

  friend bool operator==(const Entry&, const Entry&) = default;
};

// Scored examples with binary labels, in input order. Validity (size, both
// classes present, finite scores) is checked by tally_classes() and by every
// operation that builds on it.
struct LabeledSample {
  std::vector<Entry> entries;

  std::size_t size() const { return entries.size(); }
  friend bool operator==(const LabeledSample&, const LabeledSample&) = default;
};

struct ClassCounts {
  std::size_t n = 0;
  std::size_t n_target = 0;
  std::size_t n_complement = 0;

  // Target-class fraction n_target / n.
  double prevalence() const { return static_cast<double>(n_target) / static_cast<double>(n); }

  friend bool operator==(const ClassCounts&, const ClassCounts&) = default;
};

// Throws EmptySample (< 2 entries), NonFiniteScore, or SingleClassSample.
ClassCounts tally_classes(const LabeledSample& sample);

// Throws NonFiniteScore on the first NaN or infinite score.
void require_finite_scores(const LabeledSample& sample);

}  // namespace kroc
