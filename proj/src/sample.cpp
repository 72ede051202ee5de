#include "kroc/sample.hpp"

#include <cmath>
#include <string>

#include "kroc/errors.hpp"

namespace kroc {

EmptySample::EmptySample(std::size_t size)
    : Error("sample has " + std::to_string(size) + " entries, at least 2 required"), size_(size) {}

SingleClassSample::SingleClassSample(std::size_t n_target, std::size_t n_complement)
    : Error("sample needs both classes: n_target=" + std::to_string(n_target) +
            ", n_complement=" + std::to_string(n_complement)),
      n_target_(n_target),
      n_complement_(n_complement) {}

NonFiniteScore::NonFiniteScore(std::size_t index)
    : Error("non-finite score at entry " + std::to_string(index)), index_(index) {}

DegeneratePrevalence::DegeneratePrevalence(double prevalence)
    : Error("prevalence must lie strictly between 0 and 1, got " + std::to_string(prevalence)) {}

InsufficientFolds::InsufficientFolds(std::size_t folds)
    : Error("averaging needs at least 2 folds, got " + std::to_string(folds)) {}

ParseError::ParseError(const std::string& source, std::size_t line, const std::string& what)
    : Error(line == 0 ? source + ": " + what : source + ":" + std::to_string(line) + ": " + what),
      line_(line) {}

void require_finite_scores(const LabeledSample& sample) {
  for (std::size_t i = 0; i < sample.entries.size(); ++i) {
    if (!std::isfinite(sample.entries[i].score)) throw NonFiniteScore(i);
  }
}

ClassCounts tally_classes(const LabeledSample& sample) {
  if (sample.size() < 2) throw EmptySample(sample.size());
  require_finite_scores(sample);

  ClassCounts counts;
  counts.n = sample.size();
  for (const auto& e : sample.entries) {
    if (e.label == Label::target) ++counts.n_target;
  }
  counts.n_complement = counts.n - counts.n_target;
  if (counts.n_target == 0 || counts.n_complement == 0) {
    throw SingleClassSample(counts.n_target, counts.n_complement);
  }
  return counts;
}

}  // namespace kroc
