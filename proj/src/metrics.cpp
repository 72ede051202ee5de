#include "kroc/metrics.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>


namespace kroc {
namespace {

__extension__ typedef __int128 Wide;

Wide wide_gcd(Wide a, Wide b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    const Wide r = a % b;
    a = b;
    b = r;
  }
  return a;
}

Ratio reduce(Wide num, Wide den) {
  if (num == 0) return {0, 1};
  const Wide g = wide_gcd(num, den);
  num /= g;
  den /= g;
  if (den < 0) {
    num = -num;
    den = -den;
  }
  constexpr Wide kMax = std::numeric_limits<std::int64_t>::max();
  if (num > kMax || -num > kMax || den > kMax) {
    throw std::overflow_error("exact area does not fit in 64-bit fraction");
  }
  return {static_cast<std::int64_t>(num), static_cast<std::int64_t>(den)};
}

// Numerator of the KS area over the denominator 2 * n * n_target * n_complement.
Wide ks_area_numerator(const KsCurve& curve) {
  Wide sum = 0;
  const auto& vs = curve.vertices;
  for (std::size_t i = 1; i < vs.size(); ++i) {
    const Wide width = static_cast<Wide>(vs[i].rank - vs[i - 1].rank);
    const Wide heights =
        static_cast<Wide>(ks_ordinate_key(vs[i].targets, vs[i].complements, curve.counts)) +
        ks_ordinate_key(vs[i - 1].targets, vs[i - 1].complements, curve.counts);
    sum += width * heights;
  }
  return sum;
}

// Numerator of the ROC area over the denominator 2 * n_target * n_complement.
Wide roc_area_numerator(const RocCurve& curve) {
  Wide sum = 0;
  const auto& vs = curve.vertices;
  for (std::size_t i = 1; i < vs.size(); ++i) {
    const Wide width = static_cast<Wide>(vs[i].complements - vs[i - 1].complements);
    sum += width * static_cast<Wide>(vs[i].targets + vs[i - 1].targets);
  }
  return sum;
}

// Reduced before conversion so that simple values such as 1/2 come out exact.
double wide_quotient(Wide num, Wide den) {
  if (num == 0) return 0.0;
  const Wide g = wide_gcd(num, den);
  return static_cast<double>(num / g) / static_cast<double>(den / g);
}

template <typename Curve>
std::size_t argmax_ordinate(const Curve& curve) {
  std::size_t best = 0;
  long long best_key = std::numeric_limits<long long>::min();
  for (std::size_t i = 0; i < curve.vertices.size(); ++i) {
    const auto& vx = curve.vertices[i];
    const long long key = ks_ordinate_key(vx.targets, vx.complements, curve.counts);
    if (key > best_key) {
      best_key = key;
      best = i;
    }
  }
  return best;
}

}  // namespace

double auc_roc(const RocCurve& curve) {
  return wide_quotient(roc_area_numerator(curve),
                       Wide{2} * curve.counts.n_target * curve.counts.n_complement);
}

double auc_ks(const KsCurve& curve) {
  return wide_quotient(ks_area_numerator(curve),
                       Wide{2} * curve.counts.n * curve.counts.n_target * curve.counts.n_complement);
}

Ratio auc_roc_exact(const RocCurve& curve) {
  const Wide den = Wide{2} * curve.counts.n_target * curve.counts.n_complement;
  return reduce(roc_area_numerator(curve), den);
}

Ratio auc_ks_exact(const KsCurve& curve) {
  const Wide den = Wide{2} * curve.counts.n * curve.counts.n_target * curve.counts.n_complement;
  return reduce(ks_area_numerator(curve), den);
}

AreaReport verify_identity(const LabeledSample& sample) {
  const ClassCounts counts = tally_classes(sample);
  const auto groups = rank_and_group(sample);
  const double roc = auc_roc(build_roc(groups, counts));
  const double ks = auc_ks(build_ks(groups, counts));
  return {roc, ks, gini(roc), roc - 0.5 - ks};
}

Ratio exact_identity_residual(const LabeledSample& sample) {
  const ClassCounts counts = tally_classes(sample);
  const auto groups = rank_and_group(sample);
  // Common denominator 2 * n * n_target * n_complement.
  const Wide pairs = Wide{1} * counts.n_target * counts.n_complement;
  const Wide roc = roc_area_numerator(build_roc(groups, counts)) * static_cast<Wide>(counts.n);
  const Wide half = static_cast<Wide>(counts.n) * pairs;
  const Wide ks = ks_area_numerator(build_ks(groups, counts));
  return reduce(roc - half - ks, Wide{2} * counts.n * pairs);
}

PointMetric max_ks2(const KsCurve& curve) {
  const auto& vx = curve.vertices[argmax_ordinate(curve)];
  return {vx.y, vx.rank, vx.x};
}

PointMetric mvd(const RocCurve& curve) {
  const auto& vx = curve.vertices[argmax_ordinate(curve)];
  return {vx.v - vx.u, vx.rank, population_fraction(vx.rank, curve.counts)};
}

PointMetric max_ks2_projection(const RocCurve& curve) {
  PointMetric m = mvd(curve);
  m.value /= std::numbers::sqrt2;
  return m;
}

double gini(double auc_roc) { return 2.0 * auc_roc - 1.0; }

double auc_pairwise_oracle(const LabeledSample& sample) {
  const ClassCounts counts = tally_classes(sample);
  std::int64_t twice_wins = 0;
  for (const auto& t : sample.entries) {
    if (t.label != Label::target) continue;
    for (const auto& c : sample.entries) {
      if (c.label != Label::complement) continue;
      if (t.score > c.score) {
        twice_wins += 2;
      } else if (t.score == c.score) {
        twice_wins += 1;
      }
    }
  }
  const double pairs = static_cast<double>(counts.n_target) * static_cast<double>(counts.n_complement);
  return static_cast<double>(twice_wins) / (2.0 * pairs);
}

}  // namespace kroc
