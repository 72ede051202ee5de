#pragma once

#include <cstddef>
#include <cstdint>

#include "kroc/curves.hpp"
#include "kroc/sample.hpp"

namespace kroc {

// A metric value together with the vertex where it is attained.
struct PointMetric {
  double value = 0.0;
  std::size_t rank = 0;
  double x = 0.0;  // population fraction rank / n
};

struct AreaReport {
  double auc_roc = 0.0;
  double auc_ks = 0.0;
  double gini = 0.0;
  double identity_residual = 0.0;  // auc_roc - 0.5 - auc_ks
};

// Reduced fraction; den > 0.
struct Ratio {
  std::int64_t num = 0;
  std::int64_t den = 1;

  double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
  friend bool operator==(const Ratio&, const Ratio&) = default;
};

// Trapezoid areas of the polylines, which are the exact areas since the
// curves are piecewise linear. The sums run in integer arithmetic over the
// vertices' cumulative class counts and are rounded once, so e.g. every ideal
// classifier gives exactly 1 and 1/2.
double auc_roc(const RocCurve& curve);
double auc_ks(const KsCurve& curve);

// The same areas as reduced fractions.
Ratio auc_roc_exact(const RocCurve& curve);
Ratio auc_ks_exact(const KsCurve& curve);

// Builds both curves and reports the areas and auc_roc - 0.5 - auc_ks.
AreaReport verify_identity(const LabeledSample& sample);
// auc_roc - 1/2 - auc_ks in exact arithmetic; zero for every valid sample.
Ratio exact_identity_residual(const LabeledSample& sample);

// Argmax metrics break ties by the smallest rank. Ties are detected on exact
// integer keys, so the KS and ROC variants always select the same vertex.
PointMetric max_ks2(const KsCurve& curve);
PointMetric mvd(const RocCurve& curve);
PointMetric max_ks2_projection(const RocCurve& curve);

double gini(double auc_roc);

// Brute-force Mann-Whitney count over all (target, complement) pairs, ties
// counted as 1/2. O(n_target * n_complement).
double auc_pairwise_oracle(const LabeledSample& sample);

}  // namespace kroc
