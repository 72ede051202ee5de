#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "kroc/curves.hpp"
#include "kroc/transform.hpp"

namespace kroc {

inline constexpr std::size_t kDefaultGridSize = 101;

// Vertical average of fold KS curves on a fixed abscissa grid.
struct AveragedKsCurve {
  std::vector<double> grid;
  std::vector<double> mean_y;
  std::vector<double> stderr_y;  // sample standard deviation / sqrt(k)
  std::size_t fold_count = 0;
  ClassCounts pooled_counts;
};

struct ProjectedRocBand {
  std::vector<RocPoint> mean;
  std::vector<RocPoint> lower;  // T(x, mean - e)
  std::vector<RocPoint> upper;  // T(x, mean + e)
  std::vector<double> du;       // -p * e
  std::vector<double> dv;       // (1 - p) * e
  double prevalence = 0.0;
};

struct VerticalRocAverage {
  std::vector<double> grid;  // false-positive rates
  std::vector<double> mean_v;
  std::vector<double> stderr_v;
  std::size_t fold_count = 0;
};

// grid_size equally spaced points on [0, 1], endpoints included.
std::vector<double> uniform_grid(std::size_t grid_size);

// Value of the KS polyline at abscissa x in [0, 1].
double interpolate_ks(const KsCurve& curve, double x);
// Value of the ROC polyline at false-positive rate u. On a vertical run the
// highest true-positive rate is returned.
double interpolate_roc(const RocCurve& curve, double u);

// Throws InsufficientFolds when fewer than two curves are given.
AveragedKsCurve average_ks_curves(std::span<const KsCurve> curves,
                                  std::size_t grid_size = kDefaultGridSize);

// Projects with the pooled prevalence of the folds.
ProjectedRocBand project_average_to_roc(const AveragedKsCurve& avg);

VerticalRocAverage vertical_average_roc(std::span<const RocCurve> curves,
                                        std::size_t grid_size = kDefaultGridSize);

// Trapezoid area under the mean polyline.
double averaged_auc_ks(const AveragedKsCurve& avg);

}  // namespace kroc
