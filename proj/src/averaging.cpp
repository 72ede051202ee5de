#include "kroc/averaging.hpp"

#include <algorithm>
#include <cmath>

#include "kroc/errors.hpp"
#include "summation.hpp"

namespace kroc {
namespace {

void require_grid(std::size_t grid_size) {
  if (grid_size < 2) throw BoundsViolation("grid needs at least 2 points");
}

struct MeanAndError {
  double mean;
  double stderr_of_mean;
};

// Shifted by the first value so identical inputs give an exact mean and a
// zero error.
MeanAndError summarize(const std::vector<double>& values) {
  const double k = static_cast<double>(values.size());
  const double shift = values.front();
  detail::CompensatedSum sum;
  for (double v : values) sum.add(v - shift);
  const double offset = sum.value() / k;
  detail::CompensatedSum sq;
  for (double v : values) sq.add((v - shift - offset) * (v - shift - offset));
  const double sample_var = sq.value() / (k - 1.0);
  return {shift + offset, std::sqrt(sample_var / k)};
}

double lerp_at(double x0, double y0, double x1, double y1, double x) {
  return y0 + (y1 - y0) * ((x - x0) / (x1 - x0));
}

}  // namespace

std::vector<double> uniform_grid(std::size_t grid_size) {
  require_grid(grid_size);
  std::vector<double> grid(grid_size);
  const double last = static_cast<double>(grid_size - 1);
  for (std::size_t j = 0; j < grid_size; ++j) grid[j] = static_cast<double>(j) / last;
  return grid;
}

double interpolate_ks(const KsCurve& curve, double x) {
  const auto& vs = curve.vertices;
  if (x <= vs.front().x) return vs.front().y;
  if (x >= vs.back().x) return vs.back().y;
  const auto it = std::lower_bound(vs.begin(), vs.end(), x,
                                   [](const KsVertex& v, double value) { return v.x < value; });
  if (it->x == x) return it->y;
  const auto& lo = *(it - 1);
  return lerp_at(lo.x, lo.y, it->x, it->y, x);
}

double interpolate_roc(const RocCurve& curve, double u) {
  const auto& vs = curve.vertices;
  if (u < vs.front().u) return vs.front().v;
  if (u >= vs.back().u) return vs.back().v;
  // Last vertex with abscissa <= u.
  const auto it = std::upper_bound(vs.begin(), vs.end(), u,
                                   [](double value, const RocVertex& v) { return value < v.u; });
  const auto& lo = *(it - 1);
  if (lo.u == u) return lo.v;
  return lerp_at(lo.u, lo.v, it->u, it->v, u);
}

AveragedKsCurve average_ks_curves(std::span<const KsCurve> curves, std::size_t grid_size) {
  if (curves.size() < 2) throw InsufficientFolds(curves.size());

  AveragedKsCurve avg;
  avg.grid = uniform_grid(grid_size);
  avg.fold_count = curves.size();
  for (const auto& c : curves) {
    avg.pooled_counts.n += c.counts.n;
    avg.pooled_counts.n_target += c.counts.n_target;
    avg.pooled_counts.n_complement += c.counts.n_complement;
  }

  avg.mean_y.reserve(grid_size);
  avg.stderr_y.reserve(grid_size);
  std::vector<double> column(curves.size());
  for (double x : avg.grid) {
    for (std::size_t f = 0; f < curves.size(); ++f) column[f] = interpolate_ks(curves[f], x);
    const auto s = summarize(column);
    avg.mean_y.push_back(s.mean);
    avg.stderr_y.push_back(s.stderr_of_mean);
  }
  return avg;
}

ProjectedRocBand project_average_to_roc(const AveragedKsCurve& avg) {
  const ClassCounts& pooled = avg.pooled_counts;
  if (pooled.n_target == 0 || pooled.n_complement == 0) {
    throw DegeneratePrevalence(pooled.n == 0 ? 0.0 : pooled.prevalence());
  }
  const KsRocTransform t = make_transform(pooled);
  const double p = t.prevalence();

  ProjectedRocBand band;
  band.prevalence = p;
  const std::size_t m = avg.grid.size();
  band.mean.reserve(m);
  band.lower.reserve(m);
  band.upper.reserve(m);
  band.du.reserve(m);
  band.dv.reserve(m);
  for (std::size_t j = 0; j < m; ++j) {
    const double x = avg.grid[j];
    const double y = avg.mean_y[j];
    const double e = avg.stderr_y[j];
    band.mean.push_back(t.apply({x, y}));
    band.lower.push_back(t.apply({x, y - e}));
    band.upper.push_back(t.apply({x, y + e}));
    band.du.push_back(0.0 - p * e);
    band.dv.push_back((1.0 - p) * e);
  }
  return band;
}

VerticalRocAverage vertical_average_roc(std::span<const RocCurve> curves, std::size_t grid_size) {
  if (curves.size() < 2) throw InsufficientFolds(curves.size());

  VerticalRocAverage avg;
  avg.grid = uniform_grid(grid_size);
  avg.fold_count = curves.size();
  std::vector<double> column(curves.size());
  for (double u : avg.grid) {
    for (std::size_t f = 0; f < curves.size(); ++f) column[f] = interpolate_roc(curves[f], u);
    const auto s = summarize(column);
    avg.mean_v.push_back(s.mean);
    avg.stderr_v.push_back(s.stderr_of_mean);
  }
  return avg;
}

double averaged_auc_ks(const AveragedKsCurve& avg) {
  detail::CompensatedSum area;
  for (std::size_t j = 1; j < avg.grid.size(); ++j) {
    area.add((avg.grid[j] - avg.grid[j - 1]) * (avg.mean_y[j] + avg.mean_y[j - 1]) * 0.5);
  }
  return area.value();
}

}  // namespace kroc
