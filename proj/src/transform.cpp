#include "kroc/transform.hpp"

#include <cmath>
#include <numbers>

#include "kroc/errors.hpp"

namespace kroc {

Matrix2 operator*(const Matrix2& l, const Matrix2& r) {
  return {l.a11 * r.a11 + l.a12 * r.a21, l.a11 * r.a12 + l.a12 * r.a22,
          l.a21 * r.a11 + l.a22 * r.a21, l.a21 * r.a12 + l.a22 * r.a22};
}

Matrix2 rotation(double angle) {
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  return {c, -s, s, c};
}

Matrix2 scaling(double sx, double sy) { return {sx, 0.0, 0.0, sy}; }

Matrix2 shear_x(double factor) { return {1.0, factor, 0.0, 1.0}; }

KsRocTransform::KsRocTransform(double prevalence) : p_(prevalence) {
  if (!(prevalence > 0.0 && prevalence < 1.0)) throw DegeneratePrevalence(prevalence);
}

Matrix2 TransformDecomposition::compose() const {
  return rotation(rotation_angle) * scaling(scale_x, scale_y) * shear_x(shear_factor);
}

KsRocTransform make_transform(const ClassCounts& counts) {
  if (counts.n == 0) throw DegeneratePrevalence(0.0);
  return KsRocTransform(counts.prevalence());
}

RocPoint apply_to_point(const KsRocTransform& t, KsPoint ks) { return t.apply(ks); }

KsPoint invert_point(const KsRocTransform& t, RocPoint roc) { return t.invert(roc); }

// 1 * (1 - p) - (-p) * 1. For p >= 1/2 the subtraction 1 - p is exact, and for
// p < 1/2 its rounding error is below half an ulp of 1, so the sum rounds
// back to exactly 1.
double determinant(const KsRocTransform& t) { return t.matrix().determinant(); }

TransformDecomposition decompose(const KsRocTransform& t) {
  return {std::numbers::pi / 4.0, std::numbers::sqrt2, 1.0 / std::numbers::sqrt2,
          0.5 - t.prevalence()};
}

}  // namespace kroc
