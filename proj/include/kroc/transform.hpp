#pragma once

#include "kroc/sample.hpp"

namespace kroc {

struct KsPoint {
  double x = 0.0;
  double y = 0.0;
};

struct RocPoint {
  double u = 0.0;
  double v = 0.0;
};

// Row-major 2x2 matrix.
struct Matrix2 {
  double a11 = 1.0, a12 = 0.0;
  double a21 = 0.0, a22 = 1.0;

  double determinant() const { return a11 * a22 - a12 * a21; }
  friend Matrix2 operator*(const Matrix2& l, const Matrix2& r);
};

Matrix2 rotation(double angle);
Matrix2 scaling(double sx, double sy);
Matrix2 shear_x(double factor);

/// Linear map from KS coordinates (x, y) to ROC coordinates (u, v):
///
///     | u |   | 1   -p  | | x |
///     | v | = | 1   1-p | | y |
///
/// with p the target prevalence. Sends the KS endpoint (1, 0) to (1, 1), the
/// ideal-classifier apex (p, 1) to (0, 1) and the baseline y = 0 onto the
/// chance diagonal. Its determinant is 1 for every p, so areas are preserved;
/// lengths and angles are not.
class KsRocTransform {
 public:
  // Throws DegeneratePrevalence unless 0 < p < 1.
  explicit KsRocTransform(double prevalence);

  double prevalence() const { return p_; }
  Matrix2 matrix() const { return {1.0, -p_, 1.0, 1.0 - p_}; }

  RocPoint apply(KsPoint ks) const { return {ks.x - p_ * ks.y, ks.x + (1.0 - p_) * ks.y}; }
  KsPoint invert(RocPoint roc) const { return {(1.0 - p_) * roc.u + p_ * roc.v, roc.v - roc.u}; }

 private:
  double p_;
};

/// T = rotation(angle) * scaling(scale_x, scale_y) * shear_x(shear_factor).
///
/// Read as a matrix product from left to right, i.e. the shear acts on a
/// point first, then the anisotropic scaling, then the pi/4 rotation. The
/// reverse application order (rotate first, shear last) does not reproduce T.
struct TransformDecomposition {
  double rotation_angle = 0.0;
  double scale_x = 1.0;
  double scale_y = 1.0;
  double shear_factor = 0.0;  // 1/2 - p

  Matrix2 compose() const;
};

// Throws DegeneratePrevalence when either class is empty.
KsRocTransform make_transform(const ClassCounts& counts);

RocPoint apply_to_point(const KsRocTransform& t, KsPoint ks);
KsPoint invert_point(const KsRocTransform& t, RocPoint roc);
double determinant(const KsRocTransform& t);
TransformDecomposition decompose(const KsRocTransform& t);

}  // namespace kroc
