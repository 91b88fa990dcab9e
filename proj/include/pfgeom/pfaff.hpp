#pragma once

#include <Eigen/Dense>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "pfgeom/alt_tensor.hpp"
#include "pfgeom/error.hpp"
#include "pfgeom/point_geometry.hpp"

namespace pfgeom {

/// Rectangular sample grid, axis 0 slowest. samples_per_axis == 1 yields the
/// center point.
struct GridSpec {
  Eigen::VectorXd center;
  Eigen::VectorXd half_width;  // per axis
  int samples_per_axis = 1;

  int dim() const { return static_cast<int>(center.size()); }
  long total_points() const;
  Eigen::VectorXd point(long flat_index) const;
  void validate() const;
};

struct IntegrabilityReport {
  Eigen::VectorXd point;
  /// (label, Frobenius norm) for [dN, N^dN, (dN)^2, N^(dN)^2, ...] up to
  /// degree dim.
  std::vector<std::pair<std::string, double>> sequence_norms;
  /// Number of nonexact pairs in the normal form N = dphi + sum mu_i dnu_i,
  /// read off as the largest j with N^(dN)^j nonvanishing.
  int pair_count = 0;
  int degree_of_integrability = 0;
  bool completely_integrable = false;
};

struct ExceptionalPoint {
  long index = 0;
  Eigen::VectorXd point;
  ErrorKind kind = ErrorKind::ZeroForm;
  std::string message;
};

struct RegionReport {
  long total_points = 0;
  std::map<int, long> histogram;  // degree -> count
  int majority_degree = 0;        // ties broken toward the smaller degree
  /// per sequence label: (min, max) Frobenius norm over classified points
  std::map<std::string, std::pair<double, double>> norm_range;
  std::vector<ExceptionalPoint> exceptional;
};

/// Degree-3 obstruction N ^ dN with components
/// T_ijk = N_i W_jk + N_j W_ki + N_k W_ij on increasing tuples. Works for
/// unit or raw geometry; vanishing is scale-invariant either way.
AltTensor frobenius_three_form(const PointGeometry& geom);

/// Relative vanishing threshold for a degree-k member of the wedge
/// sequence: tol * max(1, max-abs of dN)^ceil(k/2).
double vanish_threshold(double tol, double w_scale, int form_degree);

IntegrabilityReport integrability_class_at_point(const CovectorFieldSpec& spec,
                                                 const MetricSpec& metric,
                                                 const Eigen::VectorXd& x,
                                                 double tol = 1e-9,
                                                 DiffMode mode = DiffMode::analytic);

RegionReport classify_region(const CovectorFieldSpec& spec, const MetricSpec& metric,
                             const GridSpec& grid, double tol = 1e-9, int threads = 1);

}  // namespace pfgeom
