#include "pfgeom/point_geometry.hpp"

#include <cmath>
#include <limits>

#include "pfgeom/error.hpp"

namespace pfgeom {

namespace {

constexpr double kZeroFormFloor = 1e-150;

double fd_step(double coord) {
  static const double h0 = std::cbrt(std::numeric_limits<double>::epsilon());
  return h0 * std::max(1.0, std::abs(coord));
}

void split_jacobian(PointGeometry& g, const Eigen::MatrixXd& jac) {
  g.sym = 0.5 * (jac + jac.transpose());
  g.antisym = jac - jac.transpose();
  g.jac = g.sym + 0.5 * g.antisym;
}

}  // namespace

double PointGeometry::h_form(const Eigen::VectorXd& u, const Eigen::VectorXd& v) const {
  return u.dot(sym * v);
}

double PointGeometry::w_form(const Eigen::VectorXd& u, const Eigen::VectorXd& v) const {
  return u.dot(antisym * v);
}

UnitNormal metric_dual_unit(const Eigen::VectorXd& n_raw, const MetricSpec& metric,
                            double null_tol) {
  if (static_cast<int>(n_raw.size()) != metric.dim)
    throw Error(ErrorKind::ConfigError, "covector dimension does not match metric");
  const double comp2 = n_raw.squaredNorm();
  if (comp2 < kZeroFormFloor)
    throw Error(ErrorKind::ZeroForm, "covector field vanishes at the evaluation point");
  const double q = metric.pair_covectors(n_raw, n_raw);
  if (std::abs(q) < null_tol * std::max(1.0, comp2))
    throw Error(ErrorKind::NullNormal, "normal covector is metrically null at the point");
  UnitNormal u;
  u.norm = std::sqrt(std::abs(q));
  u.sign = q > 0.0 ? 1.0 : -1.0;
  u.n_cov = n_raw / u.norm;
  u.n_vec = metric.raise(u.n_cov);
  return u;
}

PointGeometry differential_split(const CovectorFieldSpec& spec, const MetricSpec& metric,
                                 const Eigen::VectorXd& x, DiffMode mode, double null_tol) {
  const int dim = spec.dim();
  if (metric.dim != dim)
    throw Error(ErrorKind::ConfigError, "metric dimension does not match covector field");

  const Eigen::VectorXd raw = spec.eval(x);
  const UnitNormal unit = metric_dual_unit(raw, metric, null_tol);

  PointGeometry g;
  g.x = x;
  g.n_cov = unit.n_cov;
  g.n_vec = unit.n_vec;
  g.norm = unit.norm;
  g.sign = unit.sign;

  Eigen::MatrixXd jac(dim, dim);
  if (mode == DiffMode::analytic) {
    // d_i (N_j / rho) = J_ij / rho - N_j d_i rho / rho^2, with
    // rho d_i rho = sign(q) g^{kl} J_ik N_l.
    const Eigen::MatrixXd jraw = spec.raw_jacobian(x);
    Eigen::VectorXd drho(dim);
    const Eigen::VectorXd raw_vec = metric.raise(raw);
    for (int i = 0; i < dim; ++i)
      drho[i] = unit.sign * jraw.row(i).dot(raw_vec) / unit.norm;
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j)
        jac(i, j) = (jraw(i, j) - unit.n_cov[j] * drho[i]) / unit.norm;
  } else {
    for (int i = 0; i < dim; ++i) {
      const double h = fd_step(x[i]);
      Eigen::VectorXd xp = x, xm = x;
      xp[i] += h;
      xm[i] -= h;
      const UnitNormal up = metric_dual_unit(spec.eval(xp), metric, null_tol);
      const UnitNormal um = metric_dual_unit(spec.eval(xm), metric, null_tol);
      for (int j = 0; j < dim; ++j) jac(i, j) = (up.n_cov[j] - um.n_cov[j]) / (2.0 * h);
    }
  }
  split_jacobian(g, jac);
  return g;
}

PointGeometry differential_split_raw(const CovectorFieldSpec& spec, const MetricSpec& metric,
                                     const Eigen::VectorXd& x, double null_tol) {
  const int dim = spec.dim();
  if (metric.dim != dim)
    throw Error(ErrorKind::ConfigError, "metric dimension does not match covector field");
  const Eigen::VectorXd raw = spec.eval(x);
  if (raw.squaredNorm() < kZeroFormFloor)
    throw Error(ErrorKind::ZeroForm, "covector field vanishes at the evaluation point");

  PointGeometry g;
  g.x = x;
  g.n_cov = raw;
  g.n_vec = metric.raise(raw);
  const double q = metric.pair_covectors(raw, raw);
  g.norm = std::sqrt(std::abs(q));
  g.sign = q >= 0.0 ? 1.0 : -1.0;
  (void)null_tol;
  split_jacobian(g, spec.raw_jacobian(x));
  return g;
}

double unit_normal_divergence_fd(const CovectorFieldSpec& spec, const MetricSpec& metric,
                                 const Eigen::VectorXd& x) {
  const int dim = spec.dim();
  double div = 0.0;
  for (int i = 0; i < dim; ++i) {
    const double h = fd_step(x[i]);
    Eigen::VectorXd xp = x, xm = x;
    xp[i] += h;
    xm[i] -= h;
    const UnitNormal up = metric_dual_unit(spec.eval(xp), metric);
    const UnitNormal um = metric_dual_unit(spec.eval(xm), metric);
    div += (up.n_vec[i] - um.n_vec[i]) / (2.0 * h);
  }
  return div;
}

}  // namespace pfgeom
