#include "pfgeom/metric.hpp"

#include "pfgeom/error.hpp"

namespace pfgeom {

namespace {

void check_dim(int dim) {
  if (dim < 2 || dim > 6)
    throw Error(ErrorKind::ConfigError, "metric dimension must be in [2, 6]");
}

}  // namespace

MetricSpec MetricSpec::euclidean(int dim) {
  check_dim(dim);
  MetricSpec m;
  m.dim = dim;
  m.diag = Eigen::VectorXd::Ones(dim);
  m.inverse_diag = Eigen::VectorXd::Ones(dim);
  m.name = "euclidean";
  return m;
}

MetricSpec MetricSpec::minkowski() {
  Eigen::VectorXd d(4);
  d << 1.0, -1.0, -1.0, -1.0;
  MetricSpec m = from_diag(d);
  m.name = "minkowski";
  return m;
}

MetricSpec MetricSpec::bundle5() {
  Eigen::VectorXd d(5);
  d << 1.0, -1.0, -1.0, -1.0, 1.0;
  MetricSpec m = from_diag(d);
  m.name = "bundle5";
  return m;
}

MetricSpec MetricSpec::from_diag(const Eigen::VectorXd& diag) {
  check_dim(static_cast<int>(diag.size()));
  MetricSpec m;
  m.dim = static_cast<int>(diag.size());
  m.diag = diag;
  m.inverse_diag.resize(m.dim);
  for (int i = 0; i < m.dim; ++i) {
    if (diag[i] == 0.0)
      throw Error(ErrorKind::ConfigError, "metric diagonal entries must be nonzero");
    m.inverse_diag[i] = 1.0 / diag[i];
  }
  m.name = "diag";
  return m;
}

MetricSpec MetricSpec::preset(const std::string& name, int dim) {
  if (name == "euclidean") return euclidean(dim);
  if (name == "minkowski") {
    if (dim != 4)
      throw Error(ErrorKind::ConfigError, "metric preset \"minkowski\" requires dimension 4");
    return minkowski();
  }
  if (name == "bundle5") {
    if (dim != 5)
      throw Error(ErrorKind::ConfigError, "metric preset \"bundle5\" requires dimension 5");
    return bundle5();
  }
  throw Error(ErrorKind::ConfigError, "unknown metric preset \"" + name + "\"");
}

double MetricSpec::pair_covectors(const Eigen::VectorXd& a, const Eigen::VectorXd& b) const {
  double s = 0.0;
  for (int i = 0; i < dim; ++i) s += inverse_diag[i] * a[i] * b[i];
  return s;
}

double MetricSpec::pair_vectors(const Eigen::VectorXd& u, const Eigen::VectorXd& v) const {
  double s = 0.0;
  for (int i = 0; i < dim; ++i) s += diag[i] * u[i] * v[i];
  return s;
}

Eigen::VectorXd MetricSpec::raise(const Eigen::VectorXd& covector) const {
  return inverse_diag.cwiseProduct(covector);
}

Eigen::VectorXd MetricSpec::lower(const Eigen::VectorXd& vector) const {
  return diag.cwiseProduct(vector);
}

}  // namespace pfgeom
