#include "pfgeom/covector_field.hpp"

#include "pfgeom/error.hpp"

namespace pfgeom {

CovectorFieldSpec::CovectorFieldSpec(std::vector<Polynomial> components, std::string label)
    : dim_(static_cast<int>(components.size())),
      components_(std::move(components)),
      label_(std::move(label)) {
  if (dim_ < 2 || dim_ > 6)
    throw Error(ErrorKind::ConfigError, "covector field dimension must be in [2, 6]");
  for (const Polynomial& p : components_)
    if (p.dim() != dim_)
      throw Error(ErrorKind::ConfigError,
                  "covector component polynomial dimension mismatch");
  derivatives_.resize(dim_);
  for (int j = 0; j < dim_; ++j) {
    derivatives_[j].reserve(dim_);
    for (int i = 0; i < dim_; ++i) derivatives_[j].push_back(components_[j].derivative(i));
  }
}

CovectorFieldSpec CovectorFieldSpec::exact_sphere(int dim) {
  std::vector<Polynomial> c;
  for (int i = 0; i < dim; ++i) c.push_back(Polynomial::coordinate(dim, i));
  return CovectorFieldSpec(std::move(c), "exact_sphere");
}

CovectorFieldSpec CovectorFieldSpec::linear(int dim) {
  std::vector<Polynomial> c(static_cast<size_t>(dim), Polynomial::zero(dim));
  c[dim - 1] = Polynomial::constant(dim, 1.0);
  return CovectorFieldSpec(std::move(c), "linear");
}

CovectorFieldSpec CovectorFieldSpec::integrating_factor(const Polynomial& lambda,
                                                        const Polynomial& phi) {
  if (lambda.dim() != phi.dim())
    throw Error(ErrorKind::ConfigError, "integrating_factor polynomials disagree on dimension");
  const int dim = lambda.dim();
  std::vector<Polynomial> c;
  for (int i = 0; i < dim; ++i) c.push_back(lambda * phi.derivative(i));
  return CovectorFieldSpec(std::move(c), "integrating_factor");
}

CovectorFieldSpec CovectorFieldSpec::integrating_factor_default(int dim) {
  Polynomial lambda = Polynomial::constant(dim, 1.0) +
                      Polynomial::coordinate(dim, 0) * Polynomial::coordinate(dim, 0);
  Polynomial phi = Polynomial::coordinate(dim, dim - 1);
  return integrating_factor(lambda, phi);
}

CovectorFieldSpec CovectorFieldSpec::contact() {
  const int dim = 3;
  std::vector<Polynomial> c(3, Polynomial::zero(dim));
  c[0] = -Polynomial::coordinate(dim, 1);       // -y dx
  c[2] = Polynomial::constant(dim, 1.0);        // dz
  return CovectorFieldSpec(std::move(c), "contact");
}

CovectorFieldSpec CovectorFieldSpec::darboux(int k, int dim) {
  if (k < 1) throw Error(ErrorKind::ConfigError, "darboux_k requires k >= 1");
  if (dim < 2 * k + 1)
    throw Error(ErrorKind::ConfigError, "darboux_k requires dimension >= 2k + 1");
  std::vector<Polynomial> c(static_cast<size_t>(dim), Polynomial::zero(dim));
  c[0] = Polynomial::constant(dim, 1.0);
  for (int i = 1; i <= k; ++i) c[2 * i] = Polynomial::coordinate(dim, 2 * i - 1);
  return CovectorFieldSpec(std::move(c), "darboux_" + std::to_string(k));
}

CovectorFieldSpec CovectorFieldSpec::catalog(const std::string& name, int dim, int k) {
  if (name == "exact_sphere") return exact_sphere(dim);
  if (name == "linear") return linear(dim);
  if (name == "integrating_factor") return integrating_factor_default(dim);
  if (name == "contact") {
    if (dim != 3)
      throw Error(ErrorKind::ConfigError, "catalog form \"contact\" requires dimension 3");
    return contact();
  }
  if (name == "darboux_k" || name == "darboux") return darboux(k, dim);
  throw Error(ErrorKind::ConfigError, "unknown catalog form \"" + name + "\"");
}

Eigen::VectorXd CovectorFieldSpec::eval(const Eigen::VectorXd& x) const {
  if (static_cast<int>(x.size()) != dim_)
    throw Error(ErrorKind::ConfigError, "point dimension does not match covector field");
  Eigen::VectorXd out(dim_);
  for (int j = 0; j < dim_; ++j) out[j] = components_[j].eval(x);
  return out;
}

Eigen::MatrixXd CovectorFieldSpec::raw_jacobian(const Eigen::VectorXd& x) const {
  if (static_cast<int>(x.size()) != dim_)
    throw Error(ErrorKind::ConfigError, "point dimension does not match covector field");
  Eigen::MatrixXd out(dim_, dim_);
  for (int j = 0; j < dim_; ++j)
    for (int i = 0; i < dim_; ++i) out(i, j) = derivatives_[j][i].eval(x);
  return out;
}

CovectorFieldSpec CovectorFieldSpec::scaled(double factor) const {
  std::vector<Polynomial> c;
  c.reserve(components_.size());
  for (const Polynomial& p : components_) c.push_back(p * factor);
  return CovectorFieldSpec(std::move(c), label_ + "_scaled");
}

Eigen::VectorXd eval_covector(const CovectorFieldSpec& spec, const Eigen::VectorXd& x) {
  return spec.eval(x);
}

}  // namespace pfgeom
