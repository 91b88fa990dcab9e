#include "pfgeom/curvature.hpp"

#include <algorithm>
#include <cmath>

#include "pfgeom/error.hpp"

namespace pfgeom {

const char* to_string(PointClass c) {
  switch (c) {
    case PointClass::elliptic:
      return "elliptic";
    case PointClass::hyperbolic:
      return "hyperbolic";
    case PointClass::parabolic:
      return "parabolic";
    case PointClass::umbilic:
      return "umbilic";
    case PointClass::flat:
      return "flat";
    case PointClass::indefinite_metric:
      return "indefinite-metric";
  }
  return "unknown";
}

CurvatureReport curvature_report(const Eigen::MatrixXd& h_restricted,
                                 const Eigen::MatrixXd& restricted_metric,
                                 double eigen_zero_tol) {
  const int n = static_cast<int>(h_restricted.rows());
  if (restricted_metric.rows() != n || restricted_metric.cols() != n)
    throw Error(ErrorKind::ConfigError, "restricted metric shape mismatch");

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> metric_eig(restricted_metric);
  const Eigen::VectorXd mev = metric_eig.eigenvalues();
  const double metric_scale = mev.cwiseAbs().maxCoeff();
  if (metric_scale == 0.0 || mev.cwiseAbs().minCoeff() < 1e-12 * metric_scale)
    throw Error(ErrorKind::SingularMetric, "restricted metric is not invertible");
  const bool definite = mev.minCoeff() > 0.0 || mev.maxCoeff() < 0.0;

  CurvatureReport report;
  if (definite) {
    const double s = mev.minCoeff() > 0.0 ? 1.0 : -1.0;
    const Eigen::MatrixXd p = s * restricted_metric;  // positive definite
    Eigen::LLT<Eigen::MatrixXd> llt(p);
    const Eigen::MatrixXd l = llt.matrixL();
    const Eigen::MatrixXd sym = l.triangularView<Eigen::Lower>().solve(
        Eigen::MatrixXd(l.triangularView<Eigen::Lower>()
                            .solve(h_restricted.transpose())
                            .transpose()));
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(sym);
    Eigen::VectorXd kappa = s * eig.eigenvalues();
    std::sort(kappa.data(), kappa.data() + n);
    report.principal = kappa;
    report.real_spectrum = true;
    for (int i = 0; i < n; ++i) report.eigenvalues.emplace_back(kappa[i], 0.0);
  } else {
    const Eigen::MatrixXd shape = restricted_metric.inverse() * h_restricted;
    Eigen::EigenSolver<Eigen::MatrixXd> eig(shape);
    std::vector<std::complex<double>> vals(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) vals[static_cast<size_t>(i)] = eig.eigenvalues()[i];
    std::sort(vals.begin(), vals.end(), [](const auto& a, const auto& b) {
      if (a.real() != b.real()) return a.real() < b.real();
      return a.imag() < b.imag();
    });
    report.eigenvalues = vals;
    double scale = 0.0;
    for (const auto& v : vals) scale = std::max(scale, std::abs(v));
    report.real_spectrum = true;
    for (const auto& v : vals)
      if (std::abs(v.imag()) > eigen_zero_tol * std::max(1.0, scale))
        report.real_spectrum = false;
    if (report.real_spectrum) {
      report.principal.resize(n);
      for (int i = 0; i < n; ++i) report.principal[i] = vals[static_cast<size_t>(i)].real();
    }
  }

  // invariants from the eigenvalue list
  std::complex<double> trace(0.0, 0.0), det(1.0, 0.0);
  for (const auto& v : report.eigenvalues) {
    trace += v;
    det *= v;
  }
  report.mean_curvature = trace.real() / n;
  report.gaussian_curvature = det.real();

  if (!report.real_spectrum) {
    report.classification = PointClass::indefinite_metric;
    return report;
  }

  const double spectral_radius = report.principal.cwiseAbs().maxCoeff();
  const double zero = eigen_zero_tol * std::max(1.0, spectral_radius);
  int zeros = 0, positives = 0, negatives = 0;
  for (int i = 0; i < n; ++i) {
    const double k = report.principal[i];
    if (std::abs(k) < zero)
      ++zeros;
    else if (k > 0.0)
      ++positives;
    else
      ++negatives;
    if (std::abs(k) >= zero) report.radii.push_back(1.0 / k);
  }
  const double spread = report.principal[n - 1] - report.principal[0];
  if (zeros == n)
    report.classification = PointClass::flat;
  else if (spread < zero)
    report.classification = PointClass::umbilic;
  else if (zeros > 0)
    report.classification = PointClass::parabolic;
  else if (positives == n || negatives == n)
    report.classification = PointClass::elliptic;
  else
    report.classification = PointClass::hyperbolic;
  return report;
}

CurvatureReport curvature_report_at(const CovectorFieldSpec& spec, const MetricSpec& metric,
                                    const Eigen::VectorXd& x, DiffMode mode,
                                    double eigen_zero_tol) {
  const PointGeometry geom = differential_split(spec, metric, x, mode);
  const AdaptedFrame frame = adapted_frame(geom, metric);
  const Eigen::MatrixXd hbar = second_fundamental_restricted(geom, frame);
  CurvatureReport report =
      curvature_report(hbar, frame.restricted_metric(), eigen_zero_tol);
  report.point = x;
  return report;
}

std::vector<Eigen::Vector2d> asymptotic_directions(const Eigen::MatrixXd& h_restricted,
                                                   double tol) {
  if (h_restricted.rows() != 2 || h_restricted.cols() != 2)
    throw Error(ErrorKind::ConfigError, "asymptotic directions need a 2x2 form");
  const double a = h_restricted(0, 0);
  const double b = 0.5 * (h_restricted(0, 1) + h_restricted(1, 0));
  const double c = h_restricted(1, 1);
  const double scale = std::max({std::abs(a), std::abs(b), std::abs(c)});
  std::vector<Eigen::Vector2d> out;
  if (scale < tol) return out;  // flat: every direction is trivially null
  const double disc = b * b - a * c;
  if (disc <= tol * scale * scale) return out;  // definite or parabolic
  const double root = std::sqrt(disc);
  if (std::abs(a) < tol * scale && std::abs(c) < tol * scale) {
    // pure cross term 2 b t1 t2: the axes are the null directions
    out.emplace_back(Eigen::Vector2d(1.0, 0.0));
    out.emplace_back(Eigen::Vector2d(0.0, 1.0));
  } else if (std::abs(a) >= std::abs(c)) {
    // a t1^2 + 2 b t1 t2 + c t2^2 = 0 solved for t1 / t2
    out.emplace_back(Eigen::Vector2d((-b + root) / a, 1.0).normalized());
    out.emplace_back(Eigen::Vector2d((-b - root) / a, 1.0).normalized());
  } else {
    out.emplace_back(Eigen::Vector2d(1.0, (-b + root) / c).normalized());
    out.emplace_back(Eigen::Vector2d(1.0, (-b - root) / c).normalized());
  }
  return out;
}

NormalCurvature normal_curvature_of_direction(const Eigen::MatrixXd& h_restricted,
                                              const Eigen::VectorXd& signs,
                                              const Eigen::VectorXd& t,
                                              double asymptotic_tol, double unit_tol) {
  if (t.size() != h_restricted.rows() || t.size() != signs.size())
    throw Error(ErrorKind::ConfigError, "direction dimension mismatch");
  double unit = 0.0;
  for (int i = 0; i < t.size(); ++i) unit += signs[i] * t[i] * t[i];
  if (std::abs(unit - 1.0) > unit_tol)
    throw Error(ErrorKind::ConfigError, "direction is not a unit tangent vector");
  const double q = t.dot(h_restricted * t);
  NormalCurvature out;
  out.value = -q;
  out.asymptotic = std::abs(q) < asymptotic_tol;
  return out;
}

}  // namespace pfgeom
