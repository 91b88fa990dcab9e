#include "pfgeom/em.hpp"

#include <cmath>

#include "pfgeom/error.hpp"
#include "pfgeom/metric.hpp"

namespace pfgeom::em {

namespace {

constexpr int kBase = 4;
constexpr double kBlowupLimit = 1e12;
constexpr double kSpeedTol = 1e-9;

Eigen::VectorXd minkowski_raise(const Eigen::VectorXd& cov) {
  Eigen::VectorXd out = -cov;
  out[0] = cov[0];
  return out;
}

double minkowski_pair(const Eigen::VectorXd& u, const Eigen::VectorXd& v) {
  return u[0] * v[0] - u[1] * v[1] - u[2] * v[2] - u[3] * v[3];
}

}  // namespace

FourPotentialSpec FourPotentialSpec::uniform_b_spec(double b) {
  FourPotentialSpec pot;
  pot.kind = Kind::uniform_b;
  pot.b_field = b;
  return pot;
}

FourPotentialSpec FourPotentialSpec::crossed_eb_spec(double e, double b) {
  FourPotentialSpec pot;
  pot.kind = Kind::crossed_eb;
  pot.e_field = e;
  pot.b_field = b;
  return pot;
}

FourPotentialSpec FourPotentialSpec::pure_gauge_spec(const Polynomial& phi) {
  FourPotentialSpec pot;
  pot.kind = Kind::pure_gauge;
  pot.gauge_phi = phi;
  return pot;
}

FourPotentialSpec FourPotentialSpec::custom_spec(std::vector<Polynomial> a) {
  FourPotentialSpec pot;
  pot.kind = Kind::custom;
  pot.custom_a = std::move(a);
  return pot;
}

void FourPotentialSpec::validate() const {
  if (m <= 0.0) throw Error(ErrorKind::ConfigError, "particle mass must be > 0");
  if (c <= 0.0) throw Error(ErrorKind::ConfigError, "speed of light must be > 0");
  if (kind == Kind::pure_gauge && gauge_phi.dim() != kBase)
    throw Error(ErrorKind::ConfigError, "pure_gauge potential needs a polynomial on R^4");
  if (kind == Kind::custom) {
    if (custom_a.size() != kBase)
      throw Error(ErrorKind::ConfigError, "custom potential needs 4 components");
    for (const auto& p : custom_a)
      if (p.dim() != kBase)
        throw Error(ErrorKind::ConfigError, "custom potential components live on R^4");
  }
}

std::string FourPotentialSpec::kind_name() const {
  switch (kind) {
    case Kind::uniform_b:
      return "uniform_B";
    case Kind::crossed_eb:
      return "crossed_EB";
    case Kind::pure_gauge:
      return "pure_gauge";
    case Kind::custom:
      return "custom";
  }
  return "unknown";
}

std::vector<Polynomial> FourPotentialSpec::components() const {
  validate();
  std::vector<Polynomial> a(kBase, Polynomial::zero(kBase));
  switch (kind) {
    case Kind::uniform_b:
      // symmetric gauge: A = (0, -B y / 2, B x / 2, 0) with x = x1, y = x2
      a[1] = Polynomial::coordinate(kBase, 2) * (-0.5 * b_field);
      a[2] = Polynomial::coordinate(kBase, 1) * (0.5 * b_field);
      break;
    case Kind::crossed_eb:
      a[0] = Polynomial::coordinate(kBase, 1) * (-e_field);
      a[3] = Polynomial::coordinate(kBase, 2) * b_field;
      break;
    case Kind::pure_gauge:
      for (int i = 0; i < kBase; ++i) a[i] = -gauge_phi.derivative(i);
      break;
    case Kind::custom:
      a = custom_a;
      break;
  }
  return a;
}

Eigen::MatrixXd FourPotentialSpec::field_strength(const Eigen::VectorXd& x4) const {
  if (x4.size() != kBase)
    throw Error(ErrorKind::ConfigError, "field strength needs a 4-dimensional point");
  const auto a = components();
  Eigen::MatrixXd f = Eigen::MatrixXd::Zero(kBase, kBase);
  for (int mu = 0; mu < kBase; ++mu) {
    for (int nu = mu + 1; nu < kBase; ++nu) {
      const double val = a[nu].derivative(mu).eval(x4) - a[mu].derivative(nu).eval(x4);
      f(mu, nu) = val;
      f(nu, mu) = -val;
    }
  }
  return f;
}

Eigen::VectorXd FourPotentialSpec::potential(const Eigen::VectorXd& x4) const {
  const auto a = components();
  Eigen::VectorXd out(kBase);
  for (int i = 0; i < kBase; ++i) out[i] = a[i].eval(x4);
  return out;
}

CovectorFieldSpec build_bundle_form(const FourPotentialSpec& pot) {
  const auto a = pot.components();
  std::vector<Polynomial> comps;
  comps.reserve(5);
  for (const auto& p : a) comps.push_back(p.extended(5));
  comps.push_back(Polynomial::constant(5, 1.0));
  return CovectorFieldSpec(std::move(comps), "em:" + pot.kind_name());
}

EMReport em_integrability_report(const FourPotentialSpec& pot, const GridSpec& grid4,
                                 double tol) {
  if (grid4.dim() != kBase)
    throw Error(ErrorKind::ConfigError, "em classification uses a 4-dimensional base grid");
  grid4.validate();

  const auto a_polys = pot.components();
  Eigen::VectorXd dphi5 = Eigen::VectorXd::Zero(5);
  dphi5[4] = 1.0;
  const AltTensor dphi = AltTensor::from_covector(dphi5);

  EMReport report;
  double f_scale = 0.0;  // max-abs component of F over the grid
  double ff_scale = 0.0;
  const long total = grid4.total_points();
  for (long i = 0; i < total; ++i) {
    const Eigen::VectorXd x = grid4.point(i);
    const Eigen::MatrixXd f4 = pot.field_strength(x);
    Eigen::MatrixXd f5 = Eigen::MatrixXd::Zero(5, 5);
    f5.topLeftCorner(4, 4) = f4;
    const AltTensor f = AltTensor::from_antisymmetric_matrix(f5);

    Eigen::VectorXd a5 = Eigen::VectorXd::Zero(5);
    a5.head(4) = pot.potential(x);
    const AltTensor a = AltTensor::from_covector(a5);

    const AltTensor af = wedge_product(a, f);
    const AltTensor ff = wedge_product(f, f);
    const AltTensor dphi_ff = wedge_product(dphi, ff);

    report.f_norm = std::max(report.f_norm, f.frobenius_norm());
    report.af_norm = std::max(report.af_norm, af.frobenius_norm());
    report.ff_norm = std::max(report.ff_norm, ff.frobenius_norm());
    report.dphi_ff_norm = std::max(report.dphi_ff_norm, dphi_ff.frobenius_norm());
    f_scale = std::max(f_scale, f.max_abs());
    ff_scale = std::max(ff_scale, ff.max_abs());
  }

  report.gauge_flag = f_scale < vanish_threshold(tol, f_scale, 2);
  if (report.gauge_flag)
    report.degree = 4;
  else if (ff_scale < vanish_threshold(tol, f_scale, 4))
    report.degree = 3;
  else
    report.degree = 2;
  return report;
}

namespace {

TrajectoryState lorentz_state(const FourPotentialSpec& pot, double s, const Eigen::VectorXd& x,
                              const Eigen::VectorXd& v) {
  TrajectoryState st;
  st.s = s;
  st.x = x;
  st.v = v;
  st.lambda = 0.0;
  const double vv = minkowski_pair(v, v);
  st.drift = std::abs(vv - pot.c * pot.c);
  st.speed = std::sqrt(std::abs(vv));
  return st;
}

void check_proper_velocity(const FourPotentialSpec& pot, const Eigen::VectorXd& x0,
                           const Eigen::VectorXd& v0) {
  if (x0.size() != kBase || v0.size() != kBase)
    throw Error(ErrorKind::ConfigError, "em integrators take 4-dimensional base data");
  if (std::abs(minkowski_pair(v0, v0) - pot.c * pot.c) > kSpeedTol)
    throw Error(ErrorKind::ConfigError,
                "initial velocity is not normalized to eta(v, v) = c^2");
}

}  // namespace

Trajectory lorentz_integrate(const FourPotentialSpec& pot, const Eigen::VectorXd& x0,
                             const Eigen::VectorXd& v0, const IntegratorSettings& settings) {
  settings.validate();
  pot.validate();
  check_proper_velocity(pot, x0, v0);

  const double qm = pot.q / pot.m;
  auto accel = [&](const Eigen::VectorXd& x, const Eigen::VectorXd& v) {
    const Eigen::MatrixXd f = pot.field_strength(x);
    return (qm * minkowski_raise(f * v)).eval();  // (F v)_mu = F_mu_nu v^nu
  };

  Trajectory traj;
  traj.dim = kBase;
  traj.kind = "lorentz";
  traj.step = settings.step;
  traj.steps = settings.steps;
  traj.states.reserve(static_cast<size_t>(settings.steps) + 1);

  Eigen::VectorXd x = x0, v = v0;
  traj.states.push_back(lorentz_state(pot, 0.0, x, v));
  const double h = settings.step;
  for (long n = 0; n < settings.steps; ++n) {
    const Eigen::VectorXd k1x = v, k1v = accel(x, v);
    const Eigen::VectorXd k2x = v + 0.5 * h * k1v, k2v = accel(x + 0.5 * h * k1x, k2x);
    const Eigen::VectorXd k3x = v + 0.5 * h * k2v, k3v = accel(x + 0.5 * h * k2x, k3x);
    const Eigen::VectorXd k4x = v + h * k3v, k4v = accel(x + h * k3x, k4x);
    x += (h / 6.0) * (k1x + 2.0 * k2x + 2.0 * k3x + k4x);
    v += (h / 6.0) * (k1v + 2.0 * k2v + 2.0 * k3v + k4v);
    if (x.cwiseAbs().maxCoeff() > kBlowupLimit || v.cwiseAbs().maxCoeff() > kBlowupLimit)
      throw Error(ErrorKind::NumericalBlowup, "lorentz trajectory exceeded 1e12");
    traj.states.push_back(lorentz_state(pot, (n + 1) * h, x, v));
  }
  return traj;
}

Trajectory constrained_geodesic_em(const FourPotentialSpec& pot, const Eigen::VectorXd& x0,
                                   const Eigen::VectorXd& v0,
                                   const IntegratorSettings& settings) {
  settings.validate();
  pot.validate();
  check_proper_velocity(pot, x0, v0);
  const double lambda = pot.lambda();
  const double factor = -pot.c * lambda;  // equals q/m

  auto accel = [&](const Eigen::VectorXd& x, const Eigen::VectorXd& v) {
    const Eigen::MatrixXd f = pot.field_strength(x);
    return (factor * minkowski_raise(f * v)).eval();
  };
  auto bundle_square = [&](const Eigen::VectorXd& x) {
    const Eigen::VectorXd a = pot.potential(x);
    return std::make_pair(minkowski_pair(a, a) + 1.0, a.squaredNorm() + 1.0);
  };
  auto make_state = [&](double s, const Eigen::VectorXd& x, const Eigen::VectorXd& v,
                        double phi) {
    TrajectoryState st;
    st.s = s;
    Eigen::VectorXd x5(5), v5(5);
    x5.head(4) = x;
    x5[4] = phi;
    const Eigen::VectorXd a = pot.potential(x);
    v5.head(4) = v;
    v5[4] = -a.dot(v);  // fiber velocity slaved to the constraint
    st.x = x5;
    st.v = v5;
    st.lambda = lambda;
    st.drift = std::abs(a.dot(v5.head(4)) + v5[4]);  // |Abar(vbar)|
    st.speed = std::sqrt(std::abs(minkowski_pair(v, v)));
    return st;
  };

  {
    const auto [q, scale] = bundle_square(x0);
    if (std::abs(q) < 1e-9 * std::max(1.0, scale))
      throw Error(ErrorKind::NullNormal,
                  "bundle form is metrically null at the start point");
  }

  Trajectory traj;
  traj.dim = 5;
  traj.kind = "em_geodesic";
  traj.step = settings.step;
  traj.steps = settings.steps;
  traj.states.reserve(static_cast<size_t>(settings.steps) + 1);

  Eigen::VectorXd x = x0, v = v0;
  double phi = 0.0;
  traj.states.push_back(make_state(0.0, x, v, phi));
  const double h = settings.step;
  for (long n = 0; n < settings.steps; ++n) {
    auto fiber_rate = [&](const Eigen::VectorXd& xs, const Eigen::VectorXd& vs) {
      return -pot.potential(xs).dot(vs);
    };
    const Eigen::VectorXd k1x = v, k1v = accel(x, v);
    const double k1p = fiber_rate(x, v);
    const Eigen::VectorXd k2x = v + 0.5 * h * k1v, k2v = accel(x + 0.5 * h * k1x, k2x);
    const double k2p = fiber_rate(x + 0.5 * h * k1x, k2x);
    const Eigen::VectorXd k3x = v + 0.5 * h * k2v, k3v = accel(x + 0.5 * h * k2x, k3x);
    const double k3p = fiber_rate(x + 0.5 * h * k2x, k3x);
    const Eigen::VectorXd k4x = v + h * k3v, k4v = accel(x + h * k3x, k4x);
    const double k4p = fiber_rate(x + h * k3x, k4x);

    x += (h / 6.0) * (k1x + 2.0 * k2x + 2.0 * k3x + k4x);
    v += (h / 6.0) * (k1v + 2.0 * k2v + 2.0 * k3v + k4v);
    phi += (h / 6.0) * (k1p + 2.0 * k2p + 2.0 * k3p + k4p);
    if (x.cwiseAbs().maxCoeff() > kBlowupLimit || v.cwiseAbs().maxCoeff() > kBlowupLimit ||
        std::abs(phi) > kBlowupLimit)
      throw Error(ErrorKind::NumericalBlowup, "bundle trajectory exceeded 1e12");

    const auto [q, scale] = bundle_square(x);
    if (std::abs(q) < 1e-9 * std::max(1.0, scale)) {
      traj.status = TrajectoryStatus::aborted_null_normal;
      traj.message = "bundle form became metrically null at sample " + std::to_string(n + 1);
      return traj;
    }
    traj.states.push_back(make_state((n + 1) * h, x, v, phi));
  }
  return traj;
}

TrajectoryDistance trajectory_compare(const Trajectory& a, const Trajectory& b) {
  if (a.states.size() != b.states.size())
    throw Error(ErrorKind::SampleMismatch, "trajectories have different sample counts");
  const int shared = std::min(a.dim, b.dim);
  TrajectoryDistance out;
  double sum_sq = 0.0;
  for (size_t i = 0; i < a.states.size(); ++i) {
    if (std::abs(a.states[i].s - b.states[i].s) > 1e-12)
      throw Error(ErrorKind::SampleMismatch, "trajectories have different parameters");
    const double d = (a.states[i].x.head(shared) - b.states[i].x.head(shared)).norm();
    out.max_pointwise = std::max(out.max_pointwise, d);
    sum_sq += d * d;
  }
  out.rms = std::sqrt(sum_sq / static_cast<double>(a.states.size()));
  return out;
}

}  // namespace pfgeom::em
