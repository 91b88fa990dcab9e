#include "pfgeom/frame.hpp"

#include <cmath>
#include <numeric>

#include "pfgeom/error.hpp"

namespace pfgeom {

std::pair<Eigen::MatrixXd, Eigen::MatrixXd> tangent_projectors(const PointGeometry& geom) {
  const int dim = geom.dim();
  const Eigen::MatrixXd p_n = geom.sign * geom.n_vec * geom.n_cov.transpose();
  const Eigen::MatrixXd p_t = Eigen::MatrixXd::Identity(dim, dim) - p_n;
  return {p_t, p_n};
}

namespace {

AdaptedFrame build_frame(const PointGeometry& geom, const MetricSpec& metric,
                         const std::vector<int>& axis_order, bool pivot, double pivot_tol) {
  const int dim = geom.dim();
  const int n = dim - 1;
  const auto [p_t, p_n] = tangent_projectors(geom);

  std::vector<Eigen::VectorXd> candidates;
  candidates.reserve(axis_order.size());
  for (int axis : axis_order) candidates.push_back(p_t.col(axis));

  AdaptedFrame frame;
  frame.x = geom.x;
  frame.n_cov = geom.n_cov;
  frame.n_vec = geom.n_vec;
  frame.normal_sign = geom.sign;
  frame.tangent.resize(dim, n);
  frame.signs.resize(n);
  frame.coframe.resize(n, dim);

  std::vector<bool> used(candidates.size(), false);
  for (int a = 0; a < n; ++a) {
    int chosen = -1;
    double best = -1.0;
    Eigen::VectorXd best_vec;
    for (size_t c = 0; c < candidates.size(); ++c) {
      if (used[c]) continue;
      // orthogonalize against the frame built so far
      Eigen::VectorXd v = candidates[c];
      for (int b = 0; b < a; ++b)
        v -= frame.signs[b] * metric.pair_vectors(v, frame.tangent.col(b)) *
             frame.tangent.col(b);
      const double q = std::abs(metric.pair_vectors(v, v));
      if (q > best + 0.0) {
        best = q;
        chosen = static_cast<int>(c);
        best_vec = v;
      }
      if (!pivot && q > pivot_tol) break;  // fixed order: first usable column
    }
    if (chosen < 0 || best < pivot_tol)
      throw Error(ErrorKind::DegenerateTangentMetric,
                  "no metrically nondegenerate pivot for the tangent frame");
    used[static_cast<size_t>(chosen)] = true;
    const double q = metric.pair_vectors(best_vec, best_vec);
    frame.signs[a] = q > 0.0 ? 1.0 : -1.0;
    frame.tangent.col(a) = best_vec / std::sqrt(std::abs(q));
    frame.coframe.row(a) = frame.signs[a] * metric.lower(frame.tangent.col(a)).transpose();
  }
  return frame;
}

}  // namespace

AdaptedFrame adapted_frame(const PointGeometry& geom, const MetricSpec& metric,
                           double pivot_tol) {
  std::vector<int> order(static_cast<size_t>(geom.dim()));
  std::iota(order.begin(), order.end(), 0);
  return build_frame(geom, metric, order, /*pivot=*/true, pivot_tol);
}

AdaptedFrame adapted_frame_ordered(const PointGeometry& geom, const MetricSpec& metric,
                                   const std::vector<int>& axis_order, double pivot_tol) {
  return build_frame(geom, metric, axis_order, /*pivot=*/false, pivot_tol);
}

Eigen::MatrixXd second_fundamental_restricted(const PointGeometry& geom,
                                              const AdaptedFrame& frame) {
  return frame.tangent.transpose() * geom.sym * frame.tangent;
}

OmegaSplit omega_decompose(const PointGeometry& geom, const AdaptedFrame& frame) {
  OmegaSplit split;
  split.varpi = frame.tangent.transpose() * geom.antisym * frame.tangent;
  split.eta = geom.sign * frame.tangent.transpose() * geom.antisym * geom.n_vec;
  return split;
}

}  // namespace pfgeom
