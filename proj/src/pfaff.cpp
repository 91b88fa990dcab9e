#include "pfgeom/pfaff.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

namespace pfgeom {

long GridSpec::total_points() const {
  long total = 1;
  for (int i = 0; i < dim(); ++i) total *= samples_per_axis;
  return total;
}

void GridSpec::validate() const {
  if (samples_per_axis < 1)
    throw Error(ErrorKind::ConfigError, "grid samples_per_axis must be >= 1");
  if (half_width.size() != center.size())
    throw Error(ErrorKind::ConfigError, "grid half_width length must match center");
  if (total_points() > 1000000)
    throw Error(ErrorKind::ConfigError, "grid exceeds the 10^6 point ceiling");
}

Eigen::VectorXd GridSpec::point(long flat_index) const {
  const int d = dim();
  Eigen::VectorXd x(d);
  long rest = flat_index;
  for (int axis = d - 1; axis >= 0; --axis) {
    const int t = static_cast<int>(rest % samples_per_axis);
    rest /= samples_per_axis;
    if (samples_per_axis == 1)
      x[axis] = center[axis];
    else
      x[axis] = center[axis] - half_width[axis] +
                2.0 * half_width[axis] * t / (samples_per_axis - 1);
  }
  return x;
}

AltTensor frobenius_three_form(const PointGeometry& geom) {
  const int dim = geom.dim();
  if (dim < 3)
    throw Error(ErrorKind::DegreeError,
                "the integrability 3-form needs dimension >= 3");
  AltTensor out(dim, 3);
  const auto& tuples = AltTensor::canonical_tuples(dim, 3);
  const Eigen::VectorXd& n = geom.n_cov;
  const Eigen::MatrixXd& w = geom.antisym;
  for (size_t r = 0; r < tuples.size(); ++r) {
    const int i = tuples[r][0], j = tuples[r][1], k = tuples[r][2];
    out[static_cast<int>(r)] = n[i] * w(j, k) + n[j] * w(k, i) + n[k] * w(i, j);
  }
  return out;
}

double vanish_threshold(double tol, double w_scale, int form_degree) {
  const int power = (form_degree + 1) / 2;
  return tol * std::pow(std::max(1.0, w_scale), power);
}

IntegrabilityReport integrability_class_at_point(const CovectorFieldSpec& spec,
                                                 const MetricSpec& metric,
                                                 const Eigen::VectorXd& x, double tol,
                                                 DiffMode mode) {
  const PointGeometry geom = differential_split(spec, metric, x, mode);
  const int dim = geom.dim();

  const AltTensor n_form = AltTensor::from_covector(geom.n_cov);
  const AltTensor w_form = AltTensor::from_antisymmetric_matrix(geom.antisym);
  const double w_scale = w_form.max_abs();

  IntegrabilityReport report;
  report.point = x;

  // interleaved norm sequence [dN, N^dN, (dN)^2, N^(dN)^2, ...]
  AltTensor w_power = w_form;  // (dN)^m
  int m = 1;
  while (true) {
    const std::string power_label =
        m == 1 ? std::string("dN") : "(dN)^" + std::to_string(m);
    report.sequence_norms.emplace_back(power_label, w_power.frobenius_norm());
    if (2 * m + 1 > dim) break;
    const AltTensor mixed = wedge_product(n_form, w_power);
    const std::string mixed_label =
        m == 1 ? std::string("N^dN") : "N^(dN)^" + std::to_string(m);
    report.sequence_norms.emplace_back(mixed_label, mixed.frobenius_norm());
    if (2 * (m + 1) > dim) break;
    w_power = wedge_product(w_power, w_form);
    ++m;
  }

  // pair count: largest j with N ^ (dN)^j nonvanishing
  const int j_max = (dim - 1) / 2;
  int pair_count = 0;
  AltTensor member = n_form;  // j = 0
  std::vector<double> member_max(static_cast<size_t>(j_max) + 1);
  member_max[0] = member.max_abs();
  for (int j = 1; j <= j_max; ++j) {
    member = wedge_product(member, w_form);
    member_max[static_cast<size_t>(j)] = member.max_abs();
  }
  for (int j = j_max; j >= 0; --j) {
    if (member_max[static_cast<size_t>(j)] >= vanish_threshold(tol, w_scale, 1 + 2 * j)) {
      pair_count = j;
      break;
    }
  }

  report.pair_count = pair_count;
  report.degree_of_integrability = dim - 1 - pair_count;
  report.completely_integrable = pair_count == 0;
  return report;
}

RegionReport classify_region(const CovectorFieldSpec& spec, const MetricSpec& metric,
                             const GridSpec& grid, double tol, int threads) {
  grid.validate();
  const long total = grid.total_points();

  struct PointOutcome {
    bool ok = false;
    IntegrabilityReport report;
    ErrorKind kind = ErrorKind::ZeroForm;
    std::string message;
  };
  std::vector<PointOutcome> outcomes(static_cast<size_t>(total));

  auto worker = [&](long begin, long end) {
    for (long i = begin; i < end; ++i) {
      PointOutcome& out = outcomes[static_cast<size_t>(i)];
      const Eigen::VectorXd x = grid.point(i);
      try {
        out.report = integrability_class_at_point(spec, metric, x, tol);
        out.ok = true;
      } catch (const Error& e) {
        out.kind = e.kind();
        out.message = e.detail();
      }
    }
  };

  threads = std::max(1, threads);
  if (threads == 1 || total < 2 * threads) {
    worker(0, total);
  } else {
    std::vector<std::thread> pool;
    const long chunk = (total + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
      const long begin = t * chunk;
      const long end = std::min(total, begin + chunk);
      if (begin < end) pool.emplace_back(worker, begin, end);
    }
    for (auto& th : pool) th.join();
  }

  // deterministic reduction in grid order
  RegionReport region;
  region.total_points = total;
  for (long i = 0; i < total; ++i) {
    const PointOutcome& out = outcomes[static_cast<size_t>(i)];
    if (!out.ok) {
      region.exceptional.push_back(
          ExceptionalPoint{i, grid.point(i), out.kind, out.message});
      continue;
    }
    region.histogram[out.report.degree_of_integrability] += 1;
    for (const auto& [label, norm] : out.report.sequence_norms) {
      auto it = region.norm_range.find(label);
      if (it == region.norm_range.end())
        region.norm_range.emplace(label, std::make_pair(norm, norm));
      else {
        it->second.first = std::min(it->second.first, norm);
        it->second.second = std::max(it->second.second, norm);
      }
    }
  }
  long best = -1;
  for (const auto& [degree, count] : region.histogram) {
    if (count > best) {
      best = count;
      region.majority_degree = degree;
    }
  }
  return region;
}

}  // namespace pfgeom
