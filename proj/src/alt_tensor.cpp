#include "pfgeom/alt_tensor.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "pfgeom/error.hpp"

namespace pfgeom {

namespace {

void check_dims(int dim, int degree) {
  if (dim < 1 || dim > 6)
    throw Error(ErrorKind::ConfigError, "alternating tensor dimension must be in [1, 6]");
  if (degree < 1 || degree > dim)
    throw Error(ErrorKind::DegreeError, "alternating tensor degree must be in [1, dim]");
}

std::vector<std::vector<int>> build_tuples(int dim, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> t(k);
  for (int i = 0; i < k; ++i) t[i] = i;
  while (true) {
    out.push_back(t);
    int pos = k - 1;
    while (pos >= 0 && t[pos] == dim - k + pos) --pos;
    if (pos < 0) break;
    ++t[pos];
    for (int j = pos + 1; j < k; ++j) t[j] = t[j - 1] + 1;
  }
  return out;
}

int tuple_rank(int dim, int k, const std::vector<int>& tuple) {
  const auto& all = AltTensor::canonical_tuples(dim, k);
  auto it = std::lower_bound(all.begin(), all.end(), tuple);
  return static_cast<int>(it - all.begin());
}

}  // namespace

const std::vector<std::vector<int>>& AltTensor::canonical_tuples(int dim, int k) {
  static std::map<std::pair<int, int>, std::vector<std::vector<int>>> cache;
  auto key = std::make_pair(dim, k);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, build_tuples(dim, k)).first;
  return it->second;
}

AltTensor::AltTensor(int dim, int degree) : dim_(dim), degree_(degree) {
  check_dims(dim, degree);
  comps_.assign(canonical_tuples(dim, degree).size(), 0.0);
}

AltTensor AltTensor::from_covector(const Eigen::VectorXd& components) {
  AltTensor t(static_cast<int>(components.size()), 1);
  for (int i = 0; i < t.dim_; ++i) t.comps_[i] = components[i];
  return t;
}

AltTensor AltTensor::from_antisymmetric_matrix(const Eigen::MatrixXd& w) {
  const int dim = static_cast<int>(w.rows());
  AltTensor t(dim, 2);
  const auto& tuples = canonical_tuples(dim, 2);
  for (size_t r = 0; r < tuples.size(); ++r) t.comps_[r] = w(tuples[r][0], tuples[r][1]);
  return t;
}

double AltTensor::component(const std::vector<int>& indices) const {
  if (static_cast<int>(indices.size()) != degree_)
    throw Error(ErrorKind::DegreeError, "index tuple length does not match tensor degree");
  std::vector<int> sorted = indices;
  int sign = 1;
  // insertion sort, counting swaps
  for (size_t i = 1; i < sorted.size(); ++i) {
    for (size_t j = i; j > 0 && sorted[j - 1] > sorted[j]; --j) {
      std::swap(sorted[j - 1], sorted[j]);
      sign = -sign;
    }
  }
  for (size_t i = 1; i < sorted.size(); ++i)
    if (sorted[i] == sorted[i - 1]) return 0.0;
  return sign * comps_[tuple_rank(dim_, degree_, sorted)];
}

double AltTensor::frobenius_norm() const {
  double s = 0.0;
  for (double c : comps_) s += c * c;
  return std::sqrt(s);
}

double AltTensor::max_abs() const {
  double m = 0.0;
  for (double c : comps_) m = std::max(m, std::abs(c));
  return m;
}

bool AltTensor::is_zero() const {
  return max_abs() == 0.0;
}

AltTensor AltTensor::operator+(const AltTensor& other) const {
  if (dim_ != other.dim_ || degree_ != other.degree_)
    throw Error(ErrorKind::DegreeError, "cannot add alternating tensors of different shape");
  AltTensor out = *this;
  for (size_t i = 0; i < comps_.size(); ++i) out.comps_[i] += other.comps_[i];
  return out;
}

AltTensor AltTensor::operator*(double scalar) const {
  AltTensor out = *this;
  for (double& c : out.comps_) c *= scalar;
  return out;
}

AltTensor wedge_product(const AltTensor& a, const AltTensor& b) {
  if (a.dim() != b.dim())
    throw Error(ErrorKind::DegreeError, "wedge operands live on different spaces");
  const int dim = a.dim();
  const int degree = a.degree() + b.degree();
  if (degree > dim) return AltTensor(dim, dim);  // zero by convention

  AltTensor out(dim, degree);
  const auto& ta = AltTensor::canonical_tuples(dim, a.degree());
  const auto& tb = AltTensor::canonical_tuples(dim, b.degree());
  std::vector<int> merged(degree);
  for (size_t ia = 0; ia < ta.size(); ++ia) {
    if (a[static_cast<int>(ia)] == 0.0) continue;
    for (size_t ib = 0; ib < tb.size(); ++ib) {
      if (b[static_cast<int>(ib)] == 0.0) continue;
      const auto& u = ta[ia];
      const auto& v = tb[ib];
      // skip overlapping tuples
      bool overlap = false;
      for (int x : u) {
        if (std::binary_search(v.begin(), v.end(), x)) {
          overlap = true;
          break;
        }
      }
      if (overlap) continue;
      // merge and count inversions (pairs u[i] > v[j]) for the shuffle sign
      int inversions = 0;
      for (int x : u)
        for (int y : v)
          if (x > y) ++inversions;
      std::merge(u.begin(), u.end(), v.begin(), v.end(), merged.begin());
      const int sign = (inversions % 2 == 0) ? 1 : -1;
      const int rank = tuple_rank(dim, degree, merged);
      out[rank] += sign * a[static_cast<int>(ia)] * b[static_cast<int>(ib)];
    }
  }
  return out;
}

}  // namespace pfgeom
