#include "pfgeom/polynomial.hpp"

#include <algorithm>
#include <cmath>

#include "pfgeom/error.hpp"

namespace pfgeom {

namespace {

double ipow(double base, int exponent) {
  double result = 1.0;
  for (int k = 0; k < exponent; ++k) result *= base;
  return result;
}

}  // namespace

Polynomial::Polynomial(int dim, std::vector<Term> terms)
    : dim_(dim), terms_(std::move(terms)) {
  for (const Term& t : terms_) {
    if (static_cast<int>(t.exponents.size()) != dim_)
      throw Error(ErrorKind::ConfigError,
                  "polynomial term exponent list does not match dimension");
    for (int e : t.exponents)
      if (e < 0)
        throw Error(ErrorKind::ConfigError, "polynomial exponents must be >= 0");
  }
  canonicalize();
}

Polynomial Polynomial::constant(int dim, double value) {
  return Polynomial(dim, {Term{value, std::vector<int>(dim, 0)}});
}

Polynomial Polynomial::monomial(int dim, double coeff, std::vector<int> exponents) {
  return Polynomial(dim, {Term{coeff, std::move(exponents)}});
}

Polynomial Polynomial::coordinate(int dim, int index) {
  std::vector<int> e(dim, 0);
  e[index] = 1;
  return Polynomial(dim, {Term{1.0, std::move(e)}});
}

void Polynomial::canonicalize() {
  std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) {
    return a.exponents < b.exponents;
  });
  std::vector<Term> merged;
  for (const Term& t : terms_) {
    if (!merged.empty() && merged.back().exponents == t.exponents)
      merged.back().coeff += t.coeff;
    else
      merged.push_back(t);
  }
  std::erase_if(merged, [](const Term& t) { return t.coeff == 0.0; });
  terms_ = std::move(merged);
}

double Polynomial::eval(const Eigen::VectorXd& x) const {
  double sum = 0.0;
  for (const Term& t : terms_) {
    double m = t.coeff;
    for (int i = 0; i < dim_; ++i)
      if (t.exponents[i] != 0) m *= ipow(x[i], t.exponents[i]);
    sum += m;
  }
  return sum;
}

Polynomial Polynomial::derivative(int axis) const {
  std::vector<Term> out;
  for (const Term& t : terms_) {
    if (t.exponents[axis] == 0) continue;
    Term d = t;
    d.coeff *= t.exponents[axis];
    d.exponents[axis] -= 1;
    out.push_back(std::move(d));
  }
  return Polynomial(dim_, std::move(out));
}

Polynomial Polynomial::extended(int new_dim) const {
  if (new_dim < dim_)
    throw Error(ErrorKind::ConfigError, "cannot shrink polynomial dimension");
  std::vector<Term> out = terms_;
  for (Term& t : out) t.exponents.resize(new_dim, 0);
  return Polynomial(new_dim, std::move(out));
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
  std::vector<Term> out = terms_;
  out.insert(out.end(), other.terms_.begin(), other.terms_.end());
  return Polynomial(dim_, std::move(out));
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
  return *this + (other * -1.0);
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
  std::vector<Term> out;
  out.reserve(terms_.size() * other.terms_.size());
  for (const Term& a : terms_) {
    for (const Term& b : other.terms_) {
      Term p;
      p.coeff = a.coeff * b.coeff;
      p.exponents.resize(dim_);
      for (int i = 0; i < dim_; ++i) p.exponents[i] = a.exponents[i] + b.exponents[i];
      out.push_back(std::move(p));
    }
  }
  return Polynomial(dim_, std::move(out));
}

Polynomial Polynomial::operator*(double scalar) const {
  std::vector<Term> out = terms_;
  for (Term& t : out) t.coeff *= scalar;
  return Polynomial(dim_, std::move(out));
}

}  // namespace pfgeom
