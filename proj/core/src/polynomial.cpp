#include "besselgauss/polynomial.hpp"

#include <algorithm>

#include "besselgauss/errors.hpp"

namespace besselgauss {

bool Polynomial::is_zero() const noexcept {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](double c) { return c == 0.0; });
}

double Polynomial::operator()(double t) const noexcept {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

Polynomial Polynomial::derivative(int r) const {
  if (r < 0) throw InvalidArgument("derivative order must be non-negative");
  std::vector<double> c = coeffs_;
  for (int step = 0; step < r && !c.empty(); ++step) {
    for (std::size_t i = 1; i < c.size(); ++i) c[i - 1] = c[i] * static_cast<double>(i);
    c.pop_back();
  }
  return Polynomial(std::move(c));
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), 0.0);
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

Polynomial& Polynomial::operator*=(double s) {
  for (double& c : coeffs_) c *= s;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.coeffs_.empty() || b.coeffs_.empty()) return {};
  std::vector<double> c(a.coeffs_.size() + b.coeffs_.size() - 1, 0.0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return Polynomial(std::move(c));
}

Polynomial poly_derivative(const Polynomial& p, int r) { return p.derivative(r); }

}  // namespace besselgauss
