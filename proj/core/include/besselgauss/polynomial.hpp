#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace besselgauss {

/// Dense real polynomial, coefficients in ascending powers. An empty
/// coefficient vector is the zero polynomial (degree -1).
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {}
  Polynomial(std::initializer_list<double> coeffs) : coeffs_(coeffs) {}

  std::span<const double> coeffs() const noexcept { return coeffs_; }
  std::size_t size() const noexcept { return coeffs_.size(); }
  double operator[](std::size_t i) const { return coeffs_[i]; }

  /// Degree as stored; -1 for the zero polynomial. Trailing zero
  /// coefficients are not trimmed.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept;

  /// Horner evaluation.
  double operator()(double t) const noexcept;

  /// r-th derivative by repeated shift-and-scale; exact while the
  /// coefficients stay representable.
  Polynomial derivative(int r = 1) const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator*=(double s);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator*(Polynomial a, double s) { return a *= s; }
  friend Polynomial operator*(double s, Polynomial a) { return a *= s; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  std::vector<double> coeffs_;
};

/// Free-function form of Polynomial::derivative.
Polynomial poly_derivative(const Polynomial& p, int r);

}  // namespace besselgauss
