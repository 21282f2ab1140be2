#pragma once

#include <span>
#include <vector>

#include "robinc/error.hpp"

namespace robinc {

/// Dense complex polynomial, coefficients in increasing degree order.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Complex> coeffs);

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Complex>& coeffs() const noexcept { return coeffs_; }
  Complex leading() const { return coeffs_.back(); }
  bool is_monic() const { return coeffs_.back() == Complex(1.0, 0.0); }

  Complex operator()(Complex z) const;

  /// p(z), p'(z), p''(z) by one Horner pass.
  struct Jet {
    Complex value, d1, d2;
  };
  Jet jet(Complex z) const;

  Polynomial derivative() const;

  /// p(z) - c, used for level-set preimages p(z) = c.
  Polynomial shifted(Complex c) const;

  /// Monic polynomial with the given zeros.
  static Polynomial from_roots(std::span<const Complex> roots);

 private:
  std::vector<Complex> coeffs_;
};

/// All zeros of p (degree >= 1) by Aberth-Ehrlich iteration with a Newton
/// polish, sorted by argument in (-pi, pi] and then by modulus.
/// Throws GeometryError when the iteration does not converge.
std::vector<Complex> polynomial_roots(const Polynomial& p);

}  // namespace robinc
