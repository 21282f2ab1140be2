#include "robinc/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace robinc {

Polynomial::Polynomial(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
  while (coeffs_.size() > 1 && coeffs_.back() == Complex(0.0, 0.0)) coeffs_.pop_back();
  if (coeffs_.empty()) coeffs_.push_back(Complex(0.0, 0.0));
}

Complex Polynomial::operator()(Complex z) const {
  Complex acc = coeffs_.back();
  for (auto it = coeffs_.rbegin() + 1; it != coeffs_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

Polynomial::Jet Polynomial::jet(Complex z) const {
  Complex p = coeffs_.back(), dp = 0.0, ddp = 0.0;
  for (auto it = coeffs_.rbegin() + 1; it != coeffs_.rend(); ++it) {
    ddp = ddp * z + 2.0 * dp;
    dp = dp * z + p;
    p = p * z + *it;
  }
  return {p, dp, ddp};
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return Polynomial({0.0});
  std::vector<Complex> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = static_cast<double>(k) * coeffs_[k];
  return Polynomial(std::move(d));
}

Polynomial Polynomial::shifted(Complex c) const {
  auto c2 = coeffs_;
  c2[0] -= c;
  return Polynomial(std::move(c2));
}

Polynomial Polynomial::from_roots(std::span<const Complex> roots) {
  std::vector<Complex> c{Complex(1.0, 0.0)};
  for (Complex r : roots) {
    std::vector<Complex> next(c.size() + 1, Complex(0.0, 0.0));
    for (std::size_t k = 0; k < c.size(); ++k) {
      next[k + 1] += c[k];
      next[k] -= r * c[k];
    }
    c = std::move(next);
  }
  return Polynomial(std::move(c));
}

namespace {

std::vector<Complex> quadratic_roots(const Polynomial& p) {
  const auto& c = p.coeffs();
  const Complex a = c[2], b = c[1], cc = c[0];
  const Complex disc = std::sqrt(b * b - 4.0 * a * cc);
  // choose the sign that avoids cancellation
  const Complex q = (std::real(std::conj(b) * disc) >= 0.0) ? -0.5 * (b + disc) : -0.5 * (b - disc);
  if (q == Complex(0.0, 0.0)) return {Complex(0.0, 0.0), Complex(0.0, 0.0)};
  return {q / a, cc / q};
}

void newton_polish(const Polynomial& p, Complex& z) {
  for (int it = 0; it < 4; ++it) {
    const auto j = p.jet(z);
    if (j.d1 == Complex(0.0, 0.0)) return;
    const Complex step = j.value / j.d1;
    z -= step;
    if (std::abs(step) <= 1e-17 * std::max(1.0, std::abs(z))) return;
  }
}

}  // namespace

std::vector<Complex> polynomial_roots(const Polynomial& p) {
  const int m = p.degree();
  if (m < 1) throw InvalidArgument("polynomial_roots: degree must be at least 1");

  std::vector<Complex> z;
  if (m == 1) {
    z = {-p.coeffs()[0] / p.coeffs()[1]};
  } else if (m == 2) {
    z = quadratic_roots(p);
  } else {
    // Cauchy bound for the initial circle; offset angle avoids symmetric stalls
    const auto& c = p.coeffs();
    double bound = 0.0;
    for (int k = 0; k < m; ++k) bound = std::max(bound, std::abs(c[k] / c[m]));
    const double radius = 0.5 * (1.0 + bound);
    z.resize(m);
    for (int k = 0; k < m; ++k)
      z[k] = std::polar(radius, 2.0 * std::numbers::pi * k / m + 0.4);

    bool converged = false;
    double last = 0.0;
    for (int iter = 0; iter < 500 && !converged; ++iter) {
      converged = true;
      last = 0.0;
      for (int k = 0; k < m; ++k) {
        const auto j = p.jet(z[k]);
        if (j.value == Complex(0.0, 0.0)) continue;
        const Complex ratio = j.value / j.d1;
        Complex repulsion = 0.0;
        for (int l = 0; l < m; ++l)
          if (l != k) repulsion += 1.0 / (z[k] - z[l]);
        const Complex w = ratio / (1.0 - ratio * repulsion);
        z[k] -= w;
        const double rel = std::abs(w) / std::max(1.0, std::abs(z[k]));
        last = std::max(last, rel);
        if (rel > 4e-15) converged = false;
      }
    }
    // rounding noise can keep corrections just above the tolerance
    if (!converged && !(last < 1e-9)) throw GeometryError("polynomial_roots: Aberth iteration did not converge");
  }

  for (auto& r : z) {
    if (!std::isfinite(r.real()) || !std::isfinite(r.imag()))
      throw GeometryError("polynomial_roots: non-finite root");
    newton_polish(p, r);
  }
  std::sort(z.begin(), z.end(), [](Complex a, Complex b) {
    const double aa = std::arg(a), ab = std::arg(b);
    if (aa != ab) return aa < ab;
    return std::abs(a) < std::abs(b);
  });
  return z;
}

}  // namespace robinc
