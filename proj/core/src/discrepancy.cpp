#include "robinc/discrepancy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include "robinc/parallel.hpp"
#include "robinc/point_generation.hpp"

namespace robinc {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();

void require_in_E(const PointConfiguration& cfg, const CompactSet& set, const char* where) {
  for (Complex z : cfg.points)
    if (set.green(z) > CompactSet::kOuterThreshold)
      throw InvalidArgument(std::string(where) + ": configuration must lie in E");
}

double mean_phi(const TestFunction& phi, const PointConfiguration& cfg) {
  std::vector<double> v(cfg.size());
  for (std::size_t k = 0; k < cfg.size(); ++k) v[k] = phi(cfg.points[k]);
  return pairwise_sum(v) / static_cast<double>(cfg.size());
}

double quad_phi(const TestFunction& phi, const CompactSet& set, int N) {
  const auto q = set.equilibrium_quadrature(N);
  std::vector<double> v(q.nodes.size());
  for (std::size_t j = 0; j < q.nodes.size(); ++j) v[j] = q.weights[j] * phi(q.nodes[j]);
  return pairwise_sum(v);
}

struct Fixed {
  int n = 0;
  double m_E = 0.0;
  double I_hat = 0.0;
  double V_E = 0.0;
};

Fixed fixed_terms(const PointConfiguration& cfg, const CompactSet& set) {
  if (cfg.size() < 2) throw InvalidArgument("discrepancy: need at least 2 points");
  return {cfg.n(), m_E(cfg, set), discrete_energy(cfg), set.robin_constant()};
}

ITerms terms_at(const Fixed& f, const CompactSet& set, double r) {
  ITerms t;
  const double n = f.n;
  t.two_m_E = 2.0 * f.m_E;
  t.energy_excess = (n - 1.0) / n * f.I_hat - f.V_E;
  t.minus_log_r_over_n = -std::log(r) / n;
  t.green_band_term = 2.0 * set.max_green_within(2.0 * r);
  return t;
}

DiscrepancyCertificate assemble(double lhs, const TestFunction& phi, const Fixed& f, const CompactSet& set, double r) {
  DiscrepancyCertificate c;
  c.lhs = lhs;
  c.r_used = r;
  c.I_terms = terms_at(f, set, r);
  c.omega = phi.modulus_bound(r);
  c.dirichlet = phi.dirichlet_bound();
  if (std::isinf(f.I_hat)) {
    // coincident points: the energy term is +inf
    c.I = kInf;
    c.rhs = c.dirichlet > 0.0 ? kInf : c.omega;
    return c;
  }
  const double total = c.I_terms.total();
  c.I_clamped = total < 0.0;
  c.I = std::max(total, 0.0);
  c.rhs = c.omega + std::sqrt(c.dirichlet / kTwoPi) * std::sqrt(c.I);
  return c;
}

}  // namespace

double discrepancy_lhs(const TestFunction& phi, const PointConfiguration& cfg, const CompactSet& set) {
  if (cfg.points.empty()) throw InvalidArgument("discrepancy_lhs: empty configuration");
  if (phi.kind() == TestFunctionKind::Zero) return 0.0;
  const double integral = quad_phi(phi, set, kDiscrepancyQuadrature);
  const double refined = quad_phi(phi, set, 2 * kDiscrepancyQuadrature);
  if (std::abs(integral - refined) >= 1e-6)
    throw AuditFailure("discrepancy_lhs: equilibrium quadrature not converged at N = 4096");
  return std::abs(mean_phi(phi, cfg) - integral);
}

ITerms i_terms(const PointConfiguration& cfg, const CompactSet& set, double r) {
  if (!(r > 0.0) || !std::isfinite(r)) throw InvalidArgument("i_terms: r must be positive");
  return terms_at(fixed_terms(cfg, set), set, r);
}

DiscrepancyCertificate certificate(const TestFunction& phi, const PointConfiguration& cfg, const CompactSet& set,
                                   std::optional<double> r) {
  const Fixed f = fixed_terms(cfg, set);
  const double lhs = discrepancy_lhs(phi, cfg, set);
  if (r) {
    if (!(*r > 0.0) || !std::isfinite(*r)) throw InvalidArgument("certificate: r must be positive");
    return assemble(lhs, phi, f, set, *r);
  }
  constexpr int kGrid = 64;
  const double lo = std::log10(1e-6);
  const double hi = std::log10(std::max(set.diameter(), 2e-6));
  DiscrepancyCertificate best;
  bool have = false;
  for (int i = 0; i < kGrid; ++i) {
    const double radius = std::pow(10.0, lo + (hi - lo) * i / (kGrid - 1));
    auto c = assemble(lhs, phi, f, set, radius);
    if (!have || c.rhs < best.rhs) {
      best = c;
      have = true;
    }
  }
  return best;
}

double circle_mean_log_max(Complex a, double r) {
  if (!(r > 0.0)) throw InvalidArgument("circle_mean_log_max: r must be positive");
  const double d = std::abs(a);
  if (d == 0.0) return std::log(r);
  const double base = std::log(std::max(d, r));
  if (d >= 2.0 * r) return base;
  // on the arc |a + r e^{it}| < r the kernel is log r instead of the log
  // distance; with u measured from the far point the squared distance is
  // (d - r)^2 + 4 d r sin^2(u/2)
  const double u_max = kPi - std::acos(-d / (2.0 * r));
  const double log_r = std::log(r);
  auto f = [&](double u) {
    const double s = std::sin(0.5 * u);
    const double q = (d - r) * (d - r) + 4.0 * d * r * s * s;
    return log_r - 0.5 * std::log(std::max(q, std::numeric_limits<double>::min()));
  };
  boost::math::quadrature::tanh_sinh<double> integrator(12);
  return base + integrator.integrate(f, 0.0, u_max, 1e-13) / kPi;
}

double circle_mean_green(const CompactSet& set, Complex z, double r) {
  if (!(r > 0.0)) throw InvalidArgument("circle_mean_green: r must be positive");
  constexpr int K = 256;
  auto g_at = [&](double t) { return set.green(z + std::polar(r, t)); };

  std::vector<double> cuts;
  std::vector<double> samples(K);
  for (int i = 0; i < K; ++i) samples[i] = g_at(kTwoPi * i / K);
  for (int i = 0; i < K; ++i) {
    const bool a = samples[i] > 0.0;
    const bool b = samples[(i + 1) % K] > 0.0;
    if (a == b) continue;
    double lo = kTwoPi * i / K, hi = kTwoPi * (i + 1) / K;
    for (int it = 0; it < 60 && hi - lo > 1e-15; ++it) {
      const double mid = 0.5 * (lo + hi);
      if ((g_at(mid) > 0.0) == a)
        lo = mid;
      else
        hi = mid;
    }
    cuts.push_back(0.5 * (lo + hi));
  }
  if (set.kind() == SetKind::Segment) {
    // g has a kink where the circle crosses the segment
    const double s = -z.imag() / r;
    if (std::abs(s) <= 1.0) {
      const double t0 = std::asin(s);
      for (double t : {t0, kPi - t0}) cuts.push_back(std::fmod(t + kTwoPi, kTwoPi));
    }
  }
  cuts.push_back(0.0);
  cuts.push_back(kTwoPi);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  double total = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    if (cuts[i + 1] - cuts[i] <= 0.0) continue;
    total += boost::math::quadrature::gauss_kronrod<double, 31>::integrate(g_at, cuts[i], cuts[i + 1], 12, 1e-12);
  }
  return total / kTwoPi;
}

SmoothedEnergy smoothed_energy(const PointConfiguration& cfg, const CompactSet& set, double r) {
  if (!(r > 0.0) || !std::isfinite(r)) throw InvalidArgument("smoothed_energy: r must be positive");
  const Fixed f = fixed_terms(cfg, set);
  if (std::isinf(f.I_hat)) throw InvalidArgument("smoothed_energy: configuration has coincident points");
  const double n = f.n;
  const auto& z = cfg.points;

  std::vector<double> pair_terms;
  pair_terms.reserve(z.size() * (z.size() - 1) / 2);
  for (std::size_t j = 0; j < z.size(); ++j)
    for (std::size_t k = j + 1; k < z.size(); ++k) pair_terms.push_back(circle_mean_log_max(z[j] - z[k], r));
  const double self = -(2.0 * pairwise_sum(pair_terms) + n * std::log(r)) / (n * n);

  std::vector<double> G(z.size());
  for (std::size_t k = 0; k < z.size(); ++k) G[k] = circle_mean_green(set, z[k], r);

  SmoothedEnergy s;
  s.I_sigma = self - f.V_E + 2.0 / n * pairwise_sum(G);
  s.bound_22 = terms_at(f, set, r).total();
  s.slack = s.bound_22 - s.I_sigma;
  return s;
}

LipschitzDiscrepancy lipschitz_discrepancy(const TestFunction& phi, const PointConfiguration& cfg,
                                           const CompactSet& set) {
  if (!phi.lipschitz_A()) throw InvalidArgument("lipschitz_discrepancy: test function has no Lipschitz constant");
  const Fixed f = fixed_terms(cfg, set);
  LipschitzDiscrepancy out;
  const double n = f.n;
  out.lhs = discrepancy_lhs(phi, cfg, set);
  out.rate = std::sqrt(std::max(std::log(n) / n, f.m_E));
  out.C4_fitted = out.lhs / out.rate;
  out.in_E = f.m_E == 0.0;
  if (out.in_E) {
    bool inside = true;
    for (Complex p : cfg.points) inside = inside && set.green(p) <= CompactSet::kOuterThreshold;
    out.in_E = inside;
  }
  if (out.in_E) out.C1_fitted = (f.I_hat - f.V_E) * n / std::log(n);
  return out;
}

MomentDiscrepancy moment_discrepancy(const PointConfiguration& cfg, const CompactSet& set, int m) {
  if (cfg.size() < 2) throw InvalidArgument("moment_discrepancy: need at least 2 points");
  require_in_E(cfg, set, "moment_discrepancy");
  const double n = cfg.n();
  MomentDiscrepancy out;
  out.value = std::abs(moment(cfg, m) - set.equilibrium_moment(m, kDiscrepancyQuadrature));
  out.rate = std::sqrt(std::log(n) / n);
  out.C5_fitted = out.value / out.rate;
  return out;
}

GrowthCheck polynomial_growth_check(const PointConfiguration& cfg, const CompactSet& set) {
  if (cfg.size() < 2) throw InvalidArgument("polynomial_growth_check: need at least 2 points");
  require_in_E(cfg, set, "polynomial_growth_check");
  const int n = cfg.n();
  const double dn = n;
  const double V = set.robin_constant();
  const double I_hat = discrete_energy(cfg);

  GrowthCheck out;
  out.n = n;
  const auto gamma = set.level_curve(n, std::max(2048, 16 * n));
  out.rho_n = gamma.rho;
  double defect = 0.0, log_gamma = -kInf;
  for (Complex z : gamma.points) {
    const double lp = log_abs_poly(cfg.points, z);
    log_gamma = std::max(log_gamma, lp);
    defect = std::max(defect, std::abs(lp / dn + V - set.green(z)));
  }
  out.max_abs_defect_on_Gamma_n = defect;
  out.C2_defect_fitted = defect * std::sqrt(dn) / std::log(dn);

  out.supnorm_log_excess = log_sup_norm(cfg.points, set).log_value + dn * V;
  out.C2_supnorm_fitted = out.supnorm_log_excess / (std::sqrt(dn) * std::log(dn));

  // |P'(z_k)| <= ||P||_{Gamma_n} / rho_n by Cauchy on the disk of radius rho_n,
  // and sum_k log|P'(z_k)| = 2 log|V|
  const double lower = -(log_gamma - std::log(out.rho_n)) / (dn - 1.0) - V;
  out.energy_lower_slack = std::isinf(I_hat) ? kInf : (I_hat - V) - lower;
  out.C3_fitted = std::max(V - I_hat, 0.0) * std::sqrt(dn) / std::log(dn);
  out.near_fekete = near_fekete_check(cfg, set, 1.0);
  return out;
}

std::vector<NormRow> norm_asymptotics(const std::vector<PointConfiguration>& sweep, const CompactSet& set) {
  if (sweep.empty()) throw InvalidArgument("norm_asymptotics: empty sweep");
  std::vector<NormRow> rows;
  rows.reserve(sweep.size());
  for (const auto& cfg : sweep) {
    if (cfg.points.empty()) throw InvalidArgument("norm_asymptotics: empty configuration");
    NormRow row;
    row.n = cfg.n();
    row.norm_root = std::exp(log_sup_norm(cfg.points, set).log_value / row.n);
    row.capacity = set.capacity();
    row.difference = row.norm_root - row.capacity;
    row.lower_bound_ok = row.norm_root >= row.capacity - 1e-8;
    rows.push_back(row);
  }
  return rows;
}

double loglog_slope(const std::vector<double>& n, const std::vector<double>& value) {
  if (n.size() != value.size()) throw InvalidArgument("loglog_slope: size mismatch");
  std::vector<double> x, y;
  for (std::size_t i = 0; i < n.size(); ++i) {
    if (!(value[i] >= 1e-14) || !std::isfinite(value[i]) || !(n[i] > 0.0)) continue;
    x.push_back(std::log(n[i]));
    y.push_back(std::log(value[i]));
  }
  if (x.size() < 2) return std::numeric_limits<double>::quiet_NaN();
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= x.size();
  my /= x.size();
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  return sxx > 0.0 ? sxy / sxx : std::numeric_limits<double>::quiet_NaN();
}

}  // namespace robinc
