#pragma once

// Both sides of the discrepancy bound, the smoothed-measure energy behind it,
// and the rate diagnostics built on top (growth of P_n, moments, norms).

#include <optional>
#include <vector>

#include "robinc/discrete_energy.hpp"
#include "robinc/test_function.hpp"

namespace robinc {

struct ITerms {
  double two_m_E = 0.0;
  /// ((n-1)/n) I_hat - V_E
  double energy_excess = 0.0;
  double minus_log_r_over_n = 0.0;
  /// 2 max of g over {d_E <= 2r}
  double green_band_term = 0.0;

  double total() const { return two_m_E + energy_excess + minus_log_r_over_n + green_band_term; }
};

struct DiscrepancyCertificate {
  double lhs = 0.0;
  double rhs = 0.0;
  double r_used = 0.0;
  ITerms I_terms;
  /// max(I, 0)
  double I = 0.0;
  bool I_clamped = false;
  double omega = 0.0;
  double dirichlet = 0.0;

  bool holds(double slack = 1e-6) const { return lhs <= rhs + slack; }
};

inline constexpr int kDiscrepancyQuadrature = 4096;

/// |(1/n) sum phi(z_k) - int phi d mu_E| with a 2N Richardson check.
double discrepancy_lhs(const TestFunction& phi, const PointConfiguration& cfg, const CompactSet& set);

/// r = nullopt selects the best of 64 log-spaced radii in [1e-6, diam E].
DiscrepancyCertificate certificate(const TestFunction& phi, const PointConfiguration& cfg, const CompactSet& set,
                                   std::optional<double> r = std::nullopt);

/// The I expression at radius r (unclamped total in ITerms::total()).
ITerms i_terms(const PointConfiguration& cfg, const CompactSet& set, double r);

struct SmoothedEnergy {
  double I_sigma = 0.0;
  double bound_22 = 0.0;
  double slack = 0.0;
};

/// Energy of tau_n^r - mu_E, where tau_n^r replaces each point by the
/// normalized arc length on the circle of radius r around it.
SmoothedEnergy smoothed_energy(const PointConfiguration& cfg, const CompactSet& set, double r);

/// (1/2 pi) int log max(r, |a + r e^{it}|) dt.
double circle_mean_log_max(Complex a, double r);

/// (1/2 pi) int g(z + r e^{it}) dt.
double circle_mean_green(const CompactSet& set, Complex z, double r);

struct LipschitzDiscrepancy {
  double lhs = 0.0;
  /// sqrt(max(log n / n, m_E))
  double rate = 0.0;
  double C4_fitted = 0.0;
  bool in_E = false;
  /// (I_hat - V_E) n / log n, only when the configuration lies in E
  std::optional<double> C1_fitted;
};

LipschitzDiscrepancy lipschitz_discrepancy(const TestFunction& phi, const PointConfiguration& cfg,
                                           const CompactSet& set);

struct MomentDiscrepancy {
  double value = 0.0;
  /// sqrt(log n / n)
  double rate = 0.0;
  double C5_fitted = 0.0;
};

MomentDiscrepancy moment_discrepancy(const PointConfiguration& cfg, const CompactSet& set, int m);

struct GrowthCheck {
  int n = 0;
  /// max over Gamma_n of |(1/n) log|P| + V_E - g|
  double max_abs_defect_on_Gamma_n = 0.0;
  double C2_defect_fitted = 0.0;  // defect sqrt(n) / log n
  /// log ||P||_E + n V_E
  double supnorm_log_excess = 0.0;
  double C2_supnorm_fitted = 0.0;  // excess / (sqrt(n) log n)
  /// (I_hat - V_E) minus its Cauchy-estimate lower bound on Gamma_n
  double energy_lower_slack = 0.0;
  double C3_fitted = 0.0;  // max(V_E - I_hat, 0) sqrt(n) / log n
  double rho_n = 0.0;
  bool near_fekete = false;
};

GrowthCheck polynomial_growth_check(const PointConfiguration& cfg, const CompactSet& set);

struct NormRow {
  int n = 0;
  double norm_root = 0.0;  // ||P_n||_E^{1/n}
  double capacity = 0.0;
  double difference = 0.0;
  bool lower_bound_ok = true;
};

std::vector<NormRow> norm_asymptotics(const std::vector<PointConfiguration>& sweep, const CompactSet& set);

/// Least-squares slope of log(value) against log(n); entries with value below
/// 1e-14 are skipped. NaN when fewer than two entries remain.
double loglog_slope(const std::vector<double>& n, const std::vector<double>& value);

}  // namespace robinc
