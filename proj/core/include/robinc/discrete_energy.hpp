#pragma once

// Log-space Vandermonde arithmetic for finite point configurations.

#include <optional>
#include <string>
#include <vector>

#include "robinc/set_catalog.hpp"

namespace robinc {

struct PointConfiguration {
  std::vector<Complex> points;
  std::string label;

  std::size_t size() const noexcept { return points.size(); }
  int n() const noexcept { return static_cast<int>(points.size()); }
};

struct EnergyReport {
  int n = 0;
  double log_vandermonde = 0.0;  // may be -inf
  double discrete_energy = 0.0;  // may be +inf
  double nth_diameter = 0.0;     // exp(-discrete_energy)
  double m_E = 0.0;
  std::optional<double> tail_radius;
  std::optional<double> tail_log_moment;
};

/// sum_{j<k} log|z_j - z_k|; -inf iff two points coincide exactly.
/// Summation order is canonical (sorted points, tree-summed rows), so the
/// value is bit-identical under any permutation of the input.
double log_vandermonde(const PointConfiguration& cfg);

/// -(2 / (n(n-1))) log|V|; +inf on duplicates.
double discrete_energy(const PointConfiguration& cfg);

/// exp(-discrete_energy), i.e. |V|^{2/(n(n-1))}.
double nth_diameter(const PointConfiguration& cfg);

/// (1/n) sum of g over the points with g > kOuterThreshold.
double m_E(const PointConfiguration& cfg, const CompactSet& set);

/// (1/n) sum z_k^m.
Complex moment(const PointConfiguration& cfg, int m);

/// (1/n) sum of log|z_k| over |z_k| >= R.
double tail_log_moment(const PointConfiguration& cfg, double R);

EnergyReport energy_report(const PointConfiguration& cfg, const CompactSet& set,
                           std::optional<double> tail_radius = std::nullopt);

/// log|P(z)| for the monic P with the given zeros.
double log_abs_poly(const std::vector<Complex>& zeros, Complex z);

struct SupNorm {
  double log_value = 0.0;
  Complex argmax;
};

/// log of max_{E} |P| for monic P with the given zeros: boundary-mesh scan
/// (at least max(4096, 16 n) nodes) then 1-D chart polish of the best nodes.
SupNorm log_sup_norm(const std::vector<Complex>& zeros, const CompactSet& set);

/// Same scan over arbitrary sample points (used for level curves).
double log_max_on(const std::vector<Complex>& zeros, const std::vector<Complex>& samples);

struct BssChain {
  double m_E = 0.0;
  /// integral of log|P_n|^{1/n} d mu_E
  double mean_log_Pn_dmu = 0.0;
  /// log ||P_n||_E^{1/n}
  double log_supnorm_scaled = 0.0;
  /// mean_log_Pn_dmu - log cap
  double middle = 0.0;
  /// log_supnorm_scaled - log cap
  double upper = 0.0;
  bool inequalities_hold = false;
};

inline constexpr double kBssTolerance = 1e-6;

BssChain bss_chain_check(const PointConfiguration& cfg, const CompactSet& set);

}  // namespace robinc
