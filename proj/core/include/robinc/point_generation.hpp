#pragma once

// Leja sequences and Fekete configurations on catalog sets.

#include <optional>
#include <vector>

#include "robinc/discrete_energy.hpp"

namespace robinc {

struct LejaSequence {
  Complex seed;
  /// xi_0 = seed, xi_1, ..., xi_{n-1}
  std::vector<Complex> points;
  /// log ||L_k||_E = log |L_k(xi_k)|, L_k(z) = prod_{j<k} (z - xi_j), k = 1..n-1
  std::vector<double> log_norms;
  int mesh_resolution = 0;

  PointConfiguration config() const { return {points, "leja"}; }
};

/// Greedy Leja points: mesh argmax (ties to the lowest mesh index) followed
/// by a 1-D chart polish. mesh = 0 picks max(set resolution, 64 n).
LejaSequence leja_points(const CompactSet& set, int n, std::optional<Complex> seed = std::nullopt, int mesh = 0);

struct EnergyCertificate {
  bool energy_le_robin = false;
  /// V_E - I_hat
  double slack = 0.0;
};

inline constexpr double kCertificateTolerance = 1e-8;

EnergyCertificate energy_certificate(const PointConfiguration& cfg, const CompactSet& set);

struct FeketeOptions {
  int mesh = 0;
  /// exchange sweeps plus Newton iterations
  int max_iters = 200;
};

struct FeketeSolution {
  PointConfiguration config;
  double achieved_log_vandermonde = 0.0;
  double discrete_energy = 0.0;
  /// estimate of the n-th diameter, exp(-discrete_energy)
  double delta_n = 0.0;
  EnergyCertificate certificate;
  /// log|V| after the initial Leja points and after every sweep / Newton step
  std::vector<double> history;
  int sweeps = 0;
  int newton_iterations = 0;
  int mesh_resolution = 0;
};

/// Local maximizer of log|V| over n boundary points: Leja start, cyclic
/// single-point exchange, then damped Newton in the chart parameters, closed
/// by an exchange sweep that must not find any move.
FeketeSolution fekete_points(const CompactSet& set, int n, const FeketeOptions& opts = {});

struct CertificateReport {
  std::optional<EnergyCertificate> fekete_cert;
  std::optional<EnergyCertificate> leja_cert;
  std::optional<double> leja_identity_residual;
  bool leja_identity_ok = true;
  /// log|V(L_n)| >= (n(n-1)/2) log cap - 1e-8
  bool leja_lower_bound_ok = true;

  bool all_ok() const;
};

CertificateReport verify_energy_certificates(const FeketeSolution& sol, const CompactSet& set);
CertificateReport verify_energy_certificates(const LejaSequence& seq, const CompactSet& set);

/// I_hat - V_E <= C1 log n / n; cfg must lie in E.
bool near_fekete_check(const PointConfiguration& cfg, const CompactSet& set, double C1);

struct InteriorAudit {
  int candidates = 0;
  /// largest excess of an interior candidate over the chosen boundary value
  double worst_gain = 0.0;
  bool ok = true;
};

/// Grid audit over points of E that are off the boundary mesh: no candidate
/// may beat the greedy choice (Leja) or the exchange optimum (Fekete).
InteriorAudit interior_candidate_audit(const LejaSequence& seq, const CompactSet& set, int grid = 64);
InteriorAudit interior_candidate_audit(const FeketeSolution& sol, const CompactSet& set, int grid = 64);

}  // namespace robinc
