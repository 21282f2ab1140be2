#pragma once

// Compact planar sets whose Green function with pole at infinity is known in
// closed form: closed disks, real segments and polynomial lemniscates
// {z : |p(z)| <= r^m}. Every quantity the certificates need (capacity, Robin
// constant, equilibrium measure, distance function, level curves, Hölder
// pair) is exposed here.
//
// Green function convention: g(z) = 0 on E and on bounded components of the
// complement (none exist for these three families), g > 0 in the unbounded
// component.

#include <memory>
#include <optional>
#include <variant>
#include <vector>

#include "robinc/error.hpp"
#include "robinc/polynomial.hpp"

namespace robinc {

enum class SetKind { Disk, Segment, Lemniscate };

struct DiskParams {
  Complex center{0.0, 0.0};
  double radius = 1.0;
};

struct SegmentParams {
  double a = -1.0;
  double b = 1.0;
};

/// E = {z : |p(z)| <= r^m}, p monic of degree m >= 1.
struct LemniscateParams {
  Polynomial p;
  double r = 1.0;
};

/// Discrete equilibrium measure: positive weights summing to one, nodes on
/// the outer boundary.
struct EquilibriumQuadrature {
  std::vector<Complex> nodes;
  std::vector<double> weights;

  template <class F>
  auto integrate(F&& f) const {
    using R = decltype(f(nodes.front()));
    R acc{};
    for (std::size_t j = 0; j < nodes.size(); ++j) acc += weights[j] * f(nodes[j]);
    return acc;
  }
};

/// A boundary point together with the parameter of the local chart that
/// produced it (angle for disks and lemniscates, arccos-angle for segments).
struct BoundaryNode {
  Complex z;
  double theta = 0.0;
};

/// Chart evaluation: point and its first two derivatives in the parameter.
struct ChartPoint {
  Complex z, dz, d2z;
  double theta = 0.0;
};

struct LevelCurve {
  double level = 0.0;
  std::vector<Complex> points;
  /// min distance from the sampled curve to E
  double rho = 0.0;
};

/// g(z) <= C dist(z, E)^s, certified by a sampled audit (not a proof).
struct HolderParams {
  double C = 0.0;
  double s = 1.0;
  int audited_points = 0;
  /// max over the audit sample of g / (C d^s); <= 1 on success
  double worst_ratio = 0.0;
};

class CompactSet {
 public:
  static constexpr int kDefaultMesh = 4096;
  /// z lies in the unbounded complementary component iff green(z) exceeds this.
  static constexpr double kOuterThreshold = 1e-14;

  static CompactSet disk(Complex center, double radius, int mesh_resolution = kDefaultMesh);
  static CompactSet unit_disk() { return disk({0.0, 0.0}, 1.0); }
  static CompactSet segment(double a, double b, int mesh_resolution = kDefaultMesh);
  static CompactSet lemniscate(Polynomial p, double r, int mesh_resolution = kDefaultMesh);

  SetKind kind() const noexcept;
  const DiskParams& disk_params() const { return std::get<DiskParams>(shape_); }
  const SegmentParams& segment_params() const { return std::get<SegmentParams>(shape_); }
  const LemniscateParams& lemniscate_params() const { return std::get<LemniscateParams>(shape_); }
  int mesh_resolution() const noexcept { return mesh_resolution_; }

  double green(Complex z) const;
  bool in_outer_domain(Complex z) const { return green(z) > kOuterThreshold; }
  double capacity() const;
  double robin_constant() const;

  double dist_to_set(Complex z) const;
  double diameter() const noexcept;
  /// max |z| over E
  double outer_radius() const noexcept;

  /// U^{mu_E}(z) = V_E - g(z).
  double equilibrium_potential(Complex z) const { return robin_constant() - green(z); }

  /// Integral of log|z - t| d mu_E(t) by adaptive quadrature over the
  /// parametrization of mu_E, split at the logarithmic singularity.
  double log_potential_integral(Complex z) const;

  EquilibriumQuadrature equilibrium_quadrature(int N) const;
  /// Integral of z^m d mu_E through the quadrature rule with N nodes.
  Complex equilibrium_moment(int m, int N = kDefaultMesh) const;

  std::vector<BoundaryNode> boundary_mesh(int M) const;
  /// the mesh at mesh_resolution(), built once
  const std::vector<BoundaryNode>& default_mesh() const { return *mesh_; }
  /// chart-parameter spacing used by boundary_mesh(M)
  double mesh_step(int M) const;
  ChartPoint chart(const BoundaryNode& base, double theta) const;
  /// Boundary point with maximal real part (lowest mesh index on ties).
  BoundaryNode default_seed() const;

  /// Points on {g = level} (the boundary of {g <= level}).
  std::vector<Complex> level_set(double level, int M) const;
  /// Gamma_n = {g = 1/n} sampled with M points, plus rho_n = dist(E, Gamma_n).
  LevelCurve level_curve(int n, int M) const;

  /// max of g over {z : dist(z, E) <= distance}.
  double max_green_within(double distance) const;

  /// Certified (C, s); throws AuditFailure if the 10^4-point audit fails.
  HolderParams holder_params() const;

 private:
  using Shape = std::variant<DiskParams, SegmentParams, LemniscateParams>;
  CompactSet(Shape shape, int mesh_resolution);

  double lemniscate_distance(Complex z) const;

  Shape shape_;
  int mesh_resolution_ = kDefaultMesh;
  std::shared_ptr<const std::vector<BoundaryNode>> mesh_;
  double diameter_ = 0.0;
  double outer_radius_ = 0.0;
};

}  // namespace robinc
