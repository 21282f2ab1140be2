#include "robinc/set_catalog.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include <boost/math/quadrature/tanh_sinh.hpp>
#include <boost/math/tools/minima.hpp>

namespace robinc {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void require_finite(Complex z, const char* where) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
    throw InvalidArgument(std::string(where) + ": non-finite point");
}

/// Maximize f on [lo, hi]; returns (argmax, max).
template <class F>
std::pair<double, double> brent_maximize(F&& f, double lo, double hi) {
  auto neg = [&](double t) { return -f(t); };
  const auto [x, fx] = boost::math::tools::brent_find_minima(neg, lo, hi, std::numeric_limits<double>::digits);
  return {x, -fx};
}

/// (1/pi) * int_0^pi 0.5*log((rho - R)^2 + 4 rho R sin^2(psi/2)) dpsi, i.e. the
/// circle mean of log|a - R e^{i t}| with |a| = rho, singularity at psi = 0.
double circle_log_mean(double rho, double R) {
  if (rho == 0.0) return std::log(R);
  const double gap2 = (rho - R) * (rho - R);
  const double cross = 4.0 * rho * R;
  auto f = [&](double psi) {
    const double s = std::sin(0.5 * psi);
    // the weight at psi -> 0 is negligible; keep the integrand finite there
    return 0.5 * std::log(std::max(gap2 + cross * s * s, std::numeric_limits<double>::min()));
  };
  boost::math::quadrature::tanh_sinh<double> integrator(12);
  return integrator.integrate(f, 0.0, kPi, 1e-13) / kPi;
}

std::vector<Complex> lemniscate_preimages(const LemniscateParams& L, double radius_m, double theta) {
  return polynomial_roots(L.p.shifted(std::polar(radius_m, theta)));
}

int lemniscate_angles(int M, int m) { return (M + m - 1) / m; }

}  // namespace

CompactSet::CompactSet(Shape shape, int mesh_resolution)
    : shape_(std::move(shape)), mesh_resolution_(mesh_resolution) {
  if (mesh_resolution_ < 16) throw InvalidArgument("mesh resolution must be at least 16");
  mesh_ = std::make_shared<const std::vector<BoundaryNode>>(boundary_mesh(mesh_resolution_));

  std::visit(Overloaded{
                 [&](const DiskParams& d) {
                   diameter_ = 2.0 * d.radius;
                   outer_radius_ = std::abs(d.center) + d.radius;
                 },
                 [&](const SegmentParams& s) {
                   diameter_ = s.b - s.a;
                   outer_radius_ = std::max(std::abs(s.a), std::abs(s.b));
                 },
                 [&](const LemniscateParams&) {
                   const auto& nodes = *mesh_;
                   double best2 = 0.0, rmax = 0.0;
                   for (std::size_t i = 0; i < nodes.size(); ++i) {
                     rmax = std::max(rmax, std::abs(nodes[i].z));
                     for (std::size_t j = i + 1; j < nodes.size(); ++j)
                       best2 = std::max(best2, std::norm(nodes[i].z - nodes[j].z));
                   }
                   diameter_ = std::sqrt(best2);
                   outer_radius_ = rmax;
                 },
             },
             shape_);
}

CompactSet CompactSet::disk(Complex center, double radius, int mesh_resolution) {
  require_finite(center, "disk");
  if (!(radius > 0.0) || !std::isfinite(radius)) throw InvalidArgument("disk: radius must be positive");
  return CompactSet(DiskParams{center, radius}, mesh_resolution);
}

CompactSet CompactSet::segment(double a, double b, int mesh_resolution) {
  if (!std::isfinite(a) || !std::isfinite(b) || !(a < b)) throw InvalidArgument("segment: need finite a < b");
  return CompactSet(SegmentParams{a, b}, mesh_resolution);
}

CompactSet CompactSet::lemniscate(Polynomial p, double r, int mesh_resolution) {
  if (p.degree() < 1) throw InvalidArgument("lemniscate: polynomial degree must be at least 1");
  if (!p.is_monic()) throw InvalidArgument("lemniscate: polynomial must be monic");
  for (Complex c : p.coeffs()) require_finite(c, "lemniscate");
  if (!(r > 0.0) || !std::isfinite(r)) throw InvalidArgument("lemniscate: r must be positive");
  return CompactSet(LemniscateParams{std::move(p), r}, mesh_resolution);
}

SetKind CompactSet::kind() const noexcept {
  return static_cast<SetKind>(shape_.index());
}

double CompactSet::green(Complex z) const {
  require_finite(z, "green");
  return std::visit(Overloaded{
                        [&](const DiskParams& d) {
                          const double rho = std::abs(z - d.center);
                          return rho > d.radius ? std::log(rho / d.radius) : 0.0;
                        },
                        [&](const SegmentParams& s) {
                          const double half = 0.5 * (s.b - s.a);
                          const Complex w = (z - 0.5 * (s.a + s.b)) / half;
                          if (w.imag() == 0.0 && std::abs(w.real()) <= 1.0) return 0.0;
                          const Complex root = std::sqrt(w - 1.0) * std::sqrt(w + 1.0);
                          Complex u = w + root;
                          if (std::abs(u) < 1.0) u = w - root;
                          return std::max(0.0, std::log(std::abs(u)));
                        },
                        [&](const LemniscateParams& L) {
                          const int m = L.p.degree();
                          const double v = std::abs(L.p(z));
                          const double g = std::log(v) / m - std::log(L.r);
                          return g > 0.0 ? g : 0.0;
                        },
                    },
                    shape_);
}

double CompactSet::capacity() const {
  return std::visit(Overloaded{
                        [](const DiskParams& d) { return d.radius; },
                        [](const SegmentParams& s) { return 0.25 * (s.b - s.a); },
                        [](const LemniscateParams& L) { return L.r; },
                    },
                    shape_);
}

double CompactSet::robin_constant() const { return -std::log(capacity()); }

double CompactSet::diameter() const noexcept { return diameter_; }
double CompactSet::outer_radius() const noexcept { return outer_radius_; }

double CompactSet::dist_to_set(Complex z) const {
  require_finite(z, "dist_to_set");
  return std::visit(Overloaded{
                        [&](const DiskParams& d) { return std::max(0.0, std::abs(z - d.center) - d.radius); },
                        [&](const SegmentParams& s) {
                          const double x = std::clamp(z.real(), s.a, s.b);
                          return std::abs(z - Complex(x, 0.0));
                        },
                        [&](const LemniscateParams&) { return lemniscate_distance(z); },
                    },
                    shape_);
}

double CompactSet::lemniscate_distance(Complex z) const {
  const auto& L = lemniscate_params();
  if (std::abs(L.p(z)) <= std::pow(L.r, L.p.degree())) return 0.0;

  const auto& nodes = *mesh_;
  std::array<std::size_t, 3> best{0, 0, 0};
  std::array<double, 3> best_d2{std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity(),
                                std::numeric_limits<double>::infinity()};
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const double d2 = std::norm(z - nodes[i].z);
    if (d2 < best_d2[2]) {
      int k = 2;
      while (k > 0 && d2 < best_d2[k - 1]) {
        best_d2[k] = best_d2[k - 1];
        best[k] = best[k - 1];
        --k;
      }
      best_d2[k] = d2;
      best[k] = i;
    }
  }
  double d2min = best_d2[0];
  const double step = mesh_step(mesh_resolution_);
  for (std::size_t k = 0; k < best.size(); ++k) {
    if (!std::isfinite(best_d2[k])) continue;
    const BoundaryNode& base = nodes[best[k]];
    try {
      auto neg_d2 = [&](double t) { return -std::norm(z - chart(base, t).z); };
      const auto [t, v] = brent_maximize(neg_d2, base.theta - step, base.theta + step);
      (void)t;
      d2min = std::min(d2min, -v);
    } catch (const GeometryError&) {
      // critical point of p on the boundary; keep the mesh value
    }
  }
  return std::sqrt(d2min);
}

double CompactSet::log_potential_integral(Complex z) const {
  require_finite(z, "log_potential_integral");
  return std::visit(
      Overloaded{
          [&](const DiskParams& d) { return circle_log_mean(std::abs(z - d.center), d.radius); },
          [&](const SegmentParams& s) {
            const double half = 0.5 * (s.b - s.a);
            const Complex w = (z - 0.5 * (s.a + s.b)) / half;
            const double x = w.real(), y = w.imag();
            const double phi_star = std::acos(std::clamp(x, -1.0, 1.0));
            const double x_off = x - std::cos(phi_star);
            // integrand at phi = phi_star + sign*delta, difference formula keeps
            // x - cos(phi) accurate next to the singular angle
            auto f = [&](double delta, double sign) {
              const double phi = phi_star + sign * delta;
              const double dx = x_off + 2.0 * std::sin(0.5 * (phi + phi_star)) * std::sin(0.5 * sign * delta);
              return 0.5 * std::log(std::max(dx * dx + y * y, std::numeric_limits<double>::min()));
            };
            boost::math::quadrature::tanh_sinh<double> integrator(12);
            double total = 0.0;
            if (phi_star > 0.0)
              total += integrator.integrate([&](double t) { return f(t, -1.0); }, 0.0, phi_star, 1e-13);
            if (phi_star < kPi)
              total += integrator.integrate([&](double t) { return f(t, 1.0); }, 0.0, kPi - phi_star, 1e-13);
            return std::log(half) + total / kPi;
          },
          [&](const LemniscateParams& L) {
            // sum over preimages of log|z - t| equals log|p(z) - w|
            const int m = L.p.degree();
            return circle_log_mean(std::abs(L.p(z)), std::pow(L.r, m)) / m;
          },
      },
      shape_);
}

EquilibriumQuadrature CompactSet::equilibrium_quadrature(int N) const {
  if (N < 4) throw InvalidArgument("equilibrium_quadrature: N must be at least 4");
  EquilibriumQuadrature q;
  std::visit(Overloaded{
                 [&](const DiskParams& d) {
                   q.nodes.resize(N);
                   for (int j = 0; j < N; ++j) q.nodes[j] = d.center + std::polar(d.radius, kTwoPi * j / N);
                   q.weights.assign(N, 1.0 / N);
                 },
                 [&](const SegmentParams& s) {
                   const double mid = 0.5 * (s.a + s.b), half = 0.5 * (s.b - s.a);
                   q.nodes.resize(N);
                   for (int j = 1; j <= N; ++j)
                     q.nodes[j - 1] = Complex(mid + half * std::cos((2.0 * j - 1.0) * kPi / (2.0 * N)), 0.0);
                   q.weights.assign(N, 1.0 / N);
                 },
                 [&](const LemniscateParams& L) {
                   const int m = L.p.degree();
                   const double Rm = std::pow(L.r, m);
                   q.nodes.reserve(static_cast<std::size_t>(N) * m);
                   for (int j = 0; j < N; ++j) {
                     for (Complex w : lemniscate_preimages(L, Rm, kTwoPi * j / N)) q.nodes.push_back(w);
                   }
                   q.weights.assign(q.nodes.size(), 1.0 / (static_cast<double>(m) * N));
                 },
             },
             shape_);
  return q;
}

Complex CompactSet::equilibrium_moment(int m, int N) const {
  if (m < 0) throw InvalidArgument("equilibrium_moment: m must be nonnegative");
  const auto q = equilibrium_quadrature(N);
  return q.integrate([m](Complex z) { return std::pow(z, m); });
}

std::vector<BoundaryNode> CompactSet::boundary_mesh(int M) const {
  if (M < 2) throw InvalidArgument("boundary_mesh: M must be at least 2");
  std::vector<BoundaryNode> nodes;
  std::visit(Overloaded{
                 [&](const DiskParams& d) {
                   nodes.resize(M);
                   for (int j = 0; j < M; ++j) {
                     const double t = kTwoPi * j / M;
                     nodes[j] = {d.center + std::polar(d.radius, t), t};
                   }
                 },
                 [&](const SegmentParams& s) {
                   const double mid = 0.5 * (s.a + s.b), half = 0.5 * (s.b - s.a);
                   nodes.resize(M);
                   for (int j = 0; j < M; ++j) {
                     const double t = kPi * j / (M - 1);
                     double x = mid + half * std::cos(t);
                     if (j == 0) x = s.b;
                     if (j == M - 1) x = s.a;
                     nodes[j] = {Complex(x, 0.0), t};
                   }
                 },
                 [&](const LemniscateParams& L) {
                   const int m = L.p.degree();
                   const int angles = lemniscate_angles(M, m);
                   const double Rm = std::pow(L.r, m);
                   nodes.reserve(static_cast<std::size_t>(angles) * m);
                   for (int j = 0; j < angles; ++j) {
                     const double t = kTwoPi * j / angles;
                     for (Complex w : lemniscate_preimages(L, Rm, t)) nodes.push_back({w, t});
                   }
                 },
             },
             shape_);
  return nodes;
}

double CompactSet::mesh_step(int M) const {
  switch (kind()) {
    case SetKind::Disk:
      return kTwoPi / M;
    case SetKind::Segment:
      return kPi / (M - 1);
    case SetKind::Lemniscate:
      return kTwoPi / lemniscate_angles(M, lemniscate_params().p.degree());
  }
  return 0.0;
}

ChartPoint CompactSet::chart(const BoundaryNode& base, double theta) const {
  return std::visit(
      Overloaded{
          [&](const DiskParams& d) {
            const Complex e = std::polar(d.radius, theta);
            return ChartPoint{d.center + e, Complex(0.0, 1.0) * e, -e, theta};
          },
          [&](const SegmentParams& s) {
            const double mid = 0.5 * (s.a + s.b), half = 0.5 * (s.b - s.a);
            const double c = std::cos(theta), sn = std::sin(theta);
            return ChartPoint{Complex(mid + half * c, 0.0), Complex(-half * sn, 0.0), Complex(-half * c, 0.0), theta};
          },
          [&](const LemniscateParams& L) {
            // continuation of the preimage of r^m e^{i t} from base.theta to theta
            const int m = L.p.degree();
            const double Rm = std::pow(L.r, m);
            const double span = theta - base.theta;
            const int substeps = std::max(1, static_cast<int>(std::ceil(std::abs(span) / 0.05)));
            Complex w = base.z;
            for (int k = 1; k <= substeps; ++k) {
              const Complex target = std::polar(Rm, base.theta + span * k / substeps);
              bool done = false;
              for (int it = 0; it < 60; ++it) {
                const auto j = L.p.jet(w);
                if (std::abs(j.d1) < 1e-300) throw GeometryError("lemniscate chart: critical point of p");
                const Complex step = (j.value - target) / j.d1;
                w -= step;
                if (std::abs(step) <= 4e-16 * std::max(1.0, std::abs(w))) {
                  done = true;
                  break;
                }
              }
              if (!done) throw GeometryError("lemniscate chart: Newton continuation failed");
            }
            const Complex c = std::polar(Rm, theta);
            const auto j = L.p.jet(w);
            if (std::abs(j.d1) < 1e-300) throw GeometryError("lemniscate chart: critical point of p");
            const Complex dz = Complex(0.0, 1.0) * c / j.d1;
            const Complex d2z = (-c - j.d2 * dz * dz) / j.d1;
            return ChartPoint{w, dz, d2z, theta};
          },
      },
      shape_);
}

BoundaryNode CompactSet::default_seed() const {
  const auto& nodes = *mesh_;
  double best = -std::numeric_limits<double>::infinity();
  for (const auto& n : nodes) best = std::max(best, n.z.real());
  const double tol = 1e-12 * std::max(1.0, std::abs(best));
  for (const auto& n : nodes)
    if (n.z.real() >= best - tol) return n;
  return nodes.front();
}

std::vector<Complex> CompactSet::level_set(double level, int M) const {
  if (!(level >= 0.0) || !std::isfinite(level)) throw InvalidArgument("level_set: level must be >= 0");
  if (M < 4) throw InvalidArgument("level_set: M must be at least 4");
  std::vector<Complex> pts;
  std::visit(Overloaded{
                 [&](const DiskParams& d) {
                   const double rad = d.radius * std::exp(level);
                   pts.resize(M);
                   for (int j = 0; j < M; ++j) pts[j] = d.center + std::polar(rad, kTwoPi * j / M);
                 },
                 [&](const SegmentParams& s) {
                   const double mid = 0.5 * (s.a + s.b), half = 0.5 * (s.b - s.a);
                   const double rho = std::exp(level);
                   pts.resize(M);
                   for (int j = 0; j < M; ++j) {
                     const double t = kTwoPi * j / M;
                     // Joukowski image of the circle |u| = e^level
                     const Complex u = std::polar(rho, t);
                     pts[j] = mid + half * 0.5 * (u + 1.0 / u);
                   }
                 },
                 [&](const LemniscateParams& L) {
                   const int m = L.p.degree();
                   const int angles = lemniscate_angles(M, m);
                   const double Rm = std::pow(L.r * std::exp(level), m);
                   pts.reserve(static_cast<std::size_t>(angles) * m);
                   for (int j = 0; j < angles; ++j)
                     for (Complex w : lemniscate_preimages(L, Rm, kTwoPi * j / angles)) pts.push_back(w);
                 },
             },
             shape_);

  // polish along the gradient of g so that |g - level| < 1e-10 pointwise
  for (auto& z : pts) {
    for (int it = 0; it < 30; ++it) {
      const double err = green(z) - level;
      if (std::abs(err) < 1e-13) break;
      const double h = 1e-7 * std::max(1.0, std::abs(z));
      const double gx = (green(z + h) - green(z - h)) / (2.0 * h);
      const double gy = (green(z + Complex(0.0, h)) - green(z - Complex(0.0, h))) / (2.0 * h);
      const double n2 = gx * gx + gy * gy;
      if (n2 == 0.0) break;
      z -= err / n2 * Complex(gx, gy);
    }
    if (std::abs(green(z) - level) >= 1e-10) throw GeometryError("level_set: polish did not reach the level curve");
  }
  return pts;
}

LevelCurve CompactSet::level_curve(int n, int M) const {
  if (n < 2) throw InvalidArgument("level_curve: n must be at least 2");
  LevelCurve lc;
  lc.level = 1.0 / n;
  lc.points = level_set(lc.level, M);
  lc.rho = std::numeric_limits<double>::infinity();
  for (Complex z : lc.points) lc.rho = std::min(lc.rho, dist_to_set(z));
  return lc;
}

double CompactSet::max_green_within(double distance) const {
  if (!(distance >= 0.0) || !std::isfinite(distance)) throw InvalidArgument("max_green_within: bad distance");
  if (distance == 0.0) return 0.0;
  switch (kind()) {
    case SetKind::Disk:
      return std::log1p(distance / disk_params().radius);
    case SetKind::Segment: {
      // the far tip beyond an endpoint maximizes g on the stadium {d = distance}
      const auto& s = segment_params();
      return std::acosh(1.0 + distance / (0.5 * (s.b - s.a)));
    }
    case SetKind::Lemniscate:
      break;
  }

  // {d <= distance} is the union of closed disks of that radius centred on the
  // boundary, and g is subharmonic, so the maximum sits on one of the circles.
  const auto& nodes = *mesh_;
  const std::size_t stride = std::max<std::size_t>(1, nodes.size() / 256);
  constexpr int kAngles = 16;
  double best = 0.0;
  std::size_t best_node = 0;
  double best_alpha = 0.0;
  for (std::size_t i = 0; i < nodes.size(); i += stride) {
    for (int k = 0; k < kAngles; ++k) {
      const double alpha = kTwoPi * k / kAngles;
      const double g = green(nodes[i].z + std::polar(distance, alpha));
      if (g > best) {
        best = g;
        best_node = i;
        best_alpha = alpha;
      }
    }
  }
  BoundaryNode base = nodes[best_node];
  double theta = base.theta;
  double alpha = best_alpha;
  const double theta_span = stride * mesh_step(mesh_resolution_);
  double alpha_span = kPi / kAngles;
  try {
    for (int round = 0; round < 4; ++round) {
      const BoundaryNode anchor = base;
      auto g_theta = [&](double t) { return green(chart(anchor, t).z + std::polar(distance, alpha)); };
      const auto [t_best, v1] = brent_maximize(g_theta, theta - theta_span, theta + theta_span);
      if (v1 > best) {
        best = v1;
        theta = t_best;
        base = {chart(anchor, theta).z, theta};
      }
      const Complex centre = base.z;
      auto g_alpha = [&](double a) { return green(centre + std::polar(distance, a)); };
      const auto [a_best, v2] = brent_maximize(g_alpha, alpha - alpha_span, alpha + alpha_span);
      if (v2 > best) {
        best = v2;
        alpha = a_best;
      }
      alpha_span *= 0.5;
    }
  } catch (const GeometryError&) {
    // keep the sampled maximum
  }
  return best;
}

HolderParams CompactSet::holder_params() const {
  HolderParams hp;
  switch (kind()) {
    case SetKind::Disk:
      // log(1 + d/R) <= d/R <= 2d/R
      hp.C = 2.0 / disk_params().radius;
      hp.s = 1.0;
      break;
    case SetKind::Segment: {
      // g <= acosh(1 + d/h) <= sqrt(2 d / h), h the half length
      const auto& s = segment_params();
      hp.C = std::sqrt(2.0 / (0.5 * (s.b - s.a)));
      hp.s = 0.5;
      break;
    }
    case SetKind::Lemniscate: {
      hp.s = 1.0 / lemniscate_params().p.degree();
      double worst = 0.0;
      constexpr int kGrid = 200;
      for (int i = 0; i <= kGrid; ++i) {
        const double d = std::pow(10.0, -10.0 + 10.0 * i / kGrid);
        worst = std::max(worst, max_green_within(d) / std::pow(d, hp.s));
      }
      hp.C = 1.25 * worst;
      break;
    }
  }

  // audit on 10^4 points with dist(z, E) <= 1
  std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);
  std::uniform_int_distribution<std::size_t> pick(0, mesh_->size() - 1);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  constexpr int kAudit = 10000;
  for (int i = 0; i < kAudit; ++i) {
    const Complex b = (*mesh_)[pick(rng)].z;
    const double t = std::pow(10.0, -8.0 * unit(rng));
    const Complex z = b + std::polar(t, kTwoPi * unit(rng));
    const double d = dist_to_set(z);
    const double g = green(z);
    if (d == 0.0) {
      if (g > kOuterThreshold) throw AuditFailure("holder_params: g > 0 at a point of E");
      continue;
    }
    const double ratio = g / (hp.C * std::pow(d, hp.s));
    hp.worst_ratio = std::max(hp.worst_ratio, ratio);
  }
  hp.audited_points = kAudit;
  if (hp.worst_ratio > 1.0 + 1e-9) throw AuditFailure("holder_params: sampled audit rejected the Hölder pair");
  return hp;
}

}  // namespace robinc
