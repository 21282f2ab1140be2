#include "robinc/point_generation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <Eigen/Cholesky>
#include <Eigen/Dense>
#include <boost/math/tools/minima.hpp>

namespace robinc {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();
// mesh values within this of the maximum count as ties
constexpr double kTieTolerance = 1e-12;
// minimal gain for an exchange move
constexpr double kMoveGain = 1e-12;

class Mesh {
 public:
  Mesh(const CompactSet& set, int want) {
    M_ = std::max(want, set.mesh_resolution());
    if (M_ == set.mesh_resolution()) {
      shared_ = &set.default_mesh();
    } else {
      own_ = set.boundary_mesh(M_);
    }
    step_ = set.mesh_step(M_);
  }
  const std::vector<BoundaryNode>& nodes() const { return shared_ ? *shared_ : own_; }
  int resolution() const { return M_; }
  double step() const { return step_; }

 private:
  const std::vector<BoundaryNode>* shared_ = nullptr;
  std::vector<BoundaryNode> own_;
  int M_ = 0;
  double step_ = 0.0;
};

double sum_log_dist(Complex z, const std::vector<BoundaryNode>& pts, std::size_t skip) {
  double acc = 0.0;
  for (std::size_t k = 0; k < pts.size(); ++k)
    if (k != skip) acc += std::log(std::abs(z - pts[k].z));
  return acc;
}

std::size_t first_near_max(const std::vector<double>& s) {
  double best = kNegInf;
  for (double v : s) best = std::max(best, v);
  for (std::size_t i = 0; i < s.size(); ++i)
    if (s[i] >= best - kTieTolerance) return i;
  return 0;
}

struct Polished {
  BoundaryNode node;
  double value = kNegInf;
};

/// Maximize f(chart(base, t)) over t in [base.theta - step, base.theta + step];
/// keeps the base point when Brent does not beat it.
template <class F>
Polished polish(const CompactSet& set, const BoundaryNode& base, double step, F&& f) {
  Polished out{base, f(base.z)};
  try {
    auto neg = [&](double t) { return -f(set.chart(base, t).z); };
    const auto [t, v] =
        boost::math::tools::brent_find_minima(neg, base.theta - step, base.theta + step, std::numeric_limits<double>::digits);
    if (-v > out.value) {
      const Complex z = set.chart(base, t).z;
      const double exact = f(z);
      if (exact > out.value) out = {{z, t}, exact};
    }
  } catch (const GeometryError&) {
    // chart failed near a singular boundary point, keep the mesh node
  }
  return out;
}

std::vector<Complex> positions(const std::vector<BoundaryNode>& pts) {
  std::vector<Complex> z(pts.size());
  for (std::size_t k = 0; k < pts.size(); ++k) z[k] = pts[k].z;
  return z;
}

double canonical_log_v(const std::vector<BoundaryNode>& pts) {
  return log_vandermonde(PointConfiguration{positions(pts), ""});
}

double direct_log_v(const std::vector<Complex>& z) {
  double acc = 0.0;
  for (std::size_t j = 0; j < z.size(); ++j)
    for (std::size_t k = j + 1; k < z.size(); ++k) acc += std::log(std::abs(z[j] - z[k]));
  return acc;
}

class FeketeSolver {
 public:
  FeketeSolver(const CompactSet& set, int n, const FeketeOptions& opts)
      : set_(set), n_(n), opts_(opts), mesh_(set, opts.mesh > 0 ? opts.mesh : 64 * n) {}

  FeketeSolution run() {
    const auto leja = leja_points(set_, n_, std::nullopt, mesh_.resolution());
    // Leja points after the seed carry their chart parameter implicitly: rebuild
    // nodes by nearest mesh node continuation.
    pts_.resize(n_);
    for (int k = 0; k < n_; ++k) pts_[k] = locate(leja.points[k]);
    init_scores();

    record();
    for (int s = 0; s < 10; ++s) {
      const bool moved = sweep();
      record();
      ++sweeps_;
      budget();
      if (!moved) break;
    }
    while (true) {
      newton();
      const bool moved = sweep();
      record();
      ++sweeps_;
      budget();
      if (!moved) break;
    }

    FeketeSolution sol;
    sol.config = {positions(pts_), "fekete"};
    sol.achieved_log_vandermonde = log_vandermonde(sol.config);
    sol.discrete_energy = discrete_energy(sol.config);
    sol.delta_n = std::exp(-sol.discrete_energy);
    sol.certificate = energy_certificate(sol.config, set_);
    sol.history = history_;
    sol.sweeps = sweeps_;
    sol.newton_iterations = newton_iters_;
    sol.mesh_resolution = mesh_.resolution();
    return sol;
  }

 private:
  /// Boundary node with a valid chart parameter for a point already on the boundary.
  BoundaryNode locate(Complex z) const {
    const auto& nodes = mesh_.nodes();
    std::size_t best = 0;
    double d2 = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      const double v = std::norm(nodes[i].z - z);
      if (v < d2) {
        d2 = v;
        best = i;
      }
    }
    if (d2 == 0.0) return nodes[best];
    auto neg = [&](double t) { return std::norm(set_.chart(nodes[best], t).z - z); };
    const auto [t, v] = boost::math::tools::brent_find_minima(neg, nodes[best].theta - mesh_.step(),
                                                              nodes[best].theta + mesh_.step(),
                                                              std::numeric_limits<double>::digits);
    (void)v;
    // the Leja polish produced z = chart(node, t) for some t, so this recovers it
    return {z, t};
  }

  void init_scores() {
    const auto& nodes = mesh_.nodes();
    score_.assign(nodes.size(), 0.0);
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      double acc = 0.0;
      for (const auto& p : pts_) acc += std::log(std::abs(nodes[i].z - p.z));
      score_[i] = acc;
    }
  }

  bool sweep() {
    const auto& nodes = mesh_.nodes();
    std::vector<double> sj(nodes.size());
    bool moved = false;
    for (std::size_t j = 0; j < pts_.size(); ++j) {
      const Complex zj = pts_[j].z;
      for (std::size_t i = 0; i < nodes.size(); ++i) {
        const double own = std::log(std::abs(nodes[i].z - zj));
        // own == -inf means the node is the point itself; avoid -inf - -inf
        sj[i] = std::isfinite(own) ? score_[i] - own : sum_log_dist(nodes[i].z, pts_, j);
      }
      auto f = [&](Complex z) { return sum_log_dist(z, pts_, j); };
      const double cur = f(zj);
      const std::size_t i_star = first_near_max(sj);
      Polished cand = polish(set_, nodes[i_star], mesh_.step(), f);
      const Polished local = polish(set_, pts_[j], mesh_.step(), f);
      if (local.value > cand.value) cand = local;
      if (cand.value > cur + kMoveGain) {
        pts_[j] = cand.node;
        for (std::size_t i = 0; i < nodes.size(); ++i) score_[i] = sj[i] + std::log(std::abs(nodes[i].z - cand.node.z));
        moved = true;
      }
    }
    return moved;
  }

  // Damped Newton on F(theta) = sum_{j<k} log|z_j(theta_j) - z_k(theta_k)|.
  void newton() {
    const int n = n_;
    std::vector<ChartPoint> cp(n);
    for (int j = 0; j < n; ++j) cp[j] = set_.chart(pts_[j], pts_[j].theta);
    double F = direct_log_v(positions(pts_));
    double lambda = 1e-8;
    for (int attempt = 0; attempt < 400; ++attempt) {
      Eigen::VectorXd grad = Eigen::VectorXd::Zero(n);
      Eigen::MatrixXd H = Eigen::MatrixXd::Zero(n, n);
      for (int j = 0; j < n; ++j) {
        for (int k = 0; k < n; ++k) {
          if (k == j) continue;
          const Complex inv = 1.0 / (cp[j].z - cp[k].z);
          grad(j) += std::real(cp[j].dz * inv);
          H(j, j) += std::real(cp[j].d2z * inv - cp[j].dz * cp[j].dz * inv * inv);
          H(j, k) = std::real(cp[j].dz * cp[k].dz * inv * inv);
        }
      }
      if (grad.lpNorm<Eigen::Infinity>() < 1e-11) break;

      const double scale = std::max(1.0, H.diagonal().cwiseAbs().maxCoeff());
      bool accepted = false;
      while (lambda < 1e12) {
        Eigen::MatrixXd A = -H;
        A.diagonal().array() += lambda * scale;
        Eigen::LLT<Eigen::MatrixXd> llt(A);
        if (llt.info() != Eigen::Success) {
          lambda *= 10.0;
          continue;
        }
        const Eigen::VectorXd delta = llt.solve(grad);
        std::vector<BoundaryNode> trial(n);
        std::vector<ChartPoint> tcp(n);
        try {
          for (int j = 0; j < n; ++j) {
            tcp[j] = set_.chart(pts_[j], pts_[j].theta + delta(j));
            trial[j] = {tcp[j].z, tcp[j].theta};
          }
        } catch (const GeometryError&) {
          lambda *= 10.0;
          continue;
        }
        const double Ft = direct_log_v(positions(trial));
        if (Ft > F) {
          const double gain = Ft - F;
          pts_ = std::move(trial);
          cp = std::move(tcp);
          F = Ft;
          lambda = std::max(lambda / 10.0, 1e-12);
          accepted = true;
          ++newton_iters_;
          record();
          budget();
          if (gain < 1e-14 && delta.lpNorm<Eigen::Infinity>() < 1e-10) return finish_newton();
          break;
        }
        lambda *= 10.0;
      }
      if (!accepted) break;
    }
    finish_newton();
  }

  void finish_newton() { init_scores(); }

  void record() {
    const double v = canonical_log_v(pts_);
    history_.push_back(v);
    if (v > best_value_) {
      best_value_ = v;
      best_ = positions(pts_);
    }
  }

  void budget() const {
    if (sweeps_ + newton_iters_ > opts_.max_iters)
      throw SolverFailure("fekete_points: no convergence within max_iters", best_);
  }

  const CompactSet& set_;
  int n_;
  FeketeOptions opts_;
  Mesh mesh_;
  std::vector<BoundaryNode> pts_;
  std::vector<double> score_;
  std::vector<double> history_;
  std::vector<Complex> best_;
  double best_value_ = kNegInf;
  int sweeps_ = 0;
  int newton_iters_ = 0;
};

}  // namespace

LejaSequence leja_points(const CompactSet& set, int n, std::optional<Complex> seed, int mesh) {
  if (n < 2) throw InvalidArgument("leja_points: n must be at least 2");
  const Complex xi0 = seed ? *seed : set.default_seed().z;
  if (set.green(xi0) > CompactSet::kOuterThreshold) throw InvalidArgument("leja_points: seed must lie in E");

  const Mesh grid(set, std::max(mesh, 64 * n));
  const auto& nodes = grid.nodes();
  LejaSequence seq;
  seq.seed = xi0;
  seq.mesh_resolution = grid.resolution();
  seq.points.reserve(n);
  seq.points.push_back(xi0);
  seq.log_norms.reserve(n - 1);

  std::vector<double> score(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) score[i] = std::log(std::abs(nodes[i].z - xi0));

  auto objective = [&](Complex z) {
    double acc = 0.0;
    for (Complex p : seq.points) acc += std::log(std::abs(z - p));
    return acc;
  };
  for (int k = 1; k < n; ++k) {
    const std::size_t i_star = first_near_max(score);
    const Polished next = polish(set, nodes[i_star], grid.step(), objective);
    seq.points.push_back(next.node.z);
    seq.log_norms.push_back(next.value);
    for (std::size_t i = 0; i < nodes.size(); ++i) score[i] += std::log(std::abs(nodes[i].z - next.node.z));
  }
  return seq;
}

EnergyCertificate energy_certificate(const PointConfiguration& cfg, const CompactSet& set) {
  EnergyCertificate c;
  c.slack = set.robin_constant() - discrete_energy(cfg);
  c.energy_le_robin = c.slack >= -kCertificateTolerance;
  return c;
}

FeketeSolution fekete_points(const CompactSet& set, int n, const FeketeOptions& opts) {
  if (n < 2) throw InvalidArgument("fekete_points: n must be at least 2");
  if (opts.max_iters < 1) throw InvalidArgument("fekete_points: max_iters must be positive");
  FeketeSolver solver(set, n, opts);
  return solver.run();
}

bool CertificateReport::all_ok() const {
  if (fekete_cert && !fekete_cert->energy_le_robin) return false;
  if (leja_cert && !leja_cert->energy_le_robin) return false;
  return leja_identity_ok && leja_lower_bound_ok;
}

CertificateReport verify_energy_certificates(const FeketeSolution& sol, const CompactSet& set) {
  CertificateReport r;
  r.fekete_cert = energy_certificate(sol.config, set);
  return r;
}

CertificateReport verify_energy_certificates(const LejaSequence& seq, const CompactSet& set) {
  CertificateReport r;
  const auto cfg = seq.config();
  r.leja_cert = energy_certificate(cfg, set);
  const double n = static_cast<double>(seq.points.size());
  const double lv = log_vandermonde(cfg);
  double sum = 0.0;
  for (double v : seq.log_norms) sum += v;
  r.leja_identity_residual = std::abs(lv - sum);
  r.leja_identity_ok = *r.leja_identity_residual < 1e-9 * n * n;
  r.leja_lower_bound_ok = lv >= 0.5 * n * (n - 1.0) * std::log(set.capacity()) - kCertificateTolerance;
  return r;
}

bool near_fekete_check(const PointConfiguration& cfg, const CompactSet& set, double C1) {
  for (Complex z : cfg.points)
    if (set.green(z) > CompactSet::kOuterThreshold) throw InvalidArgument("near_fekete_check: configuration must lie in E");
  const double n = static_cast<double>(cfg.size());
  return discrete_energy(cfg) - set.robin_constant() <= C1 * std::log(n) / n;
}

namespace {

std::vector<Complex> interior_grid(const CompactSet& set, int grid) {
  if (grid < 2) throw InvalidArgument("interior_candidate_audit: grid must be at least 2");
  const double R = set.outer_radius();
  std::vector<Complex> out;
  for (int a = 0; a < grid; ++a) {
    for (int b = 0; b < grid; ++b) {
      const Complex z(-R + 2.0 * R * a / (grid - 1), -R + 2.0 * R * b / (grid - 1));
      if (set.green(z) == 0.0) out.push_back(z);
    }
  }
  // the real axis row matters for segments
  for (int a = 0; a < grid; ++a) {
    const Complex z(-R + 2.0 * R * (a + 0.5) / grid, 0.0);
    if (set.green(z) == 0.0) out.push_back(z);
  }
  return out;
}

}  // namespace

InteriorAudit interior_candidate_audit(const LejaSequence& seq, const CompactSet& set, int grid) {
  const auto cand = interior_grid(set, grid);
  InteriorAudit a;
  a.candidates = static_cast<int>(cand.size());
  std::vector<double> acc(cand.size(), 0.0);
  for (std::size_t k = 1; k < seq.points.size(); ++k) {
    for (std::size_t c = 0; c < cand.size(); ++c) {
      acc[c] += std::log(std::abs(cand[c] - seq.points[k - 1]));
      a.worst_gain = std::max(a.worst_gain, acc[c] - seq.log_norms[k - 1]);
    }
  }
  a.ok = a.worst_gain <= 1e-9;
  return a;
}

InteriorAudit interior_candidate_audit(const FeketeSolution& sol, const CompactSet& set, int grid) {
  const auto cand = interior_grid(set, grid);
  const auto& z = sol.config.points;
  InteriorAudit a;
  a.candidates = static_cast<int>(cand.size());
  std::vector<double> full(cand.size(), 0.0);
  for (std::size_t c = 0; c < cand.size(); ++c)
    for (Complex p : z) full[c] += std::log(std::abs(cand[c] - p));
  for (std::size_t j = 0; j < z.size(); ++j) {
    double cur = 0.0;
    for (std::size_t k = 0; k < z.size(); ++k)
      if (k != j) cur += std::log(std::abs(z[j] - z[k]));
    for (std::size_t c = 0; c < cand.size(); ++c) {
      const double own = std::log(std::abs(cand[c] - z[j]));
      if (!std::isfinite(own)) continue;
      a.worst_gain = std::max(a.worst_gain, full[c] - own - cur);
    }
  }
  a.ok = a.worst_gain <= 1e-9;
  return a;
}

}  // namespace robinc
