#include "robinc/discrete_energy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include <boost/math/tools/minima.hpp>

#include "robinc/parallel.hpp"

namespace robinc {

namespace {

void require_n(const PointConfiguration& cfg, const char* where) {
  if (cfg.size() < 2) throw InvalidArgument(std::string(where) + ": need at least 2 points");
}

bool lex_less(Complex a, Complex b) {
  if (a.real() != b.real()) return a.real() < b.real();
  return a.imag() < b.imag();
}

}  // namespace

double log_vandermonde(const PointConfiguration& cfg) {
  require_n(cfg, "log_vandermonde");
  std::vector<Complex> z = cfg.points;
  std::sort(z.begin(), z.end(), lex_less);
  for (std::size_t j = 1; j < z.size(); ++j)
    if (z[j] == z[j - 1]) return -std::numeric_limits<double>::infinity();

  const std::size_t n = z.size();
  std::vector<double> rows(n - 1);
  auto row = [&](std::size_t j) {
    std::vector<double> terms(n - j - 1);
    for (std::size_t k = j + 1; k < n; ++k) terms[k - j - 1] = std::log(std::abs(z[j] - z[k]));
    return pairwise_sum(terms);
  };
  if (n >= 512) {
    rows = parallel_map(n - 1, row);
  } else {
    for (std::size_t j = 0; j + 1 < n; ++j) rows[j] = row(j);
  }
  return pairwise_sum(rows);
}

double discrete_energy(const PointConfiguration& cfg) {
  const double lv = log_vandermonde(cfg);
  if (std::isinf(lv)) return std::numeric_limits<double>::infinity();
  const double n = static_cast<double>(cfg.size());
  return -2.0 / (n * (n - 1.0)) * lv;
}

double nth_diameter(const PointConfiguration& cfg) { return std::exp(-discrete_energy(cfg)); }

double m_E(const PointConfiguration& cfg, const CompactSet& set) {
  if (cfg.points.empty()) return 0.0;
  std::vector<double> g;
  g.reserve(cfg.size());
  for (Complex z : cfg.points) {
    const double v = set.green(z);
    if (v > CompactSet::kOuterThreshold) g.push_back(v);
  }
  return pairwise_sum(g) / static_cast<double>(cfg.size());
}

Complex moment(const PointConfiguration& cfg, int m) {
  if (cfg.points.empty()) throw InvalidArgument("moment: empty configuration");
  if (m < 0) throw InvalidArgument("moment: m must be nonnegative");
  Complex acc{};
  for (Complex z : cfg.points) acc += std::pow(z, m);
  return acc / static_cast<double>(cfg.size());
}

double tail_log_moment(const PointConfiguration& cfg, double R) {
  if (!(R > 0.0)) throw InvalidArgument("tail_log_moment: R must be positive");
  if (cfg.points.empty()) return 0.0;
  std::vector<double> terms;
  for (Complex z : cfg.points)
    if (std::abs(z) >= R) terms.push_back(std::log(std::abs(z)));
  return pairwise_sum(terms) / static_cast<double>(cfg.size());
}

EnergyReport energy_report(const PointConfiguration& cfg, const CompactSet& set, std::optional<double> tail_radius) {
  EnergyReport rep;
  rep.n = cfg.n();
  rep.log_vandermonde = log_vandermonde(cfg);
  rep.discrete_energy = discrete_energy(cfg);
  rep.nth_diameter = std::exp(-rep.discrete_energy);
  rep.m_E = m_E(cfg, set);
  if (tail_radius) {
    rep.tail_radius = *tail_radius;
    rep.tail_log_moment = tail_log_moment(cfg, *tail_radius);
  }
  return rep;
}

double log_abs_poly(const std::vector<Complex>& zeros, Complex z) {
  double acc = 0.0;
  for (Complex w : zeros) acc += std::log(std::abs(z - w));
  return acc;
}

double log_max_on(const std::vector<Complex>& zeros, const std::vector<Complex>& samples) {
  double best = -std::numeric_limits<double>::infinity();
  for (Complex z : samples) best = std::max(best, log_abs_poly(zeros, z));
  return best;
}

SupNorm log_sup_norm(const std::vector<Complex>& zeros, const CompactSet& set) {
  const int want = std::max(4096, 16 * static_cast<int>(zeros.size()));
  std::vector<BoundaryNode> built;
  const std::vector<BoundaryNode>* mesh = &set.default_mesh();
  int M = set.mesh_resolution();
  if (M < want) {
    built = set.boundary_mesh(want);
    mesh = &built;
    M = want;
  }

  std::vector<double> vals(mesh->size());
  for (std::size_t i = 0; i < mesh->size(); ++i) vals[i] = log_abs_poly(zeros, (*mesh)[i].z);
  std::vector<std::size_t> order(mesh->size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  const std::size_t top = std::min<std::size_t>(8, order.size());
  std::partial_sort(order.begin(), order.begin() + top, order.end(), [&](std::size_t a, std::size_t b) {
    if (vals[a] != vals[b]) return vals[a] > vals[b];
    return a < b;
  });

  SupNorm out{vals[order[0]], (*mesh)[order[0]].z};
  const double step = set.mesh_step(M);
  for (std::size_t t = 0; t < top; ++t) {
    const BoundaryNode& base = (*mesh)[order[t]];
    try {
      auto neg = [&](double th) { return -log_abs_poly(zeros, set.chart(base, th).z); };
      const auto [th, v] = boost::math::tools::brent_find_minima(neg, base.theta - step, base.theta + step,
                                                                 std::numeric_limits<double>::digits);
      if (-v > out.log_value) {
        out.log_value = -v;
        out.argmax = set.chart(base, th).z;
      }
    } catch (const GeometryError&) {
      // keep the mesh value for this node
    }
  }
  return out;
}

BssChain bss_chain_check(const PointConfiguration& cfg, const CompactSet& set) {
  require_n(cfg, "bss_chain_check");
  const double n = static_cast<double>(cfg.size());
  BssChain c;
  c.m_E = m_E(cfg, set);

  std::vector<double> terms(cfg.size());
  for (std::size_t k = 0; k < cfg.size(); ++k) terms[k] = set.log_potential_integral(cfg.points[k]);
  c.mean_log_Pn_dmu = pairwise_sum(terms) / n;
  c.log_supnorm_scaled = log_sup_norm(cfg.points, set).log_value / n;

  const double log_cap = std::log(set.capacity());
  c.middle = c.mean_log_Pn_dmu - log_cap;
  c.upper = c.log_supnorm_scaled - log_cap;
  c.inequalities_hold = c.m_E <= c.middle + kBssTolerance && c.middle <= c.upper + kBssTolerance;
  return c;
}

}  // namespace robinc
