#include "audit.hpp"

#include <cmath>
#include <mutex>
#include <numbers>
#include <random>

#include "robinc/parallel.hpp"

namespace robinc::cli {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
const std::vector<std::optional<double>> kRadii{1e-3, 1e-2, 0.1, 0.5, std::nullopt};

struct Log {
  int checks = 0;
  Json violations = Json::array();

  void check(bool ok, const std::string& name, const std::string& where, const Json& detail = nullptr) {
    ++checks;
    if (!ok) violations.push_back({{"check", name}, {"case", where}, {"detail", detail}});
  }
  void merge(const Log& other) {
    checks += other.checks;
    for (const auto& v : other.violations) violations.push_back(v);
  }
};

std::string set_name(const CompactSet& s) {
  switch (s.kind()) {
    case SetKind::Disk:
      return "disk";
    case SetKind::Segment:
      return "segment";
    case SetKind::Lemniscate:
      return "lemniscate";
  }
  return "?";
}

Log audit_set(const CompactSet& set, std::uint64_t seed) {
  Log log;
  const std::string where = set_name(set);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  try {
    const auto hp = set.holder_params();
    log.check(hp.worst_ratio <= 1.0, "holder_audit", where, to_json(hp));
  } catch (const AuditFailure& e) {
    log.check(false, "holder_audit", where, e.what());
  }

  // g(z) - log|z| -> V_E
  for (double ang : {0.3, 1.9, 4.0}) {
    const Complex z = std::polar(1e6, ang);
    const double diff = set.green(z) - std::log(std::abs(z)) - set.robin_constant();
    log.check(std::abs(diff) < 1e-4, "green_asymptote", where, json_number(diff));
  }

  const auto q = set.equilibrium_quadrature(4096);
  double wsum = 0.0;
  for (double w : q.weights) wsum += w;
  log.check(std::abs(wsum - 1.0) < 1e-12, "quadrature_weights", where, json_number(wsum));

  // potential of the discrete equilibrium measure is V_E on E
  std::vector<Complex> inner;
  switch (set.kind()) {
    case SetKind::Disk: {
      const auto& d = set.disk_params();
      for (int i = 0; i < 100; ++i) inner.push_back(d.center + std::polar(0.9 * d.radius * unit(rng), kTwoPi * unit(rng)));
      break;
    }
    case SetKind::Segment: {
      // midpoints between consecutive Chebyshev angles
      const auto& s = set.segment_params();
      for (int i = 1; i <= 100; ++i) {
        const int j = 1 + (i * 40) % 4095;
        inner.push_back(0.5 * (s.a + s.b) + 0.5 * (s.b - s.a) * std::cos(std::numbers::pi * j / 4096));
      }
      break;
    }
    case SetKind::Lemniscate: {
      const double R = set.outer_radius();
      const auto& L = set.lemniscate_params();
      const double Rm = std::pow(L.r, L.p.degree());
      while (inner.size() < 100) {
        const Complex z(R * (2.0 * unit(rng) - 1.0), R * (2.0 * unit(rng) - 1.0));
        if (std::abs(L.p(z)) <= 0.8 * Rm) inner.push_back(z);
      }
      break;
    }
  }
  double worst = 0.0;
  for (Complex z : inner) {
    double U = 0.0;
    for (std::size_t k = 0; k < q.nodes.size(); ++k) U -= q.weights[k] * std::log(std::abs(z - q.nodes[k]));
    worst = std::max(worst, std::abs(U - set.robin_constant()));
  }
  log.check(worst <= 1e-3, "frostman_constancy", where, json_number(worst));

  // harmonicity off E (undivided 5-point stencil) and the 1-Lipschitz distance
  const auto& mesh = set.default_mesh();
  std::uniform_int_distribution<std::size_t> pick(0, mesh.size() - 1);
  double lap_worst = 0.0, lip_worst = 0.0;
  int lap_count = 0;
  while (lap_count < 1000) {
    const Complex z = mesh[pick(rng)].z + std::polar(std::pow(10.0, -2.0 + 2.0 * unit(rng)), kTwoPi * unit(rng));
    if (set.dist_to_set(z) < 1e-2) continue;
    const double h = 1e-3;
    const double lap = set.green(z + h) + set.green(z - h) + set.green(z + Complex(0, h)) +
                       set.green(z - Complex(0, h)) - 4.0 * set.green(z);
    lap_worst = std::max(lap_worst, std::abs(lap));
    ++lap_count;
  }
  for (int i = 0; i < 1000; ++i) {
    const Complex z1 = mesh[pick(rng)].z + std::polar(std::pow(10.0, -4.0 + 4.0 * unit(rng)), kTwoPi * unit(rng));
    const Complex z2 = z1 + std::polar(std::pow(10.0, -4.0 + 4.0 * unit(rng)), kTwoPi * unit(rng));
    const double excess = std::abs(set.dist_to_set(z1) - set.dist_to_set(z2)) - std::abs(z1 - z2);
    lip_worst = std::max(lip_worst, excess);
  }
  log.check(lap_worst <= 1e-4, "green_harmonic", where, json_number(lap_worst));
  log.check(lip_worst <= 1e-12, "dist_lipschitz", where, json_number(lip_worst));

  for (const char* sel : {"re1", "im2", "abs2"}) {
    const auto phi = TestFunction::parse(sel, set.outer_radius());
    const auto a = phi.audit(10000, seed);
    log.check(a.ok, "test_function_modulus", where + "/" + phi.name(), json_number(a.worst_ratio));
  }
  return log;
}

bool in_E(const PointConfiguration& pc, const CompactSet& set) {
  for (Complex z : pc.points)
    if (set.green(z) > CompactSet::kOuterThreshold) return false;
  return true;
}

struct CaseResult {
  Log log;
  std::optional<double> fekete_delta;
  std::optional<double> fekete_gap;
};

CaseResult audit_case(const CompactSet& set, const std::string& generator, int n, const ExperimentConfig& cfg) {
  CaseResult res;
  Log& log = res.log;
  const std::string where = set_name(set) + "/" + generator + "/n=" + std::to_string(n);

  PointConfiguration pc;
  if (generator == "fekete") {
    const auto sol = fekete_points(set, n, {cfg.mesh, cfg.max_iters});
    pc = sol.config;
    log.check(sol.certificate.energy_le_robin, "fekete_certificate", where, to_json(sol.certificate));
    bool mono = true;
    for (std::size_t i = 1; i < sol.history.size(); ++i) mono = mono && sol.history[i] >= sol.history[i - 1] - 1e-9;
    log.check(mono, "exchange_monotone", where);
    const auto ia = interior_candidate_audit(sol, set);
    log.check(ia.ok, "interior_candidates", where, json_number(ia.worst_gain));
    res.fekete_delta = sol.delta_n;
  } else if (generator == "leja") {
    const auto seq = leja_points(set, n, std::nullopt, cfg.mesh);
    pc = seq.config();
    const auto rep = verify_energy_certificates(seq, set);
    log.check(rep.all_ok(), "leja_certificates", where, to_json(rep));
    const auto ia = interior_candidate_audit(seq, set);
    log.check(ia.ok, "interior_candidates", where, json_number(ia.worst_gain));
  } else {
    ExperimentConfig gen;
    gen.generator = generator;
    pc = generate(gen, set, n);
  }

  const auto rep = energy_report(pc, set);
  const double expect = -2.0 / (double(n) * (n - 1.0)) * rep.log_vandermonde;
  log.check(std::abs(expect - rep.discrete_energy) <= 1e-12 * std::max(1.0, std::abs(expect)), "energy_identity", where);

  const auto bss = bss_chain_check(pc, set);
  log.check(bss.inequalities_hold, "bss_chain", where, to_json(bss));
  const auto norm = norm_asymptotics({pc}, set).front();
  log.check(norm.lower_bound_ok, "norm_lower_bound", where, to_json(norm));
  if (generator == "fekete") res.fekete_gap = norm.difference;

  for (const char* sel : {"re1", "im2", "abs2"}) {
    const auto phi = TestFunction::parse(sel, set.outer_radius());
    for (const auto& r : kRadii) {
      const auto cert = certificate(phi, pc, set, r);
      log.check(cert.holds(), "discrepancy_bound", where + "/" + phi.name() + "/r=" + (r ? format_double(*r) : "auto"),
                to_json(cert));
    }
  }
  const auto phi = TestFunction::parse("re1", set.outer_radius());
  const auto base = certificate(phi, pc, set, 0.1);
  const auto scaled = certificate(phi.scaled(-2.5), pc, set, 0.1);
  log.check(std::abs(scaled.lhs - 2.5 * base.lhs) <= 1e-12 * std::max(1.0, scaled.lhs) &&
                std::abs(scaled.rhs - 2.5 * base.rhs) <= 1e-12 * std::max(1.0, scaled.rhs),
            "scaling_consistency", where);

  std::vector<double> radii{1e-3, 1e-2, 0.1, 0.5};
  radii.push_back(certificate(phi, pc, set).r_used);
  for (double r : radii) {
    const auto se = smoothed_energy(pc, set, r);
    log.check(se.I_sigma >= -1e-6 && se.slack >= -1e-6, "smoothed_energy", where + "/r=" + format_double(r), to_json(se));
  }

  if (in_E(pc, set)) {
    const auto g = polynomial_growth_check(pc, set);
    if (g.near_fekete) log.check(g.energy_lower_slack >= -1e-8, "energy_lower_slack", where, to_json(g));
    const auto tail = tail_log_moment(pc, 2.0 * set.outer_radius() + 1.0);
    log.check(tail == 0.0 && m_E(pc, set) == 0.0, "tail_and_m_E_vanish", where);
  }
  return res;
}

Log audit_global(std::uint64_t seed) {
  (void)seed;
  Log log;
  for (int n = 2; n <= 200; ++n) {
    PointConfiguration pc;
    for (int k = 0; k < n; ++k) pc.points.push_back(std::polar(1.0, kTwoPi * k / n));
    const double e = discrete_energy(pc);
    log.check(std::abs(e + std::log(double(n)) / (n - 1.0)) <= 1e-10, "roots_of_unity_energy", "n=" + std::to_string(n),
              json_number(e));
  }

  ExperimentConfig schur;
  schur.k_lo = 2;
  schur.k_hi = 30;
  const auto s = run("schur", schur);
  log.checks += 4 * 29;
  for (const auto& v : s.violations) log.violations.push_back(v);

  for (const auto& row : degree_asymptotic_check(10, 40))
    log.check(row.ratio >= 0.6 && row.ratio <= 1.6, "degree_band", "k=" + std::to_string(row.k), json_number(row.ratio));

  const auto table = sieve(1'000'000);
  bool all_prime = true;
  for (auto p : table.primes) all_prime = all_prime && is_prime_trial(p);
  log.check(all_prime && table.primes.size() == 78498, "sieve_trial_division", "limit=1e6");
  for (double x : {1e4, 1e5, 1e6}) {
    const double ratio = chebyshev_theta(x) / x;
    log.check(ratio >= 0.8 && ratio <= 1.2, "theta_band", "x=" + format_double(x), json_number(ratio));
  }

  const std::vector<std::pair<std::vector<BigInt>, BigInt>> discs{
      {{-2, 0, 1}, 8}, {{1, 0, 1}, -4}, {{-1, 0, 2}, 8}, {{-1, 0, 0, 1}, -27}};
  for (const auto& [coeffs, expect] : discs)
    log.check(integer_discriminant(coeffs) == expect, "integer_discriminant", "deg=" + std::to_string(coeffs.size() - 1));
  return log;
}

}  // namespace

Outcome run_audit(const ExperimentConfig& cfg) {
  std::vector<CompactSet> sets{set_from_string("disk", cfg.mesh), set_from_string("segment", cfg.mesh),
                               set_from_string("lemniscate", cfg.mesh)};
  if (cfg.set != "disk" && cfg.set != "segment" && cfg.set != "lemniscate") sets.push_back(set_from_string(cfg.set, cfg.mesh));
  const std::vector<int> ns = cfg.n_values.empty() ? std::vector<int>{8, 16, 32, 64} : cfg.n_values;
  const std::vector<std::string> generators{"fekete", "leja", "roots_of_unity"};

  Log total;
  const auto set_logs = parallel_map(sets.size(), [&](std::size_t i) { return audit_set(sets[i], cfg.seed); });
  for (const auto& l : set_logs) total.merge(l);

  struct Key {
    std::size_t set;
    std::size_t gen;
    int n;
  };
  std::vector<Key> keys;
  for (std::size_t s = 0; s < sets.size(); ++s)
    for (std::size_t g = 0; g < generators.size(); ++g)
      for (int n : ns) keys.push_back({s, g, n});
  const auto cases = parallel_map(keys.size(), [&](std::size_t i) {
    return audit_case(sets[keys[i].set], generators[keys[i].gen], keys[i].n, cfg);
  });
  for (const auto& c : cases) total.merge(c.log);

  // Fekete n-th diameters decrease in n, and so does the norm gap
  for (std::size_t s = 0; s < sets.size(); ++s) {
    std::vector<double> delta, gap;
    for (std::size_t i = 0; i < keys.size(); ++i) {
      if (keys[i].set != s || generators[keys[i].gen] != "fekete") continue;
      delta.push_back(*cases[i].fekete_delta);
      gap.push_back(*cases[i].fekete_gap);
    }
    for (std::size_t i = 1; i < delta.size(); ++i) {
      total.check(delta[i] <= delta[i - 1] + 1e-4, "fekete_delta_monotone", set_name(sets[s]) + "/step " + std::to_string(i),
                  json_number(delta[i] - delta[i - 1]));
      total.check(gap[i] <= gap[i - 1] + 1e-3, "norm_gap_monotone", set_name(sets[s]) + "/step " + std::to_string(i),
                  json_number(gap[i] - gap[i - 1]));
    }
  }

  total.merge(audit_global(cfg.seed));

  Outcome o;
  o.violations = total.violations;
  o.exit_code = o.violations.empty() ? kOk : kViolation;
  Json doc = {{"command", "audit"},
              {"checks", total.checks},
              {"failed", o.violations.size()},
              {"n_values", ns},
              {"violations", o.violations}};
  o.body = doc.dump(2) + "\n";
  return o;
}

}  // namespace robinc::cli
