#include "cli.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <regex>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "audit.hpp"
#include "robinc/parallel.hpp"

namespace robinc::cli {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

void check_n(int n) {
  if (n < kMinSweepN || n > kMaxSweepN)
    throw InvalidArgument("n = " + std::to_string(n) + " outside [2, 512]");
}

double parse_double(const std::string& s) {
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size()) throw InvalidArgument("bad number '" + s + "'");
    return v;
  } catch (const std::logic_error&) {
    throw InvalidArgument("bad number '" + s + "'");
  }
}

}  // namespace

std::vector<int> parse_n_sweep(const std::string& text) {
  static const std::regex re(R"(^\s*(\d+)\s*\.\.\s*(\d+)\s*(:\s*(\d+))?\s*$)");
  std::smatch m;
  if (!std::regex_match(text, m, re)) throw InvalidArgument("--n-sweep expects a..b[:step], got '" + text + "'");
  const int a = std::stoi(m[1].str());
  const int b = std::stoi(m[2].str());
  const int step = m[4].matched ? std::stoi(m[4].str()) : 1;
  if (step < 1) throw InvalidArgument("--n-sweep step must be positive");
  if (a > b) throw InvalidArgument("--n-sweep needs a <= b");
  check_n(a);
  check_n(b);
  std::vector<int> out;
  for (int n = a; n <= b; n += step) out.push_back(n);
  return out;
}

std::pair<int, int> parse_k_range(const std::string& text) {
  static const std::regex re(R"(^\s*(\d+)\s*(\.\.\s*(\d+))?\s*$)");
  std::smatch m;
  if (!std::regex_match(text, m, re)) throw InvalidArgument("--k expects a..b, got '" + text + "'");
  const int a = std::stoi(m[1].str());
  const int b = m[3].matched ? std::stoi(m[3].str()) : a;
  if (a < 2 || b > kMaxExampleK || a > b) throw InvalidArgument("--k range must satisfy 2 <= a <= b <= 40");
  return {a, b};
}

Complex parse_complex(const std::string& text) {
  std::string s = trim(text);
  if (!s.empty() && s.front() == '[' && s.back() == ']') s = s.substr(1, s.size() - 2);
  const auto comma = s.find(',');
  if (comma == std::string::npos) return {parse_double(trim(s)), 0.0};
  return {parse_double(trim(s.substr(0, comma))), parse_double(trim(s.substr(comma + 1)))};
}

ExperimentConfig experiment_config_from_json(const Json& j) {
  static const std::set<std::string> allowed{"set",  "generator", "points", "n",    "n_sweep",   "phi",
                                             "radius", "out",     "format", "mesh", "seed",      "seed_point",
                                             "k",    "max_iters", "plot"};
  if (!j.is_object()) throw InvalidArgument("config: expected a JSON object");
  for (const auto& [key, value] : j.items()) {
    (void)value;
    if (!allowed.count(key)) throw InvalidArgument("config: unknown key '" + key + "'");
  }
  ExperimentConfig c;
  try {
    if (j.contains("set")) c.set = j["set"].is_string() ? j["set"].get<std::string>() : j["set"].dump();
    if (j.contains("generator")) c.generator = j["generator"].get<std::string>();
    if (j.contains("points")) c.points_path = j["points"].get<std::string>();
    if (j.contains("n")) {
      const int n = j["n"].get<int>();
      check_n(n);
      c.n_values = {n};
    }
    if (j.contains("n_sweep")) c.n_values = parse_n_sweep(j["n_sweep"].get<std::string>());
    if (j.contains("phi")) c.phi = j["phi"].get<std::string>();
    if (j.contains("radius")) {
      const auto& r = j["radius"];
      if (r.is_string() && r.get<std::string>() == "auto")
        c.radius.reset();
      else
        c.radius = r.get<double>();
    }
    if (j.contains("out")) c.out = j["out"].get<std::string>();
    if (j.contains("format")) c.format = j["format"].get<std::string>();
    if (j.contains("mesh")) c.mesh = j["mesh"].get<int>();
    if (j.contains("seed")) c.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("seed_point")) {
      const auto& s = j["seed_point"];
      c.seed_point = s.is_string() ? parse_complex(s.get<std::string>()) : parse_complex(s.dump());
    }
    if (j.contains("k")) std::tie(c.k_lo, c.k_hi) = parse_k_range(j["k"].get<std::string>());
    if (j.contains("max_iters")) c.max_iters = j["max_iters"].get<int>();
    if (j.contains("plot")) c.plot = j["plot"].get<std::string>();
  } catch (const Json::exception& e) {
    throw InvalidArgument(std::string("config: ") + e.what());
  }
  return c;
}

CsvTable emit_plotdata(const std::vector<PlotPoint>& sweep) {
  if (sweep.empty()) throw InvalidArgument("emit_plotdata: empty sweep");
  std::vector<PlotPoint> rows = sweep;
  std::stable_sort(rows.begin(), rows.end(), [](const PlotPoint& a, const PlotPoint& b) { return a.n < b.n; });
  CsvTable t({"n", "quantity", "paper_rate", "fitted_constant"});
  for (const auto& p : rows)
    t.add_row({std::to_string(p.n), format_double(p.quantity), format_double(p.paper_rate),
               format_double(p.quantity / p.paper_rate)});
  return t;
}

PointConfiguration generate(const ExperimentConfig& cfg, const CompactSet& set, int n) {
  if (cfg.generator == "fekete") {
    return fekete_points(set, n, {cfg.mesh, cfg.max_iters}).config;
  }
  if (cfg.generator == "leja") return leja_points(set, n, cfg.seed_point, cfg.mesh).config();
  if (cfg.generator == "roots_of_unity") {
    PointConfiguration c;
    c.label = "roots_of_unity";
    for (int k = 0; k < n; ++k) c.points.push_back(std::polar(1.0, kTwoPi * k / n));
    return c;
  }
  if (cfg.generator == "file") {
    std::ifstream in(cfg.points_path);
    if (!in) throw InvalidArgument("cannot read points file '" + cfg.points_path + "'");
    Json j;
    try {
      j = Json::parse(in);
    } catch (const Json::parse_error& e) {
      throw InvalidArgument(std::string("points file: ") + e.what());
    }
    auto c = config_from_json(j);
    if (c.points.size() < 2) throw InvalidArgument("points file: need at least 2 points");
    if (c.label.empty()) c.label = "file";
    return c;
  }
  throw InvalidArgument("unknown generator '" + cfg.generator + "'");
}

namespace {

std::vector<int> n_list(const ExperimentConfig& cfg) {
  if (cfg.generator == "file") return {0};
  if (cfg.n_values.empty()) throw InvalidArgument("--n or --n-sweep is required");
  return cfg.n_values;
}

std::string choose_format(const ExperimentConfig& cfg, const char* fallback) {
  const std::string f = cfg.format.empty() ? fallback : cfg.format;
  if (f != "csv" && f != "json") throw InvalidArgument("--format must be csv or json");
  return f;
}

Json violation(const std::string& check, const std::string& where, const Json& detail) {
  return {{"check", check}, {"case", where}, {"detail", detail}};
}

void write_plot(const ExperimentConfig& cfg, const std::vector<PlotPoint>& pts) {
  if (cfg.plot.empty()) return;
  std::ofstream f(cfg.plot);
  if (!f) throw InvalidArgument("cannot write plot data to '" + cfg.plot + "'");
  f << emit_plotdata(pts).str();
}

// Items of a sweep; generation runs in the worker pool, rows keep n order.
std::vector<PointConfiguration> generate_all(const ExperimentConfig& cfg, const CompactSet& set) {
  const auto ns = n_list(cfg);
  return parallel_map(ns.size(), [&](std::size_t i) { return generate(cfg, set, ns[i]); });
}

Outcome finish(Outcome o, const std::string& body) {
  o.body = body;
  if (!o.violations.empty() && o.exit_code == kOk) o.exit_code = kViolation;
  return o;
}

Outcome run_points(const ExperimentConfig& cfg) {
  const auto set = set_from_string(cfg.set, cfg.mesh);
  const auto ns = n_list(cfg);
  Outcome o;
  Json results = Json::array();
  std::vector<PlotPoint> plot;

  auto items = parallel_map(ns.size(), [&](std::size_t i) {
    Json r;
    const int n = ns[i];
    PointConfiguration pc;
    if (cfg.generator == "fekete") {
      const auto sol = fekete_points(set, n, {cfg.mesh, cfg.max_iters});
      pc = sol.config;
      r = to_json(sol);
      r["certificates"] = to_json(verify_energy_certificates(sol, set));
      r["certificates_ok"] = verify_energy_certificates(sol, set).all_ok();
    } else if (cfg.generator == "leja") {
      const auto seq = leja_points(set, n, cfg.seed_point, cfg.mesh);
      pc = seq.config();
      r = to_json(seq);
      const auto rep = verify_energy_certificates(seq, set);
      r["certificates"] = to_json(rep);
      r["certificates_ok"] = rep.all_ok();
    } else {
      pc = generate(cfg, set, n);
      r["points"] = to_json(pc);
      r["certificates"] = {{"energy", to_json(energy_certificate(pc, set))}};
    }
    r["n"] = pc.n();
    r["generator"] = cfg.generator;
    r["energy"] = to_json(energy_report(pc, set));
    return std::make_pair(r, pc);
  });
  for (auto& [r, pc] : items) {
    if (r.contains("certificates_ok") && !r["certificates_ok"].get<bool>())
      o.violations.push_back(violation("energy_certificates", "n=" + std::to_string(pc.n()), r["certificates"]));
    const double n = pc.n();
    plot.push_back({pc.n(), std::abs(discrete_energy(pc) - set.robin_constant()), std::log(n) / n});
    results.push_back(std::move(r));
  }
  write_plot(cfg, plot);
  Json doc = {{"command", "points"}, {"set", to_json(set)}, {"results", results}, {"violations", o.violations}};
  return finish(std::move(o), doc.dump(2) + "\n");
}

Outcome run_energy(const ExperimentConfig& cfg) {
  const auto set = set_from_string(cfg.set, cfg.mesh);
  const auto configs = generate_all(cfg, set);
  Outcome o;
  std::vector<EnergyReport> reports;
  std::vector<PlotPoint> plot;
  for (const auto& pc : configs) {
    auto rep = energy_report(pc, set);
    const double n = rep.n;
    if (std::isfinite(rep.log_vandermonde)) {
      const double expect = -2.0 / (n * (n - 1.0)) * rep.log_vandermonde;
      if (std::abs(expect - rep.discrete_energy) > 1e-12 * std::max(1.0, std::abs(expect)))
        o.violations.push_back(violation("energy_identity", "n=" + std::to_string(rep.n), json_number(rep.discrete_energy)));
    }
    plot.push_back({rep.n, std::abs(rep.discrete_energy - set.robin_constant()), std::log(n) / n});
    reports.push_back(rep);
  }
  write_plot(cfg, plot);
  if (choose_format(cfg, "csv") == "csv") return finish(std::move(o), energy_csv(reports).str());
  Json arr = Json::array();
  for (const auto& r : reports) arr.push_back(to_json(r));
  Json doc = {{"command", "energy"}, {"set", to_json(set)}, {"reports", arr}, {"violations", o.violations}};
  return finish(std::move(o), doc.dump(2) + "\n");
}

Outcome run_discrepancy(const ExperimentConfig& cfg) {
  const auto set = set_from_string(cfg.set, cfg.mesh);
  const auto phi = TestFunction::parse(cfg.phi, set.outer_radius());
  const auto configs = generate_all(cfg, set);
  Outcome o;

  struct Row {
    DiscrepancyCertificate cert;
    SmoothedEnergy se;
    LipschitzDiscrepancy lip;
    std::optional<MomentDiscrepancy> mom;
  };
  auto rows = parallel_map(configs.size(), [&](std::size_t i) {
    const auto& pc = configs[i];
    Row r;
    r.cert = certificate(phi, pc, set, cfg.radius);
    r.se = smoothed_energy(pc, set, r.cert.r_used);
    r.lip = lipschitz_discrepancy(phi, pc, set);
    if (r.lip.in_E) r.mom = moment_discrepancy(pc, set, 1);
    return r;
  });

  CsvTable csv({"n", "lhs", "rhs", "fitted_constant", "rate_normalizer"});
  Json arr = Json::array();
  std::vector<PlotPoint> plot;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& r = rows[i];
    const int n = configs[i].n();
    const std::string where = "n=" + std::to_string(n);
    if (!r.cert.holds()) o.violations.push_back(violation("discrepancy_bound", where, to_json(r.cert)));
    if (r.se.I_sigma < -1e-6 || r.se.slack < -1e-6)
      o.violations.push_back(violation("smoothed_energy", where, to_json(r.se)));
    csv.add_row({std::to_string(n), format_double(r.cert.lhs), format_double(r.cert.rhs),
                 format_double(r.lip.C4_fitted), format_double(r.lip.rate)});
    plot.push_back({n, r.cert.lhs, r.lip.rate});
    Json j = {{"n", n}, {"certificate", to_json(r.cert)}, {"smoothed_energy", to_json(r.se)},
              {"lipschitz", {{"lhs", json_number(r.lip.lhs)}, {"rate", json_number(r.lip.rate)},
                             {"C4_fitted", json_number(r.lip.C4_fitted)}}}};
    if (r.mom)
      j["moment_m1"] = {{"value", json_number(r.mom->value)}, {"C5_fitted", json_number(r.mom->C5_fitted)}};
    arr.push_back(j);
  }
  write_plot(cfg, plot);
  if (choose_format(cfg, "json") == "csv") return finish(std::move(o), csv.str());
  Json doc = {{"command", "discrepancy"}, {"set", to_json(set)}, {"phi", phi.name()},
              {"results", arr},         {"violations", o.violations}};
  return finish(std::move(o), doc.dump(2) + "\n");
}

Outcome run_growth(const ExperimentConfig& cfg) {
  const auto set = set_from_string(cfg.set, cfg.mesh);
  const auto configs = generate_all(cfg, set);
  Outcome o;

  struct Row {
    std::optional<GrowthCheck> growth;
    std::string skipped;
    BssChain bss;
    NormRow norm;
  };
  auto rows = parallel_map(configs.size(), [&](std::size_t i) {
    const auto& pc = configs[i];
    Row r;
    try {
      r.growth = polynomial_growth_check(pc, set);
    } catch (const InvalidArgument& e) {
      r.skipped = e.what();
    }
    r.bss = bss_chain_check(pc, set);
    r.norm = norm_asymptotics({pc}, set).front();
    return r;
  });

  CsvTable csv({"n", "defect", "C2_defect", "supnorm_excess", "C2_supnorm", "energy_lower_slack", "C3", "norm_root",
                "capacity", "bss_ok"});
  Json arr = Json::array();
  std::vector<PlotPoint> plot;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& r = rows[i];
    const int n = configs[i].n();
    const std::string where = "n=" + std::to_string(n);
    if (!r.bss.inequalities_hold) o.violations.push_back(violation("bss_chain", where, to_json(r.bss)));
    if (!r.norm.lower_bound_ok) o.violations.push_back(violation("norm_lower_bound", where, to_json(r.norm)));
    if (r.growth && r.growth->near_fekete && r.growth->energy_lower_slack < -1e-8)
      o.violations.push_back(violation("energy_lower_slack", where, to_json(*r.growth)));
    const auto na = [](std::optional<double> v) { return v ? format_double(*v) : std::string("nan"); };
    const auto& g = r.growth;
    csv.add_row({std::to_string(n), na(g ? std::optional(g->max_abs_defect_on_Gamma_n) : std::nullopt),
                 na(g ? std::optional(g->C2_defect_fitted) : std::nullopt),
                 na(g ? std::optional(g->supnorm_log_excess) : std::nullopt),
                 na(g ? std::optional(g->C2_supnorm_fitted) : std::nullopt),
                 na(g ? std::optional(g->energy_lower_slack) : std::nullopt),
                 na(g ? std::optional(g->C3_fitted) : std::nullopt), format_double(r.norm.norm_root),
                 format_double(r.norm.capacity), r.bss.inequalities_hold ? "1" : "0"});
    if (g) plot.push_back({n, g->max_abs_defect_on_Gamma_n, std::log(double(n)) / std::sqrt(double(n))});
    Json j = {{"n", n}, {"bss", to_json(r.bss)}, {"norm", to_json(r.norm)}};
    if (g)
      j["growth"] = to_json(*g);
    else
      j["growth_skipped"] = r.skipped;
    arr.push_back(j);
  }
  if (!plot.empty()) write_plot(cfg, plot);
  if (choose_format(cfg, "csv") == "csv") return finish(std::move(o), csv.str());
  Json doc = {{"command", "growth"}, {"set", to_json(set)}, {"results", arr}, {"violations", o.violations}};
  return finish(std::move(o), doc.dump(2) + "\n");
}

Outcome run_schur(const ExperimentConfig& cfg) {
  const auto reports = sharpness_report(cfg.k_lo, cfg.k_hi);
  Outcome o;
  std::vector<PlotPoint> plot;
  for (const auto& r : reports) {
    const std::string where = "k=" + std::to_string(r.k);
    const auto poly = build_example_poly(r.k);
    BigInt prod = 1;
    std::int64_t sum = 0;
    for (auto p : poly.primes_used) {
      prod *= p;
      sum += p;
    }
    if (poly.degree != sum - r.k || r.supnorm_exact != prod)
      o.violations.push_back(violation("exact_identities", where, r.supnorm_exact.str()));
    if (r.sampled_circle_max_log > log_big(r.supnorm_exact) + std::log1p(1e-6))
      o.violations.push_back(violation("circle_max", where, json_number(r.sampled_circle_max_log)));
    if (std::abs(r.root_mean_numeric - r.root_mean) > 1e-10)
      o.violations.push_back(violation("root_mean", where, json_number(r.root_mean_numeric)));
    if (r.energy > 1e-9) o.violations.push_back(violation("energy_le_zero", where, json_number(r.energy)));
    plot.push_back({static_cast<int>(r.n), r.log_supnorm, r.sqrt_n_log_n});
  }
  write_plot(cfg, plot);
  if (choose_format(cfg, "csv") == "csv") return finish(std::move(o), schur_csv(reports).str());
  Json arr = Json::array();
  for (const auto& r : reports) arr.push_back(to_json(r));
  Json doc = {{"command", "schur"}, {"reports", arr}, {"violations", o.violations}};
  return finish(std::move(o), doc.dump(2) + "\n");
}

}  // namespace

Outcome run(const std::string& subcommand, const ExperimentConfig& cfg) {
  if (cfg.mesh < 16) throw InvalidArgument("--mesh must be at least 16");
  if (cfg.max_iters < 1) throw InvalidArgument("--max-iters must be positive");
  for (int n : cfg.n_values) check_n(n);
  if (subcommand == "points") return run_points(cfg);
  if (subcommand == "energy") return run_energy(cfg);
  if (subcommand == "discrepancy") return run_discrepancy(cfg);
  if (subcommand == "growth") return run_growth(cfg);
  if (subcommand == "schur") return run_schur(cfg);
  if (subcommand == "audit") return run_audit(cfg);
  throw InvalidArgument("unknown subcommand '" + subcommand + "'");
}

int main_entry(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"robinc: Fekete/Leja points, discrete energies and discrepancy certificates"};
  app.require_subcommand(1, 1);

  std::string set_spec, generator, points_path, phi, radius, out_path, format, n_sweep, k_range, config_path, plot;
  std::string seed_point;
  int n = 0, mesh = 0, max_iters = 0;
  std::uint64_t seed = 0;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--set", set_spec, "disk | segment | lemniscate | JSON text | JSON file");
    sub->add_option("--generator", generator, "fekete | leja | roots_of_unity | file");
    sub->add_option("--points", points_path, "points JSON file for --generator file");
    sub->add_option("--n", n, "number of points");
    sub->add_option("--n-sweep", n_sweep, "a..b[:step]");
    sub->add_option("--phi", phi, "test function: zero | re<m> | im<m> | abs2 [@R0,R1]");
    sub->add_option("--radius", radius, "auto | <float>");
    sub->add_option("--out", out_path, "output path (default stdout)");
    sub->add_option("--format", format, "csv | json");
    sub->add_option("--mesh", mesh, "boundary mesh resolution");
    sub->add_option("--seed", seed, "random seed for audit sampling");
    sub->add_option("--seed-point", seed_point, "Leja seed: x or x,y");
    sub->add_option("--k", k_range, "k range a..b for schur");
    sub->add_option("--config", config_path, "JSON experiment config (strict)");
    sub->add_option("--max-iters", max_iters, "Fekete iteration cap");
    sub->add_option("--plot", plot, "write (n, quantity, paper_rate, fitted_constant) CSV here");
  };
  std::vector<CLI::App*> subs;
  const std::pair<const char*, const char*> commands[] = {
      {"points", "generate a configuration and its certificates (JSON)"},
      {"energy", "log-Vandermonde, discrete energy and m_E (CSV)"},
      {"discrepancy", "discrepancy certificates for one test function"},
      {"growth", "growth of P_n on level curves and sup-norm excess (CSV)"},
      {"schur", "prime-product polynomial family over a k range (CSV)"},
      {"audit", "run every internal check; exit 1 on any violation"},
  };
  for (const auto& [name, help] : commands) {
    auto* s = app.add_subcommand(name, help);
    add_common(s);
    subs.push_back(s);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  CLI::App* sub = app.get_subcommands().front();
  const std::string name = sub->get_name();
  auto given = [&](const char* opt) { return sub->count(opt) > 0; };

  try {
    ExperimentConfig cfg;
    if (given("--config")) {
      std::ifstream in(config_path);
      if (!in) throw InvalidArgument("cannot read config '" + config_path + "'");
      Json j;
      try {
        j = Json::parse(in);
      } catch (const Json::parse_error& e) {
        throw InvalidArgument(std::string("config: ") + e.what());
      }
      cfg = experiment_config_from_json(j);
    }
    if (given("--set")) cfg.set = set_spec;
    if (given("--generator")) cfg.generator = generator;
    if (given("--points")) {
      cfg.points_path = points_path;
      if (!given("--generator")) cfg.generator = "file";
    }
    if (given("--n")) {
      check_n(n);
      cfg.n_values = {n};
    }
    if (given("--n-sweep")) cfg.n_values = parse_n_sweep(n_sweep);
    if (given("--phi")) cfg.phi = phi;
    if (given("--radius")) {
      if (radius == "auto")
        cfg.radius.reset();
      else
        cfg.radius = parse_double(radius);
    }
    if (given("--out")) cfg.out = out_path;
    if (given("--format")) cfg.format = format;
    if (given("--mesh")) cfg.mesh = mesh;
    if (given("--seed")) cfg.seed = seed;
    if (given("--seed-point")) cfg.seed_point = parse_complex(seed_point);
    if (given("--k")) std::tie(cfg.k_lo, cfg.k_hi) = parse_k_range(k_range);
    if (given("--max-iters")) cfg.max_iters = max_iters;
    if (given("--plot")) cfg.plot = plot;

    Outcome res = run(name, cfg);
    if (cfg.out.empty()) {
      out << res.body;
    } else {
      std::ofstream f(cfg.out);
      if (!f) throw InvalidArgument("cannot write '" + cfg.out + "'");
      f << res.body;
    }
    if (!res.violations.empty()) err << Json{{"violations", res.violations}}.dump() << "\n";
    return res.exit_code;
  } catch (const InvalidArgument& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const SolverFailure& e) {
    err << Json{{"error", "solver_failure"}, {"message", e.what()},
                {"best_iterate", to_json(PointConfiguration{e.best_iterate(), ""})}}
               .dump()
        << "\n";
    return kSolverFailure;
  } catch (const GeometryError& e) {
    err << Json{{"error", "geometry"}, {"message", e.what()}}.dump() << "\n";
    return kSolverFailure;
  } catch (const AuditFailure& e) {
    err << Json{{"violations", Json::array({{{"check", "audit"}, {"detail", e.what()}}})}}.dump() << "\n";
    return kViolation;
  }
}

}  // namespace robinc::cli
