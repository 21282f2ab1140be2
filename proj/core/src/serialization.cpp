#include "robinc/serialization.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

namespace robinc {

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

Json json_number(double v) {
  if (std::isfinite(v)) return v;
  return format_double(v);
}

double number_from_json(const Json& j) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "inf") return std::numeric_limits<double>::infinity();
    if (s == "-inf") return -std::numeric_limits<double>::infinity();
    if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
  }
  throw InvalidArgument("expected a number, got " + j.dump());
}

namespace {

Json complex_json(Complex z) { return Json::array({json_number(z.real()), json_number(z.imag())}); }

Complex complex_from_json(const Json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2) throw InvalidArgument("expected [re, im], got " + j.dump());
  return {number_from_json(j[0]), number_from_json(j[1])};
}

void check_keys(const Json& j, const std::set<std::string>& allowed, const char* where) {
  if (!j.is_object()) throw InvalidArgument(std::string(where) + ": expected an object");
  for (const auto& [key, value] : j.items()) {
    (void)value;
    if (!allowed.count(key)) throw InvalidArgument(std::string(where) + ": unknown key '" + key + "'");
  }
}

const Json& need(const Json& j, const char* key, const char* where) {
  if (!j.contains(key)) throw InvalidArgument(std::string(where) + ": missing key '" + key + "'");
  return j.at(key);
}

CompactSet default_lemniscate(int mesh) {
  return CompactSet::lemniscate(Polynomial({-1.0, 0.0, 1.0}), 1.2, mesh);
}

}  // namespace

Json to_json(const CompactSet& set) {
  Json params;
  std::string kind;
  switch (set.kind()) {
    case SetKind::Disk:
      kind = "disk";
      params = {{"center", complex_json(set.disk_params().center)}, {"radius", set.disk_params().radius}};
      break;
    case SetKind::Segment:
      kind = "segment";
      params = {{"a", set.segment_params().a}, {"b", set.segment_params().b}};
      break;
    case SetKind::Lemniscate: {
      kind = "lemniscate";
      Json coeffs = Json::array();
      for (Complex c : set.lemniscate_params().p.coeffs()) coeffs.push_back(complex_json(c));
      params = {{"coeffs", coeffs}, {"r", set.lemniscate_params().r}};
      break;
    }
  }
  return {{"kind", kind}, {"params", params}, {"mesh_resolution", set.mesh_resolution()}};
}

CompactSet set_from_json(const Json& j) {
  check_keys(j, {"kind", "params", "mesh_resolution"}, "set");
  const Json& kind_j = need(j, "kind", "set");
  if (!kind_j.is_string()) throw InvalidArgument("set: kind must be a string");
  const std::string kind = kind_j.get<std::string>();
  int mesh = CompactSet::kDefaultMesh;
  if (j.contains("mesh_resolution")) {
    if (!j["mesh_resolution"].is_number_integer()) throw InvalidArgument("set: mesh_resolution must be an integer");
    mesh = j["mesh_resolution"].get<int>();
  }
  const Json params = j.contains("params") ? j["params"] : Json::object();
  try {
    if (kind == "disk") {
      check_keys(params, {"center", "radius"}, "disk params");
      const Complex c = params.contains("center") ? complex_from_json(params["center"]) : Complex(0.0, 0.0);
      const double R = params.contains("radius") ? number_from_json(params["radius"]) : 1.0;
      return CompactSet::disk(c, R, mesh);
    }
    if (kind == "segment") {
      check_keys(params, {"a", "b"}, "segment params");
      const double a = params.contains("a") ? number_from_json(params["a"]) : -1.0;
      const double b = params.contains("b") ? number_from_json(params["b"]) : 1.0;
      return CompactSet::segment(a, b, mesh);
    }
    if (kind == "lemniscate") {
      check_keys(params, {"coeffs", "r"}, "lemniscate params");
      if (!params.contains("coeffs")) return default_lemniscate(mesh);
      const Json& cj = params["coeffs"];
      if (!cj.is_array()) throw InvalidArgument("lemniscate params: coeffs must be an array");
      std::vector<Complex> coeffs;
      for (const auto& c : cj) coeffs.push_back(complex_from_json(c));
      const double r = number_from_json(need(params, "r", "lemniscate params"));
      return CompactSet::lemniscate(Polynomial(std::move(coeffs)), r, mesh);
    }
  } catch (const Json::exception& e) {
    throw InvalidArgument(std::string("set: ") + e.what());
  }
  throw InvalidArgument("set: unknown kind '" + kind + "'");
}

CompactSet set_from_string(const std::string& spec, int mesh) {
  if (spec == "disk") return CompactSet::disk({0.0, 0.0}, 1.0, mesh);
  if (spec == "segment") return CompactSet::segment(-1.0, 1.0, mesh);
  if (spec == "lemniscate") return default_lemniscate(mesh);
  Json j;
  const auto first = spec.find_first_not_of(" \t\r\n");
  try {
    if (first != std::string::npos && spec[first] == '{') {
      j = Json::parse(spec);
    } else {
      std::ifstream in(spec);
      if (!in) throw InvalidArgument("set: '" + spec + "' is neither a catalog name, JSON, nor a readable file");
      j = Json::parse(in);
    }
  } catch (const Json::parse_error& e) {
    throw InvalidArgument(std::string("set: malformed JSON: ") + e.what());
  }
  if (!j.contains("mesh_resolution")) j["mesh_resolution"] = mesh;
  return set_from_json(j);
}

Json to_json(const PointConfiguration& cfg) {
  Json arr = Json::array();
  for (Complex z : cfg.points) arr.push_back(complex_json(z));
  return arr;
}

PointConfiguration config_from_json(const Json& j) {
  PointConfiguration cfg;
  const Json* arr = &j;
  if (j.is_object()) {
    check_keys(j, {"points", "label"}, "configuration");
    arr = &need(j, "points", "configuration");
    if (j.contains("label")) cfg.label = j["label"].get<std::string>();
  }
  if (!arr->is_array()) throw InvalidArgument("configuration: expected an array of [re, im] pairs");
  for (const auto& p : *arr) cfg.points.push_back(complex_from_json(p));
  return cfg;
}

Json to_json(const EnergyReport& r) {
  Json j = {{"n", r.n},
            {"log_vandermonde", json_number(r.log_vandermonde)},
            {"discrete_energy", json_number(r.discrete_energy)},
            {"nth_diameter_from_config", json_number(r.nth_diameter)},
            {"m_E", json_number(r.m_E)}};
  if (r.tail_log_moment) {
    j["tail_radius"] = json_number(*r.tail_radius);
    j["tail_log_moment"] = json_number(*r.tail_log_moment);
  }
  return j;
}

Json to_json(const EnergyCertificate& c) {
  return {{"energy_le_robin", c.energy_le_robin}, {"slack", json_number(c.slack)}};
}

Json to_json(const CertificateReport& c) {
  Json j = Json::object();
  if (c.fekete_cert) j["fekete_cert"] = to_json(*c.fekete_cert);
  if (c.leja_cert) j["leja_cert"] = to_json(*c.leja_cert);
  if (c.leja_identity_residual) {
    j["leja_identity_residual"] = json_number(*c.leja_identity_residual);
    j["leja_identity_ok"] = c.leja_identity_ok;
    j["leja_lower_bound_ok"] = c.leja_lower_bound_ok;
  }
  return j;
}

Json to_json(const LejaSequence& s) {
  Json norms = Json::array();
  for (double v : s.log_norms) norms.push_back(json_number(v));
  return {{"seed", complex_json(s.seed)},
          {"points", to_json(s.config())},
          {"log_norms", norms},
          {"mesh_resolution", s.mesh_resolution}};
}

Json to_json(const FeketeSolution& s) {
  Json hist = Json::array();
  for (double v : s.history) hist.push_back(json_number(v));
  return {{"points", to_json(s.config)},
          {"achieved_log_vandermonde", json_number(s.achieved_log_vandermonde)},
          {"discrete_energy", json_number(s.discrete_energy)},
          {"delta_n", json_number(s.delta_n)},
          {"certificate", to_json(s.certificate)},
          {"sweeps", s.sweeps},
          {"newton_iterations", s.newton_iterations},
          {"mesh_resolution", s.mesh_resolution},
          {"history", hist}};
}

Json to_json(const DiscrepancyCertificate& c) {
  return {{"lhs", json_number(c.lhs)},
          {"rhs", json_number(c.rhs)},
          {"r_used", json_number(c.r_used)},
          {"I_terms",
           {{"two_m_E", json_number(c.I_terms.two_m_E)},
            {"energy_excess", json_number(c.I_terms.energy_excess)},
            {"minus_log_r_over_n", json_number(c.I_terms.minus_log_r_over_n)},
            {"green_band_term", json_number(c.I_terms.green_band_term)}}},
          {"I_clamped", c.I_clamped},
          {"omega", json_number(c.omega)},
          {"dirichlet", json_number(c.dirichlet)}};
}

Json to_json(const SmoothedEnergy& s) {
  return {{"I_sigma", json_number(s.I_sigma)}, {"bound_22", json_number(s.bound_22)}, {"slack", json_number(s.slack)}};
}

Json to_json(const BssChain& b) {
  return {{"m_E", json_number(b.m_E)},
          {"mean_log_Pn_dmu", json_number(b.mean_log_Pn_dmu)},
          {"log_supnorm_scaled", json_number(b.log_supnorm_scaled)},
          {"middle", json_number(b.middle)},
          {"upper", json_number(b.upper)},
          {"inequalities_hold", b.inequalities_hold}};
}

Json to_json(const GrowthCheck& g) {
  return {{"n", g.n},
          {"max_abs_defect_on_Gamma_n", json_number(g.max_abs_defect_on_Gamma_n)},
          {"C2_defect_fitted", json_number(g.C2_defect_fitted)},
          {"supnorm_log_excess", json_number(g.supnorm_log_excess)},
          {"C2_supnorm_fitted", json_number(g.C2_supnorm_fitted)},
          {"energy_lower_slack", json_number(g.energy_lower_slack)},
          {"C3_fitted", json_number(g.C3_fitted)},
          {"rho_n", json_number(g.rho_n)},
          {"near_fekete", g.near_fekete}};
}

Json to_json(const NormRow& r) {
  return {{"n", r.n},
          {"norm_root", json_number(r.norm_root)},
          {"capacity", json_number(r.capacity)},
          {"difference", json_number(r.difference)},
          {"lower_bound_ok", r.lower_bound_ok}};
}

Json to_json(const HolderParams& h) {
  return {{"C", json_number(h.C)},
          {"s", json_number(h.s)},
          {"audited_points", h.audited_points},
          {"worst_ratio", json_number(h.worst_ratio)},
          {"certified_by", "sampled audit"}};
}

Json to_json(const SchurReport& r) {
  return {{"k", r.k},
          {"n", r.n},
          {"supnorm_exact", r.supnorm_exact.str()},
          {"log_supnorm", json_number(r.log_supnorm)},
          {"sqrt_n_log_n", json_number(r.sqrt_n_log_n)},
          {"ratio_c1", json_number(r.ratio_c1)},
          {"root_mean", json_number(r.root_mean)},
          {"ratio_c2", json_number(r.ratio_c2)},
          {"energy", json_number(r.energy)}};
}

CsvTable::CsvTable(std::vector<std::string> header) : header_(std::move(header)) {}

void CsvTable::add_row(std::vector<std::string> cells) {
  if (cells.size() != header_.size()) throw InvalidArgument("csv: row width does not match header");
  rows_.push_back(std::move(cells));
}

std::string CsvTable::str() const {
  std::ostringstream out;
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out << ',';
      out << cells[i];
    }
    out << '\n';
  };
  line(header_);
  for (const auto& r : rows_) line(r);
  return out.str();
}

CsvTable energy_csv(const std::vector<EnergyReport>& reports) {
  CsvTable t({"n", "log_vandermonde", "discrete_energy", "m_E"});
  for (const auto& r : reports)
    t.add_row({std::to_string(r.n), format_double(r.log_vandermonde), format_double(r.discrete_energy),
               format_double(r.m_E)});
  return t;
}

CsvTable schur_csv(const std::vector<SchurReport>& reports) {
  CsvTable t({"k", "n", "supnorm_exact", "log_supnorm", "ratio_c1", "root_mean", "ratio_c2", "energy"});
  for (const auto& r : reports)
    t.add_row({std::to_string(r.k), std::to_string(r.n), r.supnorm_exact.str(), format_double(r.log_supnorm),
               format_double(r.ratio_c1), format_double(r.root_mean), format_double(r.ratio_c2),
               format_double(r.energy)});
  return t;
}

}  // namespace robinc
