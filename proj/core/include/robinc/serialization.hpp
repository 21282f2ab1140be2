#pragma once

// JSON and CSV forms of sets, configurations and reports.
// Doubles are written in shortest round-trip form; non-finite values as the
// strings "inf", "-inf", "nan".

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "robinc/discrepancy.hpp"
#include "robinc/integer_poly.hpp"
#include "robinc/point_generation.hpp"

namespace robinc {

using Json = nlohmann::json;

/// Shortest string that parses back to the same double.
std::string format_double(double v);

Json json_number(double v);
double number_from_json(const Json& j);

/// {kind, params, mesh_resolution}
Json to_json(const CompactSet& set);
/// Strict: unknown keys and wrong types are InvalidArgument.
CompactSet set_from_json(const Json& j);
/// "disk" | "segment" | "lemniscate" (the default catalog entries), inline
/// JSON text, or a path to a JSON file.
CompactSet set_from_string(const std::string& spec, int mesh_resolution = CompactSet::kDefaultMesh);

/// Array of [re, im] pairs.
Json to_json(const PointConfiguration& cfg);
/// Accepts the array form or {"points": [...], "label": "..."}.
PointConfiguration config_from_json(const Json& j);

Json to_json(const EnergyReport& r);
Json to_json(const EnergyCertificate& c);
Json to_json(const CertificateReport& c);
Json to_json(const LejaSequence& s);
Json to_json(const FeketeSolution& s);
Json to_json(const DiscrepancyCertificate& c);
Json to_json(const SmoothedEnergy& s);
Json to_json(const BssChain& b);
Json to_json(const GrowthCheck& g);
Json to_json(const NormRow& r);
Json to_json(const HolderParams& h);
Json to_json(const SchurReport& r);

/// Minimal CSV table; cells are pre-formatted strings.
class CsvTable {
 public:
  explicit CsvTable(std::vector<std::string> header);
  void add_row(std::vector<std::string> cells);
  std::string str() const;
  std::size_t rows() const noexcept { return rows_.size(); }

 private:
  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

CsvTable energy_csv(const std::vector<EnergyReport>& reports);
CsvTable schur_csv(const std::vector<SchurReport>& reports);

}  // namespace robinc
