#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "hyperlag/hypergraph.hpp"
#include "hyperlag/lagrangian.hpp"
#include "hyperlag/verifier.hpp"

namespace hyperlag {

using json = nlohmann::ordered_json;

/// Edge-list text: a `r=<int>` header line, then one edge per line as
/// space-separated integers. Blank lines and `#` comments are ignored.
Hypergraph parse_edge_list(const std::string& text);
std::string format_edge_list(const Hypergraph& h);

json to_json(const Hypergraph& h);
Hypergraph hypergraph_from_json(const json& j);

/// Accepts either format, sniffing for a leading '{'.
Hypergraph parse_hypergraph(const std::string& text);

/// {"values": [...]}; entries may be rational strings or numbers.
json to_json(const Weighting& w);
Weighting weighting_from_json(const json& j);

json to_json(const LagrangianResult& res);
json to_json(const MonitorDiagnostics& d);
json to_json(const VerificationReport& rep);
json to_json(const std::vector<VerificationReport>& reps);

/// One header row, then m,t,regime,colex_value,best_value,gap,candidates,counterexample.
std::string reports_to_csv(const std::vector<VerificationReport>& reps);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace hyperlag
