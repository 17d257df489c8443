#include "hyperlag/io.hpp"

#include <fstream>
#include <sstream>

#include "hyperlag/errors.hpp"

namespace hyperlag {

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

json number_pair(const Rational& q) {
  json j;
  j["exact"] = to_string(q);
  j["float"] = format_real(q.get_d());
  return j;
}

}  // namespace

Hypergraph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int r = 0;
  bool have_header = false;
  std::vector<Edge> edges;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    if (!have_header) {
      if (line.rfind("r=", 0) != 0) throw ParseError("line " + std::to_string(line_no) + ": expected 'r=<int>' header");
      try {
        std::size_t used = 0;
        r = std::stoi(line.substr(2), &used);
        if (used != line.size() - 2) throw std::invalid_argument("trailing");
      } catch (const std::exception&) {
        throw ParseError("line " + std::to_string(line_no) + ": malformed uniformity header");
      }
      if (r < 1) throw ParseError("uniformity must be at least 1");
      have_header = true;
      continue;
    }
    std::istringstream fields(line);
    Edge e;
    std::string tok;
    while (fields >> tok) {
      try {
        std::size_t used = 0;
        int v = std::stoi(tok, &used);
        if (used != tok.size()) throw std::invalid_argument("trailing");
        e.push_back(v);
      } catch (const std::exception&) {
        throw ParseError("line " + std::to_string(line_no) + ": bad vertex '" + tok + "'");
      }
    }
    edges.push_back(std::move(e));
  }
  if (!have_header) throw ParseError("missing 'r=<int>' header");
  return Hypergraph(r, std::move(edges));
}

std::string format_edge_list(const Hypergraph& h) {
  std::ostringstream out;
  out << "r=" << h.r() << '\n';
  for (const auto& e : h.edges()) {
    for (std::size_t k = 0; k < e.size(); ++k) out << (k ? " " : "") << e[k];
    out << '\n';
  }
  return out.str();
}

json to_json(const Hypergraph& h) {
  json j;
  j["r"] = h.r();
  j["edges"] = h.edges();
  return j;
}

Hypergraph hypergraph_from_json(const json& j) {
  try {
    return Hypergraph(j.at("r").get<int>(), j.at("edges").get<std::vector<Edge>>());
  } catch (const json::exception& e) {
    throw ParseError(std::string("hypergraph JSON: ") + e.what());
  }
}

Hypergraph parse_hypergraph(const std::string& text) {
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    json j;
    try {
      j = json::parse(text);
    } catch (const json::exception& e) {
      throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    return hypergraph_from_json(j);
  }
  return parse_edge_list(text);
}

json to_json(const Weighting& w) {
  json values = json::array();
  if (w.exact()) {
    for (const auto& q : *w.exact()) values.push_back(to_string(q));
  } else {
    for (double v : w.values()) values.push_back(v);
  }
  return json{{"values", values}};
}

Weighting weighting_from_json(const json& j) {
  try {
    const auto& values = j.at("values");
    bool all_exact = true;
    std::vector<Rational> exact;
    std::vector<double> floats;
    for (const auto& v : values) {
      if (v.is_string()) {
        Rational q = parse_rational(v.get<std::string>());
        exact.push_back(q);
        floats.push_back(q.get_d());
      } else {
        all_exact = false;
        floats.push_back(v.get<double>());
      }
    }
    if (all_exact && !exact.empty()) return Weighting::from_exact(std::move(exact));
    return Weighting(std::move(floats));
  } catch (const json::exception& e) {
    throw ParseError(std::string("weighting JSON: ") + e.what());
  }
}

json to_json(const LagrangianResult& res) {
  json j;
  j["value"] = to_string(res.exact_value);
  j["value_float"] = format_real(res.value);
  json weights = json::array();
  for (std::size_t k = 0; k < res.weights.size(); ++k)
    weights.push_back(json{{"vertex", res.vertices[k]}, {"weight", to_string(res.weights[k])},
                           {"float", format_real(res.weights[k].get_d())}});
  j["weighting"] = std::move(weights);
  j["T"] = res.support_size;
  j["kkt_on_support"] = format_real(res.kkt.on_support);
  j["kkt_off_support"] = format_real(res.kkt.off_support);
  j["method"] = to_string(res.method);
  j["starts"] = res.starts_used;
  j["seed"] = res.seed;
  j["degenerate"] = res.degenerate;
  return j;
}

json to_json(const MonitorDiagnostics& d) {
  json j;
  j["t"] = d.t;
  j["premise"] = d.premise;
  j["T"] = d.support;
  j["delta"] = d.delta;
  j["x1"] = format_real(d.x1);
  j["xT"] = format_real(d.xT);
  j["q"] = d.q;
  j["xq"] = format_real(d.xq);
  j["tail_sum"] = format_real(d.tail_sum);
  json bounds = json::array();
  for (const auto& b : d.bounds)
    bounds.push_back(json{{"bound", b.name}, {"status", to_string(b.status)}, {"lhs", format_real(b.lhs)},
                          {"rhs", format_real(b.rhs)}});
  j["bounds"] = std::move(bounds);
  return j;
}

json to_json(const VerificationReport& rep) {
  json j;
  j["r"] = rep.r;
  j["m"] = rep.m;
  j["t"] = rep.t;
  j["regime"] = to_string(rep.regime);
  j["restricted"] = rep.restricted;
  j["support_cap"] = rep.tmax;
  j["colex_value"] = number_pair(rep.colex_value);
  j["colex_method"] = to_string(rep.colex_method);
  j["best_value"] = number_pair(rep.best_value);
  j["gap"] = format_real(rep.gap());
  j["witness"] = to_json(rep.witness);
  j["witness_result"] = to_json(rep.witness_result);
  j["counterexample"] = rep.counterexample;
  j["comparison"] = rep.exact_comparison ? "exact" : "numeric";
  j["saturated"] = rep.saturated;
  j["candidates"] = rep.candidates;
  j["oracle_checks"] = rep.oracle_checks;
  j["oracle_improvements"] = rep.oracle_improvements;
  j["diagnostics"] = rep.diagnostics ? to_json(*rep.diagnostics) : json(nullptr);
  return j;
}

json to_json(const std::vector<VerificationReport>& reps) {
  json arr = json::array();
  for (const auto& rep : reps) arr.push_back(to_json(rep));
  return json{{"reports", std::move(arr)}};
}

std::string reports_to_csv(const std::vector<VerificationReport>& reps) {
  std::ostringstream out;
  out << "m,t,regime,colex_value,best_value,gap,candidates,counterexample\n";
  for (const auto& rep : reps) {
    out << rep.m << ',' << rep.t << ',' << to_string(rep.regime) << ',' << format_real(rep.colex_value.get_d()) << ','
        << format_real(rep.best_value.get_d()) << ',' << format_real(rep.gap()) << ',' << rep.candidates << ','
        << (rep.counterexample ? "true" : "false") << '\n';
  }
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path + "'");
  out << content;
}

}  // namespace hyperlag
