#include "crn/json_io.hpp"

#include <fstream>

#include "crn/errors.hpp"

namespace crn {

namespace {

json loadFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ParseError, "malformed JSON in '" + path + "': " + e.what());
  }
}

Rational coordFromJson(const json& j) {
  if (j.is_string()) return parseRational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  throw Error(ErrorCode::ParseError,
              "vertex coordinate must be an integer or a \"p/q\" string");
}

}  // namespace

EGraph parseNetwork(const json& j) {
  if (!j.is_object() || !j.contains("dimension") || !j.contains("vertices") ||
      !j.contains("edges"))
    throw Error(ErrorCode::ParseError,
                "network needs \"dimension\", \"vertices\" and \"edges\"");
  int n = j.at("dimension").get<int>();

  std::vector<RationalVec> coords;
  for (const json& vj : j.at("vertices")) {
    if (!vj.is_array() || static_cast<int>(vj.size()) != n)
      throw Error(ErrorCode::ParseError, "each vertex needs dimension entries");
    RationalVec v;
    for (const json& c : vj) v.push_back(coordFromJson(c));
    coords.push_back(std::move(v));
  }

  std::vector<Edge> edges;
  for (const json& ej : j.at("edges")) {
    if (!ej.is_array() || ej.size() != 2)
      throw Error(ErrorCode::ParseError, "each edge is a pair [src, tgt]");
    edges.push_back({ej[0].get<int>(), ej[1].get<int>()});
  }
  return EGraph(std::move(coords), std::move(edges));
}

EGraph loadNetworkFile(const std::string& path) { return parseNetwork(loadFile(path)); }

json networkToJson(const EGraph& g) {
  json verts = json::array();
  for (const Vertex& v : g.vertices()) {
    json row = json::array();
    for (const Rational& c : v.coords) {
      if (c.denominator() == 1)
        row.push_back(c.numerator());
      else
        row.push_back(toString(c));
    }
    verts.push_back(std::move(row));
  }
  json edges = json::array();
  for (const Edge& e : g.edges()) edges.push_back(json::array({e.src, e.tgt}));
  return json{{"dimension", g.dimension()}, {"vertices", verts}, {"edges", edges}};
}

Eigen::VectorXd parseEdgeArray(const json& j, const EGraph& g) {
  if (!j.is_array() || static_cast<int>(j.size()) != g.edgeCount())
    throw Error(ErrorCode::ParseError,
                "expected an array of " + std::to_string(g.edgeCount()) +
                    " edge values");
  Eigen::VectorXd v(g.edgeCount());
  for (int i = 0; i < g.edgeCount(); ++i) {
    if (!j[i].is_number())
      throw Error(ErrorCode::ParseError, "edge value " + std::to_string(i) +
                                             " is not a number");
    v(i) = j[i].get<double>();
  }
  return v;
}

Eigen::VectorXd loadEdgeArrayFile(const std::string& path, const EGraph& g) {
  return parseEdgeArray(loadFile(path), g);
}

State parseState(const json& j, int dimension) {
  if (!j.is_array() || static_cast<int>(j.size()) != dimension)
    throw Error(ErrorCode::ParseError,
                "state needs " + std::to_string(dimension) + " entries");
  Eigen::VectorXd v(dimension);
  for (int i = 0; i < dimension; ++i) v(i) = j[i].get<double>();
  return State(std::move(v));
}

json toJson(const Eigen::VectorXd& v) {
  json a = json::array();
  for (int i = 0; i < v.size(); ++i) a.push_back(v(i));
  return a;
}

json toJson(const ToricCertificate& cert) {
  json j{{"member", cert.member},
         {"residual", cert.residual},
         {"proven_infeasible", cert.provenInfeasible}};
  if (!cert.reason.empty()) j["reason"] = cert.reason;
  if (cert.witnessState) j["witness_state"] = toJson(cert.witnessState->values());
  if (cert.witnessRates) j["witness_rates"] = toJson(cert.witnessRates->values());
  return j;
}

json toJson(const DisguisedCertificate& cert) {
  json j{{"member", cert.member},
         {"search_exhausted", cert.searchExhausted},
         {"equivalence_residual", cert.equivalenceResidual},
         {"balance_residual", cert.balanceResidual}};
  if (cert.targetGraph) j["target_graph"] = networkToJson(*cert.targetGraph);
  if (cert.realizedRates) j["realized_rates"] = toJson(cert.realizedRates->values());
  if (cert.steadyState) j["steady_state"] = toJson(cert.steadyState->values());
  return j;
}

json toJson(const PathResult& path) {
  json segs = json::array();
  for (const PathSegment& s : path.segments) {
    json samples = json::array();
    for (const auto& [t, k] : s.samples)
      samples.push_back(json{{"t", t}, {"rates", toJson(k.values())}});
    segs.push_back(json{
        {"kind", s.kind == PathSegment::Kind::Fiber ? "fiber" : "line"},
        {"samples", std::move(samples)}});
  }
  json certs = json::array();
  for (const DisguisedCertificate& c : path.certificates) certs.push_back(toJson(c));
  json j{{"segments", std::move(segs)},
         {"endpoint_a", toJson(path.endpointA.values())},
         {"endpoint_b", toJson(path.endpointB.values())},
         {"certificates", std::move(certs)}};
  if (path.mergedGraph) j["merged_graph"] = networkToJson(*path.mergedGraph);
  return j;
}

RunConfig RunConfig::fromJson(const json& j) {
  RunConfig c;
  if (!j.is_object()) throw Error(ErrorCode::ParseError, "config must be an object");
  auto num = [&](const char* key, double& out) {
    if (j.contains(key)) out = j.at(key).get<double>();
  };
  auto integer = [&](const char* key, int& out) {
    if (j.contains(key)) out = j.at(key).get<int>();
  };
  num("tol", c.tols.tol);
  num("tol_lin", c.tols.tolLin);
  num("tol_loglin", c.tols.tolLoglin);
  num("pos_eps", c.tols.posEps);
  integer("starts", c.budget.starts);
  integer("iters", c.budget.iters);
  num("log_box_lo", c.budget.logBoxLo);
  num("log_box_hi", c.budget.logBoxHi);
  if (j.contains("subset_cap")) c.budget.subsetCap = j.at("subset_cap").get<std::uint64_t>();
  if (j.contains("seed")) c.budget.seed = j.at("seed").get<std::uint64_t>();
  integer("samples", c.samples);
  if (j.contains("format")) c.format = j.at("format").get<std::string>();
  if (c.tols.tol <= 0 || c.tols.tolLin <= 0 || c.tols.tolLoglin <= 0 ||
      c.tols.posEps <= 0)
    throw Error(ErrorCode::ParseError, "all tolerances must be positive");
  if (c.format != "json" && c.format != "table")
    throw Error(ErrorCode::ParseError, "format must be \"json\" or \"table\"");
  return c;
}

RunConfig RunConfig::fromFile(const std::string& path) {
  return fromJson(loadFile(path));
}

}  // namespace crn
