#pragma once

#include <json.hpp>
#include <string>

#include "crn/disguised.hpp"

namespace crn {

using nlohmann::json;

/// Network wire format: {"dimension": n, "vertices": [[num,...],...],
/// "edges": [[i,j],...]} with 0-based indices; rationals as "p/q" strings
/// or integers. Throws ParseError on malformed input.
EGraph parseNetwork(const json& j);
EGraph loadNetworkFile(const std::string& path);
json networkToJson(const EGraph& g);

/// Edge-ordered numeric array aligned with the network's edge list.
Eigen::VectorXd parseEdgeArray(const json& j, const EGraph& g);
Eigen::VectorXd loadEdgeArrayFile(const std::string& path, const EGraph& g);

/// State as a plain numeric array of length dimension.
State parseState(const json& j, int dimension);

json toJson(const Eigen::VectorXd& v);
json toJson(const ToricCertificate& cert);
json toJson(const DisguisedCertificate& cert);
json toJson(const PathResult& path);

struct RunConfig {
  Tolerances tols;
  SearchBudget budget;
  int samples = 32;
  std::string format = "json";  // json | table

  static RunConfig fromJson(const json& j);
  static RunConfig fromFile(const std::string& path);
};

}  // namespace crn
