/// @file report.hpp
/// @brief Machine-checked witness reports shared by the demos and the CLI.
///
/// Schema: {"claim": string, "witnesses": [...], "checks":
/// [{"name": string, "pass": bool, "residual": number}]}. A report passes
/// when every check passes.
#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace bcx {

using Json = nlohmann::ordered_json;

struct Check {
  std::string name;
  bool pass = false;
  double residual = 0.0;
};

struct Report {
  std::string claim;
  Json witnesses = Json::array();
  std::vector<Check> checks;

  bool pass() const;
  void addCheck(std::string name, bool pass, double residual = 0.0);
  void addWitness(std::string name, Json value);

  Json toJson() const;
  std::string toText() const;
};

}  // namespace bcx
