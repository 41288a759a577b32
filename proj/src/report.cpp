#include "bcx/report.hpp"

#include <sstream>

namespace bcx {

bool Report::pass() const {
  for (const auto& c : checks) {
    if (!c.pass) return false;
  }
  return true;
}

void Report::addCheck(std::string name, bool pass, double residual) {
  checks.push_back(Check{std::move(name), pass, residual});
}

void Report::addWitness(std::string name, Json value) {
  witnesses.push_back(Json{{"name", std::move(name)}, {"value", std::move(value)}});
}

Json Report::toJson() const {
  Json j;
  j["claim"] = claim;
  j["witnesses"] = witnesses;
  Json cs = Json::array();
  for (const auto& c : checks) {
    cs.push_back(Json{{"name", c.name}, {"pass", c.pass}, {"residual", c.residual}});
  }
  j["checks"] = cs;
  return j;
}

std::string Report::toText() const {
  std::ostringstream os;
  os << "claim: " << claim << "\n";
  for (const auto& w : witnesses) {
    os << "  witness " << w.at("name").get<std::string>() << " = " << w.at("value").dump()
       << "\n";
  }
  for (const auto& c : checks) {
    os << "  [" << (c.pass ? "pass" : "FAIL") << "] " << c.name << " (residual " << c.residual
       << ")\n";
  }
  os << (pass() ? "PASS" : "FAIL") << "\n";
  return os.str();
}

}  // namespace bcx
