#include "charprod/report.hpp"

#include <sstream>

namespace charprod {

void VerificationReport::add(std::string name, std::string anchor, json lhs, json rhs, bool pass) {
  checks.push_back({std::move(name), std::move(anchor), std::move(lhs), std::move(rhs), pass});
}

void VerificationReport::add_equal(std::string name, std::string anchor, json lhs, json rhs) {
  const bool pass = lhs == rhs;
  add(std::move(name), std::move(anchor), std::move(lhs), std::move(rhs), pass);
}

void VerificationReport::absorb(const VerificationReport& other, const std::string& prefix) {
  for (const auto& c : other.checks) {
    Check copy = c;
    if (!prefix.empty()) copy.name = prefix + ": " + copy.name;
    checks.push_back(std::move(copy));
  }
  for (const auto& n : other.notes) notes.push_back(n);
  for (const auto& [k, v] : other.enumeration.items()) enumeration[k] = v;
}

bool VerificationReport::pass() const {
  if (checks.empty()) return false;
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

const Check* VerificationReport::first_failure() const {
  for (const auto& c : checks)
    if (!c.pass) return &c;
  return nullptr;
}

json VerificationReport::to_json() const {
  json cs = json::array();
  for (const auto& c : checks)
    cs.push_back({{"name", c.name}, {"anchor", c.anchor}, {"lhs", c.lhs}, {"rhs", c.rhs}, {"pass", c.pass}});
  json out = {{"version", kVersion},
              {"construction", construction},
              {"params", params},
              {"tier", tier},
              {"checks", std::move(cs)},
              {"pass", pass()}};
  if (!summary.empty()) out["summary"] = summary;
  if (!enumeration.empty()) out["enumeration"] = enumeration;
  if (!notes.empty()) out["notes"] = notes;
  out["elapsed_ms"] = static_cast<std::int64_t>(elapsed_ms);
  return out;
}

std::string VerificationReport::to_tsv() const {
  std::ostringstream os;
  os << "# " << construction << "\t" << params.dump() << "\t" << tier << "\t" << (pass() ? "PASS" : "FAIL")
     << "\n";
  os << "name\tanchor\tlhs\trhs\tpass\n";
  for (const auto& c : checks)
    os << c.name << "\t" << c.anchor << "\t" << c.lhs.dump() << "\t" << c.rhs.dump() << "\t"
       << (c.pass ? "pass" : "FAIL") << "\n";
  return os.str();
}

}  // namespace charprod
