#pragma once

#include <string>
#include <vector>

#include "charprod/group.hpp"

namespace charprod {

struct Check {
  std::string name;
  std::string anchor;  // the identity being checked
  json lhs;
  json rhs;
  bool pass = false;
};

/// Machine-readable record of every identity checked for one construction.
struct VerificationReport {
  static constexpr int kVersion = 1;

  std::string construction;
  json params = json::object();
  std::string tier = "full";  // "full" or "structural"
  std::vector<Check> checks;
  json summary = json::object();
  json enumeration = json::object();  // sizes of everything enumerated
  std::vector<std::string> notes;
  double elapsed_ms = 0;

  void add(std::string name, std::string anchor, json lhs, json rhs, bool pass);
  /// Passes iff lhs == rhs.
  void add_equal(std::string name, std::string anchor, json lhs, json rhs);
  /// Appends another report's checks (names prefixed) and notes.
  void absorb(const VerificationReport& other, const std::string& prefix = {});

  bool pass() const;
  const Check* first_failure() const;

  json to_json() const;
  /// name, anchor, lhs, rhs, pass; one check per line.
  std::string to_tsv() const;
};

}  // namespace charprod
