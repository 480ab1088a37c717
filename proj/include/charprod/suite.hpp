#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "charprod/verify.hpp"

#ifndef CHARPROD_GOLDEN_DIR
#define CHARPROD_GOLDEN_DIR "golden"
#endif

namespace charprod {

struct SuiteOptions {
  std::string golden_dir = CHARPROD_GOLDEN_DIR;
  bool write_golden = false;
  bool edith1 = false;
  std::vector<std::string> only;  // entry ids; empty means all
  Limits limits;
};

struct SuiteEntryResult {
  std::string id;
  VerificationReport report;
};

struct SuiteResult {
  std::vector<SuiteEntryResult> entries;

  bool pass() const;
  json to_json() const;
  std::string to_tsv() const;
};

/// Ids of the regression corpus, in run order.
std::vector<std::string> suite_ids(bool edith1 = false);

/// Runs the corpus; one line per entry goes to `log` when non-null.
SuiteResult run_suite(const SuiteOptions& options, std::ostream* log = nullptr);

/// Id and file name of the stored certificate for an example1 or theorem-a run.
std::string certificate_id(const std::string& construction, const Example1Params& params);

}  // namespace charprod
