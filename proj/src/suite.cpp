#include "charprod/suite.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#include "charprod/errors.hpp"
#include "charprod/serialize.hpp"

namespace charprod {

namespace {

namespace fs = std::filesystem;

struct Entry {
  std::string id;
  std::function<VerificationReport(const SuiteOptions&)> run;
};

std::string join(const std::vector<std::int64_t>& n) {
  std::string out;
  for (std::size_t i = 0; i < n.size(); ++i) out += (i ? "-" : "") + std::to_string(n[i]);
  return out.empty() ? "none" : out;
}

// Compares `certificate` with the stored copy (or replaces it), and returns
// the stored multiplicities, which the verification then has to reproduce.
std::vector<std::int64_t> golden_step(const SuiteOptions& opt, const std::string& id, const json& certificate,
                                      VerificationReport& rep) {
  const fs::path path = fs::path(opt.golden_dir) / (id + ".json");
  if (opt.write_golden) {
    fs::create_directories(path.parent_path());
    std::ofstream(path) << certificate.dump(2) << "\n";
    rep.notes.push_back("golden certificate written to " + path.string());
    return certificate.at("multiplicities").get<std::vector<std::int64_t>>();
  }
  std::ifstream in(path);
  if (!in) {
    rep.add("golden certificate", "stored certificate present", path.string(), nullptr, false);
    return certificate.at("multiplicities").get<std::vector<std::int64_t>>();
  }
  json golden;
  try {
    golden = json::parse(in);
  } catch (const json::exception& e) {
    rep.add("golden certificate", "stored certificate parses", e.what(), nullptr, false);
    return certificate.at("multiplicities").get<std::vector<std::int64_t>>();
  }
  rep.absorb(diff_certificate(certificate, golden));
  return golden.value("multiplicities", json::array()).get<std::vector<std::int64_t>>();
}

VerificationReport run_example1(const SuiteOptions& opt, const Example1Params& prm) {
  const auto start = std::chrono::steady_clock::now();
  VerificationReport rep;
  rep.construction = "example1";
  rep.params = prm.to_json();
  const Example1Output ex = example1(prm, opt.limits);
  const auto want = golden_step(opt, certificate_id("example1", prm), example1_certificate(ex, opt.limits), rep);
  rep.absorb(verify_restriction(ex, opt.limits, want));
  rep.absorb(verify_example1_claims(ex, opt.limits), "claims");
  rep.summary = {{"k", prm.k()}, {"multiplicities", want}};
  rep.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

VerificationReport run_rejection(const SuiteOptions& opt, const Example1Params& prm, const std::string& inequality) {
  VerificationReport rep;
  rep.construction = "example1-reject";
  rep.params = prm.to_json();
  std::string message = "accepted";
  bool rejected = false;
  try {
    example1(prm, opt.limits);
  } catch (const ConstraintViolation& e) {
    message = e.what();
    rejected = message.find(inequality) != std::string::npos;
  }
  rep.add("input rejected", inequality, message, "ConstraintViolation: " + inequality + " violated", rejected);
  return rep;
}

VerificationReport run_theorem_a(const SuiteOptions& opt, const Example1Params& prm, Mode mode) {
  const auto start = std::chrono::steady_clock::now();
  auto [ex, tb] = theorem_a(prm, opt.limits);
  VerificationReport rep;
  rep.construction = "theorem-a";
  rep.params = prm.to_json();
  rep.tier = to_string(mode);
  const auto want =
      golden_step(opt, certificate_id("theorem-a", prm), theorem_a_certificate(ex, tb, rep.tier, opt.limits), rep);
  VerificationReport product = verify_product(tb, mode, opt.limits, want);
  rep.absorb(verify_restriction(ex, opt.limits, want), "restriction");
  rep.absorb(product);
  rep.tier = product.tier;
  rep.summary = product.summary;
  rep.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

Example1Params params(std::uint32_t p, std::uint32_t r, std::uint32_t t, std::vector<std::int64_t> n) {
  Example1Params prm;
  prm.p = p;
  prm.r = r;
  prm.t = t;
  prm.n = std::move(n);
  return prm;
}

std::vector<Entry> corpus(bool edith1) {
  std::vector<Entry> out;
  const std::vector<Example1Params> matrix = {
      params(2, 1, 1, {1}), params(2, 2, 1, {3}),    params(3, 1, 1, {1, 1}),
      params(3, 1, 1, {2}), params(5, 1, 1, {1, 2}), params(2, 1, 2, {1}),
  };
  for (const auto& prm : matrix)
    out.push_back({certificate_id("example1", prm), [prm](const SuiteOptions& o) { return run_example1(o, prm); }});

  // Inputs outside the constraints must be refused.
  const std::vector<std::pair<Example1Params, std::string>> rejected = {
      {params(2, 1, 1, {2}), "p^r > sum n_i"},
      {params(2, 2, 1, {1, 1, 1}), "p^t >= k"},
  };
  for (const auto& [prm, ineq] : rejected)
    out.push_back({"reject_" + certificate_id("example1", prm),
                   [prm, ineq](const SuiteOptions& o) { return run_rejection(o, prm, ineq); }});

  const std::vector<std::pair<Example1Params, Mode>> products = {
      {params(2, 1, 1, {1}), Mode::Full},
      {params(2, 1, 1, {}), Mode::Full},
      {params(3, 1, 1, {1, 1}), Mode::Structural},
  };
  for (const auto& [prm, mode] : products)
    out.push_back({certificate_id("theorem-a", prm),
                   [prm, mode](const SuiteOptions& o) { return run_theorem_a(o, prm, mode); }});

  out.push_back({"diag_wreath_2_1_1", [](const SuiteOptions& o) {
                   return verify_diagonal(wreath_cyclic(2, 1, 1).group(), "wreath(2,1,1)", o.limits);
                 }});
  out.push_back({"diag_cyclic_9", [](const SuiteOptions& o) {
                   return verify_diagonal(cyclic_group(9), "cyclic(9)", o.limits);
                 }});
  if (edith1)
    out.push_back({"edith1_spotcheck", [](const SuiteOptions& o) { return edith1_spotcheck(o.limits); }});
  return out;
}

}  // namespace

std::string certificate_id(const std::string& construction, const Example1Params& prm) {
  return construction + "_p" + std::to_string(prm.p) + "_r" + std::to_string(prm.r) + "_t" +
         std::to_string(prm.t) + "_n" + join(prm.n);
}

std::vector<std::string> suite_ids(bool edith1) {
  std::vector<std::string> ids;
  for (const auto& e : corpus(edith1)) ids.push_back(e.id);
  return ids;
}

SuiteResult run_suite(const SuiteOptions& options, std::ostream* log) {
  SuiteResult result;
  for (const auto& entry : corpus(options.edith1)) {
    if (!options.only.empty() && std::find(options.only.begin(), options.only.end(), entry.id) == options.only.end())
      continue;
    VerificationReport rep;
    try {
      rep = entry.run(options);
    } catch (const std::exception& e) {
      rep.construction = "error";
      rep.add("construction completed", "no exception", e.what(), nullptr, false);
    }
    if (log) {
      *log << (rep.pass() ? "PASS " : "FAIL ") << entry.id << " (" << rep.checks.size() << " checks, " << rep.tier
           << ")\n";
      for (const auto& c : rep.checks)
        if (!c.pass) *log << "    " << c.name << ": " << c.lhs.dump() << " != " << c.rhs.dump() << "\n";
    }
    result.entries.push_back({entry.id, std::move(rep)});
  }
  return result;
}

bool SuiteResult::pass() const {
  if (entries.empty()) return false;
  return std::all_of(entries.begin(), entries.end(), [](const auto& e) { return e.report.pass(); });
}

json SuiteResult::to_json() const {
  json items = json::array();
  for (const auto& e : entries) items.push_back({{"id", e.id}, {"report", e.report.to_json()}});
  return json{{"version", VerificationReport::kVersion}, {"suite", std::move(items)}, {"pass", pass()}};
}

std::string SuiteResult::to_tsv() const {
  std::ostringstream os;
  for (const auto& e : entries) os << "## " << e.id << "\n" << e.report.to_tsv();
  return os.str();
}

}  // namespace charprod
