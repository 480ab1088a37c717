#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "charprod/cli.hpp"
#include "charprod/errors.hpp"
#include "charprod/serialize.hpp"
#include "charprod/suite.hpp"

using namespace charprod;
namespace fs = std::filesystem;

namespace {

Example1Params params(std::uint32_t p, std::uint32_t r, std::uint32_t t, std::vector<std::int64_t> n) {
  Example1Params prm;
  prm.p = p;
  prm.r = r;
  prm.t = t;
  prm.n = std::move(n);
  return prm;
}

int run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "charprod");
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  return cli_main(static_cast<int>(argv.size()), argv.data());
}

json without_timing(json j) {
  j.erase("elapsed_ms");
  return j;
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("charprod_test_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("modes") {
  CHECK(parse_mode("full") == Mode::Full);
  CHECK(parse_mode("structural") == Mode::Structural);
  CHECK(parse_mode("auto") == Mode::Auto);
  CHECK_THROWS_AS(parse_mode("fast"), ConstraintViolation);
  CHECK(to_string(Mode::Structural) == "structural");
}

TEST_CASE("report schema") {
  VerificationReport rep;
  rep.construction = "demo";
  rep.params = {{"p", 2}};
  rep.add_equal("one", "1 = 1", 1, 1);
  json j = rep.to_json();
  for (const char* key : {"version", "construction", "params", "tier", "checks", "pass", "elapsed_ms"})
    CHECK(j.contains(key));
  CHECK(j["version"] == 1);
  CHECK(j["pass"] == true);
  CHECK(j["checks"][0]["lhs"] == 1);
  rep.add_equal("two", "1 = 2", 1, 2);
  CHECK_FALSE(rep.pass());
  CHECK(rep.first_failure()->name == "two");
  CHECK(rep.to_tsv().find("two\t1 = 2\t1\t2\tFAIL") != std::string::npos);
  CHECK_FALSE(VerificationReport{}.pass());
}

TEST_CASE("cyclotomic numbers and class functions round-trip through JSON") {
  const CycNumber z = root_of_unity(9, 4) * CycNumber(Rational(-3, 2)) + CycNumber(5);
  CHECK(cyc_from_json(cyc_json(z)) == z);
  CHECK(cyc_json(CycNumber(7)) == json{{"conductor", 1}, {"coeffs", {{7, 1}}}});
  CHECK(rational_from_json(rational_json(Rational(-4, 6))) == Rational(-2, 3));
  CHECK(rational_json(Rational(4)) == 4);
  CHECK_THROWS_AS(cyc_from_json(json{{"conductor", 9}, {"coeffs", {{1, 1}}}}), ConstraintViolation);

  const Example1Output ex = example1(params(3, 1, 1, {1, 1}));
  const json d = class_function_json(ex.delta);
  const auto values = class_function_values(d);
  REQUIRE(values.size() == 3);
  for (const auto& [x, v] : values) CHECK(ex.delta(x) == v);
}

TEST_CASE("reports are deterministic") {
  auto [ex, tb] = theorem_a(params(2, 1, 1, {1}));
  const json a = without_timing(verify_product(tb, Mode::Full).to_json());
  auto [ex2, tb2] = theorem_a(params(2, 1, 1, {1}));
  const json b = without_timing(verify_product(tb2, Mode::Full).to_json());
  CHECK(a.dump() == b.dump());
  CHECK(example1_certificate(ex).dump() == example1_certificate(ex2).dump());
  CHECK(theorem_a_certificate(ex, tb, "full").dump() == theorem_a_certificate(ex2, tb2, "full").dump());
}

TEST_CASE("negative controls") {
  const Example1Output ex = example1(params(3, 1, 1, {1, 1}));
  SUBCASE("perturbed restriction multiplicity") {
    const VerificationReport rep = verify_restriction(ex, {}, std::vector<std::int64_t>{1, 2, 1});
    CHECK_FALSE(rep.pass());
    const Check* c = rep.first_failure();
    REQUIRE(c != nullptr);
    CHECK(c->name == "<psi_Q, delta^2>");
    CHECK(c->lhs == 1);
    CHECK(c->rhs == 2);
  }
  SUBCASE("perturbed product multiplicity") {
    auto [e, tb] = theorem_a(params(2, 1, 1, {1}));
    const VerificationReport rep = verify_product(tb, Mode::Full, {}, std::vector<std::int64_t>{2, 1});
    CHECK_FALSE(rep.pass());
    bool degree = false, pointwise = false, inner = false;
    for (const auto& c : rep.checks) {
      if (c.pass) continue;
      degree = degree || c.name == "degree bookkeeping";
      pointwise = pointwise || c.name == "product identity";
      if (c.name == "<Psi Theta, Phi_1>") {
        inner = true;
        CHECK(c.lhs == 1);
        CHECK(c.rhs == 2);
      }
    }
    CHECK(degree);
    CHECK(pointwise);
    CHECK(inner);
  }
  SUBCASE("perturbed certificate value") {
    const json cert = example1_certificate(ex);
    json bad = cert;
    bad["characters"]["psi_Q"]["values"][1]["value"]["coeffs"][0][0] = 7;
    const VerificationReport rep = diff_certificate(cert, bad);
    CHECK_FALSE(rep.pass());
    const Check* c = rep.first_failure();
    REQUIRE(c != nullptr);
    CHECK(c->name == "golden psi_Q");
    CHECK(c->lhs["element"] == c->rhs["element"]);
    CHECK(c->lhs["value"] != c->rhs["value"]);
    CHECK(diff_certificate(cert, cert).pass());
  }
  SUBCASE("perturbed structural multiplicity") {
    auto [e, tb] = theorem_a(params(3, 1, 1, {1, 1}));
    CHECK_FALSE(verify_product(tb, Mode::Structural, {}, std::vector<std::int64_t>{1, 1, 2}).pass());
  }
}

TEST_CASE("suite corpus") {
  const auto ids = suite_ids();
  auto has = [&](const std::string& id) { return std::find(ids.begin(), ids.end(), id) != ids.end(); };
  CHECK(has("example1_p2_r1_t1_n1"));
  CHECK(has("example1_p5_r1_t1_n1-2"));
  CHECK(has("theorem-a_p2_r1_t1_n1"));
  CHECK(has("theorem-a_p3_r1_t1_n1-1"));
  CHECK(has("reject_example1_p2_r1_t1_n2"));
  CHECK(has("diag_wreath_2_1_1"));
  CHECK_FALSE(has("edith1_spotcheck"));
  CHECK(suite_ids(true).back() == "edith1_spotcheck");

  const fs::path dir = scratch("suite");
  SuiteOptions opt;
  opt.golden_dir = dir.string();
  opt.only = {"example1_p2_r1_t1_n1", "theorem-a_p2_r1_t1_n1"};
  SUBCASE("missing golden certificates fail") { CHECK_FALSE(run_suite(opt).pass()); }
  SUBCASE("written certificates pass, edited ones fail") {
    opt.write_golden = true;
    CHECK(run_suite(opt).pass());
    opt.write_golden = false;
    CHECK(run_suite(opt).pass());
    const fs::path file = dir / "theorem-a_p2_r1_t1_n1.json";
    json cert = json::parse(std::ifstream(file));
    cert["multiplicities"][1] = 3;
    std::ofstream(file) << cert.dump(2);
    const SuiteResult res = run_suite(opt);
    CHECK_FALSE(res.pass());
    CHECK(res.entries[0].report.pass());
    CHECK_FALSE(res.entries[1].report.pass());
  }
}

TEST_CASE("cli exit codes") {
  const fs::path dir = scratch("cli");
  const std::string out = (dir / "report.json").string();
  CHECK(run_cli({"theorem-a", "--p", "2", "--r", "1", "--t", "1", "--n", "1", "--mode", "full", "--out", out}) == 0);
  const json rep = json::parse(std::ifstream(out));
  CHECK(rep["construction"] == "theorem-a");
  CHECK(rep["tier"] == "full");
  CHECK(rep["pass"] == true);
  CHECK(rep["summary"]["eta"] == 2);

  CHECK(run_cli({"example1", "--p", "2", "--r", "1", "--t", "1", "--n", "2", "--out", out}) == 2);
  CHECK(run_cli({"example1", "--p", "2", "--r", "1", "--t", "1", "--n", "x", "--out", out}) == 2);
  CHECK(run_cli({"frobnicate"}) == 2);
  CHECK(run_cli({"theorem-a", "--p", "2", "--mode", "sideways"}) == 2);
  CHECK(run_cli({"theorem-a", "--p", "2", "--r", "1", "--t", "1", "--n", "1", "--mode", "full", "--max-enum", "100",
                 "--out", out}) == 2);
  CHECK(run_cli({"example1", "--p", "3", "--r", "1", "--t", "1", "--n", "1,1", "--format", "tsv", "--out", out}) == 0);
  CHECK(run_cli({"diag-check", "--group", "cyclic", "--order", "9", "--out", out}) == 0);
  CHECK(run_cli({"theorem-b", "--p", "2", "--r", "1", "--t", "1", "--qgen", "0,1,0", "--mode", "full", "--out", out}) == 0);
  CHECK(json::parse(std::ifstream(out))["summary"]["eta"] == 2);
  CHECK(run_cli({"theorem-b", "--p", "2", "--r", "1", "--t", "1", "--qgen", "0,0,0", "--out", out}) == 0);
  CHECK(run_cli({"theorem-b", "--p", "2", "--r", "1", "--t", "1", "--qgen", "1,0,0", "--qgen", "0,1,0", "--out", out}) == 2);
}
