// One line per acceptance criterion; exit status 1 when any criterion fails.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "charprod/cli.hpp"
#include "charprod/errors.hpp"
#include "charprod/irreducibles.hpp"
#include "charprod/serialize.hpp"
#include "charprod/suite.hpp"

using namespace charprod;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

Example1Params params(std::uint32_t p, std::uint32_t r, std::uint32_t t, std::vector<std::int64_t> n) {
  Example1Params prm;
  prm.p = p;
  prm.r = r;
  prm.t = t;
  prm.n = std::move(n);
  return prm;
}

std::string show(const Example1Params& prm) {
  std::string s = "(" + std::to_string(prm.p) + "," + std::to_string(prm.r) + "," + std::to_string(prm.t) + ",[";
  for (std::size_t i = 0; i < prm.n.size(); ++i) s += (i ? "," : "") + std::to_string(prm.n[i]);
  return s + "])";
}

int run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "charprod");
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  return cli_main(static_cast<int>(argv.size()), argv.data());
}

// 1. Smallest end-to-end case with full enumeration of G.
Outcome criterion1() {
  const fs::path out = fs::temp_directory_path() / "charprod_acceptance_1.json";
  const int rc = run_cli({"theorem-a", "--p", "2", "--r", "1", "--t", "1", "--n", "1", "--mode", "full", "--out",
                          out.string()});
  const json rep = json::parse(std::ifstream(out));
  const json& e = rep["enumeration"];
  std::map<std::string, json> checks;
  for (const auto& c : rep["checks"]) checks[c["name"]] = c;
  auto ok = [&](const std::string& name) { return checks.count(name) && checks[name]["pass"] == true; };
  const bool pass = rc == 0 && rep["pass"] == true && rep["tier"] == "full" && e["P"] == "8" && e["Q"] == "2" &&
                    e["G"] == "128" && ok("product identity") && ok("<Phi_1, Phi_1>") && ok("<Phi_2, Phi_2>") &&
                    ok("<Phi_1, Phi_2>") && ok("eta") && rep["summary"]["eta"] == 2;
  std::ostringstream d;
  d << "|P|=" << e["P"].get<std::string>() << " |Q|=" << e["Q"].get<std::string>()
    << " |G|=" << e["G"].get<std::string>() << ", " << e["classes_G"] << " classes, eta=" << rep["summary"]["eta"]
    << ", exit " << rc;
  return {pass, d.str()};
}

// 2. Restriction matrix.
Outcome criterion2() {
  const std::vector<Example1Params> matrix = {params(2, 1, 1, {1}), params(2, 2, 1, {1, 1, 1}), params(2, 2, 1, {3}),
                                              params(3, 1, 1, {1, 1}), params(3, 1, 1, {2}), params(5, 1, 1, {1, 2}),
                                              params(2, 1, 2, {1})};
  std::size_t passed = 0;
  std::string failures;
  for (const auto& prm : matrix) {
    try {
      const Example1Output ex = example1(prm);
      const VerificationReport rep = verify_restriction(ex);
      const bool exact = rep.summary["multiplicities"] == json(prm.multiplicities());
      if (rep.pass() && exact) {
        ++passed;
      } else {
        failures += " " + show(prm) + ": verification failed;";
      }
    } catch (const Error& e) {
      failures += " " + show(prm) + ": " + e.what() + ";";
    }
  }
  std::string d = std::to_string(passed) + "/" + std::to_string(matrix.size()) + " tuples";
  if (!failures.empty()) d += ";" + failures;
  return {passed == matrix.size(), d};
}

// 3. Structural tier at index 27.
Outcome criterion3() {
  const fs::path out = fs::temp_directory_path() / "charprod_acceptance_3.json";
  const int rc = run_cli({"theorem-a", "--p", "3", "--r", "1", "--t", "1", "--n", "1,1", "--mode", "structural",
                          "--out", out.string()});
  const json rep = json::parse(std::ifstream(out));
  bool bookkeeping = false;
  json lhs, rhs;
  for (const auto& c : rep["checks"])
    if (c["name"] == "degree bookkeeping") {
      bookkeeping = c["pass"] == true;
      lhs = c["lhs"];
      rhs = c["rhs"];
    }
  const bool pass = rc == 0 && rep["pass"] == true && rep["tier"] == "structural" && bookkeeping &&
                    rep["enumeration"]["index"] == 27 && !rep["enumeration"].contains("classes_G");
  std::ostringstream d;
  d << "tier=" << rep["tier"].get<std::string>() << ", [P:Q]=" << rep["enumeration"]["index"] << ", |E|="
    << rep["enumeration"]["E"].get<std::string>() << ", Psi(1)Theta(1)=" << lhs << " sum n_i Phi_i(1)=" << rhs;
  return {pass, d.str()};
}

// 4. Frobenius reciprocity, induced degrees, first orthogonality.
Outcome criterion4() {
  const std::vector<GroupPtr> groups = {cyclic_group(16),
                                        direct_product(cyclic_group(4), cyclic_group(4)),
                                        wreath_cyclic(2, 1, 1).group(),
                                        wreath_cyclic(2, 2, 1).group(),
                                        wreath_cyclic(2, 1, 2).group(),
                                        wreath_cyclic(2, 3, 1).group(),
                                        wreath_cyclic(3, 1, 1).group(),
                                        heisenberg27(),
                                        direct_product(heisenberg27(), cyclic_group(3)),
                                        direct_product(wreath_cyclic(2, 1, 1).group(), cyclic_group(2))};
  std::mt19937_64 rng(0xacce);
  int reciprocity = 0, degrees = 0, failures = 0;
  while (reciprocity < 60) {
    const GroupPtr g = groups[rng() % groups.size()];
    const Subgroup whole = Subgroup::whole(g);
    std::vector<Element> gens{g->random_element(rng)};
    if (rng() % 2) gens.push_back(g->random_element(rng));
    const Subgroup h = subgroup_generated(g, gens);
    const auto irr_g = irr_small_pgroup(whole);
    const auto irr_h = irr_small_pgroup(h);
    ClassFunction chi = irr_g[rng() % irr_g.size()];
    if (rng() % 2) chi = sum(chi, irr_g[rng() % irr_g.size()]);
    const ClassFunction& mu = irr_h[rng() % irr_h.size()];
    const ClassFunction induced = induce(mu, whole);
    failures += inner_product(restrict_to(chi, h), mu) != inner_product(chi, induced);
    failures += induced.degree() != mu.degree() * CycNumber(Rational(index_of(whole, h)));
    ++reciprocity;
    ++degrees;
  }
  int sets = 0, orthogonality_failures = 0;
  for (const auto& g : groups) {
    if (g->order() > 128) continue;
    const auto irr = irr_small_pgroup(Subgroup::whole(g));
    for (std::size_t i = 0; i < irr.size(); ++i)
      for (std::size_t j = i; j < irr.size(); ++j)
        orthogonality_failures += inner_product(irr[i], irr[j]) != (i == j ? 1 : 0);
    ++sets;
  }
  std::ostringstream d;
  d << reciprocity << " reciprocity instances, " << degrees << " degree checks, " << failures << " failures; "
    << sets << " irreducible sets orthonormal (" << orthogonality_failures << " failures)";
  return {failures == 0 && orthogonality_failures == 0 && reciprocity >= 50, d.str()};
}

// 5. Diagonal restriction.
Outcome criterion5() {
  const VerificationReport a = verify_diagonal(wreath_cyclic(2, 1, 1).group(), "wreath(2,1,1)");
  const VerificationReport b = verify_diagonal(cyclic_group(9), "cyclic(9)");
  std::ostringstream d;
  d << a.checks.size() << " pairs on wreath(2,1,1), " << b.checks.size() << " pairs on cyclic(9)";
  return {a.pass() && b.pass() && a.checks.size() == 25 && b.checks.size() == 81, d.str()};
}

// 6. Negative controls on golden certificates.
Outcome criterion6() {
  const fs::path dir = fs::temp_directory_path() / "charprod_acceptance_golden";
  fs::remove_all(dir);
  fs::create_directories(dir);
  const std::string restriction_id = "example1_p3_r1_t1_n1-1";
  const std::string product_id = "theorem-a_p2_r1_t1_n1";
  for (const auto& id : {restriction_id, product_id}) {
    const fs::path src = fs::path(CHARPROD_GOLDEN_DIR) / (id + ".json");
    if (!fs::exists(src)) return {false, "missing golden certificate " + src.string()};
    fs::copy_file(src, dir / (id + ".json"));
  }
  SuiteOptions opt;
  opt.golden_dir = dir.string();
  opt.only = {restriction_id, product_id};
  const bool clean = run_suite(opt).pass();

  auto edit = [&](const std::string& id, const std::function<void(json&)>& f) {
    const fs::path file = dir / (id + ".json");
    json cert = json::parse(std::ifstream(file));
    const json original = cert;
    f(cert);
    std::ofstream(file) << cert.dump(2);
    return original;
  };
  auto restore = [&](const std::string& id, const json& cert) { std::ofstream(dir / (id + ".json")) << cert.dump(2); };
  auto failing = [](const SuiteResult& res) {
    std::string out;
    for (const auto& e : res.entries)
      for (const auto& c : e.report.checks)
        if (!c.pass && out.empty()) out = c.name + ": " + c.lhs.dump() + " vs " + c.rhs.dump();
    return out;
  };

  int controls = 0, caught = 0;
  std::string sample;
  // every expected multiplicity, one at a time
  for (const auto& id : {restriction_id, product_id}) {
    const json original = json::parse(std::ifstream(dir / (id + ".json")));
    for (std::size_t i = 0; i < original["multiplicities"].size(); ++i) {
      edit(id, [i](json& c) { c["multiplicities"][i] = c["multiplicities"][i].get<std::int64_t>() + 1; });
      const SuiteResult res = run_suite(opt);
      ++controls;
      caught += !res.pass();
      if (sample.empty()) sample = failing(res);
      restore(id, original);
    }
  }
  // every stored character value, one at a time
  for (const auto& id : {restriction_id, product_id}) {
    const json original = json::parse(std::ifstream(dir / (id + ".json")));
    for (const auto& [name, chi] : original["characters"].items())
      for (std::size_t v = 0; v < chi["values"].size(); ++v) {
        edit(id, [&, v](json& c) {
          auto& coeff = c["characters"][name]["values"][v]["value"]["coeffs"][0][0];
          coeff = coeff.get<std::int64_t>() + 1;
        });
        opt.only = {id};
        const SuiteResult res = run_suite(opt);
        opt.only = {restriction_id, product_id};
        ++controls;
        caught += !res.pass();
        restore(id, original);
      }
  }
  edit(product_id, [](json& c) { c["multiplicities"][0] = 5; });
  const int rc = run_cli({"suite", "--golden", dir.string(), "--only", product_id});
  std::ostringstream d;
  d << caught << "/" << controls << " perturbations detected, suite exit " << rc << " (e.g. " << sample << ")";
  return {clean && caught == controls && controls > 0 && rc == 1, d.str()};
}

// 7. Stabilizer of lambda in Lemma 1.
Outcome criterion7() {
  const std::vector<GroupPtr> groups = {wreath_cyclic(2, 1, 1).group(), wreath_cyclic(2, 2, 1).group(),
                                        wreath_cyclic(2, 1, 2).group(), wreath_cyclic(3, 1, 1).group(),
                                        heisenberg27(), wreath_cyclic(2, 3, 1).group()};
  std::mt19937_64 rng(0x1e77a);
  int pairs = 0, equal = 0, attempts = 0;
  std::uint64_t largest = 0;
  while (pairs < 30 && attempts < 10000) {
    ++attempts;
    const GroupPtr g = groups[rng() % groups.size()];
    std::vector<Element> gens{g->random_element(rng)};
    for (int extra = static_cast<int>(rng() % 3); extra > 0; --extra) gens.push_back(g->random_element(rng));
    const Subgroup q = subgroup_generated(g, gens);
    const BigInt index = index_of(Subgroup::whole(g), q);
    if (index > 16) continue;
    const Lemma1Output l = lemma1(g, q);
    const auto stab = lemma1_stabilizer(l);
    equal += stab == q.elements();
    largest = std::max<std::uint64_t>(largest, index.get_ui());
    ++pairs;
  }
  std::ostringstream d;
  d << equal << "/" << pairs << " pairs with P_lambda = Q element for element, largest index " << largest;
  return {pairs >= 20 && equal == pairs, d.str()};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"theorem-a (2,1,1,[1]) full verification", criterion1},
      {"example1 restriction matrix", criterion2},
      {"theorem-a (3,1,1,[1,1]) structural tier", criterion3},
      {"property suite (reciprocity, degrees, orthogonality)", criterion4},
      {"diagonal restriction identity", criterion5},
      {"negative controls on golden certificates", criterion6},
      {"lemma1 stabilizer contract", criterion7},
  };
  // Criteria print their own diagnostics to stderr; keep stdout to the verdict lines.
  std::cerr.setstate(std::ios::failbit);
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failed += !o.pass;
    std::printf("criterion %zu %s: %s [%s] (%.2fs)\n", i + 1, o.pass ? "PASS" : "FAIL", criteria[i].first.c_str(),
                o.detail.c_str(), secs);
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
