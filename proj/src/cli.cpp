#include "charprod/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "charprod/errors.hpp"
#include "charprod/irreducibles.hpp"
#include "charprod/suite.hpp"

namespace charprod {

namespace {

struct Options {
  std::uint32_t p = 2;
  std::uint32_t r = 1;
  std::uint32_t t = 1;
  std::string n;
  std::string mode = "auto";
  std::uint64_t max_enum = Limits{}.max_enum;
  std::string out;
  std::string format = "json";

  // theorem-b
  std::vector<std::string> qgen;
  int psi = -1;

  // diag-check
  std::string group = "wreath";
  std::uint32_t order = 9;

  // suite
  std::string golden = CHARPROD_GOLDEN_DIR;
  bool write_golden = false;
  bool edith1 = false;
  std::vector<std::string> only;
};

std::vector<std::int64_t> parse_list(const std::string& s) {
  std::vector<std::int64_t> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size()) throw CLI::ValidationError("--n", "'" + item + "' is not an integer");
    out.push_back(v);
  }
  return out;
}

Element parse_code(const std::string& s) {
  std::vector<std::uint32_t> code;
  for (auto v : parse_list(s)) {
    if (v < 0) throw CLI::ValidationError("--qgen", "negative slot value");
    code.push_back(static_cast<std::uint32_t>(v));
  }
  return Element(std::move(code));
}

Example1Params params_of(const Options& o) {
  Example1Params prm;
  prm.p = o.p;
  prm.r = o.r;
  prm.t = o.t;
  prm.n = parse_list(o.n);
  return prm;
}

int emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(o.out);
    if (!f) {
      std::cerr << "error: cannot write " << o.out << "\n";
      return 2;
    }
    f << text;
  }
  return 0;
}

int emit_report(const Options& o, const VerificationReport& rep) {
  const int rc = emit(o, o.format == "tsv" ? rep.to_tsv() : rep.to_json().dump(2) + "\n");
  if (rc != 0) return rc;
  if (!rep.pass()) {
    if (const Check* c = rep.first_failure())
      std::cerr << "verification failed: " << c->name << ": " << c->lhs.dump() << " != " << c->rhs.dump() << "\n";
    return 1;
  }
  return 0;
}

int run_example1(const Options& o, const Limits& limits) {
  const Example1Output ex = example1(params_of(o), limits);
  VerificationReport rep = verify_restriction(ex, limits);
  rep.absorb(verify_example1_claims(ex, limits), "claims");
  return emit_report(o, rep);
}

int run_theorem_b(const Options& o, const Limits& limits) {
  Example1Params base;
  base.p = o.p;
  base.r = o.r;
  base.t = o.t;
  const Example1Output ex = example1(base, limits);
  const GroupPtr& pg = ex.P();
  std::vector<Element> gens;
  for (const auto& s : o.qgen) {
    Element g = parse_code(s);
    if (!pg->is_valid(g)) throw ConstraintViolation("--qgen " + s + " is not an element of P");
    gens.push_back(std::move(g));
  }
  const Subgroup q = subgroup_generated(pg, gens, limits, "Q");
  ClassFunction psi = ex.psi;
  if (o.psi >= 0) {
    const auto irr = irr_small_pgroup(Subgroup::whole(pg), limits);
    if (static_cast<std::size_t>(o.psi) >= irr.size())
      throw ConstraintViolation("--psi " + std::to_string(o.psi) + " out of range; P has " +
                                std::to_string(irr.size()) + " irreducibles");
    psi = irr[static_cast<std::size_t>(o.psi)];
  }
  const TheoremBOutput tb = theorem_b(pg, q, psi, std::nullopt, limits);
  VerificationReport rep = verify_product(tb, parse_mode(o.mode), limits);
  json qcodes = json::array();
  for (const auto& g : gens) qcodes.push_back(g.code);
  rep.params = {{"p", o.p}, {"r", o.r}, {"t", o.t}, {"qgen", qcodes}, {"psi", o.psi >= 0 ? json(o.psi) : json("lambda^P")}};
  return emit_report(o, rep);
}

int run_theorem_a(const Options& o, const Limits& limits) {
  const Example1Params prm = params_of(o);
  auto [ex, tb] = theorem_a(prm, limits);
  const VerificationReport product = verify_product(tb, parse_mode(o.mode), limits);
  VerificationReport rep;
  rep.absorb(verify_restriction(ex, limits), "restriction");
  rep.absorb(product);
  rep.tier = product.tier;
  rep.summary = product.summary;
  rep.elapsed_ms = product.elapsed_ms;
  rep.construction = "theorem-a";
  rep.params = prm.to_json();
  return emit_report(o, rep);
}

int run_diag(const Options& o, const Limits& limits) {
  if (o.group == "cyclic") return emit_report(o, verify_diagonal(cyclic_group(o.order), "cyclic(" + std::to_string(o.order) + ")", limits));
  const std::string name = "wreath(" + std::to_string(o.p) + "," + std::to_string(o.t) + "," + std::to_string(o.r) + ")";
  return emit_report(o, verify_diagonal(wreath_cyclic(o.p, o.t, o.r).group(), name, limits));
}

int run_suite_cmd(const Options& o, const Limits& limits) {
  SuiteOptions so;
  so.golden_dir = o.golden;
  so.write_golden = o.write_golden;
  so.edith1 = o.edith1;
  so.only = o.only;
  so.limits = limits;
  const SuiteResult res = run_suite(so, &std::cerr);
  if (!o.out.empty() || o.format == "tsv") {
    const int rc = emit(o, o.format == "tsv" ? res.to_tsv() : res.to_json().dump(2) + "\n");
    if (rc != 0) return rc;
  }
  std::cerr << (res.pass() ? "suite passed" : "suite FAILED") << " (" << res.entries.size() << " entries)\n";
  return res.pass() ? 0 : 1;
}

}  // namespace

int cli_main(int argc, char** argv) {
  Options o;
  CLI::App app{"Exact character products of finite p-groups"};
  app.require_subcommand(1);

  auto add_params = [&o](CLI::App* sub) {
    sub->add_option("--p", o.p, "prime")->check(CLI::PositiveNumber);
    sub->add_option("--r", o.r, "top exponent r (Z_{p^r})")->check(CLI::PositiveNumber);
    sub->add_option("--t", o.t, "base exponent t (Z_{p^t})")->check(CLI::PositiveNumber);
  };
  auto add_common = [&o](CLI::App* sub) {
    sub->add_option("--max-enum", o.max_enum, "enumeration bound")->check(CLI::PositiveNumber);
    sub->add_option("--out", o.out, "write the report here instead of stdout");
    sub->add_option("--format", o.format, "json or tsv")->check(CLI::IsMember({"json", "tsv"}));
  };
  auto add_mode = [&o](CLI::App* sub) {
    sub->add_option("--mode", o.mode, "structural, full or auto")
        ->check(CLI::IsMember({"structural", "full", "auto"}));
  };

  CLI::App* ex1 = app.add_subcommand("example1", "restriction psi_Q for the wreath product example");
  add_params(ex1);
  ex1->add_option("--n", o.n, "comma list n_1,...,n_{k-1}");
  add_common(ex1);
  add_mode(ex1);

  CLI::App* tb = app.add_subcommand("theorem-b", "product construction over P = Z_{p^t} wr Z_{p^r}");
  add_params(tb);
  tb->add_option("--qgen", o.qgen, "generator of Q as a comma separated code (repeatable)")->required();
  tb->add_option("--psi", o.psi, "index into Irr(P) (default: lambda^P)");
  add_common(tb);
  add_mode(tb);

  CLI::App* ta = app.add_subcommand("theorem-a", "example1 followed by the product construction");
  add_params(ta);
  ta->add_option("--n", o.n, "comma list n_1,...,n_{k-1}");
  add_common(ta);
  add_mode(ta);

  CLI::App* diag = app.add_subcommand("diag-check", "products as restrictions to the diagonal");
  add_params(diag);
  diag->add_option("--group", o.group, "wreath or cyclic")->check(CLI::IsMember({"wreath", "cyclic"}));
  diag->add_option("--order", o.order, "order of the cyclic group")->check(CLI::PositiveNumber);
  add_common(diag);

  CLI::App* suite = app.add_subcommand("suite", "run the regression corpus");
  suite->add_option("--golden", o.golden, "golden certificate directory");
  suite->add_flag("--write-golden", o.write_golden, "rewrite the golden certificates");
  suite->add_flag("--edith1-spotcheck", o.edith1, "also run the experimental order-27 probe");
  suite->add_option("--only", o.only, "run only these entry ids");
  add_common(suite);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  Limits limits;
  limits.max_enum = o.max_enum;
  try {
    if (*ex1) return run_example1(o, limits);
    if (*tb) return run_theorem_b(o, limits);
    if (*ta) return run_theorem_a(o, limits);
    if (*diag) return run_diag(o, limits);
    if (*suite) return run_suite_cmd(o, limits);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const ConstraintViolation& e) {
    std::cerr << "ConstraintViolation: " << e.what() << "\n";
    return 2;
  } catch (const NotPrime& e) {
    std::cerr << "NotPrime: " << e.what() << "\n";
    return 2;
  } catch (const EnumerationBoundExceeded& e) {
    std::cerr << "EnumerationBoundExceeded: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace charprod
