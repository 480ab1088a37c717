#include "charprod/serialize.hpp"

#include <random>

#include "charprod/errors.hpp"
#include "charprod/verify.hpp"

namespace charprod {

namespace {

json integer_json(const BigInt& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

BigInt integer_from_json(const json& j) {
  if (j.is_string()) return BigInt(j.get<std::string>());
  return BigInt(j.get<long>());
}

}  // namespace

json rational_json(const Rational& r) {
  if (r.get_den() == 1) return integer_json(r.get_num());
  return r.get_str();
}

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  Rational r(j.get<std::string>());
  r.canonicalize();
  return r;
}

json cyc_json(const CycNumber& value) {
  const CycNumber z = value.normalized();
  json coeffs = json::array();
  for (const auto& c : z.coefficients())
    coeffs.push_back(json::array({integer_json(c.get_num()), integer_json(c.get_den())}));
  return json{{"conductor", z.conductor()}, {"coeffs", std::move(coeffs)}};
}

CycNumber cyc_from_json(const json& j) {
  const auto n = j.at("conductor").get<std::uint32_t>();
  const auto& coeffs = j.at("coeffs");
  if (coeffs.size() != euler_phi(n))
    throw ConstraintViolation("serialized cyclotomic number has " + std::to_string(coeffs.size()) +
                              " coefficients, expected phi(" + std::to_string(n) + ")");
  std::vector<Rational> powers;
  for (const auto& pair : coeffs) {
    Rational c(integer_from_json(pair.at(0)), integer_from_json(pair.at(1)));
    c.canonicalize();
    powers.push_back(c);
  }
  return CycNumber::from_powers(n, powers);
}

json class_function_json(const ClassFunction& chi, const std::vector<Element>& sample) {
  const Subgroup& dom = chi.domain();
  json group = dom.is_whole() ? json(dom.group().descriptor())
                              : json{{"parent", dom.group().descriptor()}, {"subgroup", dom.descriptor()}};
  json values = json::array();
  if (chi.tabulated()) {
    const auto& classes = dom.classes();
    for (std::size_t i = 0; i < classes.size(); ++i)
      values.push_back({{"element", classes[i].representative.code}, {"value", cyc_json(chi.class_values()[i])}});
  } else {
    for (const auto& x : sample) values.push_back({{"element", x.code}, {"value", cyc_json(chi(x))}});
  }
  return json{{"group", std::move(group)},
              {"conductor", chi.conductor()},
              {"sampled", !chi.tabulated()},
              {"values", std::move(values)}};
}

std::vector<std::pair<Element, CycNumber>> class_function_values(const json& j) {
  std::vector<std::pair<Element, CycNumber>> out;
  for (const auto& v : j.at("values"))
    out.emplace_back(Element(v.at("element").get<std::vector<std::uint32_t>>()), cyc_from_json(v.at("value")));
  return out;
}

namespace {

std::vector<Element> group_sample(const FiniteGroup& g, std::size_t count) {
  std::mt19937_64 rng(0xce27);
  std::vector<Element> out{g.identity()};
  while (out.size() < count) out.push_back(g.random_element(rng));
  return out;
}

}  // namespace

json example1_certificate(const Example1Output& ex, const Limits& limits) {
  const ClassFunction psi_q = restrict_to(ex.psi, ex.Q, limits).materialized(limits);
  json chars = json::object();
  chars["psi_Q"] = class_function_json(psi_q);
  chars["delta"] = class_function_json(ex.delta);
  chars["psi"] = class_function_json(ex.psi, group_sample(*ex.P(), 12));
  return json{{"version", VerificationReport::kVersion},
              {"construction", "example1"},
              {"params", ex.params.to_json()},
              {"orders", {{"P", ex.P()->order().get_str()}, {"Q", ex.Q.order().get_str()}}},
              {"group", ex.P()->descriptor()},
              {"q", ex.q.code},
              {"multiplicities", ex.multiplicities},
              {"characters", std::move(chars)}};
}

json theorem_a_certificate(const Example1Output& ex, const TheoremBOutput& tb, const std::string& tier,
                           const Limits& limits) {
  const auto sample = product_sample(tb, 16, limits);
  json chars = json::object();
  chars["psi_Q"] = class_function_json(tb.psi_Q.materialized(limits));
  chars["Psi"] = class_function_json(tb.Psi, sample);
  chars["Theta"] = class_function_json(tb.Theta, sample);
  for (std::size_t i = 0; i < tb.Phis.size(); ++i)
    chars["Phi_" + std::to_string(i + 1)] = class_function_json(tb.Phis[i], sample);
  return json{{"version", VerificationReport::kVersion},
              {"construction", "theorem-a"},
              {"params", ex.params.to_json()},
              {"tier", tier},
              {"orders",
               {{"P", tb.P->order().get_str()},
                {"Q", tb.Q.order().get_str()},
                {"E", tb.lemma.E->order().get_str()},
                {"G", tb.G.group->order().get_str()},
                {"index", tb.index()}}},
              {"multiplicities", tb.multiplicities},
              {"characters", std::move(chars)}};
}

VerificationReport diff_certificate(const json& computed, const json& golden) {
  VerificationReport rep;
  rep.construction = "golden-diff";
  rep.params = computed.value("params", json::object());
  rep.tier = computed.value("tier", "full");
  for (const char* key : {"construction", "params", "orders", "multiplicities"})
    rep.add_equal(std::string("golden ") + key, "stored certificate", computed.value(key, json(nullptr)),
                  golden.value(key, json(nullptr)));

  const json& mine = computed.at("characters");
  const json stored_chars = golden.value("characters", json::object());
  for (const auto& [name, stored] : stored_chars.items()) {
    if (!mine.contains(name)) {
      rep.add("golden " + name, "stored character", nullptr, name, false);
      continue;
    }
    const auto want = class_function_values(stored);
    const auto have = class_function_values(mine.at(name));
    std::size_t i = 0;
    for (; i < want.size() && i < have.size(); ++i)
      if (want[i].first != have[i].first || want[i].second != have[i].second) break;
    if (i == want.size() && i == have.size()) {
      rep.add("golden " + name, "stored character values", static_cast<std::int64_t>(have.size()),
              static_cast<std::int64_t>(want.size()), true);
    } else if (i < want.size() && i < have.size()) {
      rep.add("golden " + name, "stored character values",
              {{"element", have[i].first.code}, {"value", cyc_json(have[i].second)},
               {"display", have[i].second.to_string()}},
              {{"element", want[i].first.code}, {"value", cyc_json(want[i].second)},
               {"display", want[i].second.to_string()}},
              false);
    } else {
      rep.add("golden " + name, "stored character value count", static_cast<std::int64_t>(have.size()),
              static_cast<std::int64_t>(want.size()), false);
    }
  }
  return rep;
}

}  // namespace charprod
