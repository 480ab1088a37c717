#include "charprod/verify.hpp"

#include <chrono>
#include <numeric>
#include <random>

#include "charprod/errors.hpp"
#include "charprod/irreducibles.hpp"
#include "charprod/serialize.hpp"

namespace charprod {

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::int64_t integer_value(const CycNumber& z) { return as_rational_integer(z); }

json code_list(const std::vector<Element>& xs) {
  json out = json::array();
  for (const auto& x : xs) out.push_back(x.code);
  return out;
}

json values_on(const ClassFunction& chi, const std::vector<Element>& xs) {
  json out = json::array();
  for (const auto& x : xs) out.push_back(cyc_json(chi(x)));
  return out;
}

ClassFunction combination(const std::vector<ClassFunction>& chars, const std::vector<std::int64_t>& mult,
                          const Subgroup& domain, const Limits& limits) {
  ClassFunction acc = zero_function(domain, limits);
  for (std::size_t i = 0; i < chars.size() && i < mult.size(); ++i)
    acc = sum(acc, scaled(chars[i], Rational(static_cast<long>(mult[i]))));
  return acc;
}

std::vector<Element> class_reps(const Subgroup& g, const Limits& limits) {
  std::vector<Element> out;
  for (const auto& c : g.classes(limits)) out.push_back(c.representative);
  return out;
}

std::string order_string(const BigInt& n) { return n.get_str(); }

}  // namespace

Mode parse_mode(const std::string& s) {
  if (s == "structural") return Mode::Structural;
  if (s == "full") return Mode::Full;
  if (s == "auto") return Mode::Auto;
  throw ConstraintViolation("unknown mode '" + s + "' (expected structural, full or auto)");
}

std::string to_string(Mode m) {
  switch (m) {
    case Mode::Structural: return "structural";
    case Mode::Full: return "full";
    case Mode::Auto: return "auto";
  }
  return "auto";
}

// ---------------------------------------------------------------------------

VerificationReport verify_restriction(const Example1Output& ex, const Limits& limits,
                                      const std::optional<std::vector<std::int64_t>>& expected) {
  const auto start = Clock::now();
  VerificationReport rep;
  rep.construction = "example1";
  rep.params = ex.params.to_json();
  rep.tier = "full";
  const std::vector<std::int64_t> want = expected.value_or(ex.multiplicities);
  const std::size_t k = ex.constituents.size();
  rep.enumeration = {{"P", order_string(ex.P()->order())}, {"Q", order_string(ex.Q.order())}};

  const ClassFunction psi_q = restrict_to(ex.psi, ex.Q, limits).relabeled("psi_Q");
  const Decomposition dec = decompose_against(psi_q, ex.constituents, limits);

  rep.add_equal("number of multiplicities", "k = len(n) + 1", static_cast<std::int64_t>(k),
                static_cast<std::int64_t>(want.size()));
  for (std::size_t j = 0; j < k; ++j) {
    const bool last = j + 1 == k;
    const std::string anchor = last ? "<psi_Q, 1_Q> = n_k = p^r - sum n_i"
                                    : "<psi_Q, delta^" + std::to_string(j + 1) + "> = n_" + std::to_string(j + 1);
    const json rhs = j < want.size() ? json(want[j]) : json(nullptr);
    rep.add_equal("<psi_Q, " + ex.constituents[j].label() + ">", anchor, dec.multiplicities[j], rhs);
  }

  const auto elements = ex.Q.elements(limits);
  const ClassFunction claimed = combination(ex.constituents, want, ex.Q, limits);
  rep.add_equal("psi_Q pointwise", "psi_Q = sum n_i delta^i + n_k 1_Q on Q", values_on(psi_q, elements),
                values_on(claimed, elements));
  rep.add("residual", "psi_Q - sum <psi_Q, phi> phi = 0", values_on(dec.residual, elements),
          values_on(zero_function(ex.Q, limits), elements), dec.residual_zero);

  const Rational norm = inner_product(psi_q, psi_q, limits);
  std::int64_t squares = 0;
  for (auto n : want) squares += n * n;
  rep.add_equal("norm identity", "<psi_Q, psi_Q> = sum n_i^2", rational_json(norm), squares);

  rep.summary = {{"k", k}, {"multiplicities", dec.multiplicities}};
  rep.elapsed_ms = since(start);
  return rep;
}

VerificationReport verify_example1_claims(const Example1Output& ex, const Limits& limits) {
  const auto start = Clock::now();
  VerificationReport rep;
  rep.construction = "example1-claims";
  rep.params = ex.params.to_json();
  rep.tier = "full";
  const auto& prm = ex.params;
  const std::int64_t pr = checked_power(prm.p, prm.r);
  const std::int64_t pt = checked_power(prm.p, prm.t);

  rep.add_equal("degree of psi", "psi(1) = p^r", integer_value(ex.psi.degree()), pr);
  rep.add_equal("order of Q", prm.k() >= 2 ? "|Q| = p^t" : "|Q| = 1 when k = 1",
                order_string(ex.Q.order()), std::to_string(prm.k() >= 2 ? pt : 1));

  bool distinct = true;
  json pair = nullptr;
  for (std::size_t i = 0; i < prm.k() && distinct; ++i)
    for (std::size_t j = i + 1; j < prm.k() && distinct; ++j)
      if (compare(power(ex.delta, static_cast<std::int64_t>(i)), power(ex.delta, static_cast<std::int64_t>(j)),
                  limits).equal) {
        distinct = false;
        pair = {i, j};
      }
  rep.add("distinct powers of delta", "delta^i != delta^j for 0 <= i < j < k", pair, nullptr, distinct);

  const Subgroup whole = Subgroup::whole(ex.P());
  if (whole.enumerable(limits)) {
    const auto stab = conjugation_stabilizer(whole, ex.lambda, limits);
    const auto& n = ex.N.elements(limits);
    rep.add("stabilizer of lambda", "P_lambda = N", static_cast<std::int64_t>(stab.size()),
            static_cast<std::int64_t>(n.size()), stab == n);
  } else {
    rep.notes.push_back("stabilizer of lambda not recomputed: |P| exceeds the enumeration bound");
  }

  ClassFunction total = zero_function(ex.N, limits);
  for (const auto& l : ex.lambdas) total = sum(total, l);
  const ClassFunction psi_n = restrict_to(ex.psi, ex.N, limits);
  const Comparison cmp = compare(psi_n, total, limits);
  rep.add("psi_N", "psi_N = sum lambda_i", cmp.witness ? cyc_json(cmp.lhs) : json("equal"),
          cmp.witness ? cyc_json(cmp.rhs) : json("equal"), cmp.equal);
  if (cmp.probabilistic) rep.notes.push_back("psi_N compared on a sample of N");

  if (whole.enumerable(limits)) {
    rep.add_equal("psi irreducible", "<psi, psi> = 1", rational_json(inner_product(ex.psi, ex.psi, limits)), 1);
  } else {
    rep.notes.push_back("irreducibility of psi not checked: |P| exceeds the enumeration bound");
  }
  rep.enumeration = {{"P", order_string(ex.P()->order())}, {"N", order_string(ex.N.order())}};
  rep.elapsed_ms = since(start);
  return rep;
}

// ---------------------------------------------------------------------------

std::vector<Element> product_sample(const TheoremBOutput& tb, std::size_t count, const Limits& limits) {
  std::mt19937_64 rng(0x5a3b1e);
  const FiniteGroup& g = *tb.G.group;
  std::vector<Element> out{g.identity()};
  while (out.size() < count / 2) out.push_back(random_subgroup_element(tb.QE, rng, limits));
  while (out.size() < count) out.push_back(g.random_element(rng));
  return out;
}

VerificationReport verify_product(const TheoremBOutput& tb, Mode mode, const Limits& limits,
                                  const std::optional<std::vector<std::int64_t>>& expected) {
  const auto start = Clock::now();
  const Subgroup g = Subgroup::whole(tb.G.group);
  if (mode == Mode::Auto) mode = g.enumerable(limits) ? Mode::Full : Mode::Structural;
  if (mode == Mode::Full && !g.enumerable(limits))
    throw EnumerationBoundExceeded("full verification needs |G| <= " + std::to_string(limits.max_enum) +
                                   ", but |G| = " + order_string(g.order()));

  VerificationReport rep;
  rep.construction = "theorem-b";
  rep.tier = to_string(mode);
  const std::vector<std::int64_t> want = expected.value_or(tb.multiplicities);
  const std::int64_t index = static_cast<std::int64_t>(tb.index());
  const std::size_t k = tb.k();
  rep.enumeration = {{"P", order_string(tb.P->order())},
                     {"Q", order_string(tb.Q.order())},
                     {"E", order_string(tb.lemma.E->order())},
                     {"G", order_string(g.order())},
                     {"index", index}};

  // Degrees.
  const std::int64_t psi1 = integer_value(tb.psi.degree());
  const std::int64_t big_psi1 = integer_value(tb.Psi.degree());
  const std::int64_t theta1 = integer_value(tb.Theta.degree());
  rep.add_equal("degree of Psi", "Psi(1) = psi(1)", big_psi1, psi1);
  rep.add_equal("degree of Theta", "Theta(1) = [P:Q]", theta1, index);
  std::int64_t weighted = 0;
  for (std::size_t i = 0; i < k; ++i) {
    const std::int64_t phi1 = integer_value(tb.phis[i].degree());
    const std::int64_t big_phi1 = integer_value(tb.Phis[i].degree());
    rep.add_equal("degree of Phi_" + std::to_string(i + 1), "Phi_i(1) = [P:Q] phi_i(1)", big_phi1, index * phi1);
    if (i < want.size()) weighted += want[i] * big_phi1;
  }
  rep.add_equal("number of multiplicities", "one n_i per constituent", static_cast<std::int64_t>(want.size()),
                static_cast<std::int64_t>(k));
  rep.add_equal("degree bookkeeping", "Psi(1) Theta(1) = sum n_i Phi_i(1)", big_psi1 * theta1, weighted);

  // Restriction to Q.
  for (std::size_t i = 0; i < k; ++i) {
    const json rhs = i < want.size() ? json(want[i]) : json(nullptr);
    rep.add_equal("<psi_Q, " + tb.phis[i].label() + ">", "psi_Q = sum n_i phi_i",
                  multiplicity(tb.psi_Q, tb.phis[i], limits), rhs);
    rep.add_equal("norm of " + tb.phis[i].label(), "<phi_i, phi_i> = 1",
                  rational_json(inner_product(tb.phis[i], tb.phis[i], limits)), 1);
  }
  rep.add("restriction residual", "psi_Q - sum n_i phi_i = 0", tb.restriction.residual_zero, true,
          tb.restriction.residual_zero);
  if (tb.psi_irreducibility_checked)
    rep.add_equal("psi irreducible", "<psi, psi> = 1", rational_json(inner_product(tb.psi, tb.psi, limits)), 1);

  // Stabilizer of lambda.
  const auto stab = lemma1_stabilizer(tb.lemma, limits);
  const auto& q_elements = tb.Q.elements(limits);
  rep.add("stabilizer of lambda", "P_lambda = Q", code_list(stab), code_list(q_elements), stab == q_elements);

  const ClassFunction psi_theta = product(tb.Psi, tb.Theta).relabeled("Psi Theta");
  const std::vector<ClassFunction> phis = tb.Phis;

  if (mode == Mode::Structural) {
    const auto sample = product_sample(tb, 32, limits);
    json lhs = json::array(), rhs = json::array();
    bool ok = true;
    for (const auto& x : sample) {
      const CycNumber a = psi_theta(x);
      CycNumber b;
      for (std::size_t i = 0; i < k && i < want.size(); ++i) b += phis[i](x) * CycNumber(want[i]);
      ok = ok && a == b;
      lhs.push_back(cyc_json(a));
      rhs.push_back(cyc_json(b));
    }
    rep.add("product identity (sampled)", "Psi Theta = sum n_i Phi_i", std::move(lhs), std::move(rhs), ok);
    rep.enumeration["sampled_points"] = sample.size();
    rep.summary = {{"k", k},
                   {"eta", nullptr},
                   {"eta_status", "not certified at the structural tier"},
                   {"multiplicities", want}};
    rep.notes.push_back("structural tier: G was not enumerated");
  } else {
    const auto reps = class_reps(g, limits);
    rep.enumeration["classes_G"] = reps.size();
    const ClassFunction lhs = psi_theta.materialized(limits);
    std::vector<ClassFunction> tab;
    for (const auto& phi : phis) tab.push_back(phi.materialized(limits));
    const ClassFunction rhs = combination(tab, want, g, limits);
    rep.add_equal("product identity", "Psi Theta = sum n_i Phi_i on every class of G", values_on(lhs, reps),
                  values_on(rhs, reps));

    rep.add_equal("Psi irreducible", "<Psi, Psi> = 1", rational_json(inner_product(tb.Psi, tb.Psi, limits)), 1);
    rep.add_equal("Theta irreducible", "<Theta, Theta> = 1",
                  rational_json(inner_product(tb.Theta, tb.Theta, limits)), 1);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i; j < k; ++j) {
        const std::string name = "<Phi_" + std::to_string(i + 1) + ", Phi_" + std::to_string(j + 1) + ">";
        rep.add_equal(name, i == j ? "<Phi_i, Phi_i> = 1" : "<Phi_i, Phi_j> = 0",
                      rational_json(inner_product(tab[i], tab[j], limits)), i == j ? 1 : 0);
      }
    const Decomposition d = decompose_against(lhs, tab, limits);
    for (std::size_t i = 0; i < k; ++i) {
      const json want_i = i < want.size() ? json(want[i]) : json(nullptr);
      rep.add_equal("<Psi Theta, Phi_" + std::to_string(i + 1) + ">", "<Psi Theta, Phi_i> = n_i",
                    d.multiplicities[i], want_i);
    }
    rep.add("product residual", "Psi Theta - sum <Psi Theta, Phi_i> Phi_i = 0", d.residual_zero, true,
            d.residual_zero);
    const std::int64_t eta = d.residual_zero ? static_cast<std::int64_t>(d.eta()) : -1;
    std::int64_t positive = 0;
    for (auto n : want) positive += n > 0;
    rep.add_equal("eta", "eta(Psi Theta) = k", eta, positive);
    rep.summary = {{"k", k},
                   {"eta", eta},
                   {"eta_status", d.residual_zero ? "exact" : "lower bound"},
                   {"multiplicities", d.multiplicities}};
  }
  rep.elapsed_ms = since(start);
  return rep;
}

// ---------------------------------------------------------------------------

VerificationReport verify_diagonal(GroupPtr g, const std::string& name, const Limits& limits) {
  const auto start = Clock::now();
  VerificationReport rep;
  rep.construction = "diag-check";
  rep.params = {{"group", name}, {"descriptor", g->descriptor()}};
  rep.tier = "full";
  const auto irr = irr_small_pgroup(Subgroup::whole(g), limits);
  for (const auto& a : irr)
    for (const auto& b : irr)
      rep.add_equal("(" + a.label() + " x " + b.label() + ")_D", "(psi x theta)_D(G) = psi theta",
                    product_as_diagonal_restriction(g, a, b, limits), true);
  rep.enumeration = {{"G", order_string(g->order())}, {"irreducibles", irr.size()}};
  rep.elapsed_ms = since(start);
  return rep;
}

GroupPtr heisenberg27() {
  GroupPtr z3 = cyclic_group(3);
  GroupPtr v = direct_power(z3, 2);
  auto rule = [](std::span<const std::uint32_t> tau, std::span<const std::uint32_t> sigma,
                 std::span<std::uint32_t> out) {
    out[0] = tau[0];
    out[1] = (tau[1] + sigma[0] * tau[0]) % 3;
  };
  auto action = std::make_shared<GroupAction>(z3, v, rule, json{{"type", "shear"}, {"p", 3}});
  return semidirect(action, 64, json{{"type", "heisenberg"}, {"p", 3}}).group;
}

VerificationReport edith1_spotcheck(const Limits& limits) {
  const auto start = Clock::now();
  VerificationReport rep;
  rep.construction = "edith1-spotcheck";
  rep.params = {{"group", "heisenberg"}, {"p", 3}};
  rep.tier = "full";
  rep.notes.push_back("experimental probe, not a verified claim");
  const GroupPtr g = heisenberg27();
  const Subgroup whole = Subgroup::whole(g);
  const auto irr = irr_small_pgroup(whole, limits);
  const auto& elements = whole.elements(limits);

  std::vector<ClassFunction> faithful;
  for (const auto& chi : irr) {
    const CycNumber d = chi.degree();
    std::size_t kernel = 0;
    for (const auto& x : elements) kernel += chi(x) == d;
    if (kernel == 1) faithful.push_back(chi);
  }
  rep.add_equal("faithful irreducibles", "count of faithful chi in Irr(G)",
                static_cast<std::int64_t>(faithful.size()), 2);
  json etas = json::array();
  for (const auto& a : faithful)
    for (const auto& b : faithful) {
      const Decomposition d = decompose_against(product(a, b), irr, limits);
      const auto eta = static_cast<std::int64_t>(d.eta());
      etas.push_back({{"pair", {a.label(), b.label()}}, {"eta", eta}});
      rep.add("eta(" + a.label() + " " + b.label() + ")", "eta = 1 or eta >= (p+1)/2", eta, nullptr,
              d.residual_zero && (eta == 1 || eta >= 2));
    }
  rep.summary = {{"etas", etas}};
  rep.enumeration = {{"G", 27}, {"irreducibles", irr.size()}};
  rep.elapsed_ms = since(start);
  return rep;
}

}  // namespace charprod
