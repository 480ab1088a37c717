#include <doctest.h>

#include <random>

#include "../oracles.hpp"
#include "charprod/constructions.hpp"
#include "charprod/errors.hpp"
#include "charprod/irreducibles.hpp"
#include "charprod/verify.hpp"

using namespace charprod;

namespace {

Example1Params params(std::uint32_t p, std::uint32_t r, std::uint32_t t, std::vector<std::int64_t> n) {
  Example1Params prm;
  prm.p = p;
  prm.r = r;
  prm.t = t;
  prm.n = std::move(n);
  return prm;
}

// sigma stabilizes lambda iff lambda(e_i^sigma) = lambda(e_i) on every basis vector.
std::vector<Element> brute_stabilizer(const Lemma1Output& l) {
  std::vector<Element> out;
  const std::size_t m = l.rank();
  for (const auto& sigma : oracle::all_elements(*l.P)) {
    bool fixes = true;
    for (std::size_t i = 0; i < m && fixes; ++i) {
      std::vector<std::uint32_t> e(m, 0);
      e[i] = 1;
      const Element v(e);
      fixes = l.lambda(l.action->apply(v, sigma)) == l.lambda(v);
    }
    if (fixes) out.push_back(sigma);
  }
  return out;
}

// psi_Q multiplicities straight from the definitions: psi = lambda^P by the
// Frobenius formula over all of P, then inner products over all of Q.
std::vector<Rational> brute_restriction(const Example1Output& ex) {
  const FiniteGroup& p = *ex.P();
  const auto ps = oracle::all_elements(p);
  const auto ns = ex.N.elements();
  const auto qs = ex.Q.elements();
  const std::uint32_t pt = checked_power(ex.params.p, ex.params.t);
  auto lambda = [pt](const Element& x) { return root_of_unity(pt, x.code[1]); };
  std::map<Element, CycNumber> psi_q;
  for (const auto& x : qs) psi_q[x] = oracle::induce(p, ns, lambda, ps, x);
  std::vector<Rational> out;
  for (std::size_t j = 1; j <= ex.params.k(); ++j) {
    // delta^j(q^a) = zeta^(a j); the last candidate is delta^0 = 1_Q
    const std::size_t e = j % ex.params.k() == 0 ? 0 : j;
    std::map<Element, CycNumber> dj;
    Element y = p.identity();
    for (std::size_t a = 0; a < qs.size(); ++a) {
      dj[y] = root_of_unity(pt, static_cast<std::int64_t>(a * e));
      y = p.mul(y, ex.q);
    }
    out.push_back(oracle::inner(qs, [&](const Element& x) { return psi_q.at(x); },
                                [&](const Element& x) { return dj.at(x); }));
  }
  return out;
}

}  // namespace

TEST_CASE("lemma1") {
  const WreathProduct w = wreath_cyclic(2, 1, 1);
  const GroupPtr p = w.group();
  SUBCASE("Q = P") {
    const Lemma1Output l = lemma1(p, Subgroup::whole(p));
    CHECK(l.rank() == 1);
    CHECK(l.prime == 2);
    CHECK(l.lambda(Element({1})) == CycNumber(-1));
    CHECK(lemma1_stabilizer(l).size() == 8);
  }
  SUBCASE("Q = <(c,1)>") {
    const Subgroup q = subgroup_generated(p, {w.base_element({1, 0})});
    const Lemma1Output l = lemma1(p, q);
    CHECK(l.rank() == 4);
    CHECK(l.E->order() == 16);
    CHECK(l.E->exponent() == 2);
    CHECK(lemma1_stabilizer(l) == q.elements());
    CHECK(brute_stabilizer(l) == q.elements());
    // lambda has order p
    bool nontrivial = false;
    for (const auto& x : oracle::all_elements(*l.E)) {
      CHECK(power(l.lambda, 2)(x) == CycNumber(1));
      nontrivial = nontrivial || l.lambda(x) != CycNumber(1);
    }
    CHECK(nontrivial);
  }
  SUBCASE("random pairs") {
    std::mt19937_64 rng(77);
    const std::vector<GroupPtr> groups = {p, wreath_cyclic(3, 1, 1).group(), heisenberg27(), wreath_cyclic(2, 2, 1).group()};
    int done = 0;
    while (done < 12) {
      const GroupPtr g = groups[rng() % groups.size()];
      const Subgroup q = subgroup_generated(g, {g->random_element(rng), g->random_element(rng)});
      if (index_of(Subgroup::whole(g), q) > 16) continue;
      const Lemma1Output l = lemma1(g, q);
      CHECK(lemma1_stabilizer(l) == q.elements());
      CHECK(brute_stabilizer(l) == q.elements());
      ++done;
    }
  }
  SUBCASE("non p-groups are refused") {
    const GroupPtr c6 = cyclic_group(6);
    CHECK_THROWS_AS(lemma1(c6, Subgroup::whole(c6)), ConstraintViolation);
  }
}

TEST_CASE("example1 restriction against brute force") {
  struct Case {
    Example1Params prm;
    std::vector<std::int64_t> expected;
  };
  const std::vector<Case> cases = {
      {params(2, 1, 1, {1}), {1, 1}},
      {params(3, 1, 1, {1, 1}), {1, 1, 1}},
      {params(2, 2, 1, {3}), {3, 1}},
      {params(3, 1, 1, {2}), {2, 1}},
      {params(2, 1, 2, {1}), {1, 1}},
      {params(5, 1, 1, {1, 2}), {1, 2, 2}},
  };
  for (const auto& c : cases) {
    CAPTURE(c.prm.to_json().dump());
    const Example1Output ex = example1(c.prm);
    CHECK(ex.multiplicities == c.expected);
    const auto brute = brute_restriction(ex);
    REQUIRE(brute.size() == c.expected.size());
    for (std::size_t i = 0; i < brute.size(); ++i) CHECK(brute[i] == c.expected[i]);
    const VerificationReport rep = verify_restriction(ex);
    CHECK(rep.pass());
    CHECK(verify_example1_claims(ex).pass());
  }
}

TEST_CASE("example1 structure") {
  const Example1Output ex = example1(params(2, 1, 1, {1}));
  CHECK(ex.P()->order() == 8);
  CHECK(ex.Q.order() == 2);
  CHECK(ex.psi.degree() == CycNumber(2));
  CHECK(ex.q == Element({0, 1, 0}));
  CHECK(ex.delta(ex.q) == CycNumber(-1));
  CHECK(ex.constituents.size() == 2);
  CHECK(ex.constituents[0].label() == "delta^1");
  CHECK(ex.constituents[1].label() == "1_Q");
  // psi_N = lambda_1 + lambda_2
  ClassFunction total = sum(ex.lambdas[0], ex.lambdas[1]);
  CHECK(compare(restrict_to(ex.psi, ex.N), total).equal);

  const Example1Output ex3 = example1(params(3, 1, 1, {1, 1}));
  CHECK(ex3.q == Element({0, 1, 2, 0}));
  CHECK(ex3.Q.order() == 3);
  CHECK(ex3.psi.degree() == CycNumber(3));

  const Example1Output ex4 = example1(params(2, 2, 1, {3}));
  CHECK(ex4.P()->order() == 64);
  CHECK(ex4.q == Element({0, 1, 1, 1, 0}));
}

TEST_CASE("example1 input constraints") {
  try {
    example1(params(2, 1, 1, {2}));
    FAIL("accepted p^r = sum n_i");
  } catch (const ConstraintViolation& e) {
    CHECK(std::string(e.what()).find("p^r > sum n_i") != std::string::npos);
    CHECK(std::string(e.what()).find("p^r = 2 is not > sum n_i = 2") != std::string::npos);
  }
  try {
    example1(params(2, 2, 1, {1, 1, 1}));
    FAIL("accepted p^t < k");
  } catch (const ConstraintViolation& e) {
    CHECK(std::string(e.what()).find("p^t >= k") != std::string::npos);
  }
  CHECK_THROWS_AS(example1(params(4, 1, 1, {1})), NotPrime);
  CHECK_THROWS_AS(example1(params(2, 1, 1, {0})), ConstraintViolation);
}

TEST_CASE("example1 with k = 1 has a trivial Q") {
  const Example1Output ex = example1(params(3, 1, 1, {}));
  CHECK(ex.Q.order() == 1);
  CHECK(ex.multiplicities == std::vector<std::int64_t>{3});
  CHECK(verify_restriction(ex).pass());
}

TEST_CASE("theorem_b on the smallest case") {
  const Example1Output ex = example1(params(2, 1, 1, {1}));
  const TheoremBOutput tb = theorem_b(ex.P(), ex.Q, ex.psi, ex.constituents);
  CHECK(tb.G.group->order() == 128);
  CHECK(tb.index() == 4);
  CHECK(tb.Psi.degree() == CycNumber(2));
  CHECK(tb.Theta.degree() == CycNumber(4));
  REQUIRE(tb.Phis.size() == 2);
  CHECK(tb.Phis[0].degree() == CycNumber(4));
  CHECK(tb.Phis[1].degree() == CycNumber(4));
  CHECK(tb.multiplicities == std::vector<std::int64_t>{1, 1});
  CHECK(tb.QE.order() == 32);

  // Theta against the Frobenius formula over all 128 elements
  const Subgroup g = Subgroup::whole(tb.G.group);
  const auto gs = g.elements();
  std::vector<Element> qe;
  for (const auto& x : gs)
    if (tb.QE.contains(x)) qe.push_back(x);
  CHECK(qe.size() == 32);
  auto one_lambda = [&](const Element& x) { return tb.lemma.lambda(tb.G.split(x).second); };
  for (const auto& c : g.classes()) REQUIRE(tb.Theta(c.representative) == oracle::induce(*tb.G.group, qe, one_lambda, gs, c.representative));

  const VerificationReport rep = verify_product(tb, Mode::Full);
  CHECK(rep.pass());
  CHECK(rep.tier == "full");
  CHECK(rep.summary["eta"] == 2);
}

TEST_CASE("theorem_b computes Irr(Q) when no list is given") {
  const Example1Output ex = example1(params(3, 1, 1, {1, 1}));
  const TheoremBOutput tb = theorem_b(ex.P(), ex.Q, ex.psi);
  CHECK(tb.multiplicities == std::vector<std::int64_t>{1, 1, 1});
  CHECK(tb.index() == 27);
  CHECK(tb.psi_irreducibility_checked);
}

TEST_CASE("theorem_b with a linear psi and abelian Q") {
  const WreathProduct w = wreath_cyclic(2, 1, 1);
  const Subgroup p = Subgroup::whole(w.group());
  const auto irr = irr_small_pgroup(p);
  const Subgroup q = subgroup_generated(w.group(), {w.base_element({1, 0})});
  const TheoremBOutput tb = theorem_b(w.group(), q, irr[1]);
  CHECK(tb.k() == 1);
  CHECK(tb.multiplicities == std::vector<std::int64_t>{1});
  const VerificationReport rep = verify_product(tb, Mode::Full);
  CHECK(rep.pass());
  CHECK(rep.summary["eta"] == 1);
}

TEST_CASE("theorem_b input checks") {
  const WreathProduct w = wreath_cyclic(2, 1, 1);
  const Subgroup p = Subgroup::whole(w.group());
  const auto irr = irr_small_pgroup(p);
  const Subgroup q = subgroup_generated(w.group(), {w.base_element({1, 0})});
  CHECK_THROWS_AS(theorem_b(w.group(), p, irr[4]), ConstraintViolation);
  CHECK_THROWS_AS(theorem_b(w.group(), q, sum(irr[0], irr[4])), NotIrreducible);
  CHECK_THROWS_AS(theorem_b(w.group(), q, irr[4], std::vector<ClassFunction>{linear_characters(q)[1]}), IncompleteIrrSet);
}

TEST_CASE("extension refuses a subgroup that moves lambda") {
  const WreathProduct w = wreath_cyclic(2, 1, 1);
  const Subgroup q = subgroup_generated(w.group(), {w.base_element({1, 0})});
  const Lemma1Output l = lemma1(w.group(), q);
  const SemidirectProduct s = semidirect(l.action);
  const Subgroup top = subgroup_generated(w.group(), {Element({1, 0, 0})});
  const Subgroup te = stabilizer_product_subgroup(s, top);
  CHECK_THROWS_AS(extend_over_stabilizer(trivial_character(top), l.lambda, s, te), StabilizerViolation);
}

TEST_CASE("theorem_a") {
  SUBCASE("smallest case, full") {
    auto [ex, tb] = theorem_a(params(2, 1, 1, {1}));
    CHECK(ex.P()->order() == 8);
    CHECK(tb.G.group->order() == 128);
    const auto rep = verify_product(tb, Mode::Auto);
    CHECK(rep.tier == "full");
    CHECK(rep.pass());
  }
  SUBCASE("k = 1") {
    auto [ex, tb] = theorem_a(params(2, 1, 1, {}));
    CHECK(ex.Q.order() == 1);
    CHECK(tb.multiplicities == std::vector<std::int64_t>{2});
    CHECK(tb.index() == 8);
    const auto rep = verify_product(tb, Mode::Full);
    CHECK(rep.pass());
    CHECK(rep.summary["eta"] == 1);
  }
  SUBCASE("index 27, structural") {
    auto [ex, tb] = theorem_a(params(3, 1, 1, {1, 1}));
    CHECK(tb.index() == 27);
    CHECK(tb.lemma.E->order() == BigInt("7625597484987"));
    const auto rep = verify_product(tb, Mode::Auto);
    CHECK(rep.tier == "structural");
    CHECK(rep.pass());
    CHECK_THROWS_AS(verify_product(tb, Mode::Full), EnumerationBoundExceeded);
    std::int64_t total = 0;
    for (std::size_t i = 0; i < tb.k(); ++i) total += tb.multiplicities[i] * as_rational_integer(tb.Phis[i].degree());
    CHECK(as_rational_integer(tb.Psi.degree()) * as_rational_integer(tb.Theta.degree()) == total);
    CHECK(total == 81);
  }
}

TEST_CASE("products as restrictions to the diagonal") {
  const GroupPtr d8 = wreath_cyclic(2, 1, 1).group();
  const Subgroup g = Subgroup::whole(d8);
  const auto irr = irr_small_pgroup(g);
  CHECK(product_as_diagonal_restriction(d8, trivial_character(g), trivial_character(g)));
  CHECK(product_as_diagonal_restriction(d8, irr[4], irr[4]));
  const GroupPtr c3 = cyclic_group(3);
  const auto lin = linear_characters(Subgroup::whole(c3));
  CHECK(product_as_diagonal_restriction(c3, lin[1], lin[2]));
}
