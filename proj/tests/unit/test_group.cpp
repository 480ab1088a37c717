#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "../oracles.hpp"
#include "charprod/constructions.hpp"
#include "charprod/errors.hpp"
#include "charprod/products.hpp"
#include "charprod/verify.hpp"

using namespace charprod;

namespace {

// Identity, inverse and associativity; exhaustive up to 512 elements.
void check_group_axioms(const FiniteGroup& g, std::uint64_t seed = 1) {
  const Element e = g.identity();
  std::vector<Element> els;
  if (g.order() <= 512) {
    els = oracle::all_elements(g);
    for (const auto& a : els) {
      REQUIRE(g.mul(a, e) == a);
      REQUIRE(g.mul(e, a) == a);
      REQUIRE(g.is_identity(g.mul(a, g.inverse(a))));
      for (const auto& b : els) {
        const Element ab = g.mul(a, b);
        REQUIRE(g.is_valid(ab));
        if (g.order() <= 64)
          for (const auto& c : els) REQUIRE(g.mul(ab, c) == g.mul(a, g.mul(b, c)));
      }
    }
    if (g.order() > 64) {
      std::mt19937_64 rng(seed);
      for (int i = 0; i < 2000; ++i) {
        const Element& a = els[rng() % els.size()];
        const Element& b = els[rng() % els.size()];
        const Element& c = els[rng() % els.size()];
        REQUIRE(g.mul(g.mul(a, b), c) == g.mul(a, g.mul(b, c)));
      }
    }
  } else {
    std::mt19937_64 rng(seed);
    for (int i = 0; i < 500; ++i) {
      const Element a = g.random_element(rng), b = g.random_element(rng), c = g.random_element(rng);
      REQUIRE(g.mul(g.mul(a, b), c) == g.mul(a, g.mul(b, c)));
      REQUIRE(g.is_identity(g.mul(a, g.inverse(a))));
      REQUIRE(g.mul(a, e) == a);
    }
  }
}

}  // namespace

TEST_CASE("cyclic groups") {
  const auto c1 = cyclic_group(1);
  CHECK(c1->order() == 1);
  CHECK(c1->exponent() == 1);
  const auto c4 = cyclic_group(4);
  CHECK(c4->order() == 4);
  CHECK(c4->exponent() == 4);
  const auto c9 = cyclic_group(9);
  CHECK(c9->mul(Element({7}), Element({5})) == Element({3}));
  CHECK(c9->generators().front() == Element({1}));
  check_group_axioms(*c9);
}

TEST_CASE("direct powers") {
  const auto v4 = direct_power(cyclic_group(2), 2);
  CHECK(v4->order() == 4);
  CHECK(v4->exponent() == 2);
  const auto c3_4 = direct_power(cyclic_group(3), 4);
  CHECK(c3_4->order() == 81);
  CHECK(c3_4->exponent() == 3);
  const auto h = direct_power(cyclic_group(5), 1);
  CHECK(h->order() == 5);
  CHECK(h->mul(Element({3}), Element({4})) == Element({2}));
  check_group_axioms(*c3_4);
  // |N| = (p^t)^(p^r)
  CHECK(direct_power(cyclic_group(4), 4)->order() == 256);
}

TEST_CASE("wreath products match an independent multiplication law") {
  for (auto [p, t, r] : {std::tuple{2u, 1u, 1u}, {2u, 2u, 1u}, {3u, 1u, 1u}, {2u, 1u, 2u}}) {
    const WreathProduct w = wreath_cyclic(p, t, r);
    const FiniteGroup& g = *w.group();
    const auto els = oracle::all_elements(g);
    const std::uint32_t top = checked_power(p, r), base = checked_power(p, t);
    std::mt19937_64 rng(p * 100 + t * 10 + r);
    for (int i = 0; i < 400; ++i) {
      const Element& a = els[rng() % els.size()];
      const Element& b = els[rng() % els.size()];
      REQUIRE(g.mul(a, b).code == oracle::wreath_mul(a.code, b.code, top, base));
    }
  }
}

TEST_CASE("wreath_cyclic(2,1,1)") {
  const WreathProduct w = wreath_cyclic(2, 1, 1);
  const FiniteGroup& g = *w.group();
  const auto els = oracle::all_elements(g);
  REQUIRE(els.size() == 8);
  bool abelian = true;
  std::uint64_t exponent = 1;
  std::multiset<std::uint64_t> orders;
  for (const auto& a : els) {
    const auto o = oracle::order_of(g, a);
    orders.insert(o);
    exponent = std::lcm(exponent, o);
    for (const auto& b : els) abelian = abelian && g.mul(a, b) == g.mul(b, a);
  }
  CHECK_FALSE(abelian);
  CHECK(exponent == 4);
  CHECK(g.exponent() == 4);
  // D8: one identity, five involutions, two elements of order 4
  CHECK(orders == std::multiset<std::uint64_t>{1, 2, 2, 2, 2, 2, 4, 4});
  for (const auto& a : els) CHECK(g.element_order(a) == oracle::order_of(g, a));
  check_group_axioms(g);
}

TEST_CASE("wreath orders") {
  CHECK(wreath_cyclic(3, 1, 1).group()->order() == 81);
  CHECK(wreath_cyclic(2, 2, 1).group()->order() == 32);
  CHECK(wreath_cyclic(2, 1, 2).group()->order() == 64);
  CHECK(wreath_cyclic(5, 1, 1).group()->order() == 5 * 3125);
  CHECK(wreath_cyclic(2, 3, 2).group()->order() == BigInt("4") * BigInt("4096"));
  CHECK_THROWS_AS(wreath_cyclic(4, 1, 1), NotPrime);
  CHECK_THROWS_AS(wreath_cyclic(1, 1, 1), NotPrime);
}

TEST_CASE("wreath base subgroup is normal, abelian, of exponent p^t") {
  for (auto [p, t, r] : {std::tuple{2u, 1u, 1u}, {2u, 2u, 1u}, {3u, 1u, 1u}, {3u, 2u, 1u}}) {
    const WreathProduct w = wreath_cyclic(p, t, r);
    const FiniteGroup& g = *w.group();
    const Subgroup& n = w.base();
    CHECK(n.order() == BigInt(checked_power(checked_power(p, t), checked_power(p, r))));
    CHECK(n.is_abelian());
    std::mt19937_64 rng(3);
    std::uint64_t exponent = 1;
    for (int i = 0; i < 200; ++i) {
      const Element x = random_subgroup_element(n, rng);
      REQUIRE(n.contains(x));
      exponent = std::lcm(exponent, oracle::order_of(g, x));
      const Element h = g.random_element(rng);
      REQUIRE(n.contains(g.conjugate(x, h)));
    }
    CHECK(exponent == checked_power(p, t));
  }
  check_group_axioms(*wreath_cyclic(3, 2, 1).group(), 9);
}

TEST_CASE("semidirect products") {
  SUBCASE("trivial action gives the direct product") {
    const auto a = cyclic_group(4), b = cyclic_group(2);
    const SemidirectProduct s = semidirect(trivial_action(a, b));
    CHECK(s.group->order() == 8);
    const auto d = direct_product(a, b);
    for (const auto& x : oracle::all_elements(*s.group))
      for (const auto& y : oracle::all_elements(*s.group)) REQUIRE(s.group->mul(x, y) == d->mul(x, y));
  }
  SUBCASE("wreath with the Lemma 1 module has order 128") {
    const WreathProduct w = wreath_cyclic(2, 1, 1);
    const Subgroup q = subgroup_generated(w.group(), {w.base_element({1, 0})});
    const Lemma1Output l = lemma1(w.group(), q);
    CHECK(l.rank() == 4);
    const SemidirectProduct s = semidirect(l.action);
    CHECK(s.group->order() == 128);
    check_group_axioms(*s.group);
    // E is normal, P maps isomorphically onto G/E, and the normal form is sigma*tau
    std::mt19937_64 rng(17);
    for (int i = 0; i < 100; ++i) {
      const Element g = s.group->random_element(rng);
      const Element tau = l.E->random_element(rng);
      CHECK(s.base_image.contains(s.group->conjugate(s.embed_base(tau), g)));
      const Element a = w.group()->random_element(rng), b = w.group()->random_element(rng);
      CHECK(s.split(s.group->mul(s.embed_top(a), s.embed_top(b))).first == w.group()->mul(a, b));
      const auto [sigma, t] = s.split(g);
      CHECK(s.group->mul(s.embed_top(sigma), s.embed_base(t)) == g);
      CHECK(s.combine(sigma, t) == g);
    }
  }
  SUBCASE("an action that is not by automorphisms is rejected") {
    const auto top = cyclic_group(2), base = cyclic_group(3);
    auto bad = std::make_shared<GroupAction>(
        top, base,
        [](std::span<const std::uint32_t> tau, std::span<const std::uint32_t> sigma, std::span<std::uint32_t> out) {
          out[0] = sigma[0] ? (tau[0] + 1) % 3 : tau[0];
        },
        json{{"type", "bad"}});
    CHECK_THROWS_AS(semidirect(bad), InvalidAction);
  }
}

TEST_CASE("heisenberg group of order 27") {
  const auto h = heisenberg27();
  CHECK(h->order() == 27);
  check_group_axioms(*h);
  std::uint64_t exponent = 1;
  for (const auto& x : oracle::all_elements(*h)) exponent = std::lcm(exponent, oracle::order_of(*h, x));
  CHECK(exponent == 3);
}

TEST_CASE("rank and unrank are inverse and follow code order") {
  const auto g = wreath_cyclic(3, 1, 1).group();
  Element prev = g->unrank(0);
  CHECK(g->is_identity(prev));
  for (std::uint64_t r = 1; r < 81; ++r) {
    const Element x = g->unrank(r);
    CHECK(g->rank(x) == r);
    CHECK(prev < x);
    prev = x;
  }
}
