#include "charprod/constructions.hpp"

#include <numeric>

#include "charprod/errors.hpp"
#include "charprod/irreducibles.hpp"

namespace charprod {

// ---------------------------------------------------------------------------
// Lemma 1: permutation module on cosets

namespace {

std::uint32_t prime_of_pgroup(const BigInt& order) {
  if (order == 1) return 0;
  std::uint32_t p = 2;
  while (order % p != 0) ++p;
  BigInt m = order;
  while (m % p == 0) m /= p;
  if (m != 1) throw ConstraintViolation("group of order " + order.get_str() + " is not a p-group");
  return p;
}

}  // namespace

Lemma1Output lemma1(GroupPtr p, const Subgroup& q, const Limits& limits, std::uint32_t prime) {
  if (q.parent() != p) throw GroupMismatch("lemma1: Q is not a subgroup of P");
  Lemma1Output out;
  out.prime = prime != 0 ? prime : prime_of_pgroup(p->order());
  if (out.prime == 0) throw ConstraintViolation("lemma1: trivial P needs an explicit prime");
  if (!is_prime(out.prime)) throw NotPrime(std::to_string(out.prime) + " is not prime");
  out.P = p;
  out.Q = q;
  const Subgroup whole = Subgroup::whole(p);
  out.cosets = coset_action(whole, q, limits);
  const std::size_t m = out.cosets.degree();
  out.E = direct_power(cyclic_group(out.prime), m);

  // perm_table[rank(sigma) * m + i] = index of the coset Q x_i sigma.
  const auto& els = whole.elements(limits);
  auto table = std::make_shared<std::vector<std::uint32_t>>(els.size() * m);
  for (const auto& sigma : els) {
    const std::uint64_t r = p->rank(sigma);
    for (std::size_t i = 0; i < m; ++i)
      (*table)[r * m + i] = out.cosets.act(static_cast<std::uint32_t>(i), sigma);
  }
  auto perm = [p, m, table](std::span<const std::uint32_t> sigma, std::span<std::uint32_t> image) {
    std::uint64_t r = 0;
    const auto radixes = p->radixes();
    for (std::size_t i = 0; i < radixes.size(); ++i) r = r * radixes[i] + sigma[i];
    for (std::size_t i = 0; i < m; ++i) image[i] = (*table)[r * m + i];
  };
  out.action = block_permutation_action(p, out.E, m, perm,
                                        json{{"type", "coset_permutation"}, {"points", m}});
  out.base_point = 0;
  out.lambda = dual_basis_character(out.E, out.base_point, out.prime);
  return out;
}

std::vector<Element> lemma1_stabilizer(const Lemma1Output& out, const Limits& limits) {
  return action_stabilizer(Subgroup::whole(out.P), *out.action, out.lambda, limits);
}

// ---------------------------------------------------------------------------
// Example 1 parameters

std::int64_t Example1Params::last() const {
  const std::int64_t total = std::accumulate(n.begin(), n.end(), std::int64_t{0});
  return static_cast<std::int64_t>(checked_power(p, r)) - total;
}

std::vector<std::int64_t> Example1Params::multiplicities() const {
  std::vector<std::int64_t> m = n;
  m.push_back(last());
  return m;
}

json Example1Params::to_json() const {
  return json{{"p", p}, {"r", r}, {"t", t}, {"n", n}};
}

Example1Params Example1Params::from_json(const json& j) {
  Example1Params params;
  params.p = j.at("p").get<std::uint32_t>();
  params.r = j.at("r").get<std::uint32_t>();
  params.t = j.at("t").get<std::uint32_t>();
  params.n = j.at("n").get<std::vector<std::int64_t>>();
  return params;
}

void validate(const Example1Params& params) {
  if (!is_prime(params.p)) throw NotPrime(std::to_string(params.p) + " is not prime");
  if (params.r == 0 || params.t == 0) throw ConstraintViolation("r and t must be positive");
  for (std::int64_t v : params.n)
    if (v <= 0) throw ConstraintViolation("every n_i must be positive, got " + std::to_string(v));
  const std::int64_t total = std::accumulate(params.n.begin(), params.n.end(), std::int64_t{0});
  const std::uint32_t pr = checked_power(params.p, params.r);
  const std::uint32_t pt = checked_power(params.p, params.t);
  if (static_cast<std::int64_t>(pr) <= total)
    throw ConstraintViolation("p^r > sum n_i violated: p^r = " + std::to_string(pr) +
                              " is not > sum n_i = " + std::to_string(total));
  if (pt < params.k())
    throw ConstraintViolation("p^t >= k violated: p^t = " + std::to_string(pt) + " is < k = " +
                              std::to_string(params.k()));
}

// ---------------------------------------------------------------------------
// Example 1

Example1Output example1(const Example1Params& params, const Limits& limits) {
  validate(params);
  Example1Output out;
  out.params = params;
  out.multiplicities = params.multiplicities();
  out.wreath = wreath_cyclic(params.p, params.t, params.r);
  const GroupPtr& pg = out.wreath.group();
  const std::uint32_t pt = checked_power(params.p, params.t);
  const std::uint32_t pr = out.wreath.copies();
  out.N = out.wreath.base();

  out.c = Element({1});
  out.alpha = ClassFunction::tabulate(
      Subgroup::whole(out.wreath.coordinate),
      [pt](const Element& x) { return root_of_unity(pt, x.code[0]); }, "alpha", limits);

  // Coordinate i of an element of P sits in slot 1 + i.
  auto coordinate_character = [&](std::uint32_t i, std::string label) {
    ClassFunction alpha = out.alpha;
    return ClassFunction::from_rule(
        out.N, [alpha, i](const Element& x) { return alpha(Element({x.code[1 + i]})); },
        std::move(label));
  };
  out.lambda = coordinate_character(0, "lambda");
  for (std::uint32_t i = 0; i < pr; ++i)
    out.lambdas.push_back(coordinate_character(i, "lambda_" + std::to_string(i + 1)));

  std::vector<Element> transversal;
  for (std::uint32_t j = 0; j < pr; ++j) transversal.push_back(out.wreath.product.embed_top(Element({j})));
  out.psi = induce(out.lambda, Subgroup::whole(pg), transversal, "psi");

  // q = (c,..,c, c^2,..,c^2, ..., c^{k-1},..,c^{k-1}, 1,..,1)
  std::vector<std::uint32_t> coords(pr, 0);
  std::size_t pos = 0;
  for (std::size_t j = 0; j < params.n.size(); ++j)
    for (std::int64_t e = 0; e < params.n[j]; ++e) coords[pos++] = static_cast<std::uint32_t>((j + 1) % pt);
  out.q = out.wreath.base_element(coords);
  out.Q = subgroup_generated(pg, {out.q}, limits, "Q");

  // delta(q^a) = zeta_{p^t}^a
  std::unordered_map<Element, std::uint32_t, ElementHash> log;
  Element x = pg->identity();
  for (std::uint32_t a = 0; !log.count(x); ++a) {
    log.emplace(x, a);
    x = pg->mul(x, out.q);
  }
  out.delta = ClassFunction::tabulate(
      out.Q, [log, pt](const Element& y) { return root_of_unity(pt, log.at(y)); }, "delta", limits);

  for (std::size_t j = 1; j < params.k(); ++j)
    out.constituents.push_back(power(out.delta, static_cast<std::int64_t>(j)).relabeled("delta^" + std::to_string(j)));
  out.constituents.push_back(trivial_character(out.Q, limits).relabeled("1_Q"));
  return out;
}

// ---------------------------------------------------------------------------
// Theorem B

TheoremBOutput theorem_b(GroupPtr p, const Subgroup& q, const ClassFunction& psi,
                         std::optional<std::vector<ClassFunction>> phis, const Limits& limits) {
  if (q.parent() != p) throw GroupMismatch("theorem_b: Q is not a subgroup of P");
  if (q.order() >= p->order()) throw ConstraintViolation("theorem_b: Q must be a proper subgroup of P");
  const Subgroup whole = Subgroup::whole(p);
  if (!psi.domain().same_as(whole)) throw GroupMismatch("theorem_b: psi is not a character of P");

  TheoremBOutput out;
  out.P = p;
  out.Q = q;
  out.psi = psi;
  if (whole.enumerable(limits)) {
    const Rational norm = inner_product(psi, psi, limits);
    if (norm != 1) throw NotIrreducible("<psi, psi> = " + norm.get_str() + ", psi is not irreducible");
    out.psi_irreducibility_checked = true;
  }
  if (!q.enumerable(limits))
    throw EnumerationBoundExceeded("theorem_b: Q of order " + q.order().get_str() + " is too large");
  out.psi_Q = restrict_to(psi, q, limits).relabeled("psi_Q");

  std::vector<ClassFunction> candidates;
  if (phis) {
    candidates = *phis;
  } else if (q.is_abelian()) {
    candidates = linear_characters(q, limits);
  } else {
    candidates = irr_small_pgroup(q, limits);
  }
  out.restriction = decompose_against(out.psi_Q, candidates, limits);
  if (!out.restriction.residual_zero)
    throw IncompleteIrrSet("psi_Q is not a combination of the supplied characters of Q");
  for (const auto& c : out.restriction.constituents) {
    out.phis.push_back(c.character);
    out.multiplicities.push_back(c.multiplicity);
  }

  out.lemma = lemma1(p, q, limits);
  json d = {{"type", "semidirect"},
            {"top", p->descriptor()},
            {"base", out.lemma.E->descriptor()},
            {"action", out.lemma.action->descriptor()}};
  out.G = semidirect(out.lemma.action, 64, std::move(d));
  out.QE = stabilizer_product_subgroup(out.G, q);
  for (const auto& x : out.lemma.cosets.representatives()) out.transversal.push_back(out.G.embed_top(x));

  const Subgroup g = Subgroup::whole(out.G.group);
  out.Psi = inflate(psi, out.G).relabeled("Psi");
  const ClassFunction one_lambda =
      extend_over_stabilizer(trivial_character(q, limits).relabeled("1_Q"), out.lemma.lambda, out.G, out.QE);
  out.Theta = induce(one_lambda, g, out.transversal, "Theta");
  for (std::size_t i = 0; i < out.phis.size(); ++i) {
    const ClassFunction local = extend_over_stabilizer(out.phis[i], out.lemma.lambda, out.G, out.QE);
    out.Phis.push_back(induce(local, g, out.transversal, "Phi_" + std::to_string(i + 1)));
  }
  return out;
}

std::pair<Example1Output, TheoremBOutput> theorem_a(const Example1Params& params, const Limits& limits) {
  Example1Output ex = example1(params, limits);
  TheoremBOutput tb = theorem_b(ex.P(), ex.Q, ex.psi, ex.constituents, limits);
  return {std::move(ex), std::move(tb)};
}

// ---------------------------------------------------------------------------
// Products as restrictions to the diagonal

bool product_as_diagonal_restriction(GroupPtr g, const ClassFunction& psi, const ClassFunction& theta,
                                     const Limits& limits) {
  const DiagonalEmbedding d = diagonal_subgroup(g, limits);
  const ClassFunction outer = outer_product(psi, theta, d, limits);
  const ClassFunction restricted = restrict_to(outer, d.diagonal, limits);
  const ClassFunction prod = product(psi, theta);
  const Subgroup whole = Subgroup::whole(g);
  for (const auto& x : whole.elements(limits))
    if (restricted(d.embed(x)) != prod(x)) return false;
  return true;
}

}  // namespace charprod
