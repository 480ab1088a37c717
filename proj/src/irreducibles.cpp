#include "charprod/irreducibles.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <unordered_map>

#include "charprod/errors.hpp"

namespace charprod {

namespace {

// Abelian subgroups <a> and <a, b>, largest first, deduplicated by element set.
std::vector<Subgroup> small_abelian_subgroups(const Subgroup& g, const Limits& limits) {
  const FiniteGroup& grp = g.group();
  const auto& els = g.elements(limits);
  std::set<std::vector<Element>> seen;
  std::vector<Subgroup> cyclic;
  for (const auto& x : els) {
    Subgroup c = subgroup_generated(g.parent(), {x}, limits, "A");
    if (seen.insert(c.elements()).second) cyclic.push_back(std::move(c));
  }
  std::vector<Subgroup> all = cyclic;
  for (std::size_t i = 0; i < cyclic.size(); ++i) {
    const Element& a = cyclic[i].generators()[0];
    for (std::size_t j = i + 1; j < cyclic.size(); ++j) {
      const Element& b = cyclic[j].generators()[0];
      if (cyclic[i].contains(b) || cyclic[j].contains(a)) continue;
      if (grp.mul(a, b) != grp.mul(b, a)) continue;
      Subgroup ab = subgroup_generated(g.parent(), {a, b}, limits, "A");
      if (seen.insert(ab.elements()).second) all.push_back(std::move(ab));
    }
  }
  std::stable_sort(all.begin(), all.end(),
                   [](const Subgroup& x, const Subgroup& y) { return x.order() > y.order(); });
  return all;
}

// Linear characters of G, as characters of the abelian quotient G/G'.
std::vector<ClassFunction> abelianization_characters(const Subgroup& g, const Limits& limits) {
  const FiniteGroup& grp = g.group();
  const auto& els = g.elements(limits);
  const auto& gens = g.generators();

  // G' is the normal closure of the commutators of the generators.
  std::vector<Element> comms;
  for (const auto& a : gens)
    for (const auto& b : gens) {
      const Element c = grp.mul(grp.mul(grp.inverse(a), grp.inverse(b)), grp.mul(a, b));
      for (const auto& x : els) comms.push_back(grp.conjugate(c, x));
    }
  std::sort(comms.begin(), comms.end());
  comms.erase(std::unique(comms.begin(), comms.end()), comms.end());
  const Subgroup derived = subgroup_generated(g.parent(), comms, limits, "G'");
  const auto& d = derived.elements(limits);

  std::unordered_map<Element, std::size_t, ElementHash> coset;
  std::vector<Element> reps;
  for (const auto& x : els) {
    if (coset.count(x)) continue;
    for (const auto& y : d) coset.emplace(grp.mul(x, y), reps.size());
    reps.push_back(x);
  }
  auto qmul = [&](std::size_t i, std::size_t j) { return coset.at(grp.mul(reps[i], reps[j])); };

  // Extend characters generator by generator over the span of the images.
  std::uint64_t e = 1;
  std::vector<std::size_t> qgens;
  for (const auto& s : gens) {
    const std::size_t q = coset.at(s);
    std::uint64_t m = 1;
    for (std::size_t x = q; x != 0; x = qmul(x, q)) ++m;
    e = std::lcm(e, m);
    qgens.push_back(q);
  }
  std::vector<std::size_t> span{0};
  std::unordered_map<std::size_t, std::size_t> where{{0, 0}};
  std::vector<std::vector<std::uint64_t>> chars{{0}};
  for (const std::size_t q : qgens) {
    std::uint64_t m = 1;
    std::size_t qm = q;
    while (!where.count(qm)) {
      qm = qmul(qm, q);
      ++m;
    }
    if (m == 1) continue;
    const std::size_t old = span.size();
    std::vector<std::size_t> grown = span;
    std::size_t qj = q;
    for (std::uint64_t j = 1; j < m; ++j) {
      for (std::size_t b = 0; b < old; ++b) grown.push_back(qmul(span[b], qj));
      qj = qmul(qj, q);
    }
    const std::size_t at_m = where.at(qm);
    std::vector<std::vector<std::uint64_t>> next;
    for (const auto& chi : chars)
      for (std::uint64_t x = 0; x < e; ++x) {
        if ((m * x) % e != chi[at_m]) continue;
        std::vector<std::uint64_t> ext(old * m);
        for (std::uint64_t j = 0; j < m; ++j)
          for (std::size_t b = 0; b < old; ++b) ext[j * old + b] = (chi[b] + j * x) % e;
        next.push_back(std::move(ext));
      }
    span = std::move(grown);
    where.clear();
    for (std::size_t i = 0; i < span.size(); ++i) where.emplace(span[i], i);
    chars = std::move(next);
  }

  std::vector<ClassFunction> out;
  const auto& classes = g.classes(limits);
  for (const auto& chi : chars) {
    std::vector<CycNumber> values;
    for (const auto& c : classes)
      values.push_back(root_of_unity(static_cast<std::uint32_t>(e),
                                     static_cast<std::int64_t>(chi[where.at(coset.at(c.representative))])));
    out.push_back(ClassFunction::from_class_values(g, std::move(values), "lin", limits));
  }
  return out;
}

}  // namespace

std::vector<ClassFunction> irr_small_pgroup(const Subgroup& g, const Limits& limits) {
  if (g.order() > limits.irr_bound)
    throw EnumerationBoundExceeded("irr_small_pgroup: order " + g.order().get_str() +
                                   " exceeds the bound " + std::to_string(limits.irr_bound));
  const auto& classes = g.classes(limits);
  const BigInt order = g.order();

  if (g.is_abelian()) {
    auto lin = linear_characters(g, limits);
    for (std::size_t i = 0; i < lin.size(); ++i) lin[i] = lin[i].relabeled("chi" + std::to_string(i));
    return lin;
  }

  std::vector<ClassFunction> found;
  std::set<std::vector<std::string>> seen;  // value vectors, as strings
  BigInt degree_squares = 0;
  auto complete = [&] { return found.size() == classes.size() && degree_squares == order; };
  auto key_of = [&](const ClassFunction& chi) {
    std::vector<std::string> key;
    for (const auto& v : chi.class_values()) key.push_back(v.normalized().to_string());
    return key;
  };

  for (auto& lin : abelianization_characters(g, limits)) {
    seen.insert(key_of(lin));
    degree_squares += 1;
    found.push_back(std::move(lin));
  }

  auto try_add = [&](ClassFunction chi) {
    auto key = key_of(chi);
    if (seen.count(key)) return;
    if (inner_product(chi, chi, limits) != 1) return;
    seen.insert(std::move(key));
    const std::int64_t d = as_rational_integer(chi.degree());
    degree_squares += BigInt(d) * d;
    found.push_back(std::move(chi));
  };

  // In a p-group every nonlinear irreducible is induced from an irreducible of
  // a maximal subgroup; those are the kernels of the order-p linear characters.
  const std::vector<ClassFunction> linear = found;
  std::set<std::vector<Element>> kernels;
  for (const auto& lin : linear) {
    if (complete()) break;
    std::vector<Element> ker;
    for (const auto& x : g.elements(limits))
      if (lin(x) == CycNumber(1)) ker.push_back(x);
    const BigInt index = order / BigInt(static_cast<unsigned long>(ker.size()));
    if (ker.size() == 1 || index == 1 || !mpz_probab_prime_p(index.get_mpz_t(), 25)) continue;
    std::sort(ker.begin(), ker.end());
    if (!kernels.insert(ker).second) continue;
    const Subgroup m = subgroup_generated(g.parent(), ker, limits, "M");
    std::vector<ClassFunction> below;
    try {
      below = irr_small_pgroup(m, limits);
    } catch (const IncompleteIrrSet&) {
      continue;
    }
    for (const auto& psi : below) {
      if (complete()) break;
      if (psi.degree() == CycNumber(1) && index * index > order) continue;
      try_add(induce(psi, g, limits));
    }
  }

  for (const auto& a : small_abelian_subgroups(g, limits)) {
    if (complete()) break;
    const BigInt index = order / a.order();
    if (index * index > order) continue;  // irreducible degrees d satisfy d^2 <= |G|
    for (const auto& lam : linear_characters(a, limits)) {
      try_add(induce(lam, g, limits));
      if (complete()) break;
    }
    if (complete()) break;
  }
  if (!complete())
    throw IncompleteIrrSet("irr_small_pgroup: found " + std::to_string(found.size()) + " of " +
                           std::to_string(classes.size()) + " irreducibles");

  std::stable_sort(found.begin(), found.end(), [](const ClassFunction& x, const ClassFunction& y) {
    return as_rational_integer(x.degree()) < as_rational_integer(y.degree());
  });
  // The trivial character is the only degree-1 character with all values 1.
  auto trivial = std::find_if(found.begin(), found.end(), [](const ClassFunction& c) {
    for (const auto& v : c.class_values())
      if (v != CycNumber(1)) return false;
    return true;
  });
  if (trivial != found.end()) std::rotate(found.begin(), trivial, trivial + 1);
  for (std::size_t i = 0; i < found.size(); ++i) found[i] = found[i].relabeled("chi" + std::to_string(i));
  return found;
}

}  // namespace charprod
