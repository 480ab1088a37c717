#include "charprod/character.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "charprod/errors.hpp"

namespace charprod {

namespace {

void require_same_domain(const ClassFunction& a, const ClassFunction& b, const char* op) {
  if (!a.domain().same_as(b.domain()))
    throw GroupMismatch(std::string(op) + ": class functions live on different groups (" +
                        a.label() + ", " + b.label() + ")");
}

std::string join_label(const std::string& a, const char* op, const std::string& b) {
  if (a.empty() || b.empty()) return {};
  return a + op + b;
}

// Pointwise combination, tabulated iff both inputs are.
template <typename F>
ClassFunction combine(const ClassFunction& a, const ClassFunction& b, F f, std::string label) {
  if (a.tabulated() && b.tabulated()) {
    const auto& classes = a.domain().classes();
    std::vector<CycNumber> values;
    values.reserve(classes.size());
    for (std::size_t i = 0; i < classes.size(); ++i)
      values.push_back(f(a.class_values()[i], b(classes[i].representative)));
    return ClassFunction::from_class_values(a.domain(), std::move(values), std::move(label));
  }
  return ClassFunction::from_rule(
      a.domain(), [a, b, f](const Element& x) { return f(a(x), b(x)); }, std::move(label));
}

}  // namespace

// ---------------------------------------------------------------------------
// ClassFunction

ClassFunction ClassFunction::from_class_values(Subgroup domain, std::vector<CycNumber> values,
                                               std::string label, const Limits& limits) {
  if (domain.classes(limits).size() != values.size())
    throw GroupMismatch("class value count " + std::to_string(values.size()) +
                        " does not match the class count " +
                        std::to_string(domain.classes(limits).size()));
  auto impl = std::make_shared<Impl>();
  impl->domain = std::move(domain);
  impl->tabulated = true;
  impl->values = std::move(values);
  impl->label = std::move(label);
  ClassFunction f;
  f.impl_ = std::move(impl);
  return f;
}

ClassFunction ClassFunction::from_rule(Subgroup domain, Rule rule, std::string label) {
  auto impl = std::make_shared<Impl>();
  impl->domain = std::move(domain);
  impl->rule = std::move(rule);
  impl->label = std::move(label);
  ClassFunction f;
  f.impl_ = std::move(impl);
  return f;
}

ClassFunction ClassFunction::tabulate(Subgroup domain, const Rule& rule, std::string label,
                                      const Limits& limits) {
  if (!domain.enumerable(limits)) return from_rule(std::move(domain), rule, std::move(label));
  const auto& classes = domain.classes(limits);
  std::vector<CycNumber> values;
  values.reserve(classes.size());
  for (const auto& c : classes) values.push_back(rule(c.representative));
  return from_class_values(std::move(domain), std::move(values), std::move(label), limits);
}

const std::vector<CycNumber>& ClassFunction::class_values() const {
  if (!impl_->tabulated) throw EnumerationBoundExceeded("class function " + label() + " is in rule form");
  return impl_->values;
}

CycNumber ClassFunction::operator()(const Element& g) const {
  if (impl_->tabulated) return impl_->values[impl_->domain.classes().index_of(g)];
  return impl_->rule(g);
}

CycNumber ClassFunction::degree() const { return (*this)(domain().group().identity()); }

std::uint32_t ClassFunction::conductor() const {
  if (!impl_->tabulated) return static_cast<std::uint32_t>(domain().group().exponent());
  std::uint64_t n = 1;
  for (const auto& v : impl_->values) n = std::lcm<std::uint64_t>(n, v.conductor());
  return static_cast<std::uint32_t>(n);
}

ClassFunction ClassFunction::relabeled(std::string label) const {
  auto impl = std::make_shared<Impl>(*impl_);
  impl->label = std::move(label);
  ClassFunction f;
  f.impl_ = std::move(impl);
  return f;
}

ClassFunction ClassFunction::materialized(const Limits& limits) const {
  if (impl_->tabulated) return *this;
  if (!domain().enumerable(limits))
    throw EnumerationBoundExceeded("cannot tabulate " + label() + " on a group of order " +
                                   domain().order().get_str());
  return tabulate(domain(), impl_->rule, label(), limits);
}

// ---------------------------------------------------------------------------
// Elementary functions and pointwise operations

ClassFunction trivial_character(const Subgroup& g, const Limits& limits) {
  return ClassFunction::tabulate(g, [](const Element&) { return CycNumber(1); }, "1", limits);
}

ClassFunction zero_function(const Subgroup& g, const Limits& limits) {
  return ClassFunction::tabulate(g, [](const Element&) { return CycNumber(); }, "0", limits);
}

ClassFunction restrict_to(const ClassFunction& chi, const Subgroup& sub, const Limits& limits) {
  if (!sub.is_subgroup_of(chi.domain()))
    throw GroupMismatch("restrict: target is not a subgroup of the domain of " + chi.label());
  std::string label = chi.label().empty() ? std::string{} : chi.label() + "_" + sub.label();
  return ClassFunction::tabulate(sub, [chi](const Element& x) { return chi(x); }, std::move(label), limits);
}

ClassFunction product(const ClassFunction& a, const ClassFunction& b) {
  require_same_domain(a, b, "product");
  return combine(a, b, [](const CycNumber& x, const CycNumber& y) { return x * y; },
                 join_label(a.label(), "*", b.label()));
}

ClassFunction sum(const ClassFunction& a, const ClassFunction& b) {
  require_same_domain(a, b, "sum");
  return combine(a, b, [](const CycNumber& x, const CycNumber& y) { return x + y; },
                 join_label(a.label(), "+", b.label()));
}

ClassFunction difference(const ClassFunction& a, const ClassFunction& b) {
  require_same_domain(a, b, "difference");
  return combine(a, b, [](const CycNumber& x, const CycNumber& y) { return x - y; },
                 join_label(a.label(), "-", b.label()));
}

ClassFunction scaled(const ClassFunction& a, const Rational& c) {
  std::string label = a.label().empty() ? std::string{} : c.get_str() + "*" + a.label();
  if (a.tabulated()) {
    std::vector<CycNumber> values;
    for (const auto& v : a.class_values()) values.push_back(v * c);
    return ClassFunction::from_class_values(a.domain(), std::move(values), std::move(label));
  }
  return ClassFunction::from_rule(a.domain(), [a, c](const Element& x) { return a(x) * c; },
                                  std::move(label));
}

ClassFunction power(const ClassFunction& a, std::int64_t k) {
  if (k < 0) throw ConstraintViolation("power: exponent must be non-negative");
  auto raise = [k](CycNumber v) {
    CycNumber acc(1);
    for (std::int64_t i = 0; i < k; ++i) acc *= v;
    return acc;
  };
  std::string label = a.label().empty() ? std::string{} : a.label() + "^" + std::to_string(k);
  if (a.tabulated()) {
    std::vector<CycNumber> values;
    for (const auto& v : a.class_values()) values.push_back(raise(v));
    return ClassFunction::from_class_values(a.domain(), std::move(values), std::move(label));
  }
  return ClassFunction::from_rule(a.domain(), [a, raise](const Element& x) { return raise(a(x)); },
                                  std::move(label));
}

// ---------------------------------------------------------------------------
// Induction, inflation, extension

ClassFunction induce(const ClassFunction& mu, const Subgroup& g, std::vector<Element> transversal,
                     std::string label) {
  const Subgroup& h = mu.domain();
  if (!h.is_subgroup_of(g)) throw GroupMismatch("induce: " + mu.label() + " is not on a subgroup of the target");
  GroupPtr parent = g.parent();
  std::vector<std::pair<Element, Element>> conj;  // (t, t^-1)
  conj.reserve(transversal.size());
  for (auto& t : transversal) {
    Element inv = parent->inverse(t);
    conj.emplace_back(std::move(t), std::move(inv));
  }
  if (label.empty() && !mu.label().empty()) label = "(" + mu.label() + ")^G";
  auto rule = [mu, h, parent, conj = std::move(conj)](const Element& x) {
    CycNumber acc;
    for (const auto& [t, tinv] : conj) {
      Element y = parent->mul(parent->mul(t, x), tinv);
      if (h.contains(y)) acc += mu(y);
    }
    return acc;
  };
  return ClassFunction::from_rule(g, std::move(rule), std::move(label));
}

ClassFunction induce(const ClassFunction& mu, const Subgroup& g, const Limits& limits) {
  if (!mu.domain().is_subgroup_of(g)) throw GroupMismatch("induce: " + mu.label() + " is not on a subgroup of the target");
  if (!g.enumerable(limits))
    throw EnumerationBoundExceeded("induce: target of order " + g.order().get_str() +
                                   " exceeds the enumeration bound; supply a transversal");
  // Tabulate mu first so the transversal sum does class lookups only.
  ClassFunction table = mu.domain().enumerable(limits) ? mu.materialized(limits) : mu;
  ClassFunction rule = induce(table, g, right_transversal(g, mu.domain(), limits), {});
  std::string label = mu.label().empty() ? std::string{} : "(" + mu.label() + ")^G";
  return rule.materialized(limits).relabeled(std::move(label));
}

ClassFunction inflate(const ClassFunction& psi, const SemidirectProduct& g) {
  if (psi.domain().parent() != g.top || !psi.domain().is_whole())
    throw NormalFormUnavailable("inflate: " + psi.label() + " is not a class function on the complement");
  std::string label = psi.label().empty() ? std::string{} : "Inf(" + psi.label() + ")";
  SemidirectProduct sp = g;
  return ClassFunction::from_rule(
      Subgroup::whole(g.group), [psi, sp](const Element& x) { return psi(sp.split(x).first); },
      std::move(label));
}

Subgroup stabilizer_product_subgroup(const SemidirectProduct& g, const Subgroup& q) {
  if (q.parent() != g.top) throw NormalFormUnavailable("Q is not a subgroup of the complement");
  std::vector<Element> gens;
  for (const auto& s : q.generators()) gens.push_back(g.embed_top(s));
  for (const auto& s : g.base->generators()) gens.push_back(g.embed_base(s));
  SemidirectProduct sp = g;
  std::string label = (q.label().empty() ? std::string("Q") : q.label()) + "E";
  return Subgroup::from_predicate(
      g.group, [sp, q](const Element& x) { return q.contains(sp.split(x).first); },
      q.order() * g.base->order(), std::move(gens), std::move(label));
}

ClassFunction extend_over_stabilizer(const ClassFunction& phi, const ClassFunction& lambda,
                                     const SemidirectProduct& g, const Subgroup& qe) {
  const Subgroup& q = phi.domain();
  if (q.parent() != g.top) throw NormalFormUnavailable("extend: phi is not on a subgroup of the complement");
  if (lambda.domain().parent() != g.base || !lambda.domain().is_whole())
    throw NormalFormUnavailable("extend: lambda is not a character of the normal subgroup");
  if (qe.parent() != g.group) throw GroupMismatch("extend: QE is not a subgroup of G");
  for (const auto& s : q.generators())
    if (!qe.contains(g.embed_top(s))) throw GroupMismatch("extend: QE does not contain Q");

  const auto& semi = std::get<FiniteGroup::Semidirect>(g.group->shape());
  for (const auto& s : q.generators()) {
    for (const auto& e : g.base->generators()) {
      const Element moved = semi.action->apply(e, s);
      if (lambda(moved) != lambda(e))
        throw StabilizerViolation("element " + s.to_string() + " of Q moves lambda: lambda(" +
                                  moved.to_string() + ") = " + lambda(moved).to_string() +
                                  " but lambda(" + e.to_string() + ") = " + lambda(e).to_string());
    }
  }
  std::string label;
  if (!phi.label().empty() && !lambda.label().empty()) label = phi.label() + "." + lambda.label();
  SemidirectProduct sp = g;
  auto rule = [phi, lambda, sp](const Element& x) {
    auto [sigma, tau] = sp.split(x);
    return phi(sigma) * lambda(tau);
  };
  return ClassFunction::from_rule(qe, std::move(rule), std::move(label));
}

// ---------------------------------------------------------------------------
// Inner products and decompositions

Rational inner_product(const ClassFunction& a, const ClassFunction& b, const Limits& limits) {
  require_same_domain(a, b, "inner_product");
  const Subgroup& dom = a.domain();
  if (!dom.enumerable(limits))
    throw EnumerationBoundExceeded("inner product over a group of order " + dom.order().get_str());
  const auto& classes = dom.classes(limits);
  CycNumber acc;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    const Element& rep = classes[i].representative;
    CycNumber av = a.tabulated() ? a.class_values()[i] : a(rep);
    CycNumber term = av * b(rep).conjugate();
    term *= Rational(static_cast<unsigned long>(classes[i].size));
    acc += term;
  }
  if (!acc.is_rational())
    throw IntegralityViolation("inner product <" + a.label() + ", " + b.label() +
                               "> is not rational: " + acc.to_string());
  Rational r = acc.coefficients()[0];
  r /= Rational(BigInt(dom.order()));
  return r;
}

std::int64_t multiplicity(const ClassFunction& a, const ClassFunction& b, const Limits& limits) {
  const Rational r = inner_product(a, b, limits);
  if (r.get_den() != 1 || r < 0 || !r.get_num().fits_slong_p())
    throw IntegralityViolation("multiplicity <" + a.label() + ", " + b.label() + "> = " + r.get_str() +
                               " is not a non-negative integer");
  return r.get_num().get_si();
}

bool is_irreducible(const ClassFunction& chi, const Limits& limits) {
  return inner_product(chi, chi, limits) == 1;
}

Comparison compare(const ClassFunction& a, const ClassFunction& b, const Limits& limits,
                   std::size_t samples) {
  require_same_domain(a, b, "compare");
  Comparison out;
  auto check = [&](const Element& x) {
    CycNumber va = a(x);
    CycNumber vb = b(x);
    if (va != vb) {
      out.equal = false;
      out.witness = x;
      out.lhs = std::move(va);
      out.rhs = std::move(vb);
      return false;
    }
    return true;
  };
  const Subgroup& dom = a.domain();
  if (dom.enumerable(limits)) {
    for (const auto& c : dom.classes(limits))
      if (!check(c.representative)) return out;
    return out;
  }
  out.probabilistic = true;
  std::mt19937_64 rng(0xc0ffee);
  if (!check(dom.group().identity())) return out;
  for (std::size_t i = 0; i < samples; ++i)
    if (!check(random_subgroup_element(dom, rng, limits))) return out;
  return out;
}

Decomposition decompose_against(const ClassFunction& chi, const std::vector<ClassFunction>& candidates,
                                const Limits& limits) {
  for (std::size_t i = 0; i < candidates.size(); ++i)
    for (std::size_t j = i + 1; j < candidates.size(); ++j)
      if (compare(candidates[i], candidates[j], limits).equal)
        throw ConstraintViolation("decompose_against: candidates " + std::to_string(i) + " and " +
                                  std::to_string(j) + " coincide");
  Decomposition d;
  ClassFunction rest = chi;
  for (const auto& phi : candidates) {
    const std::int64_t n = multiplicity(chi, phi, limits);
    d.multiplicities.push_back(n);
    if (n > 0) {
      d.constituents.push_back({phi, n});
      rest = difference(rest, scaled(phi, Rational(static_cast<long>(n))));
    }
  }
  d.residual = rest.relabeled("residual");
  const Comparison zero = compare(d.residual, zero_function(chi.domain(), limits), limits);
  d.residual_zero = zero.equal;
  d.probabilistic = zero.probabilistic;
  return d;
}

// ---------------------------------------------------------------------------
// Linear characters

std::vector<ClassFunction> linear_characters(const Subgroup& a, const Limits& limits) {
  if (!a.is_abelian()) throw NotAbelian("linear_characters: group " + a.label() + " is not abelian");
  const auto& els = a.elements(limits);
  const FiniteGroup& g = a.group();

  std::uint64_t e = 1;
  for (const auto& s : a.generators()) e = std::lcm(e, g.element_order(s));

  // Characters as exponent vectors mod e over the list `span` of elements.
  std::vector<Element> span{g.identity()};
  std::unordered_map<Element, std::size_t, ElementHash> where{{g.identity(), 0}};
  std::vector<std::vector<std::uint64_t>> chars{{0}};

  for (const auto& s : a.generators()) {
    std::uint64_t m = 1;
    Element sm = s;
    while (!where.count(sm)) {
      sm = g.mul(sm, s);
      ++m;
    }
    if (m == 1) continue;
    const std::size_t old = span.size();
    std::vector<Element> grown = span;
    Element sj = s;
    for (std::uint64_t j = 1; j < m; ++j) {
      for (std::size_t b = 0; b < old; ++b) grown.push_back(g.mul(span[b], sj));
      sj = g.mul(sj, s);
    }
    const std::size_t at_m = where.at(sm);
    std::vector<std::vector<std::uint64_t>> next;
    for (const auto& chi : chars) {
      // chi'(s) = x with m x = chi(s^m) mod e.
      for (std::uint64_t x = 0; x < e; ++x) {
        if ((m * x) % e != chi[at_m]) continue;
        std::vector<std::uint64_t> ext(old * m);
        for (std::uint64_t j = 0; j < m; ++j)
          for (std::size_t b = 0; b < old; ++b) ext[j * old + b] = (chi[b] + j * x) % e;
        next.push_back(std::move(ext));
      }
    }
    span = std::move(grown);
    where.clear();
    for (std::size_t i = 0; i < span.size(); ++i) where.emplace(span[i], i);
    chars = std::move(next);
  }
  if (span.size() != els.size())
    throw GroupMismatch("linear_characters: generators span " + std::to_string(span.size()) +
                        " of " + std::to_string(els.size()) + " elements");

  std::vector<ClassFunction> out;
  const auto& classes = a.classes(limits);
  const auto n = static_cast<std::uint32_t>(e);
  for (std::size_t k = 0; k < chars.size(); ++k) {
    std::vector<CycNumber> values;
    values.reserve(classes.size());
    for (const auto& c : classes) values.push_back(root_of_unity(n, static_cast<std::int64_t>(chars[k][where.at(c.representative)])));
    out.push_back(ClassFunction::from_class_values(a, std::move(values), "lin" + std::to_string(k), limits));
  }
  return out;
}

ClassFunction dual_basis_character(GroupPtr e, std::size_t s, std::uint32_t p) {
  for (std::uint32_t radix : e->radixes())
    if (radix != p) throw ConstraintViolation("dual_basis_character: E is not a direct power of Z_p");
  if (s >= e->slot_count()) throw ConstraintViolation("dual_basis_character: no basis point " + std::to_string(s));
  return ClassFunction::from_rule(
      Subgroup::whole(std::move(e)),
      [s, p](const Element& x) { return root_of_unity(p, x.code[s]); }, "lambda");
}

ClassFunction outer_product(const ClassFunction& psi, const ClassFunction& theta,
                            const DiagonalEmbedding& d, const Limits& limits) {
  const Subgroup base = Subgroup::whole(d.base);
  if (!psi.domain().same_as(base) || !theta.domain().same_as(base))
    throw GroupMismatch("outer_product: characters are not on G");
  const auto n = static_cast<long>(d.base->slot_count());
  auto rule = [psi, theta, n](const Element& x) {
    Element g(std::vector<std::uint32_t>(x.code.begin(), x.code.begin() + n));
    Element h(std::vector<std::uint32_t>(x.code.begin() + n, x.code.end()));
    return psi(g) * theta(h);
  };
  return ClassFunction::tabulate(Subgroup::whole(d.product), rule,
                                 join_label(psi.label(), "x", theta.label()), limits);
}

// ---------------------------------------------------------------------------
// Stabilizers and checks

std::vector<Element> conjugation_stabilizer(const Subgroup& acting, const ClassFunction& lambda,
                                            const Limits& limits) {
  const FiniteGroup& g = acting.group();
  const Subgroup& n = lambda.domain();
  std::vector<Element> out;
  for (const auto& sigma : acting.elements(limits)) {
    bool fixed = true;
    for (const auto& x : n.generators()) {
      Element y = g.conjugate(x, sigma);
      if (!n.contains(y)) throw GroupMismatch("conjugation_stabilizer: domain of lambda is not normalized");
      if (lambda(y) != lambda(x)) {
        fixed = false;
        break;
      }
    }
    if (fixed) out.push_back(sigma);
  }
  return out;
}

std::vector<Element> action_stabilizer(const Subgroup& acting, const GroupAction& action,
                                       const ClassFunction& lambda, const Limits& limits) {
  if (acting.parent() != action.acting_group()) throw GroupMismatch("action_stabilizer: wrong acting group");
  std::vector<Element> out;
  for (const auto& sigma : acting.elements(limits)) {
    bool fixed = true;
    for (const auto& x : action.module()->generators()) {
      if (lambda(action.apply(x, sigma)) != lambda(x)) {
        fixed = false;
        break;
      }
    }
    if (fixed) out.push_back(sigma);
  }
  return out;
}

Element random_subgroup_element(const Subgroup& h, std::mt19937_64& rng, const Limits& limits) {
  const FiniteGroup& g = h.group();
  if (h.is_whole()) return g.random_element(rng);
  if (h.enumerable(limits)) {
    const auto& els = h.elements(limits);
    return els[rng() % els.size()];
  }
  const auto& gens = h.generators();
  Element x = g.identity();
  if (gens.empty()) return x;
  const std::size_t steps = 4 * gens.size() + 16;
  for (std::size_t i = 0; i < steps; ++i) x = g.mul(x, gens[rng() % gens.size()]);
  return x;
}

std::optional<std::pair<Element, Element>> spot_check_class_function(const ClassFunction& chi,
                                                                     std::size_t samples,
                                                                     std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const Subgroup& dom = chi.domain();
  for (std::size_t i = 0; i < samples; ++i) {
    Element x = random_subgroup_element(dom, rng);
    Element g = random_subgroup_element(dom, rng);
    if (chi(dom.group().conjugate(x, g)) != chi(x)) return std::make_pair(x, g);
  }
  return std::nullopt;
}

}  // namespace charprod
