#include "charprod/products.hpp"

#include "charprod/errors.hpp"

namespace charprod {

Element SemidirectProduct::embed_top(const Element& sigma) const {
  Element out = sigma;
  out.code.resize(group->slot_count(), 0);
  return out;
}

Element SemidirectProduct::embed_base(const Element& tau) const {
  Element out(std::vector<std::uint32_t>(top->slot_count(), 0));
  out.code.insert(out.code.end(), tau.code.begin(), tau.code.end());
  return out;
}

Element SemidirectProduct::combine(const Element& sigma, const Element& tau) const {
  Element out = sigma;
  out.code.insert(out.code.end(), tau.code.begin(), tau.code.end());
  return out;
}

std::pair<Element, Element> SemidirectProduct::split(const Element& g) const {
  const auto n = static_cast<long>(top->slot_count());
  return {Element(std::vector<std::uint32_t>(g.code.begin(), g.code.begin() + n)),
          Element(std::vector<std::uint32_t>(g.code.begin() + n, g.code.end()))};
}

SemidirectProduct semidirect(ActionPtr action, std::size_t samples, json descriptor) {
  validate_action(*action, samples);
  SemidirectProduct sp;
  sp.top = action->acting_group();
  sp.base = action->module();
  sp.group = semidirect_group(action, std::move(descriptor));

  const std::size_t ts = sp.top->slot_count();
  std::vector<Element> top_gens;
  for (const auto& s : sp.top->generators()) top_gens.push_back(sp.embed_top(s));
  std::vector<Element> base_gens;
  for (const auto& s : sp.base->generators()) base_gens.push_back(sp.embed_base(s));

  sp.top_image = Subgroup::from_predicate(
      sp.group,
      [ts](const Element& g) {
        for (std::size_t i = ts; i < g.code.size(); ++i)
          if (g.code[i] != 0) return false;
        return true;
      },
      sp.top->order(), std::move(top_gens), "top");
  sp.base_image = Subgroup::from_predicate(
      sp.group,
      [ts](const Element& g) {
        for (std::size_t i = 0; i < ts; ++i)
          if (g.code[i] != 0) return false;
        return true;
      },
      sp.base->order(), std::move(base_gens), "base");
  return sp;
}

std::uint32_t WreathProduct::copies() const { return checked_power(p, r); }

Element WreathProduct::base_element(const std::vector<std::uint32_t>& coords) const {
  return product.embed_base(Element(coords));
}

WreathProduct wreath_cyclic(std::uint32_t p, std::uint32_t t, std::uint32_t r) {
  if (!is_prime(p)) throw NotPrime(std::to_string(p) + " is not prime");
  if (t == 0 || r == 0) throw ConstraintViolation("wreath_cyclic: t and r must be positive");
  const std::uint32_t m = checked_power(p, r);
  const std::uint32_t q = checked_power(p, t);
  if (m > 4096) throw ConstraintViolation("wreath_cyclic: p^r = " + std::to_string(m) + " coordinates is too many");

  WreathProduct w;
  w.p = p;
  w.t = t;
  w.r = r;
  w.coordinate = cyclic_group(q);
  GroupPtr top = cyclic_group(m);
  GroupPtr base = direct_power(w.coordinate, m);
  auto shift = [m](std::span<const std::uint32_t> sigma, std::span<std::uint32_t> out) {
    for (std::uint32_t i = 0; i < m; ++i) out[i] = (i + sigma[0]) % m;
  };
  auto action = block_permutation_action(top, base, m, shift, json{{"type", "cyclic_shift"}});
  json d = {{"type", "wreath"}, {"p", p}, {"t", t}, {"r", r}};
  w.product = semidirect(action, 32, std::move(d));
  return w;
}

}  // namespace charprod
