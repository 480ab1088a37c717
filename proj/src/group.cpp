#include "charprod/group.hpp"

#include <numeric>

#include <boost/container/small_vector.hpp>

#include "charprod/errors.hpp"

namespace charprod {

namespace {

using Scratch = boost::container::small_vector<std::uint32_t, 64>;

std::span<const std::uint32_t> view(const Element& e) { return e.code; }

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q = 2; q * q <= n; ++q)
    if (n % q == 0) return false;
  return true;
}

std::uint32_t checked_power(std::uint32_t p, std::uint32_t e) {
  std::uint64_t v = 1;
  for (std::uint32_t i = 0; i < e; ++i) {
    v *= p;
    if (v > 0xffffffffull)
      throw ConstraintViolation(std::to_string(p) + "^" + std::to_string(e) + " does not fit in 32 bits");
  }
  return static_cast<std::uint32_t>(v);
}

// ---------------------------------------------------------------------------
// GroupAction

GroupAction::GroupAction(GroupPtr top, GroupPtr base, Rule rule, json descriptor)
    : top_(std::move(top)), base_(std::move(base)), rule_(std::move(rule)),
      descriptor_(std::move(descriptor)) {}

Element GroupAction::apply(const Element& tau, const Element& sigma) const {
  Element out(std::vector<std::uint32_t>(base_->slot_count()));
  rule_(view(tau), view(sigma), out.code);
  return out;
}

ActionPtr trivial_action(GroupPtr top, GroupPtr base) {
  auto rule = [](std::span<const std::uint32_t> tau, std::span<const std::uint32_t>,
                 std::span<std::uint32_t> out) { std::copy(tau.begin(), tau.end(), out.begin()); };
  return std::make_shared<GroupAction>(std::move(top), std::move(base), rule,
                                       json{{"type", "trivial"}});
}

ActionPtr block_permutation_action(GroupPtr top, GroupPtr base, std::size_t blocks,
                                   BlockPermutation perm, json descriptor) {
  if (blocks == 0 || base->slot_count() % blocks != 0)
    throw InvalidAction("base slot count is not a multiple of the block count");
  const std::size_t width = base->slot_count() / blocks;
  auto rule = [blocks, width, perm = std::move(perm)](std::span<const std::uint32_t> tau,
                                                      std::span<const std::uint32_t> sigma,
                                                      std::span<std::uint32_t> out) {
    Scratch image(blocks);
    perm(sigma, {image.data(), image.size()});
    for (std::size_t i = 0; i < blocks; ++i)
      for (std::size_t s = 0; s < width; ++s) out[image[i] * width + s] = tau[i * width + s];
  };
  return std::make_shared<GroupAction>(std::move(top), std::move(base), std::move(rule),
                                       std::move(descriptor));
}

void validate_action(const GroupAction& action, std::size_t samples, std::uint64_t seed) {
  const FiniteGroup& top = *action.acting_group();
  const FiniteGroup& base = *action.module();
  std::mt19937_64 rng(seed);
  auto fail = [](const std::string& what, const Element& s, const Element& t) {
    throw InvalidAction(what + " fails at sigma=" + s.to_string() + " tau=" + t.to_string());
  };
  for (std::size_t i = 0; i < samples; ++i) {
    const Element s1 = top.random_element(rng);
    const Element s2 = top.random_element(rng);
    const Element t1 = base.random_element(rng);
    const Element t2 = base.random_element(rng);
    const Element img = action.apply(t1, s1);
    if (!base.is_valid(img)) fail("closure", s1, t1);
    if (action.apply(t1, top.identity()) != t1) fail("identity acts trivially", top.identity(), t1);
    if (action.apply(base.mul(t1, t2), s1) != base.mul(img, action.apply(t2, s1)))
      fail("(t1 t2)^s = t1^s t2^s", s1, t1);
    if (action.apply(t1, top.mul(s1, s2)) != action.apply(img, s2))
      fail("t^(s1 s2) = (t^s1)^s2", s1, t1);
  }
}

// ---------------------------------------------------------------------------
// FiniteGroup

FiniteGroup::FiniteGroup(Shape shape, json descriptor)
    : shape_(std::move(shape)), descriptor_(std::move(descriptor)) {
  if (const auto* c = std::get_if<Cyclic>(&shape_)) {
    radixes_ = {c->n};
    order_ = c->n;
    if (c->n > 1) generators_.push_back(Element({1}));
  } else if (const auto* p = std::get_if<Product>(&shape_)) {
    order_ = 1;
    for (const auto& f : p->factors) {
      offsets_.push_back(radixes_.size());
      radixes_.insert(radixes_.end(), f->radixes().begin(), f->radixes().end());
      order_ *= f->order();
    }
    for (std::size_t i = 0; i < p->factors.size(); ++i) {
      for (const auto& g : p->factors[i]->generators()) {
        Element e = identity();
        std::copy(g.code.begin(), g.code.end(), e.code.begin() + static_cast<long>(offsets_[i]));
        generators_.push_back(std::move(e));
      }
    }
  } else {
    const auto& s = std::get<Semidirect>(shape_);
    radixes_.assign(s.top->radixes().begin(), s.top->radixes().end());
    radixes_.insert(radixes_.end(), s.base->radixes().begin(), s.base->radixes().end());
    order_ = s.top->order() * s.base->order();
    for (const auto& g : s.top->generators()) {
      Element e = identity();
      std::copy(g.code.begin(), g.code.end(), e.code.begin());
      generators_.push_back(std::move(e));
    }
    const auto off = static_cast<long>(s.top->slot_count());
    for (const auto& g : s.base->generators()) {
      Element e = identity();
      std::copy(g.code.begin(), g.code.end(), e.code.begin() + off);
      generators_.push_back(std::move(e));
    }
  }
}

std::uint64_t FiniteGroup::order_within(std::uint64_t bound) const {
  if (order_ > bound)
    throw EnumerationBoundExceeded("group of order " + order_.get_str() +
                                   " exceeds the enumeration bound " + std::to_string(bound));
  return order_.get_ui();
}

bool FiniteGroup::is_identity(const Element& x) const {
  for (std::uint32_t v : x.code)
    if (v != 0) return false;
  return true;
}

bool FiniteGroup::is_valid(const Element& x) const {
  if (x.code.size() != radixes_.size()) return false;
  for (std::size_t i = 0; i < radixes_.size(); ++i)
    if (x.code[i] >= radixes_[i]) return false;
  return true;
}

void FiniteGroup::mul_into(const std::uint32_t* a, const std::uint32_t* b, std::uint32_t* out) const {
  if (const auto* c = std::get_if<Cyclic>(&shape_)) {
    out[0] = static_cast<std::uint32_t>((static_cast<std::uint64_t>(a[0]) + b[0]) % c->n);
  } else if (const auto* p = std::get_if<Product>(&shape_)) {
    for (std::size_t i = 0; i < p->factors.size(); ++i)
      p->factors[i]->mul_into(a + offsets_[i], b + offsets_[i], out + offsets_[i]);
  } else {
    const auto& s = std::get<Semidirect>(shape_);
    const std::size_t ts = s.top->slot_count();
    const std::size_t bs = s.base->slot_count();
    Scratch moved(bs);
    s.action->apply_into({a + ts, bs}, {b, ts}, {moved.data(), bs});
    s.top->mul_into(a, b, out);
    s.base->mul_into(moved.data(), b + ts, out + ts);
  }
}

void FiniteGroup::inverse_into(const std::uint32_t* a, std::uint32_t* out) const {
  if (const auto* c = std::get_if<Cyclic>(&shape_)) {
    out[0] = a[0] == 0 ? 0 : c->n - a[0];
  } else if (const auto* p = std::get_if<Product>(&shape_)) {
    for (std::size_t i = 0; i < p->factors.size(); ++i)
      p->factors[i]->inverse_into(a + offsets_[i], out + offsets_[i]);
  } else {
    // (s t)^-1 = s^-1 ((t^(s^-1))^-1)
    const auto& s = std::get<Semidirect>(shape_);
    const std::size_t ts = s.top->slot_count();
    const std::size_t bs = s.base->slot_count();
    s.top->inverse_into(a, out);
    Scratch moved(bs);
    s.action->apply_into({a + ts, bs}, {out, ts}, {moved.data(), bs});
    s.base->inverse_into(moved.data(), out + ts);
  }
}

Element FiniteGroup::mul(const Element& a, const Element& b) const {
  Element out{std::vector<std::uint32_t>(slot_count())};
  mul_into(a.code.data(), b.code.data(), out.code.data());
  return out;
}

Element FiniteGroup::inverse(const Element& a) const {
  Element out{std::vector<std::uint32_t>(slot_count())};
  inverse_into(a.code.data(), out.code.data());
  return out;
}

Element FiniteGroup::pow(const Element& a, std::int64_t k) const {
  Element base = k < 0 ? inverse(a) : a;
  std::uint64_t e = k < 0 ? static_cast<std::uint64_t>(-k) : static_cast<std::uint64_t>(k);
  Element acc = identity();
  while (e) {
    if (e & 1) acc = mul(acc, base);
    e >>= 1;
    if (e) base = mul(base, base);
  }
  return acc;
}

Element FiniteGroup::conjugate(const Element& x, const Element& g) const {
  return mul(mul(inverse(g), x), g);
}

std::uint64_t FiniteGroup::element_order(const Element& x) const {
  std::uint64_t k = 1;
  Element y = x;
  while (!is_identity(y)) {
    y = mul(y, x);
    ++k;
  }
  return k;
}

std::uint64_t FiniteGroup::exponent() const {
  std::call_once(exponent_once_, [this] {
    if (const auto* c = std::get_if<Cyclic>(&shape_)) {
      exponent_ = c->n;
    } else if (const auto* p = std::get_if<Product>(&shape_)) {
      exponent_ = 1;
      for (const auto& f : p->factors) exponent_ = std::lcm(exponent_, f->exponent());
    } else if (order_ <= kExactExponentBound) {
      exponent_ = 1;
      const std::uint64_t n = order_.get_ui();
      for (std::uint64_t r = 0; r < n; ++r) exponent_ = std::lcm(exponent_, element_order(unrank(r)));
    } else {
      const auto& s = std::get<Semidirect>(shape_);
      exponent_ = s.top->exponent() * s.base->exponent();
    }
  });
  return exponent_;
}

std::uint64_t FiniteGroup::rank(const Element& x) const {
  if (!order_.fits_ulong_p()) throw EnumerationBoundExceeded("group order does not fit 64 bits");
  std::uint64_t r = 0;
  for (std::size_t i = 0; i < radixes_.size(); ++i) r = r * radixes_[i] + x.code[i];
  return r;
}

Element FiniteGroup::unrank(std::uint64_t r) const {
  Element out{std::vector<std::uint32_t>(slot_count())};
  for (std::size_t i = radixes_.size(); i-- > 0;) {
    out.code[i] = static_cast<std::uint32_t>(r % radixes_[i]);
    r /= radixes_[i];
  }
  return out;
}

Element FiniteGroup::random_element(std::mt19937_64& rng) const {
  Element out{std::vector<std::uint32_t>(slot_count())};
  for (std::size_t i = 0; i < radixes_.size(); ++i)
    out.code[i] = static_cast<std::uint32_t>(rng() % radixes_[i]);
  return out;
}

// ---------------------------------------------------------------------------
// Constructors

GroupPtr cyclic_group(std::uint32_t n) {
  if (n == 0) throw ConstraintViolation("cyclic_group: order must be positive");
  return GroupPtr(new FiniteGroup(FiniteGroup::Cyclic{n}, json{{"type", "cyclic"}, {"order", n}}));
}

GroupPtr direct_product(std::vector<GroupPtr> factors, json descriptor) {
  if (factors.empty()) throw ConstraintViolation("direct_product needs at least one factor");
  if (descriptor.is_null()) {
    descriptor = {{"type", "direct_product"}, {"factors", json::array()}};
    for (const auto& f : factors) descriptor["factors"].push_back(f->descriptor());
  }
  return GroupPtr(new FiniteGroup(FiniteGroup::Product{std::move(factors)}, std::move(descriptor)));
}

GroupPtr direct_product(GroupPtr g, GroupPtr h) { return direct_product({std::move(g), std::move(h)}); }

GroupPtr direct_power(GroupPtr h, std::size_t m) {
  if (m == 0) throw ConstraintViolation("direct_power: exponent must be positive");
  json d = {{"type", "direct_power"}, {"factor", h->descriptor()}, {"copies", m}};
  return direct_product(std::vector<GroupPtr>(m, h), std::move(d));
}

GroupPtr semidirect_group(ActionPtr action, json descriptor) {
  if (descriptor.is_null()) {
    descriptor = {{"type", "semidirect"},
                  {"top", action->acting_group()->descriptor()},
                  {"base", action->module()->descriptor()},
                  {"action", action->descriptor()}};
  }
  FiniteGroup::Semidirect s{action->acting_group(), action->module(), action};
  return GroupPtr(new FiniteGroup(std::move(s), std::move(descriptor)));
}

}  // namespace charprod
