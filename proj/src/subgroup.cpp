#include "charprod/subgroup.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <unordered_set>

#include "charprod/errors.hpp"

namespace charprod {

// ---------------------------------------------------------------------------
// ClassTable

ClassTable::ClassTable(std::vector<ConjugacyClass> classes,
                       std::unordered_map<Element, std::uint32_t, ElementHash> index)
    : classes_(std::move(classes)), index_(std::move(index)) {}

std::optional<std::uint32_t> ClassTable::find(const Element& x) const {
  auto it = index_.find(x);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::uint32_t ClassTable::index_of(const Element& x) const {
  auto it = index_.find(x);
  if (it == index_.end()) throw GroupMismatch("element " + x.to_string() + " is not in the group");
  return it->second;
}

// ---------------------------------------------------------------------------
// Subgroup

struct Subgroup::Impl {
  GroupPtr parent;
  bool whole = false;
  Predicate predicate;  // empty for whole groups and explicit element lists
  BigInt order;
  std::vector<Element> gens;
  std::string label;

  mutable std::mutex mutex;
  mutable bool have_elements = false;
  mutable std::vector<Element> elements;
  mutable std::shared_ptr<const ClassTable> classes;
};

namespace {

void check_bound(const BigInt& order, const Limits& limits, const std::string& what) {
  if (order > limits.max_enum)
    throw EnumerationBoundExceeded(what + " of order " + order.get_str() +
                                   " exceeds the enumeration bound " +
                                   std::to_string(limits.max_enum));
}

// Breadth-first closure of gens under right multiplication.
std::vector<Element> closure(const FiniteGroup& g, const std::vector<Element>& gens,
                             const Limits& limits) {
  std::unordered_set<Element, ElementHash> seen;
  std::vector<Element> out;
  std::deque<Element> queue;
  Element id = g.identity();
  seen.insert(id);
  out.push_back(id);
  queue.push_back(std::move(id));
  while (!queue.empty()) {
    Element x = std::move(queue.front());
    queue.pop_front();
    for (const auto& s : gens) {
      Element y = g.mul(x, s);
      if (seen.insert(y).second) {
        if (out.size() >= limits.max_enum)
          throw EnumerationBoundExceeded("subgroup closure exceeds the enumeration bound " +
                                         std::to_string(limits.max_enum));
        out.push_back(y);
        queue.push_back(std::move(y));
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

Subgroup Subgroup::whole(GroupPtr g) {
  auto impl = std::make_shared<Impl>();
  impl->order = g->order();
  impl->gens = g->generators();
  impl->whole = true;
  impl->parent = std::move(g);
  Subgroup s;
  s.impl_ = std::move(impl);
  return s;
}

Subgroup Subgroup::from_elements(GroupPtr g, std::vector<Element> elements,
                                 std::vector<Element> gens, std::string label) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  auto impl = std::make_shared<Impl>();
  impl->parent = std::move(g);
  impl->order = static_cast<unsigned long>(elements.size());
  impl->gens = std::move(gens);
  impl->label = std::move(label);
  impl->elements = std::move(elements);
  impl->have_elements = true;
  Subgroup s;
  s.impl_ = std::move(impl);
  return s;
}

Subgroup Subgroup::from_predicate(GroupPtr g, Predicate contains, BigInt order,
                                  std::vector<Element> gens, std::string label) {
  auto impl = std::make_shared<Impl>();
  impl->parent = std::move(g);
  impl->predicate = std::move(contains);
  impl->order = std::move(order);
  impl->gens = std::move(gens);
  impl->label = std::move(label);
  Subgroup s;
  s.impl_ = std::move(impl);
  return s;
}

const GroupPtr& Subgroup::parent() const { return impl_->parent; }
const BigInt& Subgroup::order() const { return impl_->order; }
bool Subgroup::is_whole() const { return impl_->whole; }
const std::string& Subgroup::label() const { return impl_->label; }
const std::vector<Element>& Subgroup::generators() const& { return impl_->gens; }

bool Subgroup::contains(const Element& x) const {
  if (!impl_->parent->is_valid(x)) return false;
  if (impl_->whole) return true;
  if (impl_->predicate) return impl_->predicate(x);
  const auto& els = impl_->elements;
  return std::binary_search(els.begin(), els.end(), x);
}

bool Subgroup::is_abelian() const {
  const auto& g = *impl_->parent;
  const auto& gens = impl_->gens;
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (g.mul(gens[i], gens[j]) != g.mul(gens[j], gens[i])) return false;
  return true;
}

const std::vector<Element>& Subgroup::elements(const Limits& limits) const& {
  std::lock_guard lock(impl_->mutex);
  if (impl_->have_elements) return impl_->elements;
  check_bound(impl_->order, limits, impl_->label.empty() ? "subgroup" : impl_->label);
  const FiniteGroup& g = *impl_->parent;
  std::vector<Element> els;
  if (impl_->whole) {
    const std::uint64_t n = impl_->order.get_ui();
    els.reserve(n);
    for (std::uint64_t r = 0; r < n; ++r) els.push_back(g.unrank(r));
  } else {
    els = closure(g, impl_->gens, limits);
    if (impl_->order != static_cast<unsigned long>(els.size()))
      throw GroupMismatch("generators of " + impl_->label + " span " + std::to_string(els.size()) +
                          " elements, expected " + impl_->order.get_str());
  }
  impl_->elements = std::move(els);
  impl_->have_elements = true;
  return impl_->elements;
}

const ClassTable& Subgroup::classes(const Limits& limits) const {
  {
    std::lock_guard lock(impl_->mutex);
    if (impl_->classes) return *impl_->classes;
  }
  const auto& els = elements(limits);
  const FiniteGroup& g = *impl_->parent;
  std::vector<Element> conj_by;
  for (const auto& s : impl_->gens) conj_by.push_back(s);

  std::unordered_map<Element, std::uint32_t, ElementHash> index;
  index.reserve(els.size());
  std::vector<ConjugacyClass> classes;
  // Elements are visited in sorted order, so each new class starts at its least code.
  for (const auto& x : els) {
    if (index.count(x)) continue;
    const auto id = static_cast<std::uint32_t>(classes.size());
    std::vector<Element> stack{x};
    index.emplace(x, id);
    std::uint64_t size = 1;
    while (!stack.empty()) {
      Element y = std::move(stack.back());
      stack.pop_back();
      for (const auto& s : conj_by) {
        Element z = g.conjugate(y, s);
        if (index.emplace(z, id).second) {
          ++size;
          stack.push_back(std::move(z));
        }
      }
    }
    classes.push_back({x, size});
  }
  auto table = std::make_shared<const ClassTable>(std::move(classes), std::move(index));
  std::lock_guard lock(impl_->mutex);
  if (!impl_->classes) impl_->classes = std::move(table);
  return *impl_->classes;
}

bool Subgroup::same_as(const Subgroup& other) const {
  if (impl_ == other.impl_) return true;
  if (impl_->parent != other.impl_->parent || impl_->order != other.impl_->order) return false;
  if (impl_->whole || other.impl_->whole) return true;  // equal orders inside one group
  return is_subgroup_of(other);
}

bool Subgroup::is_subgroup_of(const Subgroup& other) const {
  if (impl_->parent != other.impl_->parent) return false;
  if (other.impl_->whole) return true;
  for (const auto& s : impl_->gens)
    if (!other.contains(s)) return false;
  return true;
}

json Subgroup::descriptor() const {
  json d = {{"label", impl_->label}, {"order", impl_->order.get_str()}, {"generators", json::array()}};
  for (const auto& s : impl_->gens) d["generators"].push_back(s.code);
  return d;
}

BigInt index_of(const Subgroup& group, const Subgroup& sub) {
  if (!sub.is_subgroup_of(group)) throw GroupMismatch("index_of: not a subgroup");
  return group.order() / sub.order();
}

Subgroup subgroup_generated(GroupPtr g, const std::vector<Element>& gens, const Limits& limits,
                            std::string label) {
  for (const auto& s : gens)
    if (!g->is_valid(s)) throw GroupMismatch("generator " + s.to_string() + " is not a group element");
  auto els = closure(*g, gens, limits);
  return Subgroup::from_elements(std::move(g), std::move(els), gens, std::move(label));
}

Subgroup subgroup_generated(const Subgroup& within, const std::vector<Element>& gens,
                            const Limits& limits, std::string label) {
  for (const auto& s : gens)
    if (!within.contains(s)) throw GroupMismatch("generator " + s.to_string() + " is not in the subgroup");
  return subgroup_generated(within.parent(), gens, limits, std::move(label));
}

std::vector<ConjugacyClass> conjugacy_classes(GroupPtr g, const Limits& limits) {
  return Subgroup::whole(std::move(g)).classes(limits).classes();
}

// ---------------------------------------------------------------------------
// Cosets

CosetAction::CosetAction(Subgroup group, Subgroup sub, const Limits& limits) {
  if (!sub.is_subgroup_of(group)) throw GroupMismatch("coset action: not a subgroup");
  auto data = std::make_shared<Data>();
  const FiniteGroup& g = group.group();
  const auto& all = group.elements(limits);
  const auto& hs = sub.elements(limits);
  data->coset.reserve(all.size());
  for (const auto& x : all) {
    if (data->coset.count(x)) continue;
    const auto id = static_cast<std::uint32_t>(data->reps.size());
    data->reps.push_back(x);
    for (const auto& h : hs) data->coset.emplace(g.mul(h, x), id);
  }
  data->group = std::move(group);
  data->sub = std::move(sub);
  data_ = std::move(data);
}

std::uint32_t CosetAction::coset_of(const Element& x) const {
  auto it = data_->coset.find(x);
  if (it == data_->coset.end()) throw GroupMismatch("element " + x.to_string() + " is not in the group");
  return it->second;
}

std::uint32_t CosetAction::act(std::uint32_t point, const Element& g) const {
  return coset_of(data_->group.group().mul(data_->reps[point], g));
}

std::vector<std::uint32_t> CosetAction::permutation(const Element& g) const {
  std::vector<std::uint32_t> perm(degree());
  for (std::uint32_t i = 0; i < perm.size(); ++i) perm[i] = act(i, g);
  return perm;
}

std::vector<Element> CosetAction::point_stabilizer(std::uint32_t point) const {
  std::vector<Element> out;
  for (const auto& x : data_->group.elements())
    if (act(point, x) == point) out.push_back(x);
  return out;
}

std::vector<Element> right_transversal(const Subgroup& group, const Subgroup& sub,
                                       const Limits& limits) {
  return CosetAction(group, sub, limits).representatives();
}

CosetAction coset_action(const Subgroup& group, const Subgroup& sub, const Limits& limits) {
  const BigInt idx = index_of(group, sub);
  if (idx > limits.rank_bound)
    throw EnumerationBoundExceeded("index " + idx.get_str() + " exceeds the rank bound " +
                                   std::to_string(limits.rank_bound));
  return CosetAction(group, sub, limits);
}

// ---------------------------------------------------------------------------
// Diagonal

Element DiagonalEmbedding::embed(const Element& g) const {
  std::vector<std::uint32_t> code;
  code.reserve(2 * g.code.size());
  code.insert(code.end(), g.code.begin(), g.code.end());
  code.insert(code.end(), g.code.begin(), g.code.end());
  return Element(std::move(code));
}

Element DiagonalEmbedding::project(const Element& pair) const {
  const auto n = static_cast<long>(base->slot_count());
  return Element(std::vector<std::uint32_t>(pair.code.begin(), pair.code.begin() + n));
}

DiagonalEmbedding diagonal_subgroup(GroupPtr g, const Limits& limits) {
  check_bound(g->order(), limits, "diagonal subgroup");
  DiagonalEmbedding d;
  d.base = g;
  d.product = direct_product(g, g);
  std::vector<Element> els;
  const Subgroup whole = Subgroup::whole(g);
  for (const auto& x : whole.elements(limits)) els.push_back(d.embed(x));
  std::vector<Element> gens;
  for (const auto& s : g->generators()) gens.push_back(d.embed(s));
  d.diagonal = Subgroup::from_elements(d.product, std::move(els), std::move(gens), "D(G)");
  return d;
}

}  // namespace charprod
