#pragma once

// Concrete finite groups whose elements are mixed-radix integer codes.
//
// Multiplication is computed by rule from the group's shape, never from a
// table, so the groups built here may be far too large to enumerate.
//
// Semidirect convention.  For a semidirect product top |x base the code of an
// element is the code of sigma (in top) followed by the code of tau (in base)
// and denotes the product sigma*tau.  The action is a right action,
// tau^sigma = sigma^-1 tau sigma, and
//
//     (s1 t1)(s2 t2) = (s1 s2) (t1^s2 t2).

#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <random>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "charprod/cyclotomic.hpp"
#include "charprod/element.hpp"

namespace charprod {

using json = nlohmann::ordered_json;

/// Size limits for anything that has to enumerate.
struct Limits {
  std::uint64_t max_enum = 200000;  // elements enumerated for classes, subgroups, cosets
  std::uint64_t rank_bound = 32;    // largest index [P:Q] turned into a permutation module
  std::uint64_t irr_bound = 512;    // largest group handed to irr_small_pgroup
};

class FiniteGroup;
class GroupAction;
using GroupPtr = std::shared_ptr<const FiniteGroup>;
using ActionPtr = std::shared_ptr<const GroupAction>;

/// A right action of `top` on `base` by automorphisms.
class GroupAction {
 public:
  using Rule = std::function<void(std::span<const std::uint32_t> base_elem,
                                  std::span<const std::uint32_t> top_elem,
                                  std::span<std::uint32_t> out)>;

  GroupAction(GroupPtr top, GroupPtr base, Rule rule, json descriptor);

  const GroupPtr& acting_group() const { return top_; }
  const GroupPtr& module() const { return base_; }
  const json& descriptor() const { return descriptor_; }

  /// tau^sigma.
  Element apply(const Element& tau, const Element& sigma) const;
  void apply_into(std::span<const std::uint32_t> tau, std::span<const std::uint32_t> sigma,
                  std::span<std::uint32_t> out) const {
    rule_(tau, sigma, out);
  }

 private:
  GroupPtr top_;
  GroupPtr base_;
  Rule rule_;
  json descriptor_;
};

ActionPtr trivial_action(GroupPtr top, GroupPtr base);

/// `base` is a direct power H^blocks.  perm(sigma, out) writes the block
/// permutation of sigma: block i of tau is moved to block out[i] of tau^sigma.
using BlockPermutation =
    std::function<void(std::span<const std::uint32_t> sigma, std::span<std::uint32_t> out)>;
ActionPtr block_permutation_action(GroupPtr top, GroupPtr base, std::size_t blocks,
                                   BlockPermutation perm, json descriptor);

/// Checks the action axioms on `samples` random triples (exhaustively when
/// both groups are tiny).  Throws InvalidAction with the failing triple.
void validate_action(const GroupAction& action, std::size_t samples = 64,
                     std::uint64_t seed = 0x5eed);

class FiniteGroup {
 public:
  struct Cyclic {
    std::uint32_t n;
  };
  struct Product {
    std::vector<GroupPtr> factors;
  };
  struct Semidirect {
    GroupPtr top;
    GroupPtr base;
    ActionPtr action;
  };
  using Shape = std::variant<Cyclic, Product, Semidirect>;

  const Shape& shape() const { return shape_; }
  const json& descriptor() const { return descriptor_; }

  std::size_t slot_count() const { return radixes_.size(); }
  std::span<const std::uint32_t> radixes() const { return radixes_; }
  const BigInt& order() const { return order_; }
  /// Order as a machine integer; throws EnumerationBoundExceeded above `bound`.
  std::uint64_t order_within(std::uint64_t bound) const;
  bool enumerable(std::uint64_t bound) const { return order_ <= bound; }

  Element identity() const { return Element(std::vector<std::uint32_t>(slot_count(), 0)); }
  bool is_identity(const Element& x) const;
  /// True iff x has the right length and every slot is below its radix.
  bool is_valid(const Element& x) const;

  Element mul(const Element& a, const Element& b) const;
  Element inverse(const Element& a) const;
  Element pow(const Element& a, std::int64_t k) const;
  /// g^-1 x g.
  Element conjugate(const Element& x, const Element& g) const;
  std::uint64_t element_order(const Element& x) const;

  /// Exponent of the group.  Exact when |G| <= 2e5, otherwise the product of
  /// the exponents of the shape's components (a multiple of the exponent).
  std::uint64_t exponent() const;
  bool exponent_is_exact() const { return order_ <= kExactExponentBound; }

  const std::vector<Element>& generators() const { return generators_; }

  /// Position of x in lexicographic code order; needs |G| < 2^64.
  std::uint64_t rank(const Element& x) const;
  Element unrank(std::uint64_t r) const;
  Element random_element(std::mt19937_64& rng) const;

  /// Raw kernels on codes; out must not alias the inputs.
  void mul_into(const std::uint32_t* a, const std::uint32_t* b, std::uint32_t* out) const;
  void inverse_into(const std::uint32_t* a, std::uint32_t* out) const;

  static constexpr std::uint64_t kExactExponentBound = 200000;

 private:
  FiniteGroup(Shape shape, json descriptor);

  friend GroupPtr cyclic_group(std::uint32_t n);
  friend GroupPtr direct_product(std::vector<GroupPtr> factors, json descriptor);
  friend GroupPtr semidirect_group(ActionPtr action, json descriptor);

  Shape shape_;
  json descriptor_;
  std::vector<std::uint32_t> radixes_;
  std::vector<std::size_t> offsets_;  // Product: slot offset of each factor
  BigInt order_;
  std::vector<Element> generators_;
  mutable std::once_flag exponent_once_;
  mutable std::uint64_t exponent_ = 0;
};

GroupPtr cyclic_group(std::uint32_t n);
/// Componentwise product of the factors.  An empty descriptor gets the default one.
GroupPtr direct_product(std::vector<GroupPtr> factors, json descriptor = nullptr);
GroupPtr direct_product(GroupPtr g, GroupPtr h);
GroupPtr direct_power(GroupPtr h, std::size_t m);
GroupPtr semidirect_group(ActionPtr action, json descriptor = nullptr);

bool is_prime(std::uint64_t n);
/// p^e, throwing ConstraintViolation when it does not fit in 32 bits.
std::uint32_t checked_power(std::uint32_t p, std::uint32_t e);

}  // namespace charprod
