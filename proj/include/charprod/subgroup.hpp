#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "charprod/group.hpp"

namespace charprod {

struct ConjugacyClass {
  Element representative;  // least code in the class
  std::uint64_t size = 0;
};

/// Conjugacy classes of an enumerable group, ordered by representative.
class ClassTable {
 public:
  ClassTable(std::vector<ConjugacyClass> classes,
             std::unordered_map<Element, std::uint32_t, ElementHash> index);

  std::size_t size() const { return classes_.size(); }
  const ConjugacyClass& operator[](std::size_t i) const { return classes_[i]; }
  const std::vector<ConjugacyClass>& classes() const { return classes_; }
  auto begin() const { return classes_.begin(); }
  auto end() const { return classes_.end(); }

  std::optional<std::uint32_t> find(const Element& x) const;
  /// Class index of x; throws GroupMismatch when x is not in the group.
  std::uint32_t index_of(const Element& x) const;

 private:
  std::vector<ConjugacyClass> classes_;
  std::unordered_map<Element, std::uint32_t, ElementHash> index_;
};

/// A subgroup of a concrete group, possibly the whole group.  Membership is
/// always available; the element list and class table are computed on first
/// use when the order is within the enumeration bound.  Copies share state.
class Subgroup {
 public:
  using Predicate = std::function<bool(const Element&)>;

  Subgroup() = default;

  static Subgroup whole(GroupPtr g);
  /// `elements` must be closed under multiplication; `gens` must generate it.
  static Subgroup from_elements(GroupPtr g, std::vector<Element> elements,
                                std::vector<Element> gens, std::string label = {});
  /// A subgroup known only through a membership test, its order and generators.
  static Subgroup from_predicate(GroupPtr g, Predicate contains, BigInt order,
                                 std::vector<Element> gens, std::string label = {});

  bool valid() const { return impl_ != nullptr; }
  const GroupPtr& parent() const;
  const FiniteGroup& group() const { return *parent(); }
  const BigInt& order() const;
  bool is_whole() const;
  bool enumerable(const Limits& limits = {}) const { return order() <= limits.max_enum; }
  const std::string& label() const;
  const std::vector<Element>& generators() const&;
  std::vector<Element> generators() && { return static_cast<const Subgroup&>(*this).generators(); }

  bool contains(const Element& x) const;
  bool is_abelian() const;

  /// Sorted element list.  Throws EnumerationBoundExceeded when too large.
  const std::vector<Element>& elements(const Limits& limits = {}) const&;
  // Temporaries hand out a copy so range-for over them stays valid.
  std::vector<Element> elements(const Limits& limits = {}) && {
    return static_cast<const Subgroup&>(*this).elements(limits);
  }
  const ClassTable& classes(const Limits& limits = {}) const;

  /// Same underlying object, or the same set of elements of the same group.
  bool same_as(const Subgroup& other) const;
  /// Same parent group and every generator of *this lies in `other`.
  bool is_subgroup_of(const Subgroup& other) const;

  json descriptor() const;

 private:
  struct Impl;
  std::shared_ptr<const Impl> impl_;
};

BigInt index_of(const Subgroup& group, const Subgroup& sub);

/// Closure of `gens` inside G.
Subgroup subgroup_generated(GroupPtr g, const std::vector<Element>& gens, const Limits& limits = {},
                            std::string label = {});
Subgroup subgroup_generated(const Subgroup& within, const std::vector<Element>& gens,
                            const Limits& limits = {}, std::string label = {});

std::vector<ConjugacyClass> conjugacy_classes(GroupPtr g, const Limits& limits = {});

/// Right cosets H x of `sub` in `group`, with the right action Hx . g = Hxg.
/// Point 0 is the coset H itself.
class CosetAction {
 public:
  CosetAction() = default;
  CosetAction(Subgroup group, Subgroup sub, const Limits& limits);

  const Subgroup& group() const { return data_->group; }
  const Subgroup& subgroup() const { return data_->sub; }
  std::size_t degree() const { return data_->reps.size(); }
  /// A right transversal; representatives()[i] lies in coset i and [0] is the identity.
  const std::vector<Element>& representatives() const { return data_->reps; }

  std::uint32_t coset_of(const Element& x) const;
  std::uint32_t act(std::uint32_t point, const Element& g) const;
  std::vector<std::uint32_t> permutation(const Element& g) const;
  /// {g in group : point . g = point}, by enumeration.
  std::vector<Element> point_stabilizer(std::uint32_t point = 0) const;

 private:
  struct Data {
    Subgroup group;
    Subgroup sub;
    std::vector<Element> reps;
    std::unordered_map<Element, std::uint32_t, ElementHash> coset;
  };
  std::shared_ptr<const Data> data_;
};

/// Right transversal of `sub` in `group`, identity first.  No rank bound.
std::vector<Element> right_transversal(const Subgroup& group, const Subgroup& sub,
                                       const Limits& limits = {});

/// Permutation action on right cosets; requires [P:Q] <= limits.rank_bound.
CosetAction coset_action(const Subgroup& group, const Subgroup& sub, const Limits& limits = {});

/// D(G) = {(g,g)} inside G x G, together with the isomorphism g -> (g,g).
struct DiagonalEmbedding {
  GroupPtr base;
  GroupPtr product;
  Subgroup diagonal;

  Element embed(const Element& g) const;
  Element project(const Element& pair) const;
};

DiagonalEmbedding diagonal_subgroup(GroupPtr g, const Limits& limits = {});

}  // namespace charprod
