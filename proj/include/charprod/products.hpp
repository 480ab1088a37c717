#pragma once

#include <cstdint>
#include <utility>

#include "charprod/subgroup.hpp"

namespace charprod {

/// top |x base with both factors identified with their images.
struct SemidirectProduct {
  GroupPtr group;
  GroupPtr top;
  GroupPtr base;
  Subgroup top_image;   // {sigma * 1}
  Subgroup base_image;  // {1 * tau}, normal

  Element embed_top(const Element& sigma) const;
  Element embed_base(const Element& tau) const;
  /// sigma * tau from its two components.
  Element combine(const Element& sigma, const Element& tau) const;
  /// Normal form g = sigma * tau.
  std::pair<Element, Element> split(const Element& g) const;
};

/// Builds top |x base from a right action after checking the action axioms
/// on `samples` random triples (InvalidAction on failure).
SemidirectProduct semidirect(ActionPtr action, std::size_t samples = 64, json descriptor = nullptr);

/// Z_{p^t} wr Z_{p^r}: the top cyclic group Z_{p^r} cyclically permutes the
/// p^r coordinates of N = (Z_{p^t})^{p^r}.  The top generator moves
/// coordinate i to coordinate i+1.
struct WreathProduct {
  std::uint32_t p = 0;
  std::uint32_t t = 0;
  std::uint32_t r = 0;
  GroupPtr coordinate;  // Z_{p^t}
  SemidirectProduct product;

  const GroupPtr& group() const { return product.group; }
  const Subgroup& top() const { return product.top_image; }
  const Subgroup& base() const { return product.base_image; }
  std::uint32_t copies() const;
  /// Element of N whose coordinates are `coords` (length p^r).
  Element base_element(const std::vector<std::uint32_t>& coords) const;
};

WreathProduct wreath_cyclic(std::uint32_t p, std::uint32_t t, std::uint32_t r);

}  // namespace charprod
