#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace charprod {

/// A group element as a mixed-radix code.  The owning group fixes the radix
/// of every slot; codes are canonical, so equal elements have equal codes.
/// Lexicographic order on codes is the group's enumeration order.
struct Element {
  std::vector<std::uint32_t> code;

  Element() = default;
  explicit Element(std::vector<std::uint32_t> c) : code(std::move(c)) {}

  friend bool operator==(const Element&, const Element&) = default;
  friend std::strong_ordering operator<=>(const Element& a, const Element& b) {
    return a.code <=> b.code;
  }

  std::string to_string() const;
};

struct ElementHash {
  std::size_t operator()(const Element& e) const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    for (std::uint32_t v : e.code) {
      h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

inline std::string Element::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < code.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(code[i]);
  }
  return s + ")";
}

}  // namespace charprod
