#pragma once

#include <vector>

#include "charprod/character.hpp"

namespace charprod {

/// Irreducible characters of a small p-group, found by inducing linear
/// characters of abelian subgroups generated by at most two elements.  The
/// result is certified complete (count equals the class count and the
/// squared degrees sum to |G|) or IncompleteIrrSet is thrown.  Groups larger
/// than limits.irr_bound are rejected with EnumerationBoundExceeded.
///
/// Ordered by degree, trivial character first.
std::vector<ClassFunction> irr_small_pgroup(const Subgroup& g, const Limits& limits = {});

}  // namespace charprod
