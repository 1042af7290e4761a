#pragma once

// Tamari order on plane forests.
//
// `upset` follows the append-a-letter process: for every tree B+(F') above
// T = B+(F) in the rotation order, the root keeps its first i subtrees
// (0 <= i <= r(F')) and releases the others as new roots. Forests are handled
// multiplicatively. `lattice_upset` is the left-child/right-sibling rotation
// order; both have the same trees above a given tree.

#include <set>
#include <vector>

#include "nck/combinat.hpp"

namespace nck {

std::set<Forest> upset(const Forest& f);
std::set<Forest> lattice_upset(const Forest& f);

// F <= G iff G is in upset(F). Throws on mismatched sizes.
bool leq(const Forest& f, const Forest& g);
std::set<Forest> downset(const Forest& f);

// Cover moves on trees: at a node that is neither root nor leaf, cut off its
// leftmost subtree and graft it back just left of that node.
std::vector<Forest> tree_covers(const Forest& tree);
// Reflexive-transitive closure of tree_covers.
std::set<Forest> tree_closure(const Forest& tree);

// A linear extension of the relation G in upset(F) on forests with n nodes.
// Throws std::logic_error if the relation has a cycle.
std::vector<Forest> tamari_linear_order(int n);

}  // namespace nck
