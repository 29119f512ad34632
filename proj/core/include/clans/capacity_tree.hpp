#pragma once

#include <string>
#include <vector>

#include "clans/permutation.hpp"
#include "clans/poly.hpp"

namespace clans {

enum class Matching : uint8_t { Inner, Outer };  // "()" vs ")(" pairing

/// Rooted tree derived from the parenthesis word of a lattice path; leaves
/// correspond to adjacent matched pairs (turns of the path) and carry the
/// diagonal distance from that turn to a comparison path as capacity.
struct CapacityTree {
  struct Node {
    int parent = -1;
    std::vector<int> kids;
    int corner_step = 0;       // 1-based incoming step of the turn; 0 if none
    long long capacity = -1;   // set on leaves only
  };
  std::vector<Node> nodes;  // nodes[0] is the root

  int add_node(int parent);
  std::vector<int> leaves() const;
};

/// Tree of the reference path's word under the given matching, with leaf
/// capacities measured against the comparison path.  Matching::Inner pairs
/// "()" and reads Up->Right turns; Matching::Outer pairs ")(" and reads
/// Right->Up turns.  Throws when a capacity does not exist (the comparison
/// path is on the wrong side).
CapacityTree build_capacity_tree(const LatticePath& reference, Matching mode,
                                 const LatticePath& comparison);

/// Structure-only variant, capacities all zero (useful for inspection).
CapacityTree build_capacity_tree(const LatticePath& reference, Matching mode);

/// Generating polynomial of edge labellings: labels weakly increase from the
/// root, and the edge into each leaf is bounded by the leaf capacity.
QPoly count_labellings(const CapacityTree& t);

/// Kazhdan-Lusztig polynomial P_{x,w} for cograssmannian w via the
/// labelling count.  Requires x below w; the result agrees with the
/// canonical-basis recursion.
QPoly ls_kl(const Permutation& x, const Permutation& w);

}  // namespace clans
