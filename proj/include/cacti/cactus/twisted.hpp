#pragma once

#include <memory>
#include <string>
#include <vector>

namespace cacti::cactus {

// Discretized twisted associative operad: planar trees whose internal
// nodes carry a permutation and a label in Z/M. Arity-0 and arity-1
// generator labels are immaterial, and an internal edge whose endpoints
// carry the same label contracts by composing permutations.
struct TwistedTree {
    bool is_leaf = false;
    int leaf_index = 0;           // leaves numbered from 1 in planar order
    std::vector<int> perm;        // sigma in Sigma_k, one-line, over the children
    int label = 0;                // in Z/M; meaningless on arity <= 1 nodes
    std::vector<TwistedTree> children;

    friend bool operator==(const TwistedTree&, const TwistedTree&) = default;
};

TwistedTree twisted_leaf(int index);
TwistedTree twisted_node(std::vector<int> perm, int label, std::vector<TwistedTree> children);

int tree_arity(const TwistedTree& t);
bool tree_valid(const TwistedTree& t, int modulus);

// graft replacing the slot-th leaf (planar position, 1-based)
TwistedTree tree_compose(const TwistedTree& outer, int slot, const TwistedTree& inner);

// normal form: innermost-first contraction of equal-label edges, erasure of
// labels on arity <= 1 nodes (represented by label 0)
TwistedTree tree_reduce(const TwistedTree& t, int modulus);

bool tree_equal(const TwistedTree& a, const TwistedTree& b, int modulus);

// rotate all effective labels by delta (the Z/M action)
TwistedTree tree_rotate(const TwistedTree& t, int delta, int modulus);

std::string tree_str(const TwistedTree& t);

// all single contractions applicable anywhere in the tree, for the
// local-confluence sweep
std::vector<TwistedTree> one_step_reductions(const TwistedTree& t, int modulus);

}  // namespace cacti::cactus
