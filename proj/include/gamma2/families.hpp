#pragma once

#include <vector>

#include "gamma2/graph.hpp"

namespace g2 {

/// Cayley graph data for a finite abelian group Z_{m1} x ... x Z_{mk}.
/// Elements are tuples mod the orders; the dense vertex index is the
/// mixed-radix value of the tuple, so e.g. (Z_2)^n with unit generators
/// reproduces the hypercube's bitmask labels exactly.
struct AbelianCayleySpec {
    std::vector<int> orders;                 // m1, ..., mk, each >= 2
    std::vector<std::vector<int>> generators; // tuples mod orders, identity excluded

    /// Adds missing inverses and removes duplicates; throws on identity.
    void symmetrize();
};

/// Cayley graph data for a permutation group on {0..n-1}. Generators are
/// one-line permutations; the set is closed under inverse after symmetrize().
struct PermCayleySpec {
    int symbols = 0;
    std::vector<std::vector<int>> generators;

    void symmetrize();
};

// Exact finite families (no interior marking).
Graph hypercube(int n);
Graph complete(int n);
Graph cycle(int n);
Graph slice(int n, int k);
Graph middle_slice_adjacent(int n);
Graph dyck(int n);
Graph sn_special(int n);          // S_n with {(12), (12...n)^{+-1}}, left action
Graph sn_transpositions(int n);   // S_n with all transpositions

// Truncated models of infinite graphs; these mark interior vertices.
Graph path(int n);
Graph tree(int d, int depth);

/// Cayley graph of the abelian spec; |S|-regular on prod(orders) vertices.
/// Throws InputError naming the reached component size if S does not generate.
Graph abelian_cayley(const AbelianCayleySpec& spec);

/// Left Cayley graph of a permutation spec; vertices indexed in BFS discovery
/// order from the identity with generators tried in sorted one-line order.
/// Throws InputError naming the reached size if S does not generate S_n.
Graph perm_cayley(const PermCayleySpec& spec);

/// Same, also returning the vertex -> one-line-permutation label map.
struct LabeledCayley {
    Graph graph;
    std::vector<std::vector<int>> labels;
};
LabeledCayley perm_cayley_labeled(const PermCayleySpec& spec);
LabeledCayley sn_special_labeled(int n);

} // namespace g2
