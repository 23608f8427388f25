#pragma once

#include "lapctrl/eigen_group.hpp"
#include "lapctrl/graph.hpp"
#include "lapctrl/int_matrix.hpp"

#include <string>
#include <vector>

namespace lapctrl::cograph {

/// Rooted cotree: leaves are graph nodes, internal nodes (>= 2 children) are
/// union or join operations. Leaves are numbered 1..n left to right.
struct Cotree {
    enum class Op { Union, Join };

    bool leaf = false;
    Op op = Op::Union;            // meaningful for internal nodes
    std::vector<Cotree> children; // empty for leaves
    int leaf_index = 0;           // 1..n, leaves only

    int leaf_count() const;
};

/// Grammar: EXPR := "x" | "(" OP EXPR EXPR+ ")", OP := "J" | "U".
/// Tokens are parens and whitespace-separated atoms.
/// Throws syntax_error or arity_error with a character position.
Cotree parse_cotree(const std::string& text);
std::string to_string(const Cotree& t);

/// Folds children left to right with graph_union / graph_join; leaf i becomes
/// graph node i.
Graph cotree_to_graph(const Cotree& t);

/// Full eigenstructure, grouped by eigenvalue.
struct CographEigen {
    int n = 0;
    std::vector<EigenGroup> groups;  // ascending eigenvalue, basis widths sum to n
};

/// Bottom-up eigenpair computation over the cotree. Each subtree yields
/// (0, all-ones) plus, per combine step, the children's eigenpairs lifted by
/// zero padding (union keeps eigenvalues, join shifts them by the opposite
/// child's size) and one new vector (n2*1, -n1*1) with eigenvalue 0 or n1+n2.
/// Equal eigenvalues from different subtrees merge into a single group;
/// within a group, columns are ordered by descending last-nonzero row
/// (ties keep recursion order), which keeps the all-ones column first.
CographEigen eigen_decomposition(const Cotree& t);

int max_multiplicity(const CographEigen& e);

struct MinimalInput {
    IntMatrix matrix;  // n x M, M = max eigenvalue multiplicity
    // column_sources[j] = eigenvalues of the groups whose j-th basis column
    // was summed into output column j (groups narrower than j+1 contribute a
    // zero padding column).
    std::vector<std::vector<int>> column_sources;
};

/// Input matrix with the fewest columns that renders the network
/// controllable: every eigenbasis is padded with zero columns to the maximum
/// multiplicity, then the padded bases are summed column-wise.
/// Requires a connected cograph (single leaf, or join at the root).
MinimalInput minimal_input_matrix(const Cotree& t);

}  // namespace lapctrl::cograph
