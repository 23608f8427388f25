#pragma once

#include "lapctrl/int_matrix.hpp"

#include <iosfwd>
#include <set>
#include <utility>
#include <vector>

namespace lapctrl {

/// Simple undirected graph on nodes 1..n. Edges are stored as normalized
/// (min,max) pairs; self-loops and out-of-range endpoints are rejected.
class Graph {
public:
    explicit Graph(int n);

    int node_count() const { return n_; }
    std::size_t edge_count() const { return edges_.size(); }
    bool has_edge(int i, int j) const;
    void add_edge(int i, int j);
    const std::set<std::pair<int, int>>& edges() const { return edges_; }

    bool operator==(const Graph& other) const = default;

private:
    int n_ = 0;
    std::set<std::pair<int, int>> edges_;
};

struct DegreeSequence {
    std::vector<int> degrees;                      // degrees[k] = degree of node k+1
    std::vector<std::pair<int, int>> distinct;     // (value, multiplicity), ascending value
};

IntMatrix laplacian(const Graph& g);
DegreeSequence degree_sequence(const Graph& g);
DegreeSequence degree_sequence(std::vector<int> degrees);
bool is_connected(const Graph& g);

// Disjoint union relabels g2's nodes by +n1; join additionally connects every
// node of g1 to every node of g2. That offset fixes the leaf-order convention
// used when folding cotrees.
Graph graph_union(const Graph& g1, const Graph& g2);
Graph graph_join(const Graph& g1, const Graph& g2);

// Edge-list format: first line "n", then one "i j" pair per line (1-based).
Graph read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const Graph& g);

void write_dot(std::ostream& out, const Graph& g);

}  // namespace lapctrl
