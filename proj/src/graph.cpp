#include "lapctrl/graph.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace lapctrl {

Graph::Graph(int n) : n_(n) {
    if (n < 0) throw std::invalid_argument("node count must be >= 0");
}

bool Graph::has_edge(int i, int j) const {
    if (i > j) std::swap(i, j);
    return edges_.count({i, j}) > 0;
}

void Graph::add_edge(int i, int j) {
    if (i < 1 || i > n_ || j < 1 || j > n_)
        throw std::out_of_range("edge endpoint outside 1.." + std::to_string(n_));
    if (i == j) throw std::invalid_argument("self-loops are not allowed");
    if (i > j) std::swap(i, j);
    edges_.insert({i, j});
}

IntMatrix laplacian(const Graph& g) {
    const int n = g.node_count();
    IntMatrix L(n, n);
    for (const auto& [i, j] : g.edges()) {
        L(i - 1, j - 1) = -1;
        L(j - 1, i - 1) = -1;
        L(i - 1, i - 1) += 1;
        L(j - 1, j - 1) += 1;
    }
    return L;
}

DegreeSequence degree_sequence(std::vector<int> degrees) {
    DegreeSequence ds;
    std::map<int, int> counts;
    for (int d : degrees) ++counts[d];
    ds.degrees = std::move(degrees);
    ds.distinct.assign(counts.begin(), counts.end());
    return ds;
}

DegreeSequence degree_sequence(const Graph& g) {
    std::vector<int> degrees(static_cast<std::size_t>(g.node_count()), 0);
    for (const auto& [i, j] : g.edges()) {
        ++degrees[static_cast<std::size_t>(i) - 1];
        ++degrees[static_cast<std::size_t>(j) - 1];
    }
    return degree_sequence(std::move(degrees));
}

bool is_connected(const Graph& g) {
    const int n = g.node_count();
    if (n <= 1) return true;
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n) + 1);
    for (const auto& [i, j] : g.edges()) {
        adj[static_cast<std::size_t>(i)].push_back(j);
        adj[static_cast<std::size_t>(j)].push_back(i);
    }
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    std::vector<int> stack{1};
    seen[1] = true;
    int reached = 1;
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (int w : adj[static_cast<std::size_t>(v)]) {
            if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = true;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    return reached == n;
}

Graph graph_union(const Graph& g1, const Graph& g2) {
    const int n1 = g1.node_count();
    Graph g(n1 + g2.node_count());
    for (const auto& [i, j] : g1.edges()) g.add_edge(i, j);
    for (const auto& [i, j] : g2.edges()) g.add_edge(i + n1, j + n1);
    return g;
}

Graph graph_join(const Graph& g1, const Graph& g2) {
    Graph g = graph_union(g1, g2);
    const int n1 = g1.node_count();
    for (int i = 1; i <= n1; ++i)
        for (int j = 1; j <= g2.node_count(); ++j) g.add_edge(i, n1 + j);
    return g;
}

Graph read_edge_list(std::istream& in) {
    int n = 0;
    if (!(in >> n)) throw std::invalid_argument("edge list must start with the node count");
    Graph g(n);
    int i = 0, j = 0;
    while (in >> i >> j) g.add_edge(i, j);
    if (!in.eof() && in.fail()) throw std::invalid_argument("bad edge line");
    return g;
}

void write_edge_list(std::ostream& out, const Graph& g) {
    out << g.node_count() << '\n';
    for (const auto& [i, j] : g.edges()) out << i << ' ' << j << '\n';
}

void write_dot(std::ostream& out, const Graph& g) {
    out << "graph G {\n";
    for (int i = 1; i <= g.node_count(); ++i) out << "  " << i << ";\n";
    for (const auto& [i, j] : g.edges()) out << "  " << i << " -- " << j << ";\n";
    out << "}\n";
}

}  // namespace lapctrl
