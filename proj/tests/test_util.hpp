// Shared helpers for the test suites: independent verification oracles and
// deterministic instance generators. Everything here stays independent of the
// code paths it is used to check (spectra are verified through kernel
// dimensions, connectivity through union-find, and so on).
#pragma once

#include "lapctrl/cotree.hpp"
#include "lapctrl/graph.hpp"
#include "lapctrl/int_matrix.hpp"
#include "lapctrl/oracle.hpp"
#include "lapctrl/threshold.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <string>
#include <vector>

namespace testutil {

using lapctrl::BigInt;
using lapctrl::Graph;
using lapctrl::IntMatrix;

// Exact spectral check: the claimed eigenvalue multiset matches L iff the
// kernel dimension of L - lambda*I equals each claimed multiplicity and the
// multiplicities sum to n (L is symmetric, so geometric = algebraic).
inline bool spectrum_matches(const IntMatrix& L, const std::vector<int>& eigenvalues) {
    const int n = L.rows();
    if (static_cast<int>(eigenvalues.size()) != n) return false;
    std::map<int, int> mult;
    for (int lambda : eigenvalues) ++mult[lambda];
    int total = 0;
    for (const auto& [lambda, q] : mult) {
        IntMatrix shifted = L;
        for (int i = 0; i < n; ++i) shifted(i, i) -= lambda;
        const int kernel_dim = n - lapctrl::oracle::rank_exact(shifted);
        if (kernel_dim != q) return false;
        total += q;
    }
    return total == n;
}

inline bool eigen_relation_holds(const IntMatrix& L, const IntMatrix& V,
                                 const std::vector<int>& eigenvalues) {
    return L * V == V * IntMatrix::diagonal(eigenvalues);
}

inline bool columns_pairwise_orthogonal(const IntMatrix& V) {
    const IntMatrix gram = V.transposed() * V;
    for (int i = 0; i < gram.rows(); ++i)
        for (int j = 0; j < gram.cols(); ++j)
            if (i != j && gram(i, j) != 0) return false;
    return true;
}

// Independent connectivity check (union-find rather than traversal).
inline bool connected_by_union_find(const Graph& g) {
    const int n = g.node_count();
    if (n <= 1) return true;
    std::vector<int> parent(static_cast<std::size_t>(n) + 1);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    };
    int components = n;
    for (const auto& [i, j] : g.edges()) {
        const int a = find(i), b = find(j);
        if (a != b) {
            parent[static_cast<std::size_t>(a)] = b;
            --components;
        }
    }
    return components == 1;
}

inline BigInt sum_of(const std::vector<int>& xs) {
    BigInt s = 0;
    for (int x : xs) s += x;
    return s;
}

// All construction sequences of length n (first bit fixed to 0).
inline std::vector<lapctrl::threshold::ConstructionSequence> all_sequences(int n) {
    std::vector<lapctrl::threshold::ConstructionSequence> out;
    const int count = 1 << (n - 1);
    for (int mask = 0; mask < count; ++mask) {
        lapctrl::threshold::ConstructionSequence seq;
        seq.bits.assign(static_cast<std::size_t>(n), 0);
        for (int i = 1; i < n; ++i) seq.bits[static_cast<std::size_t>(i)] = (mask >> (i - 1)) & 1;
        out.push_back(std::move(seq));
    }
    return out;
}

// The cotree expression equivalent to a construction sequence: each step
// wraps the previous expression with (J _ x) or (U _ x).
inline std::string caterpillar_expr(const lapctrl::threshold::ConstructionSequence& seq) {
    std::string expr = "x";
    for (int i = 2; i <= seq.size(); ++i)
        expr = std::string(seq.bit(i) ? "(J " : "(U ") + expr + " x)";
    return expr;
}

inline Graph random_graph(int n, double edge_prob, std::mt19937& rng) {
    Graph g(n);
    std::bernoulli_distribution coin(edge_prob);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (coin(rng)) g.add_edge(i, j);
    return g;
}

// Random cotree expression over n leaves; root_join forces a connected graph.
inline std::string random_cotree_expr(int n, std::mt19937& rng, bool root_join = false) {
    if (n == 1) return "x";
    std::uniform_int_distribution<int> coin(0, 1);
    const bool join = root_join || coin(rng) == 1;

    // split n leaves into 2..min(n,4) parts, each >= 1
    std::uniform_int_distribution<int> parts_dist(2, std::min(n, 4));
    const int parts = parts_dist(rng);
    std::vector<int> sizes(static_cast<std::size_t>(parts), 1);
    for (int rest = n - parts; rest > 0; --rest)
        ++sizes[static_cast<std::size_t>(
            std::uniform_int_distribution<int>(0, parts - 1)(rng))];

    std::string expr = join ? "(J" : "(U";
    for (int size : sizes) {
        expr += ' ';
        expr += random_cotree_expr(size, rng);
    }
    expr += ')';
    return expr;
}

inline IntMatrix random_binary_matrix(int rows, int cols, std::mt19937& rng) {
    IntMatrix m(rows, cols);
    std::bernoulli_distribution coin(0.5);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) m(r, c) = coin(rng) ? 1 : 0;
    return m;
}

// Every way of excluding one node per cell, as choice maps for
// select_controls (cells keyed 1-based).
inline std::vector<std::map<int, int>> all_cell_choices(
    const lapctrl::threshold::DegreeCells& cells) {
    std::vector<std::map<int, int>> out{{}};
    for (int cell = 1; cell <= cells.count(); ++cell) {
        std::vector<std::map<int, int>> next;
        for (const auto& partial : out)
            for (int node : cells.cells[static_cast<std::size_t>(cell) - 1]) {
                auto extended = partial;
                extended[cell] = node;
                next.push_back(std::move(extended));
            }
        out = std::move(next);
    }
    return out;
}

inline bool witness_checks(const IntMatrix& L, const IntMatrix& B,
                           const lapctrl::oracle::Verdict& v) {
    if (v.controllable || v.witness.empty()) return false;
    bool nonzero = false;
    for (const BigInt& x : v.witness) nonzero = nonzero || x != 0;
    if (!nonzero) return false;
    const std::vector<BigInt> vL = L.transposed().apply(v.witness);  // (v^T L)^T
    for (int i = 0; i < L.rows(); ++i)
        if (vL[static_cast<std::size_t>(i)] != BigInt(v.witness_lambda) * v.witness[static_cast<std::size_t>(i)])
            return false;
    const std::vector<BigInt> vB = B.transposed().apply(v.witness);  // (v^T B)^T
    for (const BigInt& x : vB)
        if (x != 0) return false;
    return true;
}

}  // namespace testutil
