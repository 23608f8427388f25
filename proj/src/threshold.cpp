#include "lapctrl/threshold.hpp"

#include "lapctrl/errors.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <stdexcept>

namespace lapctrl::threshold {

ConstructionSequence parse_sequence(const std::string& text) {
    ConstructionSequence seq;
    int first_pos = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char ch = text[i];
        if (std::isspace(static_cast<unsigned char>(ch))) continue;
        if (ch != '0' && ch != '1')
            throw illegal_character(std::string("unexpected character '") + ch + "'",
                                    static_cast<int>(i) + 1);
        if (seq.bits.empty()) first_pos = static_cast<int>(i) + 1;
        seq.bits.push_back(ch - '0');
    }
    if (seq.bits.empty()) throw empty_input("construction sequence is empty");
    if (seq.bits.front() != 0)
        throw first_bit_not_zero("the first bit of a construction sequence must be 0", first_pos);
    return seq;
}

std::string to_string(const ConstructionSequence& seq) {
    std::string s;
    s.reserve(seq.bits.size());
    for (int b : seq.bits) s.push_back(static_cast<char>('0' + b));
    return s;
}

Graph build_graph(const ConstructionSequence& seq) {
    Graph g(1);
    for (int i = 2; i <= seq.size(); ++i) {
        const Graph single(1);
        g = seq.bit(i) ? graph_join(g, single) : graph_union(g, single);
    }
    return g;
}

std::vector<int> degrees_from_sequence(const ConstructionSequence& seq) {
    const int n = seq.size();
    std::vector<int> degrees(static_cast<std::size_t>(n));
    int joins_after = 0;  // |{j > i : bit(j) = 1}|, built by scanning right to left
    for (int i = n; i >= 1; --i) {
        degrees[static_cast<std::size_t>(i) - 1] = seq.bit(i) * (i - 1) + joins_after;
        joins_after += seq.bit(i);
    }
    return degrees;
}

DegreeCells degree_cells(const ConstructionSequence& seq) {
    const std::vector<int> degrees = degrees_from_sequence(seq);
    std::map<int, std::vector<int>> by_degree;
    for (int node = 1; node <= seq.size(); ++node)
        by_degree[degrees[static_cast<std::size_t>(node) - 1]].push_back(node);
    DegreeCells cells;
    for (auto& [d, nodes] : by_degree) cells.cells.push_back(std::move(nodes));
    return cells;
}

std::vector<int> spectrum_conjugate(const DegreeSequence& deg) {
    const int n = static_cast<int>(deg.degrees.size());
    std::vector<int> spectrum(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
        int count = 0;
        for (int d : deg.degrees) count += d >= i;
        spectrum[static_cast<std::size_t>(n - i)] = count;
    }
    return spectrum;
}

std::vector<std::pair<int, int>> spectrum_distinct(const ConstructionSequence& seq) {
    const int n = seq.size();
    if (n >= 2 && seq.bit(n) == 0)
        throw not_connected("threshold graph is disconnected (last bit is 0)");
    if (n == 1) return {};  // spectrum is just the zero eigenvalue

    const DegreeSequence deg = degree_sequence(degrees_from_sequence(seq));
    const int s = static_cast<int>(deg.distinct.size());
    const int l = s / 2;
    const int dropped = (s % 2 == 0) ? l : l + 1;  // multiplicity shrinks by one here

    std::vector<std::pair<int, int>> out;
    for (int i = 1; i <= s; ++i) {
        const auto& [d, p] = deg.distinct[static_cast<std::size_t>(i) - 1];
        const int lambda = (i <= l) ? d : d + 1;
        const int q = (i == dropped) ? p - 1 : p;
        if (q > 0) out.emplace_back(lambda, q);
    }
    return out;
}

namespace {

// Step vector with i leading ones, then -i, then zeros.
std::vector<BigInt> step_vector(int n, int i) {
    std::vector<BigInt> v(static_cast<std::size_t>(n), BigInt(0));
    for (int k = 0; k < i; ++k) v[static_cast<std::size_t>(k)] = 1;
    v[static_cast<std::size_t>(i)] = -i;
    return v;
}

std::vector<EigenBlock> group_blocks(const std::vector<int>& eigenvalues) {
    std::vector<EigenBlock> blocks;
    for (int j = 0; j < static_cast<int>(eigenvalues.size()); ++j) {
        if (!blocks.empty() && blocks.back().eigenvalue == eigenvalues[static_cast<std::size_t>(j)])
            ++blocks.back().count;
        else
            blocks.push_back({eigenvalues[static_cast<std::size_t>(j)], j, 1});
    }
    return blocks;
}

}  // namespace

EigenStructure modal_matrix(const ConstructionSequence& seq) {
    const int n = seq.size();
    EigenStructure out;
    out.eigenvalues = spectrum_conjugate(degree_sequence(degrees_from_sequence(seq)));
    out.modal = IntMatrix(n, n);
    for (int r = 0; r < n; ++r) out.modal(r, 0) = 1;

    // Scan the word from the end: a union bit fills the next free column from
    // the left, a join bit from the right. Either way the column is the step
    // vector of the preceding prefix.
    int left = 0, right = 0;
    for (int i = n; i >= 2; --i) {
        if (seq.bit(i) == 0) {
            ++left;
            out.modal.set_column(left, step_vector(n, i - 1));
        } else {
            out.modal.set_column(n - 1 - right, step_vector(n, i - 1));
            ++right;
        }
    }
    out.blocks = group_blocks(out.eigenvalues);
    return out;
}

std::vector<EigenGroup> eigen_groups(const EigenStructure& e) {
    std::vector<EigenGroup> groups;
    for (const EigenBlock& b : e.blocks) {
        EigenGroup g;
        g.eigenvalue = b.eigenvalue;
        g.basis = IntMatrix(e.modal.rows(), b.count);
        for (int j = 0; j < b.count; ++j)
            g.basis.set_column(j, e.modal.column(b.first_col + j));
        groups.push_back(std::move(g));
    }
    return groups;
}

ControlSelection select_controls(const ConstructionSequence& seq,
                                 const std::map<int, int>& choice) {
    const int n = seq.size();
    if (n >= 2 && seq.bit(n) == 0)
        throw not_connected("control selection requires a connected threshold graph");

    const DegreeCells cells = degree_cells(seq);
    const int s = cells.count();
    for (const auto& [cell, node] : choice) {
        if (cell < 1 || cell > s)
            throw invalid_choice("no cell " + std::to_string(cell) + " (cells are 1.." +
                                 std::to_string(s) + ")", cell);
        const auto& members = cells.cells[static_cast<std::size_t>(cell) - 1];
        if (std::find(members.begin(), members.end(), node) == members.end())
            throw invalid_choice("node " + std::to_string(node) + " is not in cell " +
                                 std::to_string(cell), cell);
    }

    ControlSelection sel;
    std::vector<bool> is_excluded(static_cast<std::size_t>(n) + 1, false);
    for (int cell = 1; cell <= s; ++cell) {
        auto it = choice.find(cell);
        const int node = (it != choice.end())
                             ? it->second
                             : cells.cells[static_cast<std::size_t>(cell) - 1].back();
        sel.excluded.push_back(node);
        is_excluded[static_cast<std::size_t>(node)] = true;
    }
    for (int node = 1; node <= n; ++node)
        if (!is_excluded[static_cast<std::size_t>(node)]) sel.controls.push_back(node);
    sel.input = standard_basis_columns(n, sel.controls);
    if (n == 1)
        sel.warning = "single-node network: every cell is excluded, no control nodes selected";
    return sel;
}

}  // namespace lapctrl::threshold
