#include "lapctrl/cotree.hpp"

#include "lapctrl/errors.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace lapctrl::cograph {

int Cotree::leaf_count() const {
    if (leaf) return 1;
    int sum = 0;
    for (const Cotree& c : children) sum += c.leaf_count();
    return sum;
}

namespace {

struct Token {
    std::string text;
    int position;  // 1-based character offset
};

std::vector<Token> tokenize(const std::string& text) {
    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < text.size()) {
        const char ch = text[i];
        if (std::isspace(static_cast<unsigned char>(ch))) {
            ++i;
            continue;
        }
        if (ch == '(' || ch == ')') {
            tokens.push_back({std::string(1, ch), static_cast<int>(i) + 1});
            ++i;
            continue;
        }
        std::size_t start = i;
        while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])) &&
               text[i] != '(' && text[i] != ')')
            ++i;
        tokens.push_back({text.substr(start, i - start), static_cast<int>(start) + 1});
    }
    return tokens;
}

struct Parser {
    const std::vector<Token>& tokens;
    std::size_t pos = 0;
    int end_position;
    int next_leaf = 1;

    const Token& peek() {
        if (pos >= tokens.size()) throw syntax_error("unexpected end of expression", end_position);
        return tokens[pos];
    }

    Cotree parse_expr() {
        const Token tok = peek();
        ++pos;
        if (tok.text == "x") {
            Cotree leaf;
            leaf.leaf = true;
            leaf.leaf_index = next_leaf++;
            return leaf;
        }
        if (tok.text != "(")
            throw syntax_error("expected 'x' or '(', got '" + tok.text + "'", tok.position);

        const Token op = peek();
        ++pos;
        Cotree node;
        if (op.text == "J")
            node.op = Cotree::Op::Join;
        else if (op.text == "U")
            node.op = Cotree::Op::Union;
        else
            throw syntax_error("expected operator 'J' or 'U', got '" + op.text + "'", op.position);

        while (peek().text != ")") node.children.push_back(parse_expr());
        ++pos;  // consume ')'
        if (node.children.size() < 2)
            throw arity_error("operator needs at least two operands", op.position);
        return node;
    }
};

}  // namespace

Cotree parse_cotree(const std::string& text) {
    const std::vector<Token> tokens = tokenize(text);
    if (tokens.empty()) throw syntax_error("empty cotree expression", 1);
    Parser parser{tokens, 0, static_cast<int>(text.size()) + 1};
    Cotree root = parser.parse_expr();
    if (parser.pos != tokens.size())
        throw syntax_error("trailing input after expression", tokens[parser.pos].position);
    return root;
}

std::string to_string(const Cotree& t) {
    if (t.leaf) return "x";
    std::string s = t.op == Cotree::Op::Join ? "(J" : "(U";
    for (const Cotree& c : t.children) {
        s += ' ';
        s += to_string(c);
    }
    s += ')';
    return s;
}

Graph cotree_to_graph(const Cotree& t) {
    if (t.leaf) return Graph(1);
    Graph acc = cotree_to_graph(t.children.front());
    for (std::size_t i = 1; i < t.children.size(); ++i) {
        const Graph next = cotree_to_graph(t.children[i]);
        acc = t.op == Cotree::Op::Join ? graph_join(acc, next) : graph_union(acc, next);
    }
    return acc;
}

namespace {

struct EigenPair {
    int eigenvalue;
    std::vector<BigInt> vector;
};

// Eigenpairs of a subtree in recursion order; pairs[0] is always (0, ones).
struct PairList {
    int n = 0;
    std::vector<EigenPair> pairs;
};

PairList leaf_pairs() {
    return {1, {{0, {BigInt(1)}}}};
}

PairList combine(const PairList& a, const PairList& b, Cotree::Op op) {
    const int n1 = a.n, n2 = b.n, n = n1 + n2;
    const bool join = op == Cotree::Op::Join;
    PairList out;
    out.n = n;
    out.pairs.reserve(static_cast<std::size_t>(n));

    out.pairs.push_back({0, std::vector<BigInt>(static_cast<std::size_t>(n), BigInt(1))});
    for (std::size_t k = 1; k < a.pairs.size(); ++k) {
        std::vector<BigInt> v(static_cast<std::size_t>(n), BigInt(0));
        std::copy(a.pairs[k].vector.begin(), a.pairs[k].vector.end(), v.begin());
        out.pairs.push_back({a.pairs[k].eigenvalue + (join ? n2 : 0), std::move(v)});
    }
    for (std::size_t k = 1; k < b.pairs.size(); ++k) {
        std::vector<BigInt> v(static_cast<std::size_t>(n), BigInt(0));
        std::copy(b.pairs[k].vector.begin(), b.pairs[k].vector.end(),
                  v.begin() + n1);
        out.pairs.push_back({b.pairs[k].eigenvalue + (join ? n1 : 0), std::move(v)});
    }

    // The vector balancing the two halves; in the kernel for a union, at the
    // top eigenvalue n1+n2 for a join.
    std::vector<BigInt> split(static_cast<std::size_t>(n));
    for (int r = 0; r < n1; ++r) split[static_cast<std::size_t>(r)] = n2;
    for (int r = n1; r < n; ++r) split[static_cast<std::size_t>(r)] = -n1;
    out.pairs.push_back({join ? n : 0, std::move(split)});
    return out;
}

PairList decompose(const Cotree& t) {
    if (t.leaf) return leaf_pairs();
    PairList acc = decompose(t.children.front());
    for (std::size_t i = 1; i < t.children.size(); ++i)
        acc = combine(acc, decompose(t.children[i]), t.op);
    return acc;
}

int last_nonzero_row(const std::vector<BigInt>& v) {
    for (int r = static_cast<int>(v.size()) - 1; r >= 0; --r)
        if (v[static_cast<std::size_t>(r)] != 0) return r;
    return -1;
}

}  // namespace

CographEigen eigen_decomposition(const Cotree& t) {
    PairList pl = decompose(t);

    // Groups ascend by eigenvalue; within a group columns are ordered by
    // descending last-nonzero row, recursion order on ties. That keeps the
    // all-ones column first and fixes a reproducible layout when bases from
    // disjoint subtrees merge into one group.
    std::vector<int> order(pl.pairs.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
        const EigenPair& px = pl.pairs[static_cast<std::size_t>(x)];
        const EigenPair& py = pl.pairs[static_cast<std::size_t>(y)];
        if (px.eigenvalue != py.eigenvalue) return px.eigenvalue < py.eigenvalue;
        return last_nonzero_row(px.vector) > last_nonzero_row(py.vector);
    });

    CographEigen out;
    out.n = pl.n;
    for (int idx : order) {
        const EigenPair& p = pl.pairs[static_cast<std::size_t>(idx)];
        if (out.groups.empty() || out.groups.back().eigenvalue != p.eigenvalue) {
            EigenGroup g;
            g.eigenvalue = p.eigenvalue;
            g.basis = IntMatrix(pl.n, 0);
            out.groups.push_back(std::move(g));
        }
        IntMatrix col(pl.n, 1);
        col.set_column(0, p.vector);
        out.groups.back().basis = hcat(out.groups.back().basis, col);
    }
    return out;
}

int max_multiplicity(const CographEigen& e) {
    int m = 0;
    for (const EigenGroup& g : e.groups) m = std::max(m, g.basis.cols());
    return m;
}

MinimalInput minimal_input_matrix(const Cotree& t) {
    if (!t.leaf && t.op != Cotree::Op::Join)
        throw not_connected("cograph is disconnected (root is a union)");

    const CographEigen eigen = eigen_decomposition(t);
    const int m = max_multiplicity(eigen);
    MinimalInput out;
    out.matrix = IntMatrix(eigen.n, m);
    out.column_sources.resize(static_cast<std::size_t>(m));
    for (const EigenGroup& g : eigen.groups)
        for (int j = 0; j < g.basis.cols(); ++j) {
            for (int r = 0; r < eigen.n; ++r) out.matrix(r, j) += g.basis(r, j);
            out.column_sources[static_cast<std::size_t>(j)].push_back(g.eigenvalue);
        }
    return out;
}

}  // namespace lapctrl::cograph
