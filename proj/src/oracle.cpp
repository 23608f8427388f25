#include "lapctrl/oracle.hpp"

#include "lapctrl/errors.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace lapctrl::oracle {

namespace {

struct Echelon {
    IntMatrix m;
    std::vector<std::pair<int, int>> pivots;  // (row, col), increasing in both
};

// Fraction-free row reduction. Every update is the 2x2-determinant step
// divided by the previous pivot; with row swaps and skipped zero columns the
// divisions stay exact (entries remain minors of the input).
Echelon echelon_form(IntMatrix a) {
    const int R = a.rows(), C = a.cols();
    std::vector<std::pair<int, int>> pivots;
    BigInt prev = 1;
    int r = 0;
    for (int c = 0; c < C && r < R; ++c) {
        int p = -1;
        for (int i = r; i < R; ++i)
            if (a(i, c) != 0) {
                p = i;
                break;
            }
        if (p < 0) continue;
        a.swap_rows(p, r);
        for (int i = r + 1; i < R; ++i) {
            for (int j = c + 1; j < C; ++j) {
                BigInt num = a(r, c) * a(i, j) - a(i, c) * a(r, j);
                BigInt q, rem;
                boost::multiprecision::divide_qr(num, prev, q, rem);
                if (rem != 0) throw std::logic_error("fraction-free elimination lost exactness");
                a(i, j) = std::move(q);
            }
            a(i, c) = 0;
        }
        prev = a(r, c);
        pivots.emplace_back(r, c);
        ++r;
    }
    return {std::move(a), std::move(pivots)};
}

void reduce_and_orient(std::vector<BigInt>& v) {
    BigInt g = 0;
    for (const BigInt& x : v) g = boost::multiprecision::gcd(g, x);
    if (g == 0) return;
    for (BigInt& x : v) x /= g;
    for (const BigInt& x : v) {
        if (x == 0) continue;
        if (x < 0)
            for (BigInt& y : v) y = -y;
        break;
    }
}

IntMatrix shift_diagonal(const IntMatrix& m, int lambda) {
    IntMatrix out = m;
    for (int i = 0; i < out.rows(); ++i) out(i, i) -= lambda;
    return out;
}

}  // namespace

int rank_exact(const IntMatrix& m) {
    return static_cast<int>(echelon_form(m).pivots.size());
}

std::optional<std::vector<BigInt>> kernel_vector(const IntMatrix& m) {
    const int C = m.cols();
    Echelon e = echelon_form(m);
    const int rank = static_cast<int>(e.pivots.size());
    if (rank == C) return std::nullopt;

    std::vector<bool> is_pivot(static_cast<std::size_t>(C), false);
    for (const auto& [pr, pc] : e.pivots) is_pivot[static_cast<std::size_t>(pc)] = true;
    int free_col = 0;
    while (is_pivot[static_cast<std::size_t>(free_col)]) ++free_col;

    // Back-substitute over the rationals with the first free column set to 1,
    // then clear denominators.
    std::vector<BigRat> x(static_cast<std::size_t>(C), BigRat(0));
    x[static_cast<std::size_t>(free_col)] = 1;
    for (int k = rank - 1; k >= 0; --k) {
        const auto& [pr, pc] = e.pivots[static_cast<std::size_t>(k)];
        BigRat acc = 0;
        for (int j = pc + 1; j < C; ++j)
            if (x[static_cast<std::size_t>(j)] != 0) acc += BigRat(e.m(pr, j)) * x[static_cast<std::size_t>(j)];
        x[static_cast<std::size_t>(pc)] = -acc / BigRat(e.m(pr, pc));
    }

    BigInt scale = 1;
    for (const BigRat& v : x) scale = boost::multiprecision::lcm(scale, BigInt(denominator(v)));
    std::vector<BigInt> out(static_cast<std::size_t>(C));
    for (int j = 0; j < C; ++j) {
        const BigRat& v = x[static_cast<std::size_t>(j)];
        out[static_cast<std::size_t>(j)] = BigInt(numerator(v)) * (scale / BigInt(denominator(v)));
    }
    reduce_and_orient(out);
    return out;
}

Verdict pbh_controllable(const IntMatrix& L, const IntMatrix& B,
                         const std::vector<int>& eigenvalues) {
    const int n = L.rows();
    if (L.cols() != n) throw std::invalid_argument("L must be square");
    if (B.rows() != n) throw std::invalid_argument("B row count must match L");

    std::vector<int> lambdas = eigenvalues;
    std::sort(lambdas.begin(), lambdas.end());
    lambdas.erase(std::unique(lambdas.begin(), lambdas.end()), lambdas.end());

    // The supplied values must account for the whole spectrum: kernel
    // dimensions of L - lambda*I have to sum to n.
    int total = 0;
    for (int lambda : lambdas) total += n - rank_exact(shift_diagonal(L, lambda));
    if (total != n)
        throw spectrum_incomplete("supplied eigenvalues span " + std::to_string(total) +
                                  " of " + std::to_string(n) + " dimensions");

    for (int lambda : lambdas) {
        IntMatrix pencil = hcat(shift_diagonal(L, lambda), B);
        if (auto w = kernel_vector(pencil.transposed())) {
            return Verdict{false, lambda, std::move(*w)};
        }
    }
    return Verdict{true, 0, {}};
}

Verdict eigvec_test(const IntMatrix& L, const std::vector<EigenGroup>& groups,
                    const IntMatrix& B) {
    const int n = L.rows();
    if (L.cols() != n) throw std::invalid_argument("L must be square");
    if (B.rows() != n) throw std::invalid_argument("B row count must match L");

    int total_cols = 0;
    for (const EigenGroup& g : groups) {
        if (g.basis.rows() != n) throw basis_invalid("basis row count must match L");
        total_cols += g.basis.cols();
        IntMatrix lhs = L * g.basis;
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < g.basis.cols(); ++c)
                if (lhs(r, c) != BigInt(g.eigenvalue) * g.basis(r, c))
                    throw basis_invalid("eigen-relation fails for eigenvalue " +
                                        std::to_string(g.eigenvalue));
        if (rank_exact(g.basis) != g.basis.cols())
            throw basis_invalid("dependent basis columns for eigenvalue " +
                                std::to_string(g.eigenvalue));
    }
    if (total_cols != n) throw basis_invalid("eigenbases span " + std::to_string(total_cols) +
                                             " of " + std::to_string(n) + " dimensions");

    for (const EigenGroup& g : groups) {
        IntMatrix w = g.basis.transposed() * B;  // q x m
        if (auto coeff = kernel_vector(w.transposed())) {
            std::vector<BigInt> witness = g.basis.apply(*coeff);
            reduce_and_orient(witness);
            return Verdict{false, g.eigenvalue, std::move(witness)};
        }
    }
    return Verdict{true, 0, {}};
}

bool kalman_controllable(const IntMatrix& L, const IntMatrix& B) {
    const int n = L.rows();
    if (L.cols() != n) throw std::invalid_argument("L must be square");
    if (B.rows() != n) throw std::invalid_argument("B row count must match L");
    IntMatrix a(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a(i, j) = -L(i, j);
    IntMatrix block = B;
    IntMatrix ctrb = B;
    for (int k = 1; k < n; ++k) {
        block = a * block;
        ctrb = hcat(ctrb, block);
    }
    return rank_exact(ctrb) == n;
}

std::optional<MinControls> min_controls_bruteforce(const Graph& g, int limit) {
    const int n = g.node_count();
    if (n > 12) throw too_large("brute-force search is guarded to n <= 12, got n = " +
                                std::to_string(n));
    const IntMatrix L = laplacian(g);

    // Powers of A = -L computed once; the Kalman matrix of a node subset is
    // just the matching columns of each power.
    IntMatrix a(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a(i, j) = -L(i, j);
    std::vector<IntMatrix> powers{IntMatrix::identity(n)};
    for (int k = 1; k < n; ++k) powers.push_back(a * powers.back());

    const int max_size = std::min(limit, n);
    for (int m = 1; m <= max_size; ++m) {
        std::vector<int> subset(static_cast<std::size_t>(m));
        std::iota(subset.begin(), subset.end(), 1);
        while (true) {
            IntMatrix ctrb(n, m * n);
            for (int k = 0; k < n; ++k)
                for (int j = 0; j < m; ++j) {
                    const int node = subset[static_cast<std::size_t>(j)];
                    for (int r = 0; r < n; ++r)
                        ctrb(r, k * m + j) = powers[static_cast<std::size_t>(k)](r, node - 1);
                }
            if (rank_exact(ctrb) == n) return MinControls{m, subset};

            // next lexicographic m-combination of 1..n
            int i = m - 1;
            while (i >= 0 && subset[static_cast<std::size_t>(i)] == n - m + 1 + i) --i;
            if (i < 0) break;
            ++subset[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < m; ++j)
                subset[static_cast<std::size_t>(j)] = subset[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
    return std::nullopt;
}

}  // namespace lapctrl::oracle
