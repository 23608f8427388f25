#pragma once

#include "lapctrl/eigen_group.hpp"
#include "lapctrl/graph.hpp"
#include "lapctrl/int_matrix.hpp"

#include <optional>
#include <vector>

namespace lapctrl::oracle {

/// Outcome of a controllability test. A negative verdict always carries an
/// exact certificate: a nonzero integer vector v with v^T L = lambda v^T and
/// v^T B = 0.
struct Verdict {
    bool controllable = false;
    int witness_lambda = 0;        // meaningful iff !controllable
    std::vector<BigInt> witness;   // empty iff controllable
};

/// Rank over the rationals via fraction-free (Bareiss) elimination.
int rank_exact(const IntMatrix& m);

/// Some nonzero integer solution of m*x = 0, reduced by gcd with the first
/// nonzero entry positive; nullopt when the kernel is trivial.
std::optional<std::vector<BigInt>> kernel_vector(const IntMatrix& m);

/// Eigenvalue form of the PBH test for x' = -L x + B u: controllable iff
/// [L - lambda*I | B] has full row rank at every eigenvalue lambda of L.
/// `eigenvalues` must cover the whole spectrum; this is validated by summing
/// kernel dimensions of L - lambda*I to n (throws spectrum_incomplete).
Verdict pbh_controllable(const IntMatrix& L, const IntMatrix& B,
                         const std::vector<int>& eigenvalues);

/// Eigenvector form: controllable iff rank(basis^T B) equals the multiplicity
/// for every eigenvalue group. The groups must exactly span each eigenspace;
/// the eigen-relation, column independence, and total dimension are verified
/// first (throws basis_invalid).
Verdict eigvec_test(const IntMatrix& L, const std::vector<EigenGroup>& groups,
                    const IntMatrix& B);

/// Classical rank test: rank [B, AB, ..., A^{n-1}B] = n with A = -L.
bool kalman_controllable(const IntMatrix& L, const IntMatrix& B);

struct MinControls {
    int size = 0;
    std::vector<int> nodes;  // lexicographically first witness subset
};

/// Smallest m <= limit such that some m-subset S of nodes makes
/// (L, [e_j : j in S]) controllable; subsets are scanned in lexicographic
/// order. nullopt if no subset of size <= limit works.
/// Guarded to n <= 12 (throws too_large).
std::optional<MinControls> min_controls_bruteforce(const Graph& g, int limit);

}  // namespace lapctrl::oracle
