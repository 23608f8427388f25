#pragma once

#include "lapctrl/eigen_group.hpp"
#include "lapctrl/graph.hpp"
#include "lapctrl/int_matrix.hpp"

#include <map>
#include <string>
#include <vector>

namespace lapctrl::threshold {

/// Binary construction word of a threshold graph: bit i says whether node i
/// was attached by union (0) or join (1). The first bit is always 0.
struct ConstructionSequence {
    std::vector<int> bits;  // bits[k] belongs to node k+1

    int size() const { return static_cast<int>(bits.size()); }
    int bit(int node) const { return bits[static_cast<std::size_t>(node) - 1]; }
};

/// Nodes partitioned by degree, cells ordered by ascending degree.
struct DegreeCells {
    std::vector<std::vector<int>> cells;  // each cell lists nodes ascending

    int count() const { return static_cast<int>(cells.size()); }
};

struct EigenBlock {
    int eigenvalue = 0;
    int first_col = 0;  // 0-based column index into the modal matrix
    int count = 0;
};

/// Sorted integer spectrum with a paired modal matrix whose j-th column is an
/// eigenvector for eigenvalues[j]; blocks mark the column span of each
/// distinct eigenvalue.
struct EigenStructure {
    std::vector<int> eigenvalues;  // nondecreasing, size n
    IntMatrix modal;               // n x n
    std::vector<EigenBlock> blocks;
};

struct ControlSelection {
    std::vector<int> excluded;  // one node per cell, in cell order
    std::vector<int> controls;  // ascending node labels
    IntMatrix input;            // n x |controls|, standard basis columns
    std::string warning;        // set only for the trivial single-node case
};

/// Accepts '0'/'1' characters with arbitrary whitespace.
/// Throws empty_input, illegal_character, or first_bit_not_zero.
ConstructionSequence parse_sequence(const std::string& text);
std::string to_string(const ConstructionSequence& seq);

/// Replays the word: bit 0 unions an isolated node, bit 1 joins a dominating
/// node; the node attached at step i is labeled i.
Graph build_graph(const ConstructionSequence& seq);

/// Closed-form degrees, O(n): d(i) = bit(i)*(i-1) + |{j > i : bit(j) = 1}|.
std::vector<int> degrees_from_sequence(const ConstructionSequence& seq);

DegreeCells degree_cells(const ConstructionSequence& seq);

/// Laplacian eigenvalues of a threshold graph are the conjugate (Ferrers
/// transpose) of its degree sequence: lambda_{n-i+1} = |{j : d(j) >= i}|.
std::vector<int> spectrum_conjugate(const DegreeSequence& deg);

/// Distinct nonzero eigenvalues with multiplicities, straight from the
/// distinct degrees: with s distinct degrees and l = floor(s/2), eigenvalue i
/// is d_i for i <= l and d_i + 1 above, and the degree multiplicity drops by
/// one at i = l (s even) or i = l+1 (s odd). Connected graphs only.
std::vector<std::pair<int, int>> spectrum_distinct(const ConstructionSequence& seq);

/// Modal matrix paired with the sorted spectrum. Column 1 is all-ones; the
/// rest are the step vectors c(i) = (1,...,1, -i, 0,...,0), placed left to
/// right for union bits and right to left for join bits while scanning the
/// word from its last bit down.
EigenStructure modal_matrix(const ConstructionSequence& seq);

std::vector<EigenGroup> eigen_groups(const EigenStructure& e);

/// Control nodes: everything except one representative per degree cell.
/// `choice` may override the default (highest-indexed) representative for any
/// cell, keyed by 1-based cell index in ascending-degree order.
ControlSelection select_controls(const ConstructionSequence& seq,
                                 const std::map<int, int>& choice = {});

}  // namespace lapctrl::threshold
