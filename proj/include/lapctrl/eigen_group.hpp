#pragma once

#include "lapctrl/int_matrix.hpp"

namespace lapctrl {

/// One eigenvalue together with an integer basis of its eigenspace
/// (basis columns are independent eigenvectors).
struct EigenGroup {
    int eigenvalue = 0;
    IntMatrix basis;  // n x multiplicity

    bool operator==(const EigenGroup&) const = default;
};

}  // namespace lapctrl
