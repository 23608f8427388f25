#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <initializer_list>
#include <iosfwd>
#include <vector>

namespace lapctrl {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(int rows, int cols);  // zero-filled
    IntMatrix(std::initializer_list<std::initializer_list<long long>> rows);

    static IntMatrix identity(int n);
    static IntMatrix diagonal(const std::vector<int>& entries);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    BigInt& operator()(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
    const BigInt& operator()(int r, int c) const {
        return data_[static_cast<std::size_t>(r) * cols_ + c];
    }

    std::vector<BigInt> column(int c) const;
    void set_column(int c, const std::vector<BigInt>& v);
    void swap_rows(int a, int b);

    IntMatrix transposed() const;
    std::vector<BigInt> apply(const std::vector<BigInt>& v) const;  // matrix * vector

    bool operator==(const IntMatrix& other) const = default;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<BigInt> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);

/// [a | b] side by side; row counts must match.
IntMatrix hcat(const IntMatrix& a, const IntMatrix& b);

/// n-row matrix whose j-th column is e_{nodes[j]} (nodes are 1-based).
IntMatrix standard_basis_columns(int n, const std::vector<int>& nodes);

// Text format: first line "rows cols", then one space-separated row per line.
IntMatrix read_matrix_text(std::istream& in);
void write_matrix_text(std::ostream& out, const IntMatrix& m);

/// Column-padded human-readable form (not a stable interchange format).
void pretty_print(std::ostream& out, const IntMatrix& m, const char* indent = "  ");

}  // namespace lapctrl
