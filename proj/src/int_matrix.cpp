#include "lapctrl/int_matrix.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace lapctrl {

IntMatrix::IntMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("matrix dimensions must be >= 0");
    data_.resize(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols));
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long long>> rows) {
    rows_ = static_cast<int>(rows.size());
    cols_ = rows_ == 0 ? 0 : static_cast<int>(rows.begin()->size());
    data_.reserve(static_cast<std::size_t>(rows_) * cols_);
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != cols_)
            throw std::invalid_argument("ragged initializer rows");
        for (long long v : row) data_.emplace_back(v);
    }
}

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::diagonal(const std::vector<int>& entries) {
    const int n = static_cast<int>(entries.size());
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = entries[static_cast<std::size_t>(i)];
    return m;
}

std::vector<BigInt> IntMatrix::column(int c) const {
    std::vector<BigInt> v(static_cast<std::size_t>(rows_));
    for (int r = 0; r < rows_; ++r) v[static_cast<std::size_t>(r)] = (*this)(r, c);
    return v;
}

void IntMatrix::set_column(int c, const std::vector<BigInt>& v) {
    if (static_cast<int>(v.size()) != rows_) throw std::invalid_argument("column size mismatch");
    for (int r = 0; r < rows_; ++r) (*this)(r, c) = v[static_cast<std::size_t>(r)];
}

void IntMatrix::swap_rows(int a, int b) {
    if (a == b) return;
    for (int c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

IntMatrix IntMatrix::transposed() const {
    IntMatrix t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

std::vector<BigInt> IntMatrix::apply(const std::vector<BigInt>& v) const {
    if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("vector size mismatch");
    std::vector<BigInt> out(static_cast<std::size_t>(rows_));
    for (int r = 0; r < rows_; ++r) {
        BigInt acc = 0;
        for (int c = 0; c < cols_; ++c) acc += (*this)(r, c) * v[static_cast<std::size_t>(c)];
        out[static_cast<std::size_t>(r)] = acc;
    }
    return out;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("dimension mismatch in product");
    IntMatrix out(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            const BigInt& aik = a(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
        }
    return out;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("dimension mismatch in sum");
    IntMatrix out(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) out(i, j) = a(i, j) + b(i, j);
    return out;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("dimension mismatch in difference");
    IntMatrix out(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) out(i, j) = a(i, j) - b(i, j);
    return out;
}

IntMatrix hcat(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("row count mismatch in hcat");
    IntMatrix out(a.rows(), a.cols() + b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
        for (int j = 0; j < b.cols(); ++j) out(i, a.cols() + j) = b(i, j);
    }
    return out;
}

IntMatrix standard_basis_columns(int n, const std::vector<int>& nodes) {
    IntMatrix out(n, static_cast<int>(nodes.size()));
    for (int j = 0; j < out.cols(); ++j) {
        const int node = nodes[static_cast<std::size_t>(j)];
        if (node < 1 || node > n) throw std::invalid_argument("basis index out of range");
        out(node - 1, j) = 1;
    }
    return out;
}

IntMatrix read_matrix_text(std::istream& in) {
    int rows = 0, cols = 0;
    if (!(in >> rows >> cols)) throw std::invalid_argument("matrix header must be \"rows cols\"");
    if (rows < 0 || cols < 0) throw std::invalid_argument("matrix dimensions must be >= 0");
    IntMatrix m(rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            std::string tok;
            if (!(in >> tok)) throw std::invalid_argument("matrix body ended early");
            try {
                m(r, c) = BigInt(tok);
            } catch (const std::exception&) {
                throw std::invalid_argument("bad matrix entry: " + tok);
            }
        }
    return m;
}

void write_matrix_text(std::ostream& out, const IntMatrix& m) {
    out << m.rows() << ' ' << m.cols() << '\n';
    for (int r = 0; r < m.rows(); ++r) {
        for (int c = 0; c < m.cols(); ++c) {
            if (c) out << ' ';
            out << m(r, c);
        }
        out << '\n';
    }
}

void pretty_print(std::ostream& out, const IntMatrix& m, const char* indent) {
    std::vector<std::size_t> width(static_cast<std::size_t>(m.cols()), 0);
    std::vector<std::string> cells(static_cast<std::size_t>(m.rows()) * m.cols());
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c) {
            std::ostringstream ss;
            ss << m(r, c);
            auto& cell = cells[static_cast<std::size_t>(r) * m.cols() + c];
            cell = ss.str();
            width[static_cast<std::size_t>(c)] = std::max(width[static_cast<std::size_t>(c)], cell.size());
        }
    for (int r = 0; r < m.rows(); ++r) {
        out << indent;
        for (int c = 0; c < m.cols(); ++c) {
            const auto& cell = cells[static_cast<std::size_t>(r) * m.cols() + c];
            if (c) out << ' ';
            out << std::string(width[static_cast<std::size_t>(c)] - cell.size(), ' ') << cell;
        }
        out << '\n';
    }
}

}  // namespace lapctrl
