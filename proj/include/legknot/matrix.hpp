#pragma once

#include <initializer_list>
#include <vector>

#include "legknot/rat.hpp"

namespace legknot {

// Dense matrix with arbitrary-precision integer entries. Sizes stay tiny
// (surgery diagrams have a handful of components), so the representation
// favours clarity over blocking tricks.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), e_(size_t(rows) * cols) {
        if (rows < 0 || cols < 0) throw DimensionError("matrix with negative dimension");
    }
    // Row-major initializer, e.g. IntMatrix(2, 2, {-1, -1, -1, -3}).
    IntMatrix(int rows, int cols, std::initializer_list<long long> entries) : IntMatrix(rows, cols) {
        if (entries.size() != e_.size())
            throw DimensionError("initializer has wrong number of entries");
        size_t k = 0;
        for (long long v : entries) e_[k++] = v;
    }

    static IntMatrix identity(int n) {
        IntMatrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }
    static IntMatrix diagonal(const std::vector<Int>& d) {
        IntMatrix m(int(d.size()), int(d.size()));
        for (int i = 0; i < int(d.size()); ++i) m.at(i, i) = d[i];
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    bool is_symmetric() const {
        if (!is_square()) return false;
        for (int i = 0; i < rows_; ++i)
            for (int j = i + 1; j < cols_; ++j)
                if (at(i, j) != at(j, i)) return false;
        return true;
    }

    Int& at(int i, int j) {
        check(i, j);
        return e_[size_t(i) * cols_ + j];
    }
    const Int& at(int i, int j) const {
        check(i, j);
        return e_[size_t(i) * cols_ + j];
    }

    void swap_rows(int i, int j) {
        for (int c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
    }
    void swap_cols(int i, int j) {
        for (int r = 0; r < rows_; ++r) std::swap(at(r, i), at(r, j));
    }

    friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }
    friend bool operator!=(const IntMatrix& a, const IntMatrix& b) { return !(a == b); }

private:
    void check(int i, int j) const {
        if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
            throw DimensionError("matrix index out of bounds");
    }

    int rows_ = 0, cols_ = 0;
    std::vector<Int> e_;
};

inline IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.rows()) throw DimensionError("matrix product shape mismatch");
    IntMatrix c(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            if (a.at(i, k) == 0) continue;
            for (int j = 0; j < b.cols(); ++j) c.at(i, j) += a.at(i, k) * b.at(k, j);
        }
    return c;
}

}  // namespace legknot
