#pragma once

#include "asphera/abelian.hpp"
#include "asphera/errors.hpp"

#include <map>
#include <vector>

namespace asphera {

// Dense exact integer matrix.  Row/column operations are the primitives the
// Smith reduction needs; everything else is plain value semantics.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(int rows, int cols);

    static IntMatrix identity(int n);
    static IntMatrix from_rows(const std::vector<std::vector<long long>>& rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Int& operator()(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const Int& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    bool is_zero() const;
    bool is_identity() const;

    IntMatrix operator*(const IntMatrix& rhs) const;
    IntMatrix operator-(const IntMatrix& rhs) const;
    std::vector<Int> apply(const std::vector<Int>& x) const;
    std::vector<Int> column(int j) const;
    IntMatrix transposed() const;

    // elementary operations (used by the Smith reduction and its trackers)
    void swap_rows(int i, int j);
    void swap_cols(int i, int j);
    void negate_row(int i);
    void negate_col(int j);
    void add_row_multiple(int target, int source, const Int& c); // row_t += c*row_s
    void add_col_multiple(int target, int source, const Int& c); // col_t += c*col_s

    static IntMatrix hstack(const IntMatrix& a, const IntMatrix& b);

    bool operator==(const IntMatrix&) const = default;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Int> a_;
};

// Column-major sparse matrix with accumulating insertion.  Deterministic
// iteration order (std::map) keeps every downstream computation reproducible.
class SparseMat {
public:
    SparseMat() = default;
    SparseMat(int rows, int cols);

    int rows() const { return rows_; }
    int cols() const { return static_cast<int>(cols_.size()); }
    long long nnz() const;

    void add(int i, int j, const Int& v); // accumulates; erases entries that cancel to 0
    const std::map<int, Int>& col(int j) const { return cols_[j]; }

    std::vector<Int> apply(const std::vector<Int>& x) const;

    IntMatrix to_dense() const;
    static SparseMat from_dense(const IntMatrix& m);

private:
    int rows_ = 0;
    std::vector<std::map<int, Int>> cols_;
};

} // namespace asphera
