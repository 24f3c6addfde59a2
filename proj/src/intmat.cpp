#include "asphera/intmat.hpp"

#include "asphera/limits.hpp"

#include <algorithm>

namespace asphera {

IntMatrix::IntMatrix(int rows, int cols) : rows_(rows), cols_(cols)
{
    internal_check(rows >= 0 && cols >= 0, "IntMatrix: negative dimension");
    guard_dense(rows, cols, "IntMatrix");
    a_.assign(static_cast<size_t>(rows) * cols, Int(0));
}

IntMatrix IntMatrix::identity(int n)
{
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long long>>& rows)
{
    int r = static_cast<int>(rows.size());
    int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
    IntMatrix m(r, c);
    for (int i = 0; i < r; ++i) {
        internal_check(static_cast<int>(rows[i].size()) == c, "IntMatrix::from_rows: ragged rows");
        for (int j = 0; j < c; ++j)
            m(i, j) = rows[i][j];
    }
    return m;
}

bool IntMatrix::is_zero() const
{
    return std::all_of(a_.begin(), a_.end(), [](const Int& v) { return v == 0; });
}

bool IntMatrix::is_identity() const
{
    if (rows_ != cols_)
        return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if ((*this)(i, j) != (i == j ? 1 : 0))
                return false;
    return true;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const
{
    internal_check(cols_ == rhs.rows_, "IntMatrix: dimension mismatch in product");
    IntMatrix out(rows_, rhs.cols_);
    for (int i = 0; i < rows_; ++i) {
        for (int k = 0; k < cols_; ++k) {
            const Int& aik = (*this)(i, k);
            if (aik == 0)
                continue;
            for (int j = 0; j < rhs.cols_; ++j) {
                const Int& bkj = rhs(k, j);
                if (bkj != 0)
                    out(i, j) += aik * bkj;
            }
        }
    }
    return out;
}

IntMatrix IntMatrix::operator-(const IntMatrix& rhs) const
{
    internal_check(rows_ == rhs.rows_ && cols_ == rhs.cols_,
                   "IntMatrix: dimension mismatch in difference");
    IntMatrix out(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i)
        out.a_[i] = a_[i] - rhs.a_[i];
    return out;
}

std::vector<Int> IntMatrix::apply(const std::vector<Int>& x) const
{
    internal_check(static_cast<int>(x.size()) == cols_, "IntMatrix::apply: size mismatch");
    std::vector<Int> y(rows_, Int(0));
    for (int j = 0; j < cols_; ++j) {
        if (x[j] == 0)
            continue;
        for (int i = 0; i < rows_; ++i) {
            const Int& aij = (*this)(i, j);
            if (aij != 0)
                y[i] += aij * x[j];
        }
    }
    return y;
}

std::vector<Int> IntMatrix::column(int j) const
{
    std::vector<Int> c(rows_);
    for (int i = 0; i < rows_; ++i)
        c[i] = (*this)(i, j);
    return c;
}

IntMatrix IntMatrix::transposed() const
{
    IntMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            t(j, i) = (*this)(i, j);
    return t;
}

void IntMatrix::swap_rows(int i, int j)
{
    if (i == j)
        return;
    for (int c = 0; c < cols_; ++c)
        std::swap((*this)(i, c), (*this)(j, c));
}

void IntMatrix::swap_cols(int i, int j)
{
    if (i == j)
        return;
    for (int r = 0; r < rows_; ++r)
        std::swap((*this)(r, i), (*this)(r, j));
}

void IntMatrix::negate_row(int i)
{
    for (int c = 0; c < cols_; ++c)
        (*this)(i, c) = -(*this)(i, c);
}

void IntMatrix::negate_col(int j)
{
    for (int r = 0; r < rows_; ++r)
        (*this)(r, j) = -(*this)(r, j);
}

void IntMatrix::add_row_multiple(int target, int source, const Int& c)
{
    if (c == 0)
        return;
    for (int k = 0; k < cols_; ++k) {
        const Int& s = (*this)(source, k);
        if (s != 0)
            (*this)(target, k) += c * s;
    }
}

void IntMatrix::add_col_multiple(int target, int source, const Int& c)
{
    if (c == 0)
        return;
    for (int k = 0; k < rows_; ++k) {
        const Int& s = (*this)(k, source);
        if (s != 0)
            (*this)(k, target) += c * s;
    }
}

IntMatrix IntMatrix::hstack(const IntMatrix& a, const IntMatrix& b)
{
    internal_check(a.rows() == b.rows() || a.cols() == 0 || b.cols() == 0,
                   "IntMatrix::hstack: row mismatch");
    int rows = std::max(a.rows(), b.rows());
    IntMatrix out(rows, a.cols() + b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            out(i, j) = a(i, j);
    for (int i = 0; i < b.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j)
            out(i, a.cols() + j) = b(i, j);
    return out;
}

SparseMat::SparseMat(int rows, int cols) : rows_(rows)
{
    internal_check(rows >= 0 && cols >= 0, "SparseMat: negative dimension");
    cols_.resize(cols);
}

long long SparseMat::nnz() const
{
    long long n = 0;
    for (const auto& c : cols_)
        n += static_cast<long long>(c.size());
    return n;
}

void SparseMat::add(int i, int j, const Int& v)
{
    internal_check(i >= 0 && i < rows_ && j >= 0 && j < cols(), "SparseMat::add: out of range");
    if (v == 0)
        return;
    auto& col = cols_[j];
    auto it = col.find(i);
    if (it == col.end()) {
        col.emplace(i, v);
    } else {
        it->second += v;
        if (it->second == 0)
            col.erase(it);
    }
}

std::vector<Int> SparseMat::apply(const std::vector<Int>& x) const
{
    internal_check(static_cast<int>(x.size()) == cols(), "SparseMat::apply: size mismatch");
    std::vector<Int> y(rows_, Int(0));
    for (int j = 0; j < cols(); ++j) {
        if (x[j] == 0)
            continue;
        for (const auto& [i, v] : cols_[j])
            y[i] += v * x[j];
    }
    return y;
}

IntMatrix SparseMat::to_dense() const
{
    IntMatrix m(rows_, cols());
    for (int j = 0; j < cols(); ++j)
        for (const auto& [i, v] : cols_[j])
            m(i, j) = v;
    return m;
}

SparseMat SparseMat::from_dense(const IntMatrix& m)
{
    SparseMat s(m.rows(), m.cols());
    for (int j = 0; j < m.cols(); ++j)
        for (int i = 0; i < m.rows(); ++i)
            if (m(i, j) != 0)
                s.add(i, j, m(i, j));
    return s;
}

} // namespace asphera
