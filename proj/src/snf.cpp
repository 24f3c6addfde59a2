#include "asphera/snf.hpp"

#include "asphera/limits.hpp"

#include <algorithm>
#include <set>

namespace asphera {

namespace {

// Shared reduction: diagonalizes `a` in place by unimodular row/column
// operations, mirroring each operation into whichever transforms are
// non-null.  Pivoting on the minimal nonzero absolute value keeps the
// intermediate entries tame; the divisibility fix-up stays inside the main
// loop so the final diagonal is already an invariant-factor chain.
struct Reducer {
    IntMatrix& a;
    IntMatrix* u;
    IntMatrix* uinv;
    IntMatrix* v;
    IntMatrix* vinv;

    void row_swap(int i, int j)
    {
        a.swap_rows(i, j);
        if (u) u->swap_rows(i, j);
        if (uinv) uinv->swap_cols(i, j);
    }
    void row_negate(int i)
    {
        a.negate_row(i);
        if (u) u->negate_row(i);
        if (uinv) uinv->negate_col(i);
    }
    void row_add(int target, int source, const Int& c) // row_t += c * row_s
    {
        a.add_row_multiple(target, source, c);
        if (u) u->add_row_multiple(target, source, c);
        if (uinv) uinv->add_col_multiple(source, target, -c);
    }
    void col_swap(int i, int j)
    {
        a.swap_cols(i, j);
        if (v) v->swap_cols(i, j);
        if (vinv) vinv->swap_rows(i, j);
    }
    void col_negate(int j)
    {
        a.negate_col(j);
        if (v) v->negate_col(j);
        if (vinv) vinv->negate_row(j);
    }
    void col_add(int target, int source, const Int& c) // col_t += c * col_s
    {
        a.add_col_multiple(target, source, c);
        if (v) v->add_col_multiple(target, source, c);
        if (vinv) vinv->add_row_multiple(source, target, -c);
    }

    int run()
    {
        const int m = a.rows(), n = a.cols();
        int t = 0;
        while (t < m && t < n) {
            // pivot: minimal nonzero absolute value in the trailing block
            int pi = -1, pj = -1;
            for (int i = t; i < m; ++i) {
                for (int j = t; j < n; ++j) {
                    const Int& x = a(i, j);
                    if (x == 0)
                        continue;
                    if (pi < 0 || abs(x) < abs(a(pi, pj))) {
                        pi = i;
                        pj = j;
                    }
                }
            }
            if (pi < 0)
                break; // trailing block is zero
            row_swap(t, pi);
            col_swap(t, pj);
            if (a(t, t) < 0)
                row_negate(t);

            for (;;) {
                // clear the pivot column
                bool restart = false;
                for (int i = t + 1; i < m; ++i) {
                    if (a(i, t) == 0)
                        continue;
                    Int q = a(i, t) / a(t, t);
                    if (q != 0)
                        row_add(i, t, -q);
                    if (a(i, t) != 0) {
                        // remainder strictly smaller than the pivot: promote it
                        row_swap(t, i);
                        if (a(t, t) < 0)
                            row_negate(t);
                        restart = true;
                        break;
                    }
                }
                if (restart)
                    continue;
                // clear the pivot row
                for (int j = t + 1; j < n; ++j) {
                    if (a(t, j) == 0)
                        continue;
                    Int q = a(t, j) / a(t, t);
                    if (q != 0)
                        col_add(j, t, -q);
                    if (a(t, j) != 0) {
                        col_swap(t, j);
                        if (a(t, t) < 0)
                            col_negate(t);
                        restart = true;
                        break;
                    }
                }
                if (restart)
                    continue;
                // divisibility: the pivot must divide the whole trailing block
                int bi = -1;
                for (int i = t + 1; i < m && bi < 0; ++i)
                    for (int j = t + 1; j < n; ++j)
                        if (a(i, j) % a(t, t) != 0) {
                            bi = i;
                            break;
                        }
                if (bi >= 0) {
                    row_add(t, bi, 1);
                    continue;
                }
                break;
            }
            ++t;
        }
        return t; // rank
    }
};

} // namespace

SnfTransforms snf_transforms(const IntMatrix& a, bool need_u, bool need_uinv,
                             bool need_v, bool need_vinv)
{
    SnfTransforms out;
    out.s = a;
    if (need_u) out.u = IntMatrix::identity(a.rows());
    if (need_uinv) out.uinv = IntMatrix::identity(a.rows());
    if (need_v) out.v = IntMatrix::identity(a.cols());
    if (need_vinv) out.vinv = IntMatrix::identity(a.cols());
    Reducer red{out.s,
                out.u ? &*out.u : nullptr,
                out.uinv ? &*out.uinv : nullptr,
                out.v ? &*out.v : nullptr,
                out.vinv ? &*out.vinv : nullptr};
    out.rank = red.run();
    return out;
}

std::vector<Int> SnfTransforms::diagonal() const
{
    std::vector<Int> d;
    d.reserve(rank);
    for (int i = 0; i < rank; ++i)
        d.push_back(s(i, i));
    return d;
}

SnfResult smith_normal_form(const IntMatrix& a)
{
    SnfTransforms t = snf_transforms(a, true, false, true, false);
    return SnfResult{std::move(*t.u), std::move(t.s), std::move(*t.v)};
}

IntMatrix kernel_basis(const IntMatrix& a)
{
    // ker(a) = V * ker(S); with S diagonal of rank r the kernel is spanned by
    // the trailing columns of V.
    SnfTransforms t = snf_transforms(a, false, false, true, false);
    const IntMatrix& v = *t.v;
    IntMatrix k(a.cols(), a.cols() - t.rank);
    for (int j = t.rank; j < a.cols(); ++j)
        for (int i = 0; i < a.cols(); ++i)
            k(i, j - t.rank) = v(i, j);
    return k;
}

LatticeSolver::LatticeSolver(const IntMatrix& gens) : ambient_(gens.rows())
{
    SnfTransforms t = snf_transforms(gens, true, true, false, false);
    rank_ = t.rank;
    u_ = std::move(*t.u);
    diag_ = t.diagonal();
    // lattice basis: d_i * uinv[:, i]
    const IntMatrix& uinv = *t.uinv;
    basis_ = IntMatrix(ambient_, rank_);
    for (int j = 0; j < rank_; ++j)
        for (int i = 0; i < ambient_; ++i)
            basis_(i, j) = diag_[j] * uinv(i, j);
}

std::optional<std::vector<Int>> LatticeSolver::coordinates(const std::vector<Int>& vec) const
{
    internal_check(static_cast<int>(vec.size()) == ambient_, "LatticeSolver: size mismatch");
    // w = U v must be divisible by diag on the first rank coordinates and
    // vanish on the rest.
    std::vector<Int> w(ambient_, Int(0));
    for (int j = 0; j < ambient_; ++j) {
        if (vec[j] == 0)
            continue;
        for (int i = 0; i < ambient_; ++i) {
            const Int& uij = u_(i, j);
            if (uij != 0)
                w[i] += uij * vec[j];
        }
    }
    std::vector<Int> y(rank_);
    for (int i = 0; i < rank_; ++i) {
        if (w[i] % diag_[i] != 0)
            return std::nullopt;
        y[i] = w[i] / diag_[i];
    }
    for (int i = rank_; i < ambient_; ++i)
        if (w[i] != 0)
            return std::nullopt;
    return y;
}

namespace {

// Sparse unit-pivot elimination.  Rows/columns with a +-1 entry are pivoted
// away with exact integer updates; whatever is left goes through the dense
// reduction.  Only the invariant factors are produced.
struct SparseEliminator {
    int nrows;
    std::vector<std::map<int, Int>> cols; // live column data
    std::vector<std::set<int>> rows;      // row -> set of live columns
    std::vector<bool> row_dead, col_dead;
    long long unit_pivots = 0;

    explicit SparseEliminator(const SparseMat& a)
        : nrows(a.rows()), rows(a.rows()), row_dead(a.rows(), false),
          col_dead(a.cols(), false)
    {
        cols.resize(a.cols());
        for (int j = 0; j < a.cols(); ++j) {
            cols[j] = a.col(j);
            for (const auto& [i, v] : cols[j])
                rows[i].insert(j);
        }
    }

    void eliminate(int pi, int pj)
    {
        Int pivot = cols[pj].at(pi); // +-1
        // column operations clear row pi; the leftover entries of column pj
        // are then removable by row operations that touch nothing else.
        std::vector<int> touched(rows[pi].begin(), rows[pi].end());
        for (int j : touched) {
            if (j == pj)
                continue;
            Int c = cols[j].at(pi) * pivot; // a[pi][j] / pivot
            for (const auto& [r, v] : cols[pj]) {
                if (r == pi)
                    continue;
                Int& slot = cols[j][r];
                bool was_zero = (slot == 0);
                slot -= c * v;
                if (slot == 0) {
                    cols[j].erase(r);
                    if (!was_zero)
                        rows[r].erase(j);
                } else if (was_zero) {
                    rows[r].insert(j);
                }
            }
            cols[j].erase(pi);
        }
        for (const auto& [r, v] : cols[pj])
            rows[r].erase(pj);
        rows[pi].clear();
        cols[pj].clear();
        row_dead[pi] = true;
        col_dead[pj] = true;
        ++unit_pivots;
    }

    // One pass: collect current unit pivots ordered by Markowitz score and
    // apply those whose row and column are still untouched in this pass.
    bool pass()
    {
        struct Cand {
            long long score;
            int i, j;
            bool operator<(const Cand& o) const
            {
                return std::tie(score, i, j) < std::tie(o.score, o.i, o.j);
            }
        };
        std::vector<Cand> cands;
        for (int j = 0; j < static_cast<int>(cols.size()); ++j) {
            if (col_dead[j])
                continue;
            for (const auto& [i, v] : cols[j]) {
                if (v == 1 || v == -1) {
                    long long score = static_cast<long long>(rows[i].size() - 1) *
                                      static_cast<long long>(cols[j].size() - 1);
                    cands.push_back({score, i, j});
                }
            }
        }
        if (cands.empty())
            return false;
        std::sort(cands.begin(), cands.end());
        std::vector<bool> row_used(nrows, false), col_used(cols.size(), false);
        bool any = false;
        for (const Cand& c : cands) {
            if (row_dead[c.i] || col_dead[c.j] || row_used[c.i] || col_used[c.j])
                continue;
            auto it = cols[c.j].find(c.i);
            if (it == cols[c.j].end() || (it->second != 1 && it->second != -1))
                continue;
            for (int j : rows[c.i])
                col_used[j] = true;
            for (const auto& [r, v] : cols[c.j])
                row_used[r] = true;
            eliminate(c.i, c.j);
            any = true;
        }
        return any;
    }

    IntMatrix residual() const
    {
        std::vector<int> rmap(nrows, -1), cmap(cols.size(), -1);
        int nr = 0, nc = 0;
        for (int i = 0; i < nrows; ++i)
            if (!row_dead[i] && !rows[i].empty())
                rmap[i] = nr++;
        for (int j = 0; j < static_cast<int>(cols.size()); ++j)
            if (!col_dead[j] && !cols[j].empty())
                cmap[j] = nc++;
        IntMatrix m(nr, nc);
        for (int j = 0; j < static_cast<int>(cols.size()); ++j) {
            if (cmap[j] < 0)
                continue;
            for (const auto& [i, v] : cols[j])
                m(rmap[i], cmap[j]) = v;
        }
        return m;
    }
};

} // namespace

std::vector<Int> snf_invariant_factors(const SparseMat& a)
{
    SparseEliminator elim(a);
    while (elim.pass()) {
    }
    IntMatrix rest = elim.residual();
    SnfTransforms t = snf_transforms(rest, false, false, false, false);
    std::vector<Int> factors(static_cast<size_t>(elim.unit_pivots), Int(1));
    for (const Int& d : t.diagonal())
        factors.push_back(d);
    return factors;
}

int matrix_rank(const SparseMat& a)
{
    return static_cast<int>(snf_invariant_factors(a).size());
}

} // namespace asphera
