#include "asphera/borel.hpp"

#include "asphera/limits.hpp"

#include <algorithm>
#include <numeric>

namespace asphera {

JoinComplex milnor_join(const FiniteGroup& g, int m)
{
    if (m < 1)
        throw ValidationError("milnor_join: need at least one level");
    const int s = g.order;
    guard_chain_rank(static_cast<long long>(m) * s, "milnor_join vertices");
    // simplex count: sum over k of C(m, k+1) * s^(k+1)
    {
        auto choose = [](long long n, long long r) {
            long long c = 1;
            for (long long i = 1; i <= r; ++i)
                c = c * (n - r + i) / i;
            return c;
        };
        long long total = 0, pw = 1;
        for (int k = 0; k < m; ++k) {
            pw *= s;
            total += choose(m, k + 1) * pw;
            guard_chain_rank(total, "milnor_join simplices");
        }
    }

    std::vector<std::vector<std::vector<int>>> strata(m);
    std::vector<int> levels, verts;
    auto emit = [&](auto&& self, int next_level, int want) -> void {
        if (static_cast<int>(levels.size()) == want) {
            strata[want - 1].push_back(verts);
            return;
        }
        for (int l = next_level; l < m; ++l) {
            levels.push_back(l);
            for (int x = 0; x < s; ++x) {
                verts.push_back(l * s + x);
                self(self, l + 1, want);
                verts.pop_back();
            }
            levels.pop_back();
        }
    };
    for (int k = 1; k <= m; ++k)
        emit(emit, 0, k);
    SimplicialComplex complex = SimplicialComplex::from_strata(m * s, std::move(strata));

    std::vector<std::vector<int>> perms(s, std::vector<int>(m * s));
    for (int a = 0; a < s; ++a)
        for (int l = 0; l < m; ++l)
            for (int x = 0; x < s; ++x)
                perms[a][l * s + x] = l * s + g.mul(a, x);
    SimplicialAction action = make_simplicial_action(g, std::move(complex), std::move(perms));
    FreenessVerdict verdict = is_free_action(action);
    internal_check(verdict.free, "milnor_join: translation action is not free");
    return JoinComplex{action.complex, std::move(action), m};
}

int staircase_vertex(const SimplicialComplex& l, int i, int j)
{
    return i * l.vertex_count() + j;
}

SimplicialComplex staircase_product(const SimplicialComplex& k, const SimplicialComplex& l)
{
    // chains in each product cell sigma x tau that project onto both factors;
    // steps move one vertex forward in K, in L, or in both
    std::vector<std::vector<std::vector<int>>> strata;
    auto emit = [&](const std::vector<int>& sv, const std::vector<int>& tv) {
        const int a = static_cast<int>(sv.size()) - 1;
        const int b = static_cast<int>(tv.size()) - 1;
        std::vector<std::pair<int, int>> chain{{0, 0}};
        auto rec = [&](auto&& self) -> void {
            auto [x, y] = chain.back();
            if (x == a && y == b) {
                std::vector<int> verts;
                verts.reserve(chain.size());
                for (auto [cx, cy] : chain)
                    verts.push_back(staircase_vertex(l, sv[cx], tv[cy]));
                size_t d = chain.size() - 1;
                if (strata.size() <= d)
                    strata.resize(d + 1);
                strata[d].push_back(std::move(verts));
                return;
            }
            if (x < a) {
                chain.emplace_back(x + 1, y);
                self(self);
                chain.pop_back();
            }
            if (y < b) {
                chain.emplace_back(x, y + 1);
                self(self);
                chain.pop_back();
            }
            if (x < a && y < b) {
                chain.emplace_back(x + 1, y + 1);
                self(self);
                chain.pop_back();
            }
        };
        rec(rec);
    };
    long long cells = 0;
    for (int a = 0; a <= k.dim(); ++a)
        for (int b = 0; b <= l.dim(); ++b) {
            cells += static_cast<long long>(k.count(a)) * l.count(b);
            guard_chain_rank(cells, "staircase_product cells");
        }
    for (int a = 0; a <= k.dim(); ++a)
        for (int b = 0; b <= l.dim(); ++b)
            for (const auto& sv : k.simplices(a))
                for (const auto& tv : l.simplices(b))
                    emit(sv, tv);
    return SimplicialComplex::from_strata(k.vertex_count() * l.vertex_count(),
                                          std::move(strata));
}

SimplicialAction staircase_diagonal_action(const SimplicialComplex& product,
                                           const SimplicialAction& ak,
                                           const SimplicialAction& al)
{
    if (ak.group.order != al.group.order || ak.group.table != al.group.table)
        throw ValidationError("staircase_diagonal_action: factor actions use different groups");
    const int ln = al.complex.vertex_count();
    std::vector<std::vector<int>> perms(ak.group.order,
                                        std::vector<int>(product.vertex_count()));
    for (int g = 0; g < ak.group.order; ++g)
        for (int i = 0; i < ak.complex.vertex_count(); ++i)
            for (int j = 0; j < ln; ++j)
                perms[g][i * ln + j] = ak.vertex_perms[g][i] * ln + al.vertex_perms[g][j];
    // make_simplicial_action rejects the combination unless every image of a
    // staircase chain is again a staircase chain
    return make_simplicial_action(ak.group, product, std::move(perms));
}

ProductChainModel product_chain_model(const SimplicialComplex& k, const SimplicialAction& ak,
                                      const SimplicialComplex& l, const SimplicialAction& al,
                                      int max_degree)
{
    if (ak.group.order != al.group.order || ak.group.table != al.group.table)
        throw ValidationError("product_chain_model: factor actions use different groups");
    const int top = k.dim() + l.dim();
    const int dmax = max_degree < 0 ? top : std::min(max_degree, top);

    ProductChainModel out;
    out.cells.resize(dmax + 1);
    // block offsets: degree d, split (a, d-a), cells ordered sigma-major
    std::vector<std::vector<long long>> offset(dmax + 1);
    std::vector<int> ranks(dmax + 1, 0);
    for (int d = 0; d <= dmax; ++d) {
        offset[d].assign(k.dim() + 2, 0);
        long long n = 0;
        for (int a = 0; a <= std::min(d, k.dim()); ++a) {
            int b = d - a;
            offset[d][a] = n;
            if (b <= l.dim())
                n += static_cast<long long>(k.count(a)) * l.count(b);
        }
        offset[d][k.dim() + 1] = n;
        guard_chain_rank(n, "product_chain_model cells");
        ranks[d] = static_cast<int>(n);
        for (int a = 0; a <= std::min(d, k.dim()); ++a) {
            int b = d - a;
            if (b > l.dim())
                continue;
            for (int i = 0; i < k.count(a); ++i)
                for (int j = 0; j < l.count(b); ++j)
                    out.cells[d].emplace_back(a, b, i, j);
        }
    }
    auto cell_index = [&](int d, int a, int i, int j) -> int {
        int b = d - a;
        return static_cast<int>(offset[d][a] + static_cast<long long>(i) * l.count(b) + j);
    };

    // tensor differential d(sigma x tau) = d sigma x tau + (-1)^|sigma| sigma x d tau
    std::vector<SparseMat> kb, lb;
    for (int d = 0; d <= k.dim(); ++d)
        kb.push_back(boundary_matrix_sparse(k, d));
    for (int d = 0; d <= l.dim(); ++d)
        lb.push_back(boundary_matrix_sparse(l, d));
    std::vector<SparseMat> boundaries;
    for (int d = 1; d <= dmax; ++d) {
        SparseMat bd(ranks[d - 1], ranks[d]);
        for (int col = 0; col < ranks[d]; ++col) {
            auto [a, b, i, j] = out.cells[d][col];
            if (a > 0)
                for (const auto& [face, v] : kb[a].col(i))
                    bd.add(cell_index(d - 1, a - 1, face, j), col, v);
            if (b > 0) {
                int sign = a % 2 == 0 ? 1 : -1;
                for (const auto& [face, v] : lb[b].col(j))
                    bd.add(cell_index(d - 1, a, i, face), col, v * sign);
            }
        }
        boundaries.push_back(std::move(bd));
    }
    out.complex = ChainComplex(std::move(ranks), std::move(boundaries));

    // diagonal signed action on cells
    ChainAction cak = chain_action(ak);
    ChainAction cal = chain_action(al);
    out.action.group = ak.group;
    out.action.perm.assign(ak.group.order, {});
    out.action.sign.assign(ak.group.order, {});
    for (int g = 0; g < ak.group.order; ++g) {
        out.action.perm[g].resize(dmax + 1);
        out.action.sign[g].resize(dmax + 1);
        for (int d = 0; d <= dmax; ++d) {
            auto& perm = out.action.perm[g][d];
            auto& sign = out.action.sign[g][d];
            perm.resize(out.cells[d].size());
            sign.resize(out.cells[d].size());
            for (size_t c = 0; c < out.cells[d].size(); ++c) {
                auto [a, b, i, j] = out.cells[d][c];
                perm[c] = cell_index(d, a, cak.perm[g][a][i], cal.perm[g][b][j]);
                sign[c] = cak.sign[g][a][i] * cal.sign[g][b][j];
            }
        }
    }
    return out;
}

ChainComplex borel_complex(const SimplicialComplex& t, const SimplicialAction& sa, int m)
{
    if (m < 2)
        throw ValidationError("borel_complex: need at least two join levels");
    JoinComplex join = milnor_join(sa.group, m);
    ProductChainModel model =
        product_chain_model(t, sa, join.complex, join.action, -1);
    return coinvariants(model.complex, model.action).complex;
}

BorelResult borel_homology(const SimplicialComplex& t, const SimplicialAction& sa, int m,
                           int kmax)
{
    if (m < 2)
        throw ValidationError("borel_homology: need at least two join levels");
    if (kmax < 0)
        throw ValidationError("borel_homology: negative degree");
    JoinComplex join = milnor_join(sa.group, m);
    // degrees above kmax never influence H_k for k <= kmax, so the product is
    // truncated one degree above the request
    ProductChainModel model =
        product_chain_model(t, sa, join.complex, join.action, kmax + 1);
    ChainComplex quotient = coinvariants(model.complex, model.action).complex;

    BorelResult out;
    out.valid_degree_bound = m - 2;
    for (int k = 0; k <= kmax; ++k) {
        if (k <= out.valid_degree_bound)
            out.groups.push_back(chain_homology_group(quotient, k));
        else
            out.unreliable_degrees.push_back(k);
    }
    return out;
}

} // namespace asphera
