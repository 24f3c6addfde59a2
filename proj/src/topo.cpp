#include "asphera/topo.hpp"

#include "asphera/limits.hpp"

#include <algorithm>
#include <numeric>

namespace asphera {

SparseMat boundary_matrix_sparse(const SimplicialComplex& k, int degree)
{
    if (degree < 0)
        throw ValidationError("boundary_matrix: degree must be nonnegative");
    const int cols = k.count(degree);
    const int rows = degree == 0 ? 0 : k.count(degree - 1);
    SparseMat d(rows, cols);
    if (degree == 0)
        return d;
    std::vector<int> face;
    for (int j = 0; j < cols; ++j) {
        const auto& s = k.simplex(degree, j);
        face.assign(s.size() - 1, 0);
        int sign = 1;
        for (size_t drop = 0; drop < s.size(); ++drop) {
            int w = 0;
            for (size_t t = 0; t < s.size(); ++t)
                if (t != drop)
                    face[w++] = s[t];
            int i = k.index_of(degree - 1, face);
            internal_check(i >= 0, "boundary_matrix: missing face");
            d.add(i, j, sign);
            sign = -sign;
        }
    }
    return d;
}

IntMatrix boundary_matrix(const SimplicialComplex& k, int degree)
{
    return boundary_matrix_sparse(k, degree).to_dense();
}

ChainComplex::ChainComplex(std::vector<int> ranks, std::vector<SparseMat> boundaries)
    : ranks_(std::move(ranks)), boundaries_(std::move(boundaries))
{
    internal_check(!ranks_.empty(), "ChainComplex: empty rank list");
    internal_check(boundaries_.size() + 1 == ranks_.size() || (ranks_.size() == 1 && boundaries_.empty()),
                   "ChainComplex: boundary count mismatch");
    for (size_t k = 0; k < boundaries_.size(); ++k) {
        internal_check(boundaries_[k].rows() == ranks_[k] &&
                           boundaries_[k].cols() == ranks_[k + 1],
                       "ChainComplex: boundary dimensions mismatch at degree " +
                           std::to_string(k + 1));
    }
    // d∘d = 0, checked column by column on the sparse data
    for (size_t k = 1; k < boundaries_.size(); ++k) {
        const SparseMat& outer = boundaries_[k - 1];
        const SparseMat& inner = boundaries_[k];
        for (int j = 0; j < inner.cols(); ++j) {
            std::map<int, Int> acc;
            for (const auto& [mid, v] : inner.col(j))
                for (const auto& [i, w] : outer.col(mid)) {
                    acc[i] += v * w;
                }
            for (const auto& [i, v] : acc)
                internal_check(v == 0, "ChainComplex: d.d != 0 at degree " + std::to_string(k + 1));
        }
    }
}

ChainComplex ChainComplex::of(const SimplicialComplex& k)
{
    std::vector<int> ranks;
    std::vector<SparseMat> boundaries;
    for (int d = 0; d <= k.dim(); ++d) {
        ranks.push_back(k.count(d));
        if (d > 0)
            boundaries.push_back(boundary_matrix_sparse(k, d));
    }
    return ChainComplex(std::move(ranks), std::move(boundaries));
}

int ChainComplex::rank(int k) const
{
    if (k < 0 || k > dim())
        return 0;
    return ranks_[k];
}

SparseMat ChainComplex::boundary(int k) const
{
    internal_check(k >= 0, "ChainComplex::boundary: negative degree");
    if (k == 0)
        return SparseMat(0, rank(0));
    if (k > dim())
        return SparseMat(rank(k - 1), 0);
    return boundaries_[k - 1];
}

long long ChainComplex::euler_characteristic() const
{
    long long chi = 0;
    int sign = 1;
    for (int r : ranks_) {
        chi += sign * static_cast<long long>(r);
        sign = -sign;
    }
    return chi;
}

HomologyBasis chain_homology(const ChainComplex& cc, int degree)
{
    if (degree < 0)
        throw ValidationError("homology: degree must be nonnegative");
    if (degree > cc.dim()) {
        HomologyBasis hb;
        hb.group = AbelianGroup::zero();
        return hb;
    }
    SparseMat empty_rel_here(cc.rank(degree), 0);
    SparseMat empty_rel_out(cc.rank(degree - 1 < 0 ? 0 : degree - 1), 0);
    return presented_homology(cc.boundary(degree), cc.boundary(degree + 1), empty_rel_here,
                              empty_rel_out);
}

HomologyBasis homology(const SimplicialComplex& k, int degree)
{
    return chain_homology(ChainComplex::of(k), degree);
}

AbelianGroup chain_homology_group(const ChainComplex& cc, int degree)
{
    if (degree < 0)
        throw ValidationError("homology: degree must be nonnegative");
    if (degree > cc.dim())
        return AbelianGroup::zero();
    const int nk = cc.rank(degree);
    const int r_out = matrix_rank(cc.boundary(degree));
    std::vector<Int> in_factors = snf_invariant_factors(cc.boundary(degree + 1));
    const int r_in = static_cast<int>(in_factors.size());
    std::vector<Int> torsion;
    for (Int& d : in_factors)
        if (d >= 2)
            torsion.push_back(std::move(d));
    internal_check(nk - r_out - r_in >= 0, "homology: negative free rank");
    return AbelianGroup(nk - r_out - r_in, std::move(torsion));
}

AbelianGroup homology_group(const SimplicialComplex& k, int degree)
{
    return chain_homology_group(ChainComplex::of(k), degree);
}

long long euler_characteristic(const SimplicialComplex& k)
{
    long long chi = 0;
    int sign = 1;
    for (int d = 0; d <= k.dim(); ++d) {
        chi += sign * static_cast<long long>(k.count(d));
        sign = -sign;
    }
    return chi;
}

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x)
    {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

} // namespace

int components(const SimplicialComplex& k)
{
    UnionFind uf(k.count(0));
    for (int j = 0; j < k.count(1); ++j) {
        const auto& e = k.simplex(1, j);
        int a = k.index_of(0, {e[0]});
        int b = k.index_of(0, {e[1]});
        uf.unite(a, b);
    }
    int comps = 0;
    for (int i = 0; i < k.count(0); ++i)
        if (uf.find(i) == i)
            ++comps;
    return comps;
}

std::string FreenessVerdict::describe(const SimplicialAction& sa) const
{
    if (free)
        return "free";
    std::string s = "stabilized: element " + sa.group.names[witness_g] + " fixes simplex {";
    const auto& simplex = sa.complex.simplex(witness_dim, witness_simplex);
    for (size_t i = 0; i < simplex.size(); ++i)
        s += (i ? "," : "") + std::to_string(simplex[i]);
    return s + "}";
}

FreenessVerdict is_free_action(const SimplicialAction& sa)
{
    for (int g = 0; g < sa.group.order; ++g) {
        if (g == sa.group.identity)
            continue;
        for (int k = 0; k <= sa.complex.dim(); ++k)
            for (int i = 0; i < sa.complex.count(k); ++i) {
                const auto& s = sa.complex.simplex(k, i);
                std::vector<int> image(s.size());
                for (size_t t = 0; t < s.size(); ++t)
                    image[t] = sa.vertex_perms[g][s[t]];
                std::sort(image.begin(), image.end());
                if (image == s)
                    return FreenessVerdict{false, g, k, i};
            }
    }
    return FreenessVerdict{true, -1, -1, -1};
}

namespace {

int sort_parity(std::vector<int>& v)
{
    // counts inversions while insertion-sorting; fine at simplex sizes
    int sign = 1;
    for (size_t i = 1; i < v.size(); ++i)
        for (size_t j = i; j > 0 && v[j - 1] > v[j]; --j) {
            std::swap(v[j - 1], v[j]);
            sign = -sign;
        }
    return sign;
}

} // namespace

ChainAction chain_action(const SimplicialAction& sa)
{
    const SimplicialComplex& k = sa.complex;
    ChainAction ca;
    ca.group = sa.group;
    ca.perm.assign(sa.group.order, {});
    ca.sign.assign(sa.group.order, {});
    for (int g = 0; g < sa.group.order; ++g) {
        ca.perm[g].resize(k.dim() + 1);
        ca.sign[g].resize(k.dim() + 1);
        for (int d = 0; d <= k.dim(); ++d) {
            ca.perm[g][d].resize(k.count(d));
            ca.sign[g][d].resize(k.count(d));
            for (int i = 0; i < k.count(d); ++i) {
                const auto& s = k.simplex(d, i);
                std::vector<int> image(s.size());
                for (size_t t = 0; t < s.size(); ++t)
                    image[t] = sa.vertex_perms[g][s[t]];
                int sign = sort_parity(image);
                int j = k.index_of(d, image);
                internal_check(j >= 0, "chain_action: image simplex missing");
                ca.perm[g][d][i] = j;
                ca.sign[g][d][i] = sign;
            }
        }
    }
    return ca;
}

SparseMat chain_map_matrix(const ChainAction& ca, int g, int degree)
{
    const auto& perm = ca.perm[g][degree];
    const auto& sign = ca.sign[g][degree];
    SparseMat m(static_cast<int>(perm.size()), static_cast<int>(perm.size()));
    for (int i = 0; i < static_cast<int>(perm.size()); ++i)
        m.add(perm[i], i, sign[i]);
    return m;
}

QuotientChainComplex coinvariants(const ChainComplex& cc, const ChainAction& ca)
{
    const FiniteGroup& grp = ca.group;
    const int dim = cc.dim();
    internal_check(static_cast<int>(ca.perm[grp.identity].size()) >= dim + 1,
                   "coinvariants: action degree mismatch");

    // the action must be free on the basis and commute with the boundary
    for (int g = 0; g < grp.order; ++g) {
        if (g == grp.identity)
            continue;
        for (int d = 0; d <= dim; ++d)
            for (int i = 0; i < cc.rank(d); ++i)
                internal_check(ca.perm[g][d][i] != i,
                               "coinvariants: basis stabilizer is nontrivial (element " +
                                   grp.names[g] + ", degree " + std::to_string(d) + ")");
    }
    for (int g = 0; g < grp.order; ++g)
        for (int d = 1; d <= dim; ++d) {
            const SparseMat b = cc.boundary(d);
            for (int i = 0; i < cc.rank(d); ++i) {
                // T(d e_i) and d T(e_i) must agree
                std::map<int, Int> lhs, rhs;
                for (const auto& [r, v] : b.col(i))
                    lhs[ca.perm[g][d - 1][r]] += v * ca.sign[g][d - 1][r];
                for (const auto& [r, v] : b.col(ca.perm[g][d][i]))
                    rhs[r] += v * ca.sign[g][d][i];
                internal_check(lhs == rhs, "coinvariants: action does not commute with boundary");
            }
        }

    QuotientChainComplex out;
    out.orbit_reps.resize(dim + 1);
    out.orbit_of.resize(dim + 1);
    out.orbit_sign.resize(dim + 1);
    for (int d = 0; d <= dim; ++d) {
        const int n = cc.rank(d);
        out.orbit_of[d].assign(n, -1);
        out.orbit_sign[d].assign(n, 0);
        for (int i = 0; i < n; ++i) {
            if (out.orbit_of[d][i] >= 0)
                continue;
            // i is the smallest unseen index, hence the orbit representative
            int orbit = static_cast<int>(out.orbit_reps[d].size());
            out.orbit_reps[d].push_back(i);
            for (int g = 0; g < grp.order; ++g) {
                int j = ca.perm[g][d][i];
                internal_check(out.orbit_of[d][j] < 0 || j == i || out.orbit_of[d][j] == orbit,
                               "coinvariants: inconsistent orbits");
                if (out.orbit_of[d][j] < 0 || j == i) {
                    out.orbit_of[d][j] = orbit;
                    out.orbit_sign[d][j] = ca.sign[g][d][i];
                }
            }
        }
    }

    std::vector<int> ranks(dim + 1);
    for (int d = 0; d <= dim; ++d)
        ranks[d] = static_cast<int>(out.orbit_reps[d].size());
    std::vector<SparseMat> boundaries;
    for (int d = 1; d <= dim; ++d) {
        SparseMat q(ranks[d - 1], ranks[d]);
        const SparseMat b = cc.boundary(d);
        for (int j = 0; j < ranks[d]; ++j) {
            int rep = out.orbit_reps[d][j];
            for (const auto& [i, v] : b.col(rep))
                q.add(out.orbit_of[d - 1][i], j, v * out.orbit_sign[d - 1][i]);
        }
        boundaries.push_back(std::move(q));
    }
    out.complex = ChainComplex(std::move(ranks), std::move(boundaries));
    return out;
}

QuotientChainComplex coinvariant_complex(const SimplicialComplex& k, const SimplicialAction& sa)
{
    FreenessVerdict verdict = is_free_action(sa);
    if (!verdict.free)
        throw ValidationError("coinvariant_complex requires a free action; " +
                              verdict.describe(sa));
    return coinvariants(ChainComplex::of(k), chain_action(sa));
}

SimplicialComplex point_complex()
{
    return SimplicialComplex::from_strata(1, {{{0}}});
}

SimplicialComplex cycle_complex(int n)
{
    if (n < 3)
        throw ValidationError("cycle_complex: need n >= 3");
    std::vector<std::vector<int>> edges;
    for (int i = 0; i < n; ++i)
        edges.push_back({std::min(i, (i + 1) % n), std::max(i, (i + 1) % n)});
    return SimplicialComplex::closure(n, edges);
}

SimplicialAction trivial_simplicial_action(const FiniteGroup& g, const SimplicialComplex& k)
{
    std::vector<int> id(k.vertex_count());
    std::iota(id.begin(), id.end(), 0);
    return make_simplicial_action(g, k, std::vector<std::vector<int>>(g.order, id));
}

SimplicialAction rotation_action(int n, int m, int step)
{
    if ((static_cast<long long>(m) * step) % n != 0)
        throw ValidationError("rotation_action: step*order must vanish mod n");
    FiniteGroup g = cyclic_group(m);
    std::vector<std::vector<int>> perms(m, std::vector<int>(n));
    for (int a = 0; a < m; ++a)
        for (int v = 0; v < n; ++v)
            perms[a][v] = (v + a * step) % n;
    return make_simplicial_action(std::move(g), cycle_complex(n), std::move(perms));
}

SimplicialAction reflection_action(int n)
{
    FiniteGroup g = cyclic_group(2);
    std::vector<std::vector<int>> perms(2, std::vector<int>(n));
    for (int v = 0; v < n; ++v) {
        perms[0][v] = v;
        perms[1][v] = (n - v) % n;
    }
    return make_simplicial_action(std::move(g), cycle_complex(n), std::move(perms));
}

SimplicialAction dihedral_action(int n)
{
    FiniteGroup g = dihedral_group(n);
    std::vector<std::vector<int>> perms(g.order, std::vector<int>(n));
    // r^i rotates by i, s*r^i maps v to -(v+i) = reflection after rotation
    for (int i = 0; i < n; ++i)
        for (int v = 0; v < n; ++v) {
            perms[i][v] = (v + i) % n;
            perms[n + i][v] = ((n - (v + i) % n) % n);
        }
    return make_simplicial_action(std::move(g), cycle_complex(n), std::move(perms));
}

} // namespace asphera
