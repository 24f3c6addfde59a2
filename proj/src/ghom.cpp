#include "asphera/ghom.hpp"

#include "asphera/limits.hpp"

#include <algorithm>

namespace asphera {

AbelianGroup GModule::underlying_group() const
{
    if (gens == 0)
        return AbelianGroup::zero();
    std::vector<Int> factors = snf_invariant_factors(SparseMat::from_dense(relations));
    std::vector<Int> torsion;
    for (Int& d : factors)
        if (d >= 2)
            torsion.push_back(std::move(d));
    return AbelianGroup(gens - static_cast<int>(factors.size()), std::move(torsion));
}

GModule make_gmodule(FiniteGroup group, int gens, IntMatrix relations,
                     std::vector<IntMatrix> action)
{
    if (relations.rows() != gens && relations.cols() != 0)
        throw ValidationError("module: relation matrix must have one row per generator");
    if (relations.rows() != gens)
        relations = IntMatrix(gens, 0);
    if (static_cast<int>(action.size()) != group.order)
        throw ValidationError("module: one action matrix per group element required");
    for (const IntMatrix& a : action)
        if (a.rows() != gens || a.cols() != gens)
            throw ValidationError("module: action matrices must be square of the generator count");

    LatticeSolver rel(relations);
    auto congruent = [&](const IntMatrix& a, const IntMatrix& b) {
        for (int j = 0; j < gens; ++j) {
            std::vector<Int> diff(gens);
            for (int i = 0; i < gens; ++i)
                diff[i] = a(i, j) - b(i, j);
            if (!rel.contains(diff))
                return false;
        }
        return true;
    };

    if (!congruent(action[group.identity], IntMatrix::identity(gens)))
        throw ValidationError("module: identity does not act as the identity");
    for (int g = 0; g < group.order; ++g) {
        // the action must preserve the relation lattice
        for (int j = 0; j < relations.cols(); ++j) {
            std::vector<Int> image = action[g].apply(relations.column(j));
            if (!rel.contains(image))
                throw ValidationError("module: action of " + group.names[g] +
                                      " does not preserve the relations");
        }
        for (int h = 0; h < group.order; ++h)
            if (!congruent(action[g] * action[h], action[group.mul(g, h)]))
                throw ValidationError("module: homomorphism law fails at (" + group.names[g] +
                                      "," + group.names[h] + ")");
    }
    return GModule{std::move(group), gens, std::move(relations), std::move(action)};
}

GModule trivial_module_Z(const FiniteGroup& g)
{
    return make_gmodule(g, 1, IntMatrix(1, 0),
                        std::vector<IntMatrix>(g.order, IntMatrix::identity(1)));
}

GModule trivial_module_Zm(const FiniteGroup& g, const Int& m)
{
    IntMatrix rel(1, 1);
    rel(0, 0) = m;
    return make_gmodule(g, 1, std::move(rel),
                        std::vector<IntMatrix>(g.order, IntMatrix::identity(1)));
}

GModule sign_module(const FiniteGroup& g, const std::vector<int>& signs)
{
    if (static_cast<int>(signs.size()) != g.order)
        throw ValidationError("sign_module: one sign per element required");
    std::vector<IntMatrix> action;
    for (int s : signs) {
        if (s != 1 && s != -1)
            throw ValidationError("sign_module: signs must be +-1");
        IntMatrix a(1, 1);
        a(0, 0) = s;
        action.push_back(std::move(a));
    }
    return make_gmodule(g, 1, IntMatrix(1, 0), std::move(action));
}

GModule cyclic_sign_module(int n)
{
    if (n % 2 != 0)
        throw ValidationError("cyclic_sign_module: order must be even");
    std::vector<int> signs(n);
    for (int i = 0; i < n; ++i)
        signs[i] = i % 2 == 0 ? 1 : -1;
    return sign_module(cyclic_group(n), signs);
}

GModule homology_gmodule(const SimplicialAction& sa, int k)
{
    return homology_gmodule(sa, k, chain_homology(ChainComplex::of(sa.complex), k));
}

GModule homology_gmodule(const SimplicialAction& sa, int k, const HomologyBasis& basis)
{
    const int nt = static_cast<int>(basis.torsion_generators.size());
    const int nf = static_cast<int>(basis.free_generators.size());
    const int n = nt + nf;
    IntMatrix relations(n, nt);
    for (int i = 0; i < nt; ++i)
        relations(i, i) = basis.torsion_orders[i];

    ChainAction ca = chain_action(sa);
    std::vector<IntMatrix> action;
    action.reserve(sa.group.order);
    for (int g = 0; g < sa.group.order; ++g) {
        IntMatrix a(n, n);
        for (int j = 0; j < n; ++j) {
            const std::vector<Int>& gen =
                j < nt ? basis.torsion_generators[j] : basis.free_generators[j - nt];
            // push the generator cycle through the chain map of g
            std::vector<Int> image(basis.ambient, Int(0));
            for (int i = 0; i < basis.ambient; ++i)
                if (gen[i] != 0)
                    image[ca.perm[g][k][i]] += Int(ca.sign[g][k][i]) * gen[i];
            std::vector<Int> coords = basis.class_coordinates(image);
            for (int i = 0; i < n; ++i)
                a(i, j) = coords[i];
        }
        action.push_back(std::move(a));
    }
    return make_gmodule(sa.group, n, std::move(relations), std::move(action));
}

// ---------------------------------------------------------------------------
// normalized bar complex

namespace {

// Tuples of non-identity elements, indexed as base-(order-1) digit strings.
struct BarLayout {
    const FiniteGroup& g;
    const GModule& m;
    std::vector<int> elems; // non-identity elements
    std::vector<int> slot;  // element -> digit, -1 for the identity

    BarLayout(const FiniteGroup& grp, const GModule& mod) : g(grp), m(mod)
    {
        slot.assign(g.order, -1);
        for (int x = 0; x < g.order; ++x)
            if (x != g.identity) {
                slot[x] = static_cast<int>(elems.size());
                elems.push_back(x);
            }
    }

    long long tuple_count(int k) const
    {
        long long c = 1;
        for (int i = 0; i < k; ++i)
            c *= static_cast<long long>(elems.size());
        return c;
    }
    long long rank(int k) const { return tuple_count(k) * m.gens; }

    std::vector<int> tuple(int k, long long index) const
    {
        std::vector<int> t(k);
        for (int i = k - 1; i >= 0; --i) {
            t[i] = elems[index % elems.size()];
            index /= static_cast<long long>(elems.size());
        }
        return t;
    }
    // -1 when the tuple is degenerate (contains the identity)
    long long tuple_index(const std::vector<int>& t) const
    {
        long long idx = 0;
        for (int x : t) {
            if (slot[x] < 0)
                return -1;
            idx = idx * static_cast<long long>(elems.size()) + slot[x];
        }
        return idx;
    }

    SparseMat relation_block(int k) const
    {
        long long tuples = tuple_count(k);
        SparseMat r(static_cast<int>(tuples * m.gens),
                    static_cast<int>(tuples * m.relations.cols()));
        for (long long t = 0; t < tuples; ++t)
            for (int j = 0; j < m.relations.cols(); ++j)
                for (int i = 0; i < m.gens; ++i)
                    if (m.relations(i, j) != 0)
                        r.add(static_cast<int>(t * m.gens + i),
                              static_cast<int>(t * m.relations.cols() + j), m.relations(i, j));
        return r;
    }

    // d(m (x) [g1|...|gk]) = m.g1 (x) [g2|..] + sum (-1)^i m (x) [..|gi gi+1|..]
    //                        + (-1)^k m (x) [..|gk-1]; right action m.g = g^-1 m.
    SparseMat homology_differential(int k) const
    {
        SparseMat d(static_cast<int>(rank(k - 1)), static_cast<int>(rank(k)));
        for (long long ti = 0; ti < tuple_count(k); ++ti) {
            std::vector<int> t = tuple(k, ti);
            // first face, twisted by the module action
            {
                std::vector<int> rest(t.begin() + 1, t.end());
                long long ri = tuple_index(rest);
                const IntMatrix& a = m.action[g.inv(t[0])];
                for (int j = 0; j < m.gens; ++j)
                    for (int i = 0; i < m.gens; ++i)
                        if (a(i, j) != 0)
                            d.add(static_cast<int>(ri * m.gens + i),
                                  static_cast<int>(ti * m.gens + j), a(i, j));
            }
            int sign = -1;
            for (int cut = 0; cut + 1 < k; ++cut) {
                std::vector<int> merged;
                merged.reserve(k - 1);
                for (int i = 0; i < cut; ++i)
                    merged.push_back(t[i]);
                merged.push_back(g.mul(t[cut], t[cut + 1]));
                for (int i = cut + 2; i < k; ++i)
                    merged.push_back(t[i]);
                long long mi = tuple_index(merged);
                if (mi >= 0)
                    for (int j = 0; j < m.gens; ++j)
                        d.add(static_cast<int>(mi * m.gens + j),
                              static_cast<int>(ti * m.gens + j), sign);
                sign = -sign;
            }
            {
                std::vector<int> head(t.begin(), t.end() - 1);
                long long hi = tuple_index(head);
                for (int j = 0; j < m.gens; ++j)
                    d.add(static_cast<int>(hi * m.gens + j), static_cast<int>(ti * m.gens + j),
                          sign);
            }
        }
        return d;
    }

    // (df)(g1,...,gk) = g1.f(g2,..) + sum (-1)^i f(..|gi gi+1|..) + (-1)^k f(..gk-1)
    SparseMat cohomology_differential(int k) const // C^(k-1) -> C^k
    {
        SparseMat d(static_cast<int>(rank(k)), static_cast<int>(rank(k - 1)));
        for (long long ti = 0; ti < tuple_count(k); ++ti) {
            std::vector<int> t = tuple(k, ti);
            {
                std::vector<int> rest(t.begin() + 1, t.end());
                long long ri = tuple_index(rest);
                const IntMatrix& a = m.action[t[0]];
                for (int j = 0; j < m.gens; ++j)
                    for (int i = 0; i < m.gens; ++i)
                        if (a(i, j) != 0)
                            d.add(static_cast<int>(ti * m.gens + i),
                                  static_cast<int>(ri * m.gens + j), a(i, j));
            }
            int sign = -1;
            for (int cut = 0; cut + 1 < k; ++cut) {
                std::vector<int> merged;
                merged.reserve(k - 1);
                for (int i = 0; i < cut; ++i)
                    merged.push_back(t[i]);
                merged.push_back(g.mul(t[cut], t[cut + 1]));
                for (int i = cut + 2; i < k; ++i)
                    merged.push_back(t[i]);
                long long mi = tuple_index(merged);
                if (mi >= 0)
                    for (int j = 0; j < m.gens; ++j)
                        d.add(static_cast<int>(ti * m.gens + j),
                              static_cast<int>(mi * m.gens + j), sign);
                sign = -sign;
            }
            {
                std::vector<int> head(t.begin(), t.end() - 1);
                long long hi = tuple_index(head);
                for (int j = 0; j < m.gens; ++j)
                    d.add(static_cast<int>(ti * m.gens + j), static_cast<int>(hi * m.gens + j),
                          sign);
            }
        }
        return d;
    }

    void guard(int max_degree) const
    {
        long long full = 1;
        for (int i = 0; i < max_degree; ++i) {
            full *= g.order;
            guard_chain_rank(full * std::max(m.gens, 1), "bar resolution");
        }
    }
};

} // namespace

namespace {

// Degree of a free complex A --in--> B --out--> C straight from invariant
// factors: free rank of ker(out)/im(in) plus the torsion of the in-map.
AbelianGroup free_complex_degree(int middle_rank, const SparseMat& out_map,
                                 const SparseMat& in_map)
{
    int r_out = matrix_rank(out_map);
    std::vector<Int> in_factors = snf_invariant_factors(in_map);
    std::vector<Int> torsion;
    for (Int& d : in_factors)
        if (d >= 2)
            torsion.push_back(std::move(d));
    return AbelianGroup(middle_rank - r_out - static_cast<int>(in_factors.size()),
                        std::move(torsion));
}

} // namespace

AbelianGroup bar_group_homology(const FiniteGroup& g, const GModule& m, int k)
{
    if (k < 0)
        throw ValidationError("group homology: degree must be nonnegative");
    if (m.gens == 0)
        return AbelianGroup::zero();
    BarLayout bar(g, m);
    bar.guard(k + 1);
    SparseMat out_map = k == 0 ? SparseMat(0, static_cast<int>(bar.rank(0)))
                               : bar.homology_differential(k);
    SparseMat in_map = bar.homology_differential(k + 1);
    if (m.relations.cols() == 0) {
        // free module: the bar complex is a free chain complex with exact
        // composites, so the sparse rank route applies and scales much further
        return free_complex_degree(static_cast<int>(bar.rank(k)), out_map, in_map);
    }
    return presented_homology(out_map, in_map, bar.relation_block(k),
                              k == 0 ? SparseMat(0, 0) : bar.relation_block(k - 1))
        .group;
}

AbelianGroup bar_group_cohomology(const FiniteGroup& g, const GModule& m, int k)
{
    if (k < 0)
        throw ValidationError("group cohomology: degree must be nonnegative");
    if (m.gens == 0)
        return AbelianGroup::zero();
    BarLayout bar(g, m);
    bar.guard(k + 1);
    SparseMat out_map = bar.cohomology_differential(k + 1); // C^k -> C^(k+1)
    SparseMat in_map = k == 0 ? SparseMat(static_cast<int>(bar.rank(0)), 0)
                              : bar.cohomology_differential(k); // C^(k-1) -> C^k
    if (m.relations.cols() == 0)
        return free_complex_degree(static_cast<int>(bar.rank(k)), out_map, in_map);
    return presented_homology(out_map, in_map, bar.relation_block(k), bar.relation_block(k + 1))
        .group;
}

// ---------------------------------------------------------------------------
// periodic resolution for cyclic groups

namespace {

struct PeriodicMaps {
    IntMatrix shifted; // A - I
    IntMatrix norm;    // I + A + ... + A^(n-1)
};

PeriodicMaps periodic_maps(int n, const GModule& m, int generator)
{
    const IntMatrix& a = m.action[generator];
    PeriodicMaps maps{a - IntMatrix::identity(m.gens), IntMatrix(m.gens, m.gens)};
    IntMatrix power = IntMatrix::identity(m.gens);
    for (int i = 0; i < n; ++i) {
        for (int r = 0; r < m.gens; ++r)
            for (int c = 0; c < m.gens; ++c)
                maps.norm(r, c) += power(r, c);
        power = power * a;
    }
    return maps;
}

int cyclic_generator_or_throw(int n, const GModule& m)
{
    if (m.group.order != n)
        throw ValidationError("cyclic resolution: module is not over a group of order " +
                              std::to_string(n));
    auto gen = m.group.cyclic_generator();
    if (!gen)
        throw ValidationError("cyclic resolution: the group is not cyclic");
    return *gen;
}

AbelianGroup periodic_degree(const GModule& m, const IntMatrix& out_map, const IntMatrix& in_map)
{
    SparseMat rel = SparseMat::from_dense(m.relations);
    return presented_homology(SparseMat::from_dense(out_map), SparseMat::from_dense(in_map), rel,
                              rel)
        .group;
}

} // namespace

AbelianGroup cyclic_group_homology(int n, const GModule& m, int k)
{
    if (k < 0)
        throw ValidationError("group homology: degree must be nonnegative");
    if (m.gens == 0)
        return AbelianGroup::zero();
    int gen = cyclic_generator_or_throw(n, m);
    PeriodicMaps maps = periodic_maps(n, m, gen);
    IntMatrix zero_out(0, m.gens);
    // ... -> M --norm--> M --(A-I)--> M, ending in degree 0
    if (k == 0)
        return periodic_degree(m, zero_out, maps.shifted);
    if (k % 2 == 1)
        return periodic_degree(m, maps.shifted, maps.norm);
    return periodic_degree(m, maps.norm, maps.shifted);
}

AbelianGroup cyclic_group_cohomology(int n, const GModule& m, int k)
{
    if (k < 0)
        throw ValidationError("group cohomology: degree must be nonnegative");
    if (m.gens == 0)
        return AbelianGroup::zero();
    int gen = cyclic_generator_or_throw(n, m);
    PeriodicMaps maps = periodic_maps(n, m, gen);
    IntMatrix zero_in(m.gens, 0);
    // M --(A-I)--> M --norm--> M --(A-I)--> ..., starting in degree 0
    if (k == 0)
        return periodic_degree(m, maps.shifted, zero_in);
    if (k % 2 == 1)
        return periodic_degree(m, maps.norm, maps.shifted);
    return periodic_degree(m, maps.shifted, maps.norm);
}

AbelianGroup group_homology(const FiniteGroup& g, const GModule& m, int k, ResolutionChoice choice)
{
    if (!choice.force_bar && g.cyclic_generator())
        return cyclic_group_homology(g.order, m, k);
    return bar_group_homology(g, m, k);
}

AbelianGroup group_cohomology(const FiniteGroup& g, const GModule& m, int k,
                              ResolutionChoice choice)
{
    if (!choice.force_bar && g.cyclic_generator())
        return cyclic_group_cohomology(g.order, m, k);
    return bar_group_cohomology(g, m, k);
}

AbelianGroup coinvariants(const GModule& m)
{
    // M / (lattice spanned by relations and all (A_g - I) columns)
    SparseMat quot(m.gens, m.relations.cols() + m.group.order * m.gens);
    for (int j = 0; j < m.relations.cols(); ++j)
        for (int i = 0; i < m.gens; ++i)
            if (m.relations(i, j) != 0)
                quot.add(i, j, m.relations(i, j));
    int col = m.relations.cols();
    for (int g = 0; g < m.group.order; ++g)
        for (int j = 0; j < m.gens; ++j, ++col)
            for (int i = 0; i < m.gens; ++i) {
                Int v = m.action[g](i, j) - (i == j ? 1 : 0);
                if (v != 0)
                    quot.add(i, col, v);
            }
    std::vector<Int> factors = snf_invariant_factors(quot);
    std::vector<Int> torsion;
    for (Int& d : factors)
        if (d >= 2)
            torsion.push_back(std::move(d));
    return AbelianGroup(m.gens - static_cast<int>(factors.size()), std::move(torsion));
}

AbelianGroup invariants(const GModule& m)
{
    // kernel of the stacked (A_g - I) maps on the presented module: solved as
    // homology in degree 0 of M --stack--> M^|G| with relation blocks
    SparseMat stacked(m.group.order * m.gens, m.gens);
    for (int g = 0; g < m.group.order; ++g)
        for (int j = 0; j < m.gens; ++j)
            for (int i = 0; i < m.gens; ++i) {
                Int v = m.action[g](i, j) - (i == j ? 1 : 0);
                if (v != 0)
                    stacked.add(g * m.gens + i, j, v);
            }
    SparseMat rel_here = SparseMat::from_dense(m.relations);
    SparseMat rel_out(m.group.order * m.gens, m.group.order * m.relations.cols());
    for (int g = 0; g < m.group.order; ++g)
        for (int j = 0; j < m.relations.cols(); ++j)
            for (int i = 0; i < m.gens; ++i)
                if (m.relations(i, j) != 0)
                    rel_out.add(g * m.gens + i, g * m.relations.cols() + j, m.relations(i, j));
    return presented_homology(stacked, rel_here, SparseMat(m.gens, 0), rel_out).group;
}

// ---------------------------------------------------------------------------
// H^2 classification

H2Classification h2_classes(const FiniteGroup& g, const GModule& m)
{
    H2Classification cls;
    cls.grp = g;
    cls.group_order = g.order;
    cls.module_gens = m.gens;
    cls.module_action = m.action;

    BarLayout bar(g, m);
    bar.guard(3);
    cls.reduction = presented_homology(bar.cohomology_differential(3),
                                       bar.cohomology_differential(2), bar.relation_block(2),
                                       bar.relation_block(3));
    cls.group = cls.reduction.group;

    cls.two_tuples.clear();
    cls.two_tuple_index.assign(static_cast<size_t>(g.order) * g.order, -1);
    for (long long t = 0; t < bar.tuple_count(2); ++t) {
        std::vector<int> tup = bar.tuple(2, t);
        cls.two_tuple_index[tup[0] * g.order + tup[1]] = static_cast<int>(t);
        cls.two_tuples.push_back(std::move(tup));
    }

    for (const auto& gen : cls.reduction.torsion_generators)
        cls.generator_cocycles.push_back(gen);
    for (const auto& gen : cls.reduction.free_generators)
        cls.generator_cocycles.push_back(gen);

    cls.enumerated = cls.group.free_rank == 0;
    if (!cls.enumerated)
        return cls;

    const int nt = static_cast<int>(cls.reduction.torsion_orders.size());
    const int ambient = cls.reduction.ambient;
    std::vector<Int> counter(nt, Int(0));
    for (;;) {
        CocycleClass c;
        c.coords = counter;
        std::vector<Int> vec(ambient, Int(0));
        bool zero = true;
        for (int i = 0; i < nt; ++i) {
            if (counter[i] == 0)
                continue;
            zero = false;
            const auto& gen = cls.reduction.torsion_generators[i];
            for (int a = 0; a < ambient; ++a)
                vec[a] += counter[i] * gen[a];
        }
        c.is_split = zero;
        c.order = 1;
        for (int i = 0; i < nt; ++i) {
            Int o = cls.reduction.torsion_orders[i];
            Int e = boost::multiprecision::gcd(counter[i], o);
            Int part = o / e;
            c.order = c.order / boost::multiprecision::gcd(c.order, part) * part;
        }
        c.table.assign(static_cast<size_t>(g.order) * g.order, std::vector<Int>(m.gens, Int(0)));
        for (size_t pair = 0; pair < c.table.size(); ++pair) {
            int t = cls.two_tuple_index[pair];
            if (t < 0)
                continue;
            for (int i = 0; i < m.gens; ++i)
                c.table[pair][i] = vec[static_cast<size_t>(t) * m.gens + i];
        }
        cls.classes.push_back(std::move(c));
        // odometer over the torsion coordinates
        int pos = nt - 1;
        while (pos >= 0) {
            counter[pos] += 1;
            if (counter[pos] < cls.reduction.torsion_orders[pos])
                break;
            counter[pos] = 0;
            --pos;
        }
        if (pos < 0)
            break;
    }
    return cls;
}

std::vector<Int> H2Classification::class_of(const std::vector<Int>& cocycle) const
{
    return reduction.class_coordinates(cocycle);
}

std::vector<Int> H2Classification::cochain_vector(
    const std::vector<std::vector<Int>>& table) const
{
    std::vector<Int> vec(reduction.ambient, Int(0));
    for (size_t pair = 0; pair < two_tuple_index.size(); ++pair) {
        int t = two_tuple_index[pair];
        if (t < 0)
            continue;
        internal_check(static_cast<int>(table[pair].size()) == module_gens,
                       "cochain_vector: bad table entry");
        for (int i = 0; i < module_gens; ++i)
            vec[static_cast<size_t>(t) * module_gens + i] = table[pair][i];
    }
    return vec;
}

std::vector<Int> H2Classification::coboundary(
    const std::vector<std::vector<Int>>& one_cochain) const
{
    // (df)(g,h) = g.f(h) - f(gh) + f(g) on non-degenerate pairs; the cochain
    // must be normalized (f(e) = 0)
    internal_check(static_cast<int>(one_cochain.size()) == group_order,
                   "coboundary: one value per group element required");
    for (const Int& x : one_cochain[grp.identity])
        internal_check(x == 0, "coboundary: cochain is not normalized");
    std::vector<Int> vec(reduction.ambient, Int(0));
    for (size_t t = 0; t < two_tuples.size(); ++t) {
        int a = two_tuples[t][0], b = two_tuples[t][1];
        std::vector<Int> val = module_action[a].apply(one_cochain[b]);
        const std::vector<Int>& prod = one_cochain[grp.mul(a, b)];
        for (int i = 0; i < module_gens; ++i)
            vec[t * module_gens + i] += val[i] - prod[i] + one_cochain[a][i];
    }
    return vec;
}

bool is_two_cocycle(const GModule& m, const std::vector<std::vector<Int>>& table)
{
    const FiniteGroup& g = m.group;
    internal_check(static_cast<int>(table.size()) == g.order * g.order,
                   "is_two_cocycle: table size mismatch");
    LatticeSolver rel(m.relations);
    auto at = [&](int a, int b) -> const std::vector<Int>& { return table[a * g.order + b]; };
    for (int a = 0; a < g.order; ++a)
        for (int b = 0; b < g.order; ++b)
            for (int c = 0; c < g.order; ++c) {
                // a.c(b,c) - c(ab,c) + c(a,bc) - c(a,b) = 0 mod relations
                std::vector<Int> v = m.action[a].apply(at(b, c));
                const auto& t1 = at(g.mul(a, b), c);
                const auto& t2 = at(a, g.mul(b, c));
                const auto& t3 = at(a, b);
                for (int i = 0; i < m.gens; ++i)
                    v[i] += -t1[i] + t2[i] - t3[i];
                bool zero = std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; });
                if (!zero && !rel.contains(v))
                    return false;
            }
    return true;
}

} // namespace asphera
