#include "asphera/topo.hpp"

#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

using namespace asphera;

namespace {

// exhaustive coset enumeration oracle, independent of the poset machinery
std::pair<int, int> coset_poset_counts_brute(const FiniteGroup& g)
{
    std::set<std::vector<int>> cosets;
    for (const auto& h : all_subgroups(g)) {
        if (h.size() == g.order)
            continue;
        for (const auto& c : left_cosets(g, h))
            cosets.insert(c.members);
    }
    std::vector<std::vector<int>> list(cosets.begin(), cosets.end());
    int covers = 0;
    auto strictly_inside = [](const std::vector<int>& a, const std::vector<int>& b) {
        return a.size() < b.size() && std::includes(b.begin(), b.end(), a.begin(), a.end());
    };
    for (const auto& a : list)
        for (const auto& b : list) {
            if (!strictly_inside(a, b))
                continue;
            bool cover = true;
            for (const auto& c : list)
                if (strictly_inside(a, c) && strictly_inside(c, b))
                    cover = false;
            if (cover)
                ++covers;
        }
    return {static_cast<int>(list.size()), covers};
}

// chain counter by closure DP, independent of the DFS enumeration
long long count_chains_of_length(const Poset& p, int len)
{
    // dp[v][l] = chains of length l ending at v
    std::vector<std::vector<long long>> dp(p.size(), std::vector<long long>(len + 1, 0));
    long long total = 0;
    for (int l = 1; l <= len; ++l)
        for (int v = 0; v < p.size(); ++v) {
            if (l == 1) {
                dp[v][1] = 1;
            } else {
                for (int u = 0; u < p.size(); ++u)
                    if (p.less(u, v))
                        dp[v][l] += dp[u][l - 1];
            }
            if (l == len)
                total += dp[v][l];
        }
    return total;
}

bool posets_isomorphic_by(const Poset& a, const Poset& b,
                          const std::map<std::vector<int>, int>& b_index,
                          const std::vector<std::vector<int>>& image_sets)
{
    if (a.size() != b.size())
        return false;
    std::vector<int> to_b(a.size());
    for (int i = 0; i < a.size(); ++i) {
        auto it = b_index.find(image_sets[i]);
        if (it == b_index.end())
            return false;
        to_b[i] = it->second;
    }
    for (int x = 0; x < a.size(); ++x)
        for (int y = 0; y < a.size(); ++y)
            if (a.less(x, y) != b.less(to_b[x], to_b[y]))
                return false;
    return true;
}

} // namespace

TEST_SUITE("lattice")
{
    TEST_CASE("coset poset counts")
    {
        Poset p6 = coset_poset(cyclic_group(6));
        CHECK(p6.size() == 11);
        CHECK(p6.hasse().size() == 12);

        Poset p2 = coset_poset(cyclic_group(2));
        CHECK(p2.size() == 2);
        CHECK(p2.hasse().empty());

        // S_3 via the exhaustive oracle
        FiniteGroup s3 = dihedral_group(3);
        auto [elems, covers] = coset_poset_counts_brute(s3);
        CHECK(elems == 17);
        CHECK(covers == 24);
        Poset ps3 = coset_poset(s3);
        CHECK(ps3.size() == elems);
        CHECK(static_cast<int>(ps3.hasse().size()) == covers);
    }

    TEST_CASE("coset poset counts for squarefree pq")
    {
        for (auto [p, q] : {std::pair{2, 3}, {2, 5}, {3, 5}}) {
            Poset cp = coset_poset(cyclic_group(p * q));
            CHECK(cp.size() == p * q + p + q);
            CHECK(static_cast<int>(cp.hasse().size()) == 2 * p * q);
        }
    }

    TEST_CASE("subgroup lattice")
    {
        Poset l6 = subgroup_lattice(cyclic_group(6));
        CHECK(l6.size() == 2);
        CHECK(l6.hasse().empty());

        Poset ld6 = subgroup_lattice(dihedral_group(3));
        CHECK(ld6.size() == 4);
        CHECK(ld6.hasse().empty());

        Poset l4 = subgroup_lattice(cyclic_group(4));
        CHECK(l4.size() == 1);
    }

    TEST_CASE("segments")
    {
        Poset cp = coset_poset(cyclic_group(6));
        // the element {0} (coset of the trivial subgroup at 0)
        int zero = -1;
        for (int i = 0; i < cp.size(); ++i)
            if (cp.elements()[i].coset && cp.elements()[i].coset->members == std::vector<int>{0})
                zero = i;
        REQUIRE(zero >= 0);
        // cosets strictly containing {0}: {0,3} and {0,2,4}
        Poset above = segment(cp, SegmentBound::element(zero), SegmentBound::top());
        CHECK(above.size() == 2);
        std::set<std::vector<int>> sets;
        for (const auto& e : above.elements())
            sets.insert(e.coset->members);
        CHECK(sets == std::set<std::vector<int>>{{0, 3}, {0, 2, 4}});

        // between an element and one of its covers there is nothing
        auto [lo, hi] = cp.hasse().front();
        CHECK(segment(cp, SegmentBound::element(lo), SegmentBound::element(hi)).size() == 0);

        // full segment reproduces the poset
        CHECK(segment(cp, SegmentBound::bottom(), SegmentBound::top()).size() == cp.size());

        CHECK_THROWS_AS(segment(cp, SegmentBound::element(hi), SegmentBound::element(lo)),
                        ValidationError);
        CHECK_THROWS_AS(segment(cp, SegmentBound::top(), SegmentBound::bottom()),
                        ValidationError);
    }

    TEST_CASE("translated segments are isomorphic")
    {
        // [H1, H2] vs [g H1, g H2] inside the coset poset of Z_12
        FiniteGroup z12 = cyclic_group(12);
        Poset cp = coset_poset(z12);
        auto find = [&](const std::vector<int>& members) {
            for (int i = 0; i < cp.size(); ++i)
                if (cp.elements()[i].coset && cp.elements()[i].coset->members == members)
                    return i;
            return -1;
        };
        int e0 = find({0});
        int h2 = find({0, 2, 4, 6, 8, 10});
        int e1 = find({1});
        int gh2 = find({1, 3, 5, 7, 9, 11});
        REQUIRE(e0 >= 0);
        REQUIRE(h2 >= 0);
        REQUIRE(e1 >= 0);
        REQUIRE(gh2 >= 0);

        Poset seg = segment(cp, SegmentBound::element(e0), SegmentBound::element(h2));
        Poset tseg = segment(cp, SegmentBound::element(e1), SegmentBound::element(gh2));
        CHECK(seg.size() == 2); // {0,6} and {0,4,8}
        CHECK(tseg.size() == seg.size());

        // left translation x -> 1 + x gives the isomorphism
        std::map<std::vector<int>, int> target_index;
        for (int i = 0; i < tseg.size(); ++i)
            target_index[tseg.elements()[i].coset->members] = i;
        std::vector<std::vector<int>> images(seg.size());
        for (int i = 0; i < seg.size(); ++i) {
            for (int m : seg.elements()[i].coset->members)
                images[i].push_back(z12.mul(1, m));
            std::sort(images[i].begin(), images[i].end());
        }
        CHECK(posets_isomorphic_by(seg, tseg, target_index, images));
    }

    TEST_CASE("order complexes")
    {
        // coset poset of Z_6 -> 11 vertices, 12 edges, nothing higher
        Poset cp = coset_poset(cyclic_group(6));
        SimplicialComplex gamma = order_complex(cp);
        CHECK(gamma.count(0) == 11);
        CHECK(gamma.count(1) == 12);
        CHECK(gamma.dim() == 1);

        // subgroup lattice of Z_6 -> two isolated vertices
        SimplicialComplex two = order_complex(subgroup_lattice(cyclic_group(6)));
        CHECK(two.count(0) == 2);
        CHECK(two.dim() == 0);

        // chain a < b < c -> a full triangle
        std::vector<PosetElement> elems{{"a", {}, {}}, {"b", {}, {}}, {"c", {}, {}}};
        std::vector<std::vector<bool>> less{
            {false, true, true}, {false, false, true}, {false, false, false}};
        SimplicialComplex tri = order_complex(Poset(std::move(elems), std::move(less)));
        CHECK(tri.count(0) == 3);
        CHECK(tri.count(1) == 3);
        CHECK(tri.count(2) == 1);

        // simplex counts match the independent chain counter
        for (const FiniteGroup& g : {cyclic_group(12), dihedral_group(4)}) {
            Poset p = coset_poset(g);
            SimplicialComplex k = order_complex(p);
            long long alt = 0;
            int sign = 1;
            for (int d = 0; d <= k.dim(); ++d) {
                CHECK(count_chains_of_length(p, d + 1) == k.count(d));
                alt += sign * static_cast<long long>(k.count(d));
                sign = -sign;
            }
            long long chain_chi = 0;
            sign = 1;
            for (int len = 1; len <= k.dim() + 1; ++len) {
                chain_chi += sign * count_chains_of_length(p, len);
                sign = -sign;
            }
            CHECK(alt == chain_chi);
        }
    }

    TEST_CASE("poset actions preserve order")
    {
        FiniteGroup z6 = cyclic_group(6);
        Poset cp = coset_poset(z6);
        std::vector<Coset> cosets;
        for (const auto& e : cp.elements())
            cosets.push_back(*e.coset);
        GroupAction shift = shift_action(z6, cosets);
        PosetAction pa = induced_poset_action(shift, cp);
        // every element acts as an order automorphism (both directions)
        for (int g = 0; g < z6.order; ++g)
            for (int x = 0; x < cp.size(); ++x)
                for (int y = 0; y < cp.size(); ++y)
                    CHECK(cp.less(x, y) == cp.less(pa.apply(g, x), pa.apply(g, y)));

        // conjugation on the subgroup lattice of the dihedral group of order 6
        FiniteGroup d6 = dihedral_group(3);
        Poset ld = subgroup_lattice(d6);
        std::vector<Subgroup> subs;
        for (const auto& e : ld.elements())
            subs.push_back(*e.subgroup);
        PosetAction conj = induced_poset_action(conjugation_action(d6, subs), ld);
        SimplicialAction sconj = simplicial_action(conj);
        CHECK(sconj.complex.count(0) == 4);
        // r permutes the three order-2 subgroups
        std::set<int> moved;
        for (int i = 0; i < 4; ++i)
            if (sconj.vertex_perms[1][i] != i)
                moved.insert(i);
        CHECK(moved.size() == 3);

        // an order-breaking permutation is rejected: swap a singleton with a
        // larger coset in the shift action's ground set
        std::vector<std::vector<int>> bad = shift.perms;
        int small = -1, large = -1;
        for (int i = 0; i < cp.size(); ++i) {
            if (cp.elements()[i].coset->size() == 1 && small < 0)
                small = i;
            if (cp.elements()[i].coset->size() == 3 && large < 0)
                large = i;
        }
        for (auto& perm : bad)
            std::swap(perm[small], perm[large]);
        // rebuilding the raw action may fail the homomorphism law; construct
        // a transposition action instead, which is a valid group action of Z_2
        FiniteGroup z2 = cyclic_group(2);
        std::vector<int> id(cp.size()), swp(cp.size());
        for (int i = 0; i < cp.size(); ++i)
            id[i] = swp[i] = i;
        std::swap(swp[small], swp[large]);
        GroupAction bad_action = make_action(z2, cp.size(), {id, swp});
        CHECK_THROWS_AS(induced_poset_action(bad_action, cp), ValidationError);
    }

    TEST_CASE("simplicial actions from poset actions")
    {
        FiniteGroup z6 = cyclic_group(6);
        Poset cp = coset_poset(z6);
        std::vector<Coset> cosets;
        for (const auto& e : cp.elements())
            cosets.push_back(*e.coset);
        SimplicialAction sa = simplicial_action(induced_poset_action(shift_action(z6, cosets), cp));
        CHECK(sa.complex.count(0) == 11);
        CHECK(sa.complex.count(1) == 12);

        // trivial action induces the identity everywhere
        SimplicialAction triv = simplicial_action(
            induced_poset_action(trivial_action(z6, cp.size()), cp));
        for (int g = 0; g < 6; ++g)
            for (int v = 0; v < 11; ++v)
                CHECK(triv.vertex_perms[g][v] == v);
    }

    TEST_CASE("prime cyclic groups have empty lattices")
    {
        // no proper nontrivial subgroups at all; everything downstream must
        // cope with the empty poset and the empty complex
        Poset empty = subgroup_lattice(cyclic_group(3));
        CHECK(empty.size() == 0);
        SimplicialComplex k = order_complex(empty);
        CHECK(k.count(0) == 0);
        CHECK(euler_characteristic(k) == 0);
        CHECK(components(k) == 0);
        CHECK(homology_group(k, 0) == AbelianGroup::zero());
        CHECK(segment(empty, SegmentBound::bottom(), SegmentBound::top()).size() == 0);
    }

    TEST_CASE("complex validation")
    {
        CHECK_THROWS_AS(SimplicialComplex::from_strata(3, {{{0}, {1}}, {{0, 2}}}),
                        ValidationError); // vertex 2 missing
        CHECK_THROWS_AS(SimplicialComplex::from_strata(2, {{{0}, {1}}, {{1, 0}}}),
                        ValidationError); // unsorted tuple
        CHECK_THROWS_AS(SimplicialComplex::from_strata(2, {{{0}, {0}}}),
                        ValidationError); // duplicate
        SimplicialComplex k = SimplicialComplex::closure(3, {{0, 1, 2}});
        CHECK(k.count(0) == 3);
        CHECK(k.count(1) == 3);
        CHECK(k.count(2) == 1);
    }
}
