#include "asphera/borel.hpp"

#include <doctest.h>

using namespace asphera;

namespace {

SimplicialAction gamma6_shift_action()
{
    FiniteGroup z6 = cyclic_group(6);
    Poset cp = coset_poset(z6);
    std::vector<Coset> cosets;
    for (const auto& e : cp.elements())
        cosets.push_back(*e.coset);
    return simplicial_action(induced_poset_action(shift_action(z6, cosets), cp));
}

} // namespace

TEST_SUITE("borel")
{
    TEST_CASE("join models")
    {
        // two levels of a 2-element group: the 4-cycle with the antipodal action
        JoinComplex square = milnor_join(cyclic_group(2), 2);
        CHECK(square.complex.count(0) == 4);
        CHECK(square.complex.count(1) == 4);
        CHECK(square.complex.dim() == 1);
        CHECK(homology_group(square.complex, 1) == AbelianGroup::free_of_rank(1));
        CHECK(is_free_action(square.action).free);

        // one level: a discrete pair
        JoinComplex pair = milnor_join(cyclic_group(2), 1);
        CHECK(pair.complex.count(0) == 2);
        CHECK(pair.complex.dim() == 0);

        // two levels of Z_6: complete bipartite on 6 + 6 vertices
        JoinComplex bip = milnor_join(cyclic_group(6), 2);
        CHECK(bip.complex.count(0) == 12);
        CHECK(bip.complex.count(1) == 36);
        CHECK(bip.complex.dim() == 1);
    }

    TEST_CASE("join connectivity")
    {
        // reduced homology vanishes through degree m-2
        for (int order = 2; order <= 6; ++order)
            for (int m = 2; m <= 4; ++m) {
                JoinComplex join = milnor_join(cyclic_group(order), m);
                CHECK(components(join.complex) == 1);
                CHECK(homology_group(join.complex, 0) == AbelianGroup::free_of_rank(1));
                for (int k = 1; k <= m - 2; ++k)
                    CHECK(homology_group(join.complex, k) == AbelianGroup::zero());
            }
        // non-cyclic group too
        JoinComplex jd = milnor_join(dihedral_group(3), 3);
        CHECK(homology_group(jd.complex, 1) == AbelianGroup::zero());
    }

    TEST_CASE("staircase products")
    {
        // edge x edge: a square split into two triangles
        SimplicialComplex edge = SimplicialComplex::closure(2, {{0, 1}});
        SimplicialComplex sq = staircase_product(edge, edge);
        CHECK(sq.count(0) == 4);
        CHECK(sq.count(1) == 5);
        CHECK(sq.count(2) == 2);
        CHECK(euler_characteristic(sq) == 1);

        // product with a point is the complex itself
        SimplicialComplex hex = cycle_complex(6);
        SimplicialComplex same = staircase_product(hex, point_complex());
        CHECK(same.count(0) == 6);
        CHECK(same.count(1) == 6);
        CHECK(same.dim() == 1);

        // Euler characteristics multiply
        JoinComplex sq2 = milnor_join(cyclic_group(2), 2);
        SimplicialComplex torusish = staircase_product(hex, sq2.complex);
        CHECK(euler_characteristic(torusish) == 0);
        CHECK(euler_characteristic(torusish) ==
              euler_characteristic(hex) * euler_characteristic(sq2.complex));
        JoinComplex oct = milnor_join(cyclic_group(2), 3);
        SimplicialComplex prod2 = staircase_product(cycle_complex(3), oct.complex);
        CHECK(euler_characteristic(prod2) ==
              euler_characteristic(cycle_complex(3)) * euler_characteristic(oct.complex));
        // hexagon x 4-cycle is a torus, triangle x octahedron is S^1 x S^2
        CHECK(homology_group(torusish, 1) == AbelianGroup::free_of_rank(2));
        CHECK(homology_group(torusish, 2) == AbelianGroup::free_of_rank(1));
        CHECK(homology_group(prod2, 2) == AbelianGroup::free_of_rank(1));
        CHECK(homology_group(prod2, 3) == AbelianGroup::free_of_rank(1));
    }

    TEST_CASE("diagonal actions on the staircase triangulation")
    {
        // trivial action on the hexagon pairs with the free join action
        SimplicialComplex hex = cycle_complex(6);
        FiniteGroup z2 = cyclic_group(2);
        JoinComplex join = milnor_join(z2, 2);
        SimplicialComplex prod = staircase_product(hex, join.complex);
        SimplicialAction triv = trivial_simplicial_action(z2, hex);
        CHECK_NOTHROW(staircase_diagonal_action(prod, triv, join.action));

        // the reflection is not order-compatible with the join translation:
        // some chain images are not chains, so the combination is rejected
        CHECK_THROWS_AS(
            staircase_diagonal_action(prod, reflection_action(6), join.action),
            ValidationError);
    }

    TEST_CASE("chain-level product model")
    {
        // ranks agree with the staircase triangulation's euler characteristic
        SimplicialComplex hex = cycle_complex(6);
        FiniteGroup z2 = cyclic_group(2);
        JoinComplex join = milnor_join(z2, 2);
        ProductChainModel model =
            product_chain_model(hex, reflection_action(6), join.complex, join.action, -1);
        CHECK(model.complex.euler_characteristic() ==
              euler_characteristic(hex) * euler_characteristic(join.complex));
        // cell counts: vertices 6*4, edges 6*4 + 6*4, squares 6*4
        CHECK(model.complex.rank(0) == 24);
        CHECK(model.complex.rank(1) == 48);
        CHECK(model.complex.rank(2) == 24);
    }

    TEST_CASE("homotopy quotient of a point")
    {
        // the quotient of E Z_2 alone: truncated infinite projective space
        SimplicialAction fix = trivial_simplicial_action(cyclic_group(2), point_complex());
        BorelResult r = borel_homology(point_complex(), fix, 5, 3);
        CHECK(r.valid_degree_bound == 3);
        REQUIRE(r.groups.size() == 4);
        CHECK(r.groups[0] == AbelianGroup::free_of_rank(1));
        CHECK(r.groups[1] == AbelianGroup(0, {Int(2)}));
        CHECK(r.groups[2] == AbelianGroup::zero());
        CHECK(r.groups[3] == AbelianGroup(0, {Int(2)}));

        // requesting beyond the certified bound flags the extra degrees
        BorelResult flagged = borel_homology(point_complex(), fix, 3, 3);
        CHECK(flagged.valid_degree_bound == 1);
        CHECK(flagged.groups.size() == 2);
        CHECK(flagged.unreliable_degrees == std::vector<int>{2, 3});
    }

    TEST_CASE("homotopy quotients of the three hexagon involutions")
    {
        SimplicialComplex hex = cycle_complex(6);
        FiniteGroup z2 = cyclic_group(2);

        BorelResult trivial = borel_homology(hex, trivial_simplicial_action(z2, hex), 4, 1);
        REQUIRE(trivial.groups.size() == 2);
        CHECK(trivial.groups[0] == AbelianGroup::free_of_rank(1));
        CHECK(trivial.groups[1] == AbelianGroup(1, {Int(2)}));

        BorelResult antipodal = borel_homology(hex, rotation_action(6, 2, 3), 4, 1);
        CHECK(antipodal.groups[1] == AbelianGroup::free_of_rank(1));

        BorelResult reflection = borel_homology(hex, reflection_action(6), 4, 1);
        CHECK(reflection.groups[1] == AbelianGroup(0, {Int(2), Int(2)}));
    }

    TEST_CASE("homotopy quotient of the coset complex shift")
    {
        SimplicialAction sa = gamma6_shift_action();
        BorelResult r = borel_homology(sa.complex, sa, 3, 1);
        REQUIRE(r.groups.size() == 2);
        CHECK(r.groups[0] == AbelianGroup::free_of_rank(1));
        CHECK(r.groups[1] == AbelianGroup(0, {Int(6)}));
    }

    TEST_CASE("free actions: homotopy quotient matches the genuine quotient")
    {
        SimplicialAction antipodal = rotation_action(6, 2, 3);
        QuotientChainComplex q = coinvariant_complex(antipodal.complex, antipodal);
        BorelResult r = borel_homology(antipodal.complex, antipodal, 4, 2);
        for (int k = 0; k <= 2; ++k)
            CHECK(r.groups[k] == chain_homology_group(q.complex, k));

        SimplicialAction rot3 = rotation_action(3, 3, 1);
        QuotientChainComplex q3 = coinvariant_complex(rot3.complex, rot3);
        BorelResult r3 = borel_homology(rot3.complex, rot3, 4, 2);
        for (int k = 0; k <= 2; ++k)
            CHECK(r3.groups[k] == chain_homology_group(q3.complex, k));
    }

    TEST_CASE("certified degrees are stable in the truncation level")
    {
        SimplicialAction fix = trivial_simplicial_action(cyclic_group(2), point_complex());
        BorelResult a = borel_homology(point_complex(), fix, 4, 2);
        BorelResult b = borel_homology(point_complex(), fix, 5, 2);
        CHECK(a.groups == b.groups);

        SimplicialAction refl = reflection_action(6);
        BorelResult c = borel_homology(refl.complex, refl, 4, 2);
        BorelResult d = borel_homology(refl.complex, refl, 5, 2);
        CHECK(c.groups == d.groups);
    }

    TEST_CASE("borel complex of the full product")
    {
        // full (untruncated) complex for a small case; degree-1 homology
        // matches the truncated computation
        SimplicialComplex hex = cycle_complex(6);
        ChainComplex full = borel_complex(hex, reflection_action(6), 3);
        CHECK(chain_homology_group(full, 0) == AbelianGroup::free_of_rank(1));
        CHECK(chain_homology_group(full, 1) == AbelianGroup(0, {Int(2), Int(2)}));
    }
}
