#include "asphera/homology_engine.hpp"
#include "asphera/snf.hpp"

#include "oracles.hpp"

#include <doctest.h>

using namespace asphera;
using asphera::testing::bareiss_det;
using asphera::testing::random_matrix;

namespace {

void check_snf_contract(const IntMatrix& a, const SnfResult& r)
{
    // reconstruction
    CHECK(r.u * a * r.v == r.s);
    // unimodularity via the independent determinant
    Int du = bareiss_det(r.u);
    Int dv = bareiss_det(r.v);
    CHECK((du == 1 || du == -1));
    CHECK((dv == 1 || dv == -1));
    // diagonal, nonnegative, divisibility chain
    Int prev = 0;
    for (int i = 0; i < r.s.rows(); ++i)
        for (int j = 0; j < r.s.cols(); ++j) {
            if (i != j) {
                CHECK(r.s(i, j) == 0);
                continue;
            }
            CHECK(r.s(i, i) >= 0);
            if (prev != 0)
                CHECK((r.s(i, i) == 0 || r.s(i, i) % prev == 0));
            if (r.s(i, i) == 0)
                CHECK((i == 0 || r.s(i - 1, i - 1) >= 0)); // zeros only at the tail
            prev = r.s(i, i) == 0 ? prev : r.s(i, i);
        }
    // no nonzero after a zero on the diagonal
    bool seen_zero = false;
    for (int i = 0; i < std::min(r.s.rows(), r.s.cols()); ++i) {
        if (r.s(i, i) == 0)
            seen_zero = true;
        else
            CHECK(!seen_zero);
    }
}

} // namespace

TEST_SUITE("snf")
{
    TEST_CASE("identity stays diagonal")
    {
        IntMatrix a = IntMatrix::identity(2);
        SnfResult r = smith_normal_form(a);
        CHECK(r.s == IntMatrix::identity(2));
        check_snf_contract(a, r);
    }

    TEST_CASE("diag(2,3) normalizes to diag(1,6)")
    {
        IntMatrix a = IntMatrix::from_rows({{2, 0}, {0, 3}});
        SnfResult r = smith_normal_form(a);
        CHECK(r.s(0, 0) == 1);
        CHECK(r.s(1, 1) == 6);
        check_snf_contract(a, r);
    }

    TEST_CASE("zero matrix")
    {
        IntMatrix a(3, 2);
        SnfResult r = smith_normal_form(a);
        CHECK(r.s.is_zero());
        check_snf_contract(a, r);
    }

    TEST_CASE("random matrices: reconstruction, unimodularity, divisibility")
    {
        std::mt19937_64 rng(20240811);
        for (int trial = 0; trial < 1000; ++trial) {
            IntMatrix a = random_matrix(rng, 8, 9);
            SnfResult r = smith_normal_form(a);
            check_snf_contract(a, r);
            // the sparse front-end agrees with the dense reduction
            std::vector<Int> dense_factors;
            for (int i = 0; i < std::min(r.s.rows(), r.s.cols()); ++i)
                if (r.s(i, i) != 0)
                    dense_factors.push_back(r.s(i, i));
            CHECK(snf_invariant_factors(SparseMat::from_dense(a)) == dense_factors);
        }
    }

    TEST_CASE("mod-p ranks agree with the invariant factors")
    {
        // over F_p the rank drops by exactly the number of factors divisible
        // by p; gaussian elimination mod p is a fully independent route
        auto rank_mod_p = [](const IntMatrix& a, int p) {
            std::vector<std::vector<int>> m(a.rows(), std::vector<int>(a.cols()));
            for (int i = 0; i < a.rows(); ++i)
                for (int j = 0; j < a.cols(); ++j)
                    m[i][j] = static_cast<int>(((a(i, j) % p) + p) % p);
            int rank = 0;
            for (int col = 0; col < a.cols() && rank < a.rows(); ++col) {
                int pivot = -1;
                for (int i = rank; i < a.rows(); ++i)
                    if (m[i][col] != 0) {
                        pivot = i;
                        break;
                    }
                if (pivot < 0)
                    continue;
                std::swap(m[rank], m[pivot]);
                int inv = 1;
                for (int x = 1; x < p; ++x)
                    if (m[rank][col] * x % p == 1)
                        inv = x;
                for (int i = 0; i < a.rows(); ++i) {
                    if (i == rank || m[i][col] == 0)
                        continue;
                    int c = m[i][col] * inv % p;
                    for (int j = col; j < a.cols(); ++j)
                        m[i][j] = ((m[i][j] - c * m[rank][j]) % p + p) % p;
                }
                ++rank;
            }
            return rank;
        };
        std::mt19937_64 rng(31);
        for (int trial = 0; trial < 200; ++trial) {
            IntMatrix a = random_matrix(rng, 7, 9);
            std::vector<Int> factors = snf_invariant_factors(SparseMat::from_dense(a));
            for (int p : {2, 3, 5}) {
                int expected = 0;
                for (const Int& d : factors)
                    if (d % p != 0)
                        ++expected;
                CHECK(rank_mod_p(a, p) == expected);
            }
        }
    }

    TEST_CASE("transform inverses multiply to the identity")
    {
        std::mt19937_64 rng(7);
        for (int trial = 0; trial < 100; ++trial) {
            IntMatrix a = random_matrix(rng, 6, 9);
            SnfTransforms t = snf_transforms(a, true, true, true, true);
            CHECK((*t.u * *t.uinv).is_identity());
            CHECK((*t.vinv * *t.v).is_identity());
            CHECK(*t.u * a * *t.v == t.s);
            CHECK(*t.uinv * t.s * *t.vinv == a);
        }
    }

    TEST_CASE("kernel basis spans the kernel")
    {
        std::mt19937_64 rng(99);
        for (int trial = 0; trial < 200; ++trial) {
            IntMatrix a = random_matrix(rng, 6, 5);
            IntMatrix k = kernel_basis(a);
            for (int j = 0; j < k.cols(); ++j) {
                std::vector<Int> v = k.column(j);
                for (const Int& x : a.apply(v))
                    CHECK(x == 0);
            }
            int rank = static_cast<int>(snf_invariant_factors(SparseMat::from_dense(a)).size());
            CHECK(k.cols() == a.cols() - rank);
        }
    }

    TEST_CASE("lattice solver: membership and coordinates")
    {
        std::mt19937_64 rng(5);
        std::uniform_int_distribution<int> coeff(-4, 4);
        for (int trial = 0; trial < 200; ++trial) {
            IntMatrix gens = random_matrix(rng, 6, 5);
            LatticeSolver solver(gens);
            // random combinations lie in the lattice and coordinates reproduce them
            std::vector<Int> combo(gens.rows(), Int(0));
            for (int j = 0; j < gens.cols(); ++j) {
                Int c = coeff(rng);
                for (int i = 0; i < gens.rows(); ++i)
                    combo[i] += c * gens(i, j);
            }
            auto coords = solver.coordinates(combo);
            REQUIRE(coords.has_value());
            std::vector<Int> back = solver.basis().apply(*coords);
            CHECK(back == combo);
        }
        // and a vector outside an index-2 lattice is rejected
        IntMatrix even = IntMatrix::from_rows({{2}});
        LatticeSolver solver(even);
        CHECK(solver.contains({Int(4)}));
        CHECK(!solver.contains({Int(3)}));
    }

    TEST_CASE("presented homology: circle and torsion coefficients")
    {
        // triangle graph: 3 vertices, 3 edges; H_0 = Z, H_1 = Z
        //   d1 columns: {0,1}->(v1-v0), {0,2}->(v2-v0), {1,2}->(v2-v1)
        IntMatrix d1 = IntMatrix::from_rows({{-1, -1, 0}, {1, 0, -1}, {0, 1, 1}});
        SparseMat sd1 = SparseMat::from_dense(d1);
        SparseMat none0(3, 0), none1(3, 0);
        HomologyBasis h0 =
            presented_homology(SparseMat(0, 3), sd1, SparseMat(3, 0), SparseMat(0, 0));
        CHECK(h0.group == AbelianGroup::free_of_rank(1));
        HomologyBasis h1 = presented_homology(sd1, SparseMat(3, 0), none1, none0);
        CHECK(h1.group == AbelianGroup::free_of_rank(1));
        REQUIRE(h1.free_generators.size() == 1);
        // the generator is an exact cycle
        for (const Int& x : d1.apply(h1.free_generators[0]))
            CHECK(x == 0);
        // class coordinates: the generator itself has coordinate +-1, twice it has 2
        auto c1 = h1.class_coordinates(h1.free_generators[0]);
        REQUIRE(c1.size() == 1);
        CHECK((c1[0] == 1 || c1[0] == -1));
        std::vector<Int> doubled = h1.free_generators[0];
        for (Int& x : doubled)
            x *= 2;
        CHECK(h1.class_coordinates(doubled)[0] == 2 * c1[0]);

        // presented module: Z/4 with the zero out-map in both directions
        IntMatrix rel(1, 1);
        rel(0, 0) = 4;
        HomologyBasis mod = presented_homology(SparseMat(0, 1), SparseMat(1, 0),
                                               SparseMat::from_dense(rel), SparseMat(0, 0));
        CHECK(mod.group == AbelianGroup(0, {Int(4)}));
        REQUIRE(mod.torsion_generators.size() == 1);
        CHECK(mod.torsion_orders[0] == 4);
    }
}
