#pragma once

#include "asphera/homology_engine.hpp"
#include "asphera/lattice.hpp"

#include <optional>

namespace asphera {

// Signed boundary with the global orientation convention: simplices are
// stored sorted ascending and the sign of the i-th face is (-1)^i.
SparseMat boundary_matrix_sparse(const SimplicialComplex& k, int degree);
IntMatrix boundary_matrix(const SimplicialComplex& k, int degree);

// Chain complex of free abelian groups; boundary(k): C_k -> C_{k-1}.
// d∘d = 0 is asserted on construction for every stored degree.
class ChainComplex {
public:
    ChainComplex() = default;
    ChainComplex(std::vector<int> ranks, std::vector<SparseMat> boundaries);

    static ChainComplex of(const SimplicialComplex& k);

    int dim() const { return static_cast<int>(ranks_.size()) - 1; }
    int rank(int k) const;
    const std::vector<int>& ranks() const { return ranks_; }
    SparseMat boundary(int k) const; // valid for any k >= 0, empty outside range

    long long euler_characteristic() const;

private:
    std::vector<int> ranks_;
    std::vector<SparseMat> boundaries_; // boundaries_[k] = d_k for k >= 1
};

// H_k with explicit generators (cycles in C_k).
HomologyBasis homology(const SimplicialComplex& k, int degree);
HomologyBasis chain_homology(const ChainComplex& cc, int degree);
// Group only, via sparse invariant factors; scales to large quotients.
AbelianGroup chain_homology_group(const ChainComplex& cc, int degree);
AbelianGroup homology_group(const SimplicialComplex& k, int degree);

long long euler_characteristic(const SimplicialComplex& k);
int components(const SimplicialComplex& k);

// Triviality of *setwise* simplex stabilizers, the checkable freeness
// surrogate for simplicial actions on the geometric realization.
struct FreenessVerdict {
    bool free = false;
    int witness_g = -1;
    int witness_dim = -1;
    int witness_simplex = -1;
    std::string describe(const SimplicialAction& sa) const;
};

FreenessVerdict is_free_action(const SimplicialAction& sa);

// Action of each group element on the chain basis of each degree:
// basis i maps to sign * basis perm[i].  For simplicial actions the sign is
// the parity that re-sorts the image vertex tuple.
struct ChainAction {
    FiniteGroup group;
    std::vector<std::vector<std::vector<int>>> perm;    // [g][k][i]
    std::vector<std::vector<std::vector<int>>> sign;    // [g][k][i], +-1
};

ChainAction chain_action(const SimplicialAction& sa);
SparseMat chain_map_matrix(const ChainAction& ca, int g, int degree);

// Quotient chain complex of orbit classes of oriented basis elements.
// Requires the action to be free on the basis (no g != e fixes an index);
// orbit representatives are the smallest indices, signs come from the orbit
// transporters.
struct QuotientChainComplex {
    ChainComplex complex;
    std::vector<std::vector<int>> orbit_reps;  // [k][orbit] = basis index
    std::vector<std::vector<int>> orbit_of;    // [k][i] = orbit index
    std::vector<std::vector<int>> orbit_sign;  // [k][i]: class of e_i = sign * class of rep
};

QuotientChainComplex coinvariants(const ChainComplex& cc, const ChainAction& ca);

// Coinvariant complex of a free simplicial action; homology equals the
// homology of the quotient space.  Errors with the freeness witness.
QuotientChainComplex coinvariant_complex(const SimplicialComplex& k, const SimplicialAction& sa);

// small standard complexes and actions
SimplicialComplex point_complex();
SimplicialComplex cycle_complex(int n); // n-gon graph, n >= 3
SimplicialAction trivial_simplicial_action(const FiniteGroup& g, const SimplicialComplex& k);
// Z_m acting on the n-cycle, generator = rotation by step (m*step = 0 mod n).
SimplicialAction rotation_action(int n, int m, int step);
// Z_2 acting on the n-cycle by v -> -v (axis through vertex 0).
SimplicialAction reflection_action(int n);
// Dihedral group of order 2n on the n-cycle by vertex permutation.
SimplicialAction dihedral_action(int n);

} // namespace asphera
