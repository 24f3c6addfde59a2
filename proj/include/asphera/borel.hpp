#pragma once

#include "asphera/topo.hpp"

namespace asphera {

// Finite truncation of the join model of a contractible free G-space:
// m levels of G as a discrete set, simplices = vertex sets with pairwise
// distinct levels.  (m-1)-dimensional, (m-2)-connected; the left-translation
// action is free with trivial setwise stabilizers.
struct JoinComplex {
    SimplicialComplex complex;
    SimplicialAction action;
    int levels = 0;

    int vertex_index(int level, int g) const { return level * action.group.order + g; }
};

JoinComplex milnor_join(const FiniteGroup& g, int m);

// Triangulated product |K| x |L|: vertices are pairs (indexed i*Ln + j),
// simplices are the monotone staircase chains inside each product cell.
SimplicialComplex staircase_product(const SimplicialComplex& k, const SimplicialComplex& l);
int staircase_vertex(const SimplicialComplex& l, int i, int j);

// Diagonal action on the staircase triangulation.  Only valid when every
// group element maps staircase chains to staircase chains, i.e. the factor
// actions are order-compatible; otherwise this errors and the chain-level
// product below must be used.
SimplicialAction staircase_diagonal_action(const SimplicialComplex& product,
                                           const SimplicialAction& ak,
                                           const SimplicialAction& al);

// Chain-level product: cellular chain complex of the product CW structure
// (cells = simplex pairs, tensor differential) with the diagonal signed
// action on cells.  This carries the diagonal action even when no vertex
// ordering makes it simplicial; signs are the product of the factor
// parities.
struct ProductChainModel {
    ChainComplex complex;
    ChainAction action;
    // cell (a,b,i,j) bookkeeping: degree d cells are ordered by a ascending,
    // then i, then j, where a + b = d.
    std::vector<std::vector<std::tuple<int, int, int, int>>> cells; // [d] -> (a,b,i,j)
};

ProductChainModel product_chain_model(const SimplicialComplex& k, const SimplicialAction& ak,
                                      const SimplicialComplex& l, const SimplicialAction& al,
                                      int max_degree = -1);

// Coinvariant chain complex of the diagonal action on T x (join model);
// the join factor makes the diagonal action free, so orbit reduction
// applies whether or not the action on T is free.
ChainComplex borel_complex(const SimplicialComplex& t, const SimplicialAction& sa, int m);

struct BorelResult {
    int valid_degree_bound = 0;              // = m - 2
    std::vector<AbelianGroup> groups;        // degrees 0..min(kmax, bound)
    std::vector<int> unreliable_degrees;     // requested degrees above the bound
};

// H_k of the homotopy quotient for k <= kmax; degrees above m-2 are outside
// the certified range of the truncation and are flagged, not reported.
BorelResult borel_homology(const SimplicialComplex& t, const SimplicialAction& sa,
                           int m, int kmax);

} // namespace asphera
