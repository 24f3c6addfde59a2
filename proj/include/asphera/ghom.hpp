#pragma once

#include "asphera/topo.hpp"

namespace asphera {

// Module over a finite group, presented by generators and relations so that
// torsion coefficients are supported uniformly.  relations columns are
// relations among the gens generators; action[g] is an integer matrix that
// must preserve the relation lattice, with the homomorphism law holding
// modulo that lattice.
struct GModule {
    FiniteGroup group;
    int gens = 0;
    IntMatrix relations;            // gens x r
    std::vector<IntMatrix> action;  // per group element, gens x gens

    AbelianGroup underlying_group() const;
};

GModule make_gmodule(FiniteGroup group, int gens, IntMatrix relations,
                     std::vector<IntMatrix> action);

GModule trivial_module_Z(const FiniteGroup& g);
GModule trivial_module_Zm(const FiniteGroup& g, const Int& m);
// One-generator module where each element acts by +-1; signs must be a
// homomorphism G -> {+-1}.
GModule sign_module(const FiniteGroup& g, const std::vector<int>& signs);
// Convenience for even cyclic groups: the generator acts by -1.
GModule cyclic_sign_module(int n);

// G-module structure induced on H_k by a simplicial action: generators are
// the homology basis, matrices push generator cycles through the chain maps
// and re-express them in that basis.
GModule homology_gmodule(const SimplicialAction& sa, int k);
// Same, but reusing an already computed basis of H_k (they must match).
GModule homology_gmodule(const SimplicialAction& sa, int k, const HomologyBasis& basis);

struct ResolutionChoice {
    bool force_bar = false; // skip the cyclic fast path
};

// H_k(G; M) resp. H^k(G; M) in invariant-factor form.  Cyclic groups take
// the 2-periodic resolution unless force_bar is set; everything else runs
// the normalized bar resolution under the chain-rank guard.
AbelianGroup group_homology(const FiniteGroup& g, const GModule& m, int k,
                            ResolutionChoice choice = {});
AbelianGroup group_cohomology(const FiniteGroup& g, const GModule& m, int k,
                              ResolutionChoice choice = {});

AbelianGroup bar_group_homology(const FiniteGroup& g, const GModule& m, int k);
AbelianGroup bar_group_cohomology(const FiniteGroup& g, const GModule& m, int k);

// Periodic resolution of a cyclic group of order n with generator action A:
// maps alternate A - I and I + A + ... + A^(n-1).
AbelianGroup cyclic_group_homology(int n, const GModule& m, int k);
AbelianGroup cyclic_group_cohomology(int n, const GModule& m, int k);

// Coinvariants M_G = H_0 and invariants M^G = H^0 by direct lattice
// arithmetic, independent of any resolution.
AbelianGroup coinvariants(const GModule& m);
AbelianGroup invariants(const GModule& m);

// One congruence class of extensions of G by the module, named by its
// normalized 2-cocycle c(g,h) (zero whenever g or h is the identity).
struct CocycleClass {
    std::vector<std::vector<Int>> table; // [g*order + h] -> module element
    bool is_split = false;
    Int order = 1;                 // order of the class in H^2
    std::vector<Int> coords;       // coordinates in the H^2 normal form
};

struct H2Classification {
    AbelianGroup group;                  // H^2(G; M)
    bool enumerated = false;             // false when the free rank is positive
    std::vector<CocycleClass> classes;   // all classes when enumerated
    std::vector<std::vector<Int>> generator_cocycles; // cochain vectors, F^2 coordinates

    // Class coordinates of an arbitrary normalized 2-cocycle given as an F^2
    // vector (block layout of the normalized bar complex).
    std::vector<Int> class_of(const std::vector<Int>& cocycle) const;
    // cocycle table -> F^2 vector
    std::vector<Int> cochain_vector(const std::vector<std::vector<Int>>& table) const;
    // d of a normalized 1-cochain, as an F^2 vector
    std::vector<Int> coboundary(const std::vector<std::vector<Int>>& one_cochain) const;

    // layout data
    FiniteGroup grp;
    int group_order = 0;
    int module_gens = 0;
    HomologyBasis reduction;
    std::vector<int> two_tuple_index; // [g*order+h] -> block, -1 if degenerate
    std::vector<std::vector<int>> two_tuples;
    std::vector<IntMatrix> module_action;
};

H2Classification h2_classes(const FiniteGroup& g, const GModule& m);

// Exact check of the 2-cocycle identity (modulo the relation lattice).
bool is_two_cocycle(const GModule& m, const std::vector<std::vector<Int>>& table);

} // namespace asphera
