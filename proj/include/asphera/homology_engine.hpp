#pragma once

#include "asphera/intmat.hpp"
#include "asphera/snf.hpp"

#include <vector>

namespace asphera {

// Homology of one degree of a complex of *presented* abelian groups.
//
// Degree k is F_k / im(rel_here) with lifted differentials
//   out_map : F_k   -> F_{k-1}   (rows = rank F_{k-1})
//   in_map  : F_{k+1} -> F_k
// rel_out holds the relation columns of degree k-1.  Plain free complexes
// pass empty relation matrices.  Composites only need to vanish modulo the
// relation lattices, which is exactly what lifted bar differentials give.
//
// The result keeps enough of the change of basis to assign coordinates to
// further cycles: class_coordinates() is what turns chain maps into action
// matrices on homology.
struct HomologyBasis {
    AbelianGroup group;
    int ambient = 0; // rank of F_k

    std::vector<std::vector<Int>> free_generators;    // cycle vectors in F_k
    std::vector<std::vector<Int>> torsion_generators; // cycle vectors in F_k
    std::vector<Int> torsion_orders;                  // parallel to torsion_generators

    // Coordinates of the class of a cycle: torsion coordinates first (reduced
    // into [0, order)), then free coordinates.  Throws InternalError if the
    // vector is not a cycle of this degree.
    std::vector<Int> class_coordinates(const std::vector<Int>& cycle) const;

    // internals of the reduction (kept for class_coordinates)
    IntMatrix u_cycles;          // Smith transform of the cycle generators
    std::vector<Int> d_cycles;   // its diagonal
    int cycle_rank = 0;
    IntMatrix ux;                // Smith transform of the boundary coordinates
    std::vector<Int> slot_orders; // length cycle_rank; 0 marks a free slot
    std::vector<int> torsion_slots, free_slots;
};

HomologyBasis presented_homology(const SparseMat& out_map, const SparseMat& in_map,
                                 const SparseMat& rel_here, const SparseMat& rel_out);

} // namespace asphera
