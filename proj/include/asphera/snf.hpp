#pragma once

#include "asphera/intmat.hpp"

#include <optional>
#include <vector>

namespace asphera {

// u * a * v = s with u, v unimodular and s diagonal, d1 | d2 | ... >= 0.
struct SnfResult {
    IntMatrix u, s, v;
};

SnfResult smith_normal_form(const IntMatrix& a);

// Variant that only accumulates the transforms that are actually needed.
// uinv/vinv satisfy a = uinv * s * vinv.
struct SnfTransforms {
    IntMatrix s;
    std::optional<IntMatrix> u, uinv, v, vinv;
    int rank = 0;
    std::vector<Int> diagonal() const; // the rank nonzero entries
};

SnfTransforms snf_transforms(const IntMatrix& a,
                             bool need_u, bool need_uinv,
                             bool need_v, bool need_vinv);

// Invariant factors of a sparse matrix (nonzero diagonal of its Smith form).
// Unit pivots are eliminated sparsely first; the residue goes through the
// dense reduction.  No transforms, so this scales to the big quotient
// complexes.
std::vector<Int> snf_invariant_factors(const SparseMat& a);

int matrix_rank(const SparseMat& a);

// Lattice basis of ker(a); columns of the result generate the kernel over Z.
IntMatrix kernel_basis(const IntMatrix& a);

// Membership and coordinates in the column span (over Z) of a fixed matrix.
class LatticeSolver {
public:
    explicit LatticeSolver(const IntMatrix& gens);

    int ambient() const { return ambient_; }
    int rank() const { return rank_; }
    // Lattice basis, ambient x rank.
    const IntMatrix& basis() const { return basis_; }
    // Row transform and diagonal of the underlying Smith form.
    const IntMatrix& transform() const { return u_; }
    const std::vector<Int>& diagonal() const { return diag_; }
    // Coordinates of v in basis(); nullopt if v is not in the lattice.
    std::optional<std::vector<Int>> coordinates(const std::vector<Int>& v) const;
    bool contains(const std::vector<Int>& v) const { return coordinates(v).has_value(); }

private:
    int ambient_ = 0;
    int rank_ = 0;
    IntMatrix u_;          // from the Smith form of gens
    std::vector<Int> diag_;
    IntMatrix basis_;
};

} // namespace asphera
