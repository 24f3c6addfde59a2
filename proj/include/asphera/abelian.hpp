#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <iosfwd>
#include <string>
#include <vector>

namespace asphera {

// All linear algebra is exact.  cpp_int never wraps, so Smith normal form
// intermediate blow-up is a speed issue, not a correctness issue.
using Int = boost::multiprecision::cpp_int;

// Finitely generated abelian group in invariant-factor normal form:
// Z^free_rank + Z/d1 + Z/d2 + ...  with  2 <= d1 | d2 | ...
// The normal form is unique, so operator== decides isomorphism.
struct AbelianGroup {
    int free_rank = 0;
    std::vector<Int> torsion;

    AbelianGroup() = default;
    AbelianGroup(int free, std::vector<Int> tors);

    static AbelianGroup zero() { return {}; }
    static AbelianGroup free_of_rank(int rank);
    // Canonicalizes an arbitrary list of cyclic orders into invariant factors,
    // e.g. {2,3} -> {6}.  Entries must be >= 1; entries equal to 1 are dropped.
    static AbelianGroup direct_sum(int free, std::vector<Int> factors);

    bool trivial() const { return free_rank == 0 && torsion.empty(); }
    Int torsion_order() const;
    std::string str() const;

    bool operator==(const AbelianGroup&) const = default;
};

std::ostream& operator<<(std::ostream& os, const AbelianGroup& g);

} // namespace asphera
