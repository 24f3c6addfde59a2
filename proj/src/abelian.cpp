#include "asphera/abelian.hpp"

#include "asphera/errors.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace asphera {

AbelianGroup::AbelianGroup(int free, std::vector<Int> tors)
    : free_rank(free), torsion(std::move(tors))
{
    internal_check(free_rank >= 0, "AbelianGroup: negative free rank");
    for (size_t i = 0; i < torsion.size(); ++i) {
        internal_check(torsion[i] >= 2, "AbelianGroup: invariant factor < 2");
        if (i > 0)
            internal_check(torsion[i] % torsion[i - 1] == 0,
                           "AbelianGroup: divisibility chain broken");
    }
}

AbelianGroup AbelianGroup::free_of_rank(int rank)
{
    return AbelianGroup(rank, {});
}

AbelianGroup AbelianGroup::direct_sum(int free, std::vector<Int> factors)
{
    for (const Int& f : factors)
        internal_check(f >= 1, "AbelianGroup::direct_sum: factor < 1");
    // Repeatedly replace incompatible pairs by (gcd, lcm) until the list is a
    // divisibility chain; this is the usual invariant-factor normalization.
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i < factors.size(); ++i) {
            for (size_t j = i + 1; j < factors.size(); ++j) {
                if (factors[j] % factors[i] != 0) {
                    Int g = boost::multiprecision::gcd(factors[i], factors[j]);
                    Int l = factors[i] / g * factors[j];
                    factors[i] = g;
                    factors[j] = l;
                    changed = true;
                }
            }
        }
    }
    std::sort(factors.begin(), factors.end());
    std::vector<Int> tors;
    for (Int& f : factors)
        if (f >= 2)
            tors.push_back(std::move(f));
    return AbelianGroup(free, std::move(tors));
}

Int AbelianGroup::torsion_order() const
{
    Int o = 1;
    for (const Int& d : torsion)
        o *= d;
    return o;
}

std::string AbelianGroup::str() const
{
    if (trivial())
        return "0";
    std::ostringstream os;
    bool first = true;
    auto sep = [&] {
        if (!first)
            os << " + ";
        first = false;
    };
    if (free_rank == 1) {
        sep();
        os << "Z";
    } else if (free_rank > 1) {
        sep();
        os << "Z^" << free_rank;
    }
    for (const Int& d : torsion) {
        sep();
        os << "Z/" << d;
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const AbelianGroup& g)
{
    return os << g.str();
}

} // namespace asphera
