#pragma once

#include "asphera/errors.hpp"

#include <optional>
#include <string>
#include <vector>

namespace asphera {

// Finite group as a full multiplication table.  At the scales this library
// targets (order <= ~48) tables keep subgroup enumeration exhaustive and
// exact; no generator-based machinery is needed.
struct FiniteGroup {
    int order = 0;
    std::vector<std::vector<int>> table; // table[g][h] = g*h
    std::vector<std::string> names;
    int identity = 0;

    int mul(int g, int h) const { return table[g][h]; }
    int inv(int g) const;
    int element_order(int g) const;
    bool is_abelian() const;
    // An element of full order, if the group is cyclic.
    std::optional<int> cyclic_generator() const;
};

// Verifies permutation rows/columns, a two-sided identity, inverses and
// associativity; errors name the failing element or triple.
FiniteGroup group_from_table(std::vector<std::vector<int>> table,
                             std::vector<std::string> names = {});

FiniteGroup cyclic_group(int n);
// Dihedral group of order 2n: elements r^i and s*r^i with s*r*s = r^-1.
FiniteGroup dihedral_group(int n);
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);

struct Subgroup {
    std::vector<int> members; // sorted
    int parent_order = 0;

    int size() const { return static_cast<int>(members.size()); }
    bool contains(int g) const;
    bool operator==(const Subgroup&) const = default;
};

bool is_subgroup(const FiniteGroup& g, const Subgroup& h);
Subgroup subgroup_closure(const FiniteGroup& g, std::vector<int> generators);

// Complete list including {e} and G, sorted by (size, members).
std::vector<Subgroup> all_subgroups(const FiniteGroup& g);

struct Coset {
    Subgroup subgroup;
    int representative = 0;   // minimal member
    std::vector<int> members; // sorted

    int size() const { return static_cast<int>(members.size()); }
    bool operator==(const Coset&) const = default;
};

std::vector<Coset> left_cosets(const FiniteGroup& g, const Subgroup& h);
Coset left_coset_of(const FiniteGroup& g, const Subgroup& h, int x);

bool is_normal(const FiniteGroup& g, const Subgroup& h);
FiniteGroup quotient_group(const FiniteGroup& g, const Subgroup& h);

// Action of a group on a finite set, one permutation per element.  The
// homomorphism law perms[g*h] = perms[g] o perms[h] and perms[e] = id are
// checked on construction.
struct GroupAction {
    FiniteGroup group;
    int ground_size = 0;
    std::vector<std::vector<int>> perms;

    int apply(int g, int x) const { return perms[g][x]; }
};

GroupAction make_action(FiniteGroup group, int ground_size,
                        std::vector<std::vector<int>> perms);
GroupAction trivial_action(const FiniteGroup& g, int ground_size);

// g.(xH) = (gx)H on a list of cosets closed under shifts.
GroupAction shift_action(const FiniteGroup& g, const std::vector<Coset>& cosets);
// g.H = gHg^-1 / g.(xH) = (gxg^-1)(gHg^-1) on closed target lists.
GroupAction conjugation_action(const FiniteGroup& g, const std::vector<Subgroup>& targets);
GroupAction conjugation_action(const FiniteGroup& g, const std::vector<Coset>& targets);

std::vector<int> stabilizer(const GroupAction& a, int point);

} // namespace asphera
