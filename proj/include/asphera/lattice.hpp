#pragma once

#include "asphera/grp.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace asphera {

struct PosetElement {
    std::string label;
    std::optional<Coset> coset;       // when the element came from a coset poset
    std::optional<Subgroup> subgroup; // when it came from a subgroup lattice
};

// Finite strict partial order.  Stores the Hasse (covering) pairs plus the
// transitive closure: the closure drives chain enumeration, the Hasse pairs
// drive edge generation and DOT output.
class Poset {
public:
    Poset() = default;
    // strict[a][b] == true means a < b; the relation must be irreflexive and
    // acyclic, the constructor closes it transitively.
    Poset(std::vector<PosetElement> elements, std::vector<std::vector<bool>> strict);

    int size() const { return static_cast<int>(elements_.size()); }
    bool less(int a, int b) const { return closure_[a][b]; }
    const std::vector<PosetElement>& elements() const { return elements_; }
    const std::vector<std::pair<int, int>>& hasse() const { return hasse_; }

    // all chains a0 < a1 < ... (nonempty), in lexicographic index order
    std::vector<std::vector<int>> chains(int max_length = -1) const;

private:
    std::vector<PosetElement> elements_;
    std::vector<std::vector<bool>> closure_;
    std::vector<std::pair<int, int>> hasse_;
};

// All cosets of proper subgroups (the trivial subgroup included, the whole
// group excluded) under strict set inclusion.
Poset coset_poset(const FiniteGroup& g);

// Proper nontrivial subgroups under strict inclusion: the open segment
// between {e} and G.
Poset subgroup_lattice(const FiniteGroup& g);

struct SegmentBound {
    enum class Kind { Bottom, Top, Element };
    Kind kind = Kind::Bottom;
    int index = -1;

    static SegmentBound bottom() { return {Kind::Bottom, -1}; }
    static SegmentBound top() { return {Kind::Top, -1}; }
    static SegmentBound element(int i) { return {Kind::Element, i}; }
};

// Induced poset on the elements strictly between lo and hi.
Poset segment(const Poset& p, SegmentBound lo, SegmentBound hi);

// Finite simplicial complex; simplices are strictly increasing vertex tuples,
// stratified by dimension and sorted lexicographically within each stratum.
class SimplicialComplex {
public:
    SimplicialComplex() = default;

    // Closes the given simplices under faces.
    static SimplicialComplex closure(int vertex_count,
                                     const std::vector<std::vector<int>>& simplices);
    // Takes already-closed strata (strata[k] = list of (k+1)-tuples); validated.
    static SimplicialComplex from_strata(int vertex_count,
                                         std::vector<std::vector<std::vector<int>>> strata);

    int vertex_count() const { return vertex_count_; }
    int dim() const { return static_cast<int>(strata_.size()) - 1; }
    int count(int k) const;
    long long total_simplices() const;
    const std::vector<std::vector<int>>& simplices(int k) const { return strata_[k]; }
    const std::vector<int>& simplex(int k, int i) const { return strata_[k][i]; }
    int index_of(int k, const std::vector<int>& s) const; // -1 if absent
    bool has(const std::vector<int>& s) const;

private:
    void build_index();
    int vertex_count_ = 0;
    std::vector<std::vector<std::vector<int>>> strata_;
    std::vector<std::map<std::vector<int>, int>> index_;
};

// Order complex (classifying space of the poset): k-simplices are the
// (k+1)-chains, with vertices numbered by poset element index.
SimplicialComplex order_complex(const Poset& p);

struct PosetAction {
    Poset poset;
    GroupAction action; // ground set = poset elements

    int apply(int g, int x) const { return action.apply(g, x); }
};

// Wraps an action whose ground set is p's element list; every group element
// must preserve the strict order (checked on all Hasse pairs, which is
// equivalent by transitivity).
PosetAction induced_poset_action(const GroupAction& a, const Poset& p);

struct SimplicialAction {
    FiniteGroup group;
    SimplicialComplex complex;
    std::vector<std::vector<int>> vertex_perms;
};

// Validates the homomorphism law and that every permutation maps simplices
// to simplices.
SimplicialAction make_simplicial_action(FiniteGroup group, SimplicialComplex complex,
                                        std::vector<std::vector<int>> vertex_perms);

// Action induced on the order complex by a poset action; order-preserving
// maps send chains to chains, and this is re-verified.
SimplicialAction simplicial_action(const PosetAction& pa);

} // namespace asphera
