#pragma once

#include "asphera/ghom.hpp"

#include <optional>
#include <tuple>

namespace asphera {

// E2 page of the equivariant spectral sequence of an action: entry (p,q) is
// H_p(G; H_q(K)) with the induced module structure (or the cohomological
// twin).  When K is a connected graph the abutment is the homology of the
// middle group of the subordinate extension; otherwise the page only
// converges to the homology of the homotopy quotient.
struct E2Page {
    int pmax = 0, qmax = 0;
    bool cohomological = false;
    bool rows_above_vanish = false; // true when dim K <= qmax
    bool aspherical_base = false;   // K is a connected graph
    std::vector<std::vector<AbelianGroup>> entries; // [q][p]
    std::vector<GModule> row_modules;               // per q

    const AbelianGroup& at(int p, int q) const { return entries[q][p]; }
};

E2Page e2_page(const SimplicialAction& sa, int pmax, int qmax, bool cohomological = false);

enum class Determinacy { Determined, GradedOnly };

struct AbutmentEntry {
    int n = 0;
    Determinacy status = Determinacy::GradedOnly;
    std::vector<std::tuple<int, int, AbelianGroup>> pieces; // nonzero (p,q,group)
    std::optional<AbelianGroup> value;                      // set when Determined
};

struct AbutmentReport {
    std::vector<AbutmentEntry> degrees; // n = 0..pmax
};

// Forced-collapse reading of the page: no differential is ever computed, a
// total degree is Determined only when at most one graded piece is nonzero
// and every differential touching it starts or ends in a group known to be
// zero.
AbutmentReport abutment(const E2Page& page);

enum class ExtensionKind { Free, SplitFixedPoint, DiagramOnly };

// Numeric description of the extension attached to an action on a connected
// graph.  pi_1 data is reported as free-group ranks plus abelianized action
// matrices; that already separates all the small cases of interest.
struct ExtensionReport {
    ExtensionKind kind = ExtensionKind::DiagramOnly;
    int group_order = 0;

    // Free: ranks of pi_1 of the graph and of its quotient, plus the index.
    long long rank_base = -1;
    long long rank_quotient = -1;
    int index = -1;
    bool nielsen_schreier_ok = false;

    // SplitFixedPoint: a vertex fixed by the whole group and the induced
    // action on H_1 (abelianized holonomy).
    int fixed_vertex = -1;
    std::optional<GModule> h1_module;
};

ExtensionReport subordinate_report(const SimplicialAction& sa);

// Numeric shadows of the subgroup restriction diagram: index, quotient
// topology under the free H-restriction, the induced map on H_1, and the
// consistency checks that the diagram forces.
struct DiagramReport {
    int index = 0;       // [G:H]
    long long quotient_chi = 0;
    AbelianGroup quotient_h0, quotient_h1;
    IntMatrix induced_h1_map; // H_1(K) -> H_1(K/H), free parts
    Int h1_cokernel_order;    // 0 when the cokernel is infinite
    bool nielsen_schreier_ok = false;
    std::optional<bool> euler_quotients_ok; // set when the full action is free
};

DiagramReport subgroup_diagram_check(const SimplicialAction& sa, const Subgroup& h);

// Restriction of a simplicial action to a subgroup (relabels H as its own
// abstract group).
SimplicialAction restrict_action(const SimplicialAction& sa, const Subgroup& h);

} // namespace asphera
