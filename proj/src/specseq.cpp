#include "asphera/specseq.hpp"

#include <algorithm>

namespace asphera {

E2Page e2_page(const SimplicialAction& sa, int pmax, int qmax, bool cohomological)
{
    if (pmax < 0 || qmax < 0)
        throw ValidationError("e2_page: page bounds must be nonnegative");
    E2Page page;
    page.pmax = pmax;
    page.qmax = qmax;
    page.cohomological = cohomological;
    page.rows_above_vanish = sa.complex.dim() <= qmax;
    page.aspherical_base = sa.complex.dim() <= 1 && components(sa.complex) == 1;
    page.entries.assign(qmax + 1, std::vector<AbelianGroup>(pmax + 1));
    ChainComplex cc = ChainComplex::of(sa.complex);
    for (int q = 0; q <= qmax; ++q) {
        GModule module = homology_gmodule(sa, q, chain_homology(cc, q));
        for (int p = 0; p <= pmax; ++p)
            page.entries[q][p] = cohomological ? group_cohomology(sa.group, module, p)
                                               : group_homology(sa.group, module, p);
        page.row_modules.push_back(std::move(module));
    }
    return page;
}

namespace {

// nothing can hit or leave (p,q) without meeting a group that is known to be
// zero (inside the grid) or known to vanish (above the top row, when flagged)
bool differentials_forced_zero(const E2Page& page, int p, int q)
{
    for (int r = 2; r <= page.pmax + page.qmax + 2; ++r) {
        // outgoing d_r: (p,q) -> (p-r, q+r-1)
        int tp = p - r, tq = q + r - 1;
        if (tp >= 0) {
            if (tq <= page.qmax) {
                if (!page.at(tp, tq).trivial())
                    return false;
            } else if (!page.rows_above_vanish) {
                return false;
            }
        }
        // incoming d_r: (p+r, q-r+1) -> (p,q)
        int sp = p + r, sq = q - r + 1;
        if (sq >= 0) {
            if (sp > page.pmax)
                return false; // source outside the computed page: unknown
            if (!page.at(sp, sq).trivial())
                return false;
        }
    }
    return true;
}

} // namespace

AbutmentReport abutment(const E2Page& page)
{
    AbutmentReport report;
    for (int n = 0; n <= page.pmax; ++n) {
        if (!page.rows_above_vanish && n > page.qmax)
            throw ValidationError(
                "abutment: total degree " + std::to_string(n) +
                " needs rows above the computed page; enlarge qmax or use a complex "
                "of dimension <= qmax");
        AbutmentEntry entry;
        entry.n = n;
        for (int q = std::min(n, page.qmax); q >= 0; --q) {
            int p = n - q;
            if (p > page.pmax)
                continue;
            if (!page.at(p, q).trivial())
                entry.pieces.emplace_back(p, q, page.at(p, q));
        }
        if (entry.pieces.empty()) {
            entry.status = Determinacy::Determined;
            entry.value = AbelianGroup::zero();
        } else if (entry.pieces.size() == 1) {
            auto [p, q, grp] = entry.pieces.front();
            if (differentials_forced_zero(page, p, q)) {
                entry.status = Determinacy::Determined;
                entry.value = grp;
            } else {
                entry.status = Determinacy::GradedOnly;
            }
        } else {
            entry.status = Determinacy::GradedOnly;
        }
        report.degrees.push_back(std::move(entry));
    }
    return report;
}

namespace {

void require_connected_graph(const SimplicialAction& sa, const char* who)
{
    if (sa.complex.dim() > 1)
        throw ValidationError(std::string(who) +
                              ": complex has dimension > 1, no asphericity certificate");
    if (components(sa.complex) != 1)
        throw ValidationError(std::string(who) + ": complex is not connected");
}

} // namespace

ExtensionReport subordinate_report(const SimplicialAction& sa)
{
    require_connected_graph(sa, "subordinate_report");
    ExtensionReport report;
    report.group_order = sa.group.order;

    FreenessVerdict verdict = is_free_action(sa);
    if (verdict.free) {
        report.kind = ExtensionKind::Free;
        long long chi = euler_characteristic(sa.complex);
        report.rank_base = 1 - chi;
        internal_check(chi % sa.group.order == 0,
                       "subordinate_report: free action with non-divisible Euler characteristic");
        report.rank_quotient = 1 - chi / sa.group.order;
        report.index = sa.group.order;
        report.nielsen_schreier_ok =
            report.rank_base - 1 == sa.group.order * (report.rank_quotient - 1);
        return report;
    }

    // a vertex fixed by the whole group splits the extension
    for (int v = 0; v < sa.complex.vertex_count(); ++v) {
        bool fixed = true;
        for (int g = 0; g < sa.group.order && fixed; ++g)
            fixed = sa.vertex_perms[g][v] == v;
        if (fixed) {
            report.kind = ExtensionKind::SplitFixedPoint;
            report.fixed_vertex = v;
            report.h1_module = homology_gmodule(sa, 1);
            return report;
        }
    }

    report.kind = ExtensionKind::DiagramOnly;
    return report;
}

SimplicialAction restrict_action(const SimplicialAction& sa, const Subgroup& h)
{
    if (!is_subgroup(sa.group, h))
        throw ValidationError("restrict_action: not a subgroup");
    const int n = h.size();
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    std::vector<std::string> names(n);
    std::vector<int> pos(sa.group.order, -1);
    for (int i = 0; i < n; ++i)
        pos[h.members[i]] = i;
    for (int i = 0; i < n; ++i) {
        names[i] = sa.group.names[h.members[i]];
        for (int j = 0; j < n; ++j) {
            int prod = sa.group.mul(h.members[i], h.members[j]);
            internal_check(pos[prod] >= 0, "restrict_action: subgroup not closed");
            table[i][j] = pos[prod];
        }
    }
    FiniteGroup sub = group_from_table(std::move(table), std::move(names));
    std::vector<std::vector<int>> perms(n);
    for (int i = 0; i < n; ++i)
        perms[i] = sa.vertex_perms[h.members[i]];
    return make_simplicial_action(std::move(sub), sa.complex, std::move(perms));
}

DiagramReport subgroup_diagram_check(const SimplicialAction& sa, const Subgroup& h)
{
    require_connected_graph(sa, "subgroup_diagram_check");
    SimplicialAction restricted = restrict_action(sa, h);
    FreenessVerdict verdict = is_free_action(restricted);
    if (!verdict.free)
        throw ValidationError("subgroup_diagram_check: restriction to the subgroup is not free; " +
                              verdict.describe(restricted));

    DiagramReport report;
    report.index = sa.group.order / h.size();

    QuotientChainComplex quotient = coinvariant_complex(sa.complex, restricted);
    report.quotient_chi = quotient.complex.euler_characteristic();
    HomologyBasis qh1 = chain_homology(quotient.complex, 1);
    report.quotient_h0 = chain_homology_group(quotient.complex, 0);
    report.quotient_h1 = qh1.group;

    HomologyBasis kh1 = homology(sa.complex, 1);
    internal_check(kh1.torsion_orders.empty() && qh1.torsion_orders.empty(),
                   "subgroup_diagram_check: graph H_1 must be free");

    // induced map on H_1: project each generator cycle to the orbit complex
    const int rows = static_cast<int>(qh1.free_generators.size());
    const int cols = static_cast<int>(kh1.free_generators.size());
    report.induced_h1_map = IntMatrix(rows, cols);
    for (int j = 0; j < cols; ++j) {
        std::vector<Int> image(quotient.complex.rank(1), Int(0));
        for (int i = 0; i < static_cast<int>(kh1.free_generators[j].size()); ++i) {
            const Int& v = kh1.free_generators[j][i];
            if (v != 0)
                image[quotient.orbit_of[1][i]] += Int(quotient.orbit_sign[1][i]) * v;
        }
        std::vector<Int> coords = qh1.class_coordinates(image);
        for (int i = 0; i < rows; ++i)
            report.induced_h1_map(i, j) = coords[i];
    }
    {
        std::vector<Int> factors =
            snf_invariant_factors(SparseMat::from_dense(report.induced_h1_map));
        if (static_cast<int>(factors.size()) < rows) {
            report.h1_cokernel_order = 0; // infinite cokernel
        } else {
            report.h1_cokernel_order = 1;
            for (const Int& d : factors)
                report.h1_cokernel_order *= d;
        }
    }

    long long chi = euler_characteristic(sa.complex);
    report.nielsen_schreier_ok =
        (1 - chi) - 1 == static_cast<long long>(h.size()) * ((1 - report.quotient_chi) - 1);

    if (is_free_action(sa).free) {
        QuotientChainComplex full = coinvariant_complex(sa.complex, sa);
        report.euler_quotients_ok =
            report.quotient_chi == report.index * full.complex.euler_characteristic();
    }
    return report;
}

} // namespace asphera
