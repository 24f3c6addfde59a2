#include "asphera/json_io.hpp"

#include <sstream>

namespace asphera {

namespace {

const Int kJsonSafeMax = Int(1) << 53;

} // namespace

json int_to_json(const Int& v)
{
    if (v < kJsonSafeMax && -v < kJsonSafeMax)
        return static_cast<long long>(v);
    return v.str();
}

Int int_from_json(const json& j)
{
    if (j.is_string())
        return Int(j.get<std::string>());
    if (j.is_number_integer())
        return Int(j.get<long long>());
    throw ValidationError("expected an integer or a decimal string");
}

json to_json(const AbelianGroup& g)
{
    json torsion = json::array();
    for (const Int& d : g.torsion)
        torsion.push_back(int_to_json(d));
    return json{{"free_rank", g.free_rank}, {"torsion", torsion}, {"pretty", g.str()}};
}

AbelianGroup abelian_from_json(const json& j)
{
    std::vector<Int> torsion;
    for (const auto& d : j.at("torsion"))
        torsion.push_back(int_from_json(d));
    return AbelianGroup(j.at("free_rank").get<int>(), std::move(torsion));
}

json to_json(const FiniteGroup& g)
{
    return json{{"order", g.order}, {"table", g.table}, {"names", g.names}};
}

FiniteGroup group_from_json(const json& j)
{
    std::vector<std::string> names;
    if (j.contains("names"))
        names = j.at("names").get<std::vector<std::string>>();
    return group_from_table(j.at("table").get<std::vector<std::vector<int>>>(), std::move(names));
}

json to_json(const Subgroup& h)
{
    return json{{"members", h.members}, {"parent_order", h.parent_order}};
}

json to_json(const SimplicialComplex& k)
{
    json strata = json::array();
    for (int d = 0; d <= k.dim(); ++d)
        strata.push_back(k.simplices(d));
    return json{{"vertex_count", k.vertex_count()}, {"simplices", strata}};
}

SimplicialComplex complex_from_json(const json& j)
{
    std::vector<std::vector<std::vector<int>>> strata;
    for (const auto& s : j.at("simplices"))
        strata.push_back(s.get<std::vector<std::vector<int>>>());
    return SimplicialComplex::from_strata(j.at("vertex_count").get<int>(), std::move(strata));
}

json to_json(const IntMatrix& m)
{
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j)
            row.push_back(int_to_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", rows}};
}

json to_json_triplets(const SparseMat& m)
{
    json entries = json::array();
    for (int j = 0; j < m.cols(); ++j)
        for (const auto& [i, v] : m.col(j))
            entries.push_back(json::array({i, j, int_to_json(v)}));
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

json to_json(const ChainComplex& cc)
{
    json boundaries = json::array();
    for (int k = 1; k <= cc.dim(); ++k)
        boundaries.push_back(to_json_triplets(cc.boundary(k)));
    return json{{"ranks", cc.ranks()}, {"boundaries", boundaries}};
}

json to_json(const HomologyBasis& hb)
{
    auto chains = [](const std::vector<std::vector<Int>>& gens) {
        json out = json::array();
        for (const auto& g : gens) {
            json v = json::array();
            for (const Int& x : g)
                v.push_back(int_to_json(x));
            out.push_back(std::move(v));
        }
        return out;
    };
    json torsion_orders = json::array();
    for (const Int& d : hb.torsion_orders)
        torsion_orders.push_back(int_to_json(d));
    return json{{"group", to_json(hb.group)},
                {"free_generators", chains(hb.free_generators)},
                {"torsion_generators", chains(hb.torsion_generators)},
                {"torsion_orders", torsion_orders}};
}

json to_json(const GModule& m)
{
    json action = json::array();
    for (const IntMatrix& a : m.action)
        action.push_back(to_json(a));
    return json{{"group", to_json(m.group)},
                {"generators", m.gens},
                {"relations", to_json(m.relations)},
                {"action", action}};
}

namespace {

IntMatrix matrix_from_json(const json& j)
{
    IntMatrix m(j.at("rows").get<int>(), j.at("cols").get<int>());
    const auto& entries = j.at("entries");
    for (int i = 0; i < m.rows(); ++i)
        for (int c = 0; c < m.cols(); ++c)
            m(i, c) = int_from_json(entries.at(i).at(c));
    return m;
}

} // namespace

GModule gmodule_from_json(const FiniteGroup& g, const json& j)
{
    int gens = j.at("generators").get<int>();
    IntMatrix relations =
        j.contains("relations") ? matrix_from_json(j.at("relations")) : IntMatrix(gens, 0);
    std::vector<IntMatrix> action;
    for (const auto& a : j.at("action"))
        action.push_back(matrix_from_json(a));
    return make_gmodule(g, gens, std::move(relations), std::move(action));
}

json to_json(const E2Page& page)
{
    json rows = json::array();
    for (int q = 0; q <= page.qmax; ++q) {
        json row = json::array();
        for (int p = 0; p <= page.pmax; ++p)
            row.push_back(to_json(page.at(p, q)));
        rows.push_back(std::move(row));
    }
    return json{{"pmax", page.pmax},
                {"qmax", page.qmax},
                {"cohomological", page.cohomological},
                {"kind", page.aspherical_base ? "extension-page" : "homotopy-quotient-page"},
                {"rows_above_vanish", page.rows_above_vanish},
                {"entries", rows}};
}

json to_json(const AbutmentReport& report)
{
    json degrees = json::array();
    for (const AbutmentEntry& e : report.degrees) {
        json pieces = json::array();
        for (const auto& [p, q, g] : e.pieces)
            pieces.push_back(json{{"p", p}, {"q", q}, {"group", to_json(g)}});
        json entry{{"n", e.n},
                   {"status", e.status == Determinacy::Determined ? "DETERMINED" : "GRADED-ONLY"},
                   {"pieces", pieces}};
        if (e.value)
            entry["value"] = to_json(*e.value);
        degrees.push_back(std::move(entry));
    }
    return json{{"degrees", degrees}};
}

json to_json(const ExtensionReport& report)
{
    json out{{"group_order", report.group_order}};
    switch (report.kind) {
    case ExtensionKind::Free:
        out["kind"] = "FREE";
        out["rank_base"] = report.rank_base;
        out["rank_quotient"] = report.rank_quotient;
        out["index"] = report.index;
        out["nielsen_schreier_ok"] = report.nielsen_schreier_ok;
        break;
    case ExtensionKind::SplitFixedPoint: {
        out["kind"] = "SPLIT-FIXED-POINT";
        out["fixed_vertex"] = report.fixed_vertex;
        json action = json::array();
        for (const IntMatrix& a : report.h1_module->action)
            action.push_back(to_json(a));
        out["h1_action"] = action;
        break;
    }
    case ExtensionKind::DiagramOnly:
        out["kind"] = "DIAGRAM-ONLY";
        out["note"] = "no global fixed vertex and not free; use borel homology and "
                      "subgroup diagram checks";
        break;
    }
    return out;
}

json to_json(const DiagramReport& report)
{
    json out{{"index", report.index},
             {"quotient_chi", report.quotient_chi},
             {"quotient_h0", to_json(report.quotient_h0)},
             {"quotient_h1", to_json(report.quotient_h1)},
             {"induced_h1_map", to_json(report.induced_h1_map)},
             {"h1_cokernel_order", int_to_json(report.h1_cokernel_order)},
             {"nielsen_schreier_ok", report.nielsen_schreier_ok}};
    if (report.euler_quotients_ok)
        out["euler_quotients_ok"] = *report.euler_quotients_ok;
    return out;
}

json to_json(const BorelResult& result)
{
    json groups = json::array();
    for (size_t k = 0; k < result.groups.size(); ++k)
        groups.push_back(json{{"degree", k}, {"group", to_json(result.groups[k])}});
    return json{{"valid_degree_bound", result.valid_degree_bound},
                {"certified", groups},
                {"unreliable_degrees", result.unreliable_degrees}};
}

json to_json(const H2Classification& cls)
{
    json classes = json::array();
    for (const CocycleClass& c : cls.classes) {
        json coords = json::array();
        for (const Int& x : c.coords)
            coords.push_back(int_to_json(x));
        classes.push_back(
            json{{"is_split", c.is_split}, {"order", int_to_json(c.order)}, {"coords", coords}});
    }
    return json{{"group", to_json(cls.group)},
                {"enumerated", cls.enumerated},
                {"class_count", cls.classes.size()},
                {"classes", classes}};
}

namespace {

std::string dot_escape(const std::string& s)
{
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\')
            out.push_back('\\');
        out.push_back(c);
    }
    return out;
}

} // namespace

std::string dot_hasse(const Poset& p)
{
    std::ostringstream os;
    os << "digraph hasse {\n  rankdir=BT;\n";
    for (int i = 0; i < p.size(); ++i)
        os << "  n" << i << " [label=\"" << dot_escape(p.elements()[i].label) << "\"];\n";
    for (const auto& [a, b] : p.hasse())
        os << "  n" << a << " -> n" << b << ";\n";
    os << "}\n";
    return os.str();
}

std::string dot_graph(const SimplicialComplex& k)
{
    if (k.dim() > 1)
        throw ValidationError("dot_graph: only 1-dimensional complexes are rendered");
    std::ostringstream os;
    os << "graph complex {\n";
    for (int i = 0; i < k.count(0); ++i)
        os << "  v" << k.simplex(0, i)[0] << ";\n";
    for (int i = 0; i < k.count(1); ++i) {
        const auto& e = k.simplex(1, i);
        os << "  v" << e[0] << " -- v" << e[1] << ";\n";
    }
    os << "}\n";
    return os.str();
}

} // namespace asphera
