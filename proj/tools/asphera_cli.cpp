// asphera: exact invariants of finite group actions on graphs and posets.
//
// Exit codes: 0 success, 1 a reproduce check failed, 2 bad flags or invalid
// input, 3 resource guard refused the computation, 4 internal error.

#include "asphera/borel.hpp"
#include "asphera/json_io.hpp"
#include "asphera/limits.hpp"
#include "asphera/specseq.hpp"
#include "asphera/version.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>

using namespace asphera;

namespace {

struct OutputOptions {
    std::string out_path;
    bool timing = false;
};

void emit(const OutputOptions& opts, const std::string& text)
{
    if (opts.out_path.empty()) {
        std::cout << text;
        if (text.empty() || text.back() != '\n')
            std::cout << "\n";
    } else {
        std::ofstream f(opts.out_path);
        if (!f)
            throw ValidationError("cannot open output file: " + opts.out_path);
        f << text;
        if (text.empty() || text.back() != '\n')
            f << "\n";
    }
}

void emit(const OutputOptions& opts, const json& report)
{
    emit(opts, report.dump(2));
}

json wrap_report(const std::string& command, json inputs, json outputs)
{
    return json{{"command", command},
                {"inputs", std::move(inputs)},
                {"outputs", std::move(outputs)},
                {"version", kVersion}};
}

std::vector<std::string> split(const std::string& s, char sep)
{
    std::vector<std::string> parts;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    parts.push_back(cur);
    return parts;
}

int parse_positive(const std::string& s, const std::string& what)
{
    try {
        size_t pos = 0;
        int v = std::stoi(s, &pos);
        if (pos != s.size() || v < 1)
            throw std::invalid_argument(what);
        return v;
    } catch (...) {
        throw ValidationError("expected a positive integer for " + what + ", got '" + s + "'");
    }
}

// cyclic:n | dihedral:n | product:<a>,<b> | file:<path>
FiniteGroup parse_group(const std::string& spec)
{
    if (spec.rfind("cyclic:", 0) == 0)
        return cyclic_group(parse_positive(spec.substr(7), "cyclic order"));
    if (spec.rfind("dihedral:", 0) == 0)
        return dihedral_group(parse_positive(spec.substr(9), "dihedral parameter"));
    if (spec.rfind("product:", 0) == 0) {
        std::string rest = spec.substr(8);
        auto comma = rest.find(',');
        if (comma == std::string::npos)
            throw ValidationError("product group spec needs two comma-separated factors");
        return direct_product(parse_group(rest.substr(0, comma)),
                              parse_group(rest.substr(comma + 1)));
    }
    if (spec.rfind("file:", 0) == 0) {
        std::ifstream f(spec.substr(5));
        if (!f)
            throw ValidationError("cannot open group file: " + spec.substr(5));
        return group_from_json(json::parse(f));
    }
    throw ValidationError("unknown group spec '" + spec +
                          "' (use cyclic:n, dihedral:n, product:a,b, or file:path)");
}

// cycle:n | point | coset-complex:<group> | subgroup-complex:<group> | file:<path>
SimplicialComplex parse_space(const std::string& spec)
{
    if (spec.rfind("cycle:", 0) == 0)
        return cycle_complex(parse_positive(spec.substr(6), "cycle length"));
    if (spec == "point")
        return point_complex();
    if (spec.rfind("coset-complex:", 0) == 0)
        return order_complex(coset_poset(parse_group(spec.substr(14))));
    if (spec.rfind("subgroup-complex:", 0) == 0)
        return order_complex(subgroup_lattice(parse_group(spec.substr(17))));
    if (spec.rfind("file:", 0) == 0) {
        std::ifstream f(spec.substr(5));
        if (!f)
            throw ValidationError("cannot open complex file: " + spec.substr(5));
        return complex_from_json(json::parse(f));
    }
    throw ValidationError("unknown space spec '" + spec +
                          "' (use cycle:n, point, coset-complex:G, subgroup-complex:G, or "
                          "file:path)");
}

SimplicialAction lattice_action(const std::string& group_spec, bool conjugation, bool on_subgroups)
{
    FiniteGroup g = parse_group(group_spec);
    if (on_subgroups) {
        Poset lat = subgroup_lattice(g);
        std::vector<Subgroup> subs;
        for (const auto& e : lat.elements())
            subs.push_back(*e.subgroup);
        return simplicial_action(induced_poset_action(conjugation_action(g, subs), lat));
    }
    Poset cp = coset_poset(g);
    std::vector<Coset> cosets;
    for (const auto& e : cp.elements())
        cosets.push_back(*e.coset);
    GroupAction base = conjugation ? conjugation_action(g, cosets) : shift_action(g, cosets);
    return simplicial_action(induced_poset_action(base, cp));
}

// action specs, resolved against the space spec:
//   trivial:<group>                    on any space
//   rotation:<m>:<step>, antipodal, reflection, dihedral   on cycle:n
//   shift, conjugation                 on coset-complex:G / subgroup-complex:G
SimplicialAction parse_action(const std::string& space_spec, const std::string& action_spec)
{
    if (action_spec.rfind("trivial:", 0) == 0)
        return trivial_simplicial_action(parse_group(action_spec.substr(8)),
                                         parse_space(space_spec));
    if (space_spec.rfind("cycle:", 0) == 0) {
        int n = parse_positive(space_spec.substr(6), "cycle length");
        if (action_spec.rfind("rotation:", 0) == 0) {
            auto parts = split(action_spec, ':');
            if (parts.size() != 3)
                throw ValidationError("rotation action spec is rotation:<order>:<step>");
            return rotation_action(n, parse_positive(parts[1], "rotation order"),
                                   parse_positive(parts[2], "rotation step"));
        }
        if (action_spec == "antipodal") {
            if (n % 2 != 0)
                throw ValidationError("antipodal action needs an even cycle");
            return rotation_action(n, 2, n / 2);
        }
        if (action_spec == "reflection")
            return reflection_action(n);
        if (action_spec == "dihedral")
            return dihedral_action(n);
    }
    if (space_spec.rfind("coset-complex:", 0) == 0) {
        if (action_spec == "shift")
            return lattice_action(space_spec.substr(14), false, false);
        if (action_spec == "conjugation")
            return lattice_action(space_spec.substr(14), true, false);
    }
    if (space_spec.rfind("subgroup-complex:", 0) == 0 && action_spec == "conjugation")
        return lattice_action(space_spec.substr(17), true, true);
    throw ValidationError("action '" + action_spec + "' is not defined on space '" + space_spec +
                          "'");
}

// trivial-z | trivial-zm:<m> | sign | h1-of:<space>/<action> | file:<path>
GModule parse_module(const FiniteGroup& g, const std::string& spec)
{
    if (spec == "trivial-z")
        return trivial_module_Z(g);
    if (spec.rfind("trivial-zm:", 0) == 0)
        return trivial_module_Zm(g, parse_positive(spec.substr(11), "torsion order"));
    if (spec == "sign") {
        if (!g.cyclic_generator() || g.order % 2 != 0)
            throw ValidationError("the sign module shortcut needs an even cyclic group");
        return cyclic_sign_module(g.order);
    }
    if (spec.rfind("h1-of:", 0) == 0) {
        auto slash = spec.find('/');
        if (slash == std::string::npos)
            throw ValidationError("module spec h1-of:<space>/<action>");
        SimplicialAction sa = parse_action(spec.substr(6, slash - 6), spec.substr(slash + 1));
        if (sa.group.table != g.table)
            throw ValidationError("h1-of module group does not match --group");
        return homology_gmodule(sa, 1);
    }
    if (spec.rfind("file:", 0) == 0) {
        std::ifstream f(spec.substr(5));
        if (!f)
            throw ValidationError("cannot open module file: " + spec.substr(5));
        return gmodule_from_json(g, json::parse(f));
    }
    throw ValidationError("unknown module spec '" + spec + "'");
}

// -------------------------------------------------------------------------
// reproduce

struct CheckList {
    json rows = json::array();
    bool all_pass = true;

    void add(const std::string& name, const json& expected, const json& computed)
    {
        bool ok = expected == computed;
        all_pass = all_pass && ok;
        rows.push_back(json{{"name", name},
                            {"expected", expected},
                            {"computed", computed},
                            {"status", ok ? "PASS" : "FAIL"}});
    }
    void skipped(const std::string& name, const std::string& why)
    {
        rows.push_back(json{{"name", name}, {"status", "SKIPPED"}, {"reason", why}});
    }
};

bool is_prime(int n)
{
    if (n < 2)
        return false;
    for (int d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

SimplicialAction coset_shift_action(int n)
{
    return lattice_action("cyclic:" + std::to_string(n), false, false);
}

json reproduce_zpq(int p, int q)
{
    if (!is_prime(p) || !is_prime(q) || p == q)
        throw ValidationError("zpq needs two distinct primes");
    CheckList checks;
    const int n = p * q;
    SimplicialAction sa = coset_shift_action(n);
    checks.add("vertices", p * q + p + q, sa.complex.count(0));
    checks.add("edges", 2 * p * q, sa.complex.count(1));
    checks.add("components", 1, components(sa.complex));
    checks.add("euler_characteristic", p * q + p + q - 2 * p * q,
               euler_characteristic(sa.complex));
    checks.add("H0", to_json(AbelianGroup::free_of_rank(1)), to_json(homology_group(sa.complex, 0)));
    checks.add("H1", to_json(AbelianGroup::free_of_rank((p - 1) * (q - 1))),
               to_json(homology_group(sa.complex, 1)));
    checks.add("H2", to_json(AbelianGroup::zero()), to_json(homology_group(sa.complex, 2)));

    GModule m = homology_gmodule(sa, 1);
    for (int k = 0; k <= 6; ++k)
        checks.add("periodic H_" + std::to_string(k) + "(G, H1)",
                   to_json(AbelianGroup::zero()), to_json(cyclic_group_homology(n, m, k)));
    long long bar_top = static_cast<long long>(m.gens);
    for (int i = 0; i < 4; ++i)
        bar_top *= n;
    if (bar_top <= limits().max_chain_rank) {
        for (int k = 0; k <= 3; ++k)
            checks.add("bar H_" + std::to_string(k) + "(G, H1)", to_json(AbelianGroup::zero()),
                       to_json(bar_group_homology(sa.group, m, k)));
    } else {
        checks.skipped("bar H_k(G, H1), k<=3", "chain rank above the resource guard");
    }

    E2Page page = e2_page(sa, 5, 1);
    AbutmentReport ab = abutment(page);
    GModule triv = trivial_module_Z(sa.group);
    for (int k = 0; k <= 5; ++k) {
        json expected{{"status", "DETERMINED"},
                      {"value", to_json(group_homology(sa.group, triv, k))}};
        json computed{{"status", ab.degrees[k].status == Determinacy::Determined
                                     ? "DETERMINED"
                                     : "GRADED-ONLY"},
                      {"value", ab.degrees[k].value ? to_json(*ab.degrees[k].value) : json()}};
        checks.add("H_" + std::to_string(k) + " of the extension group", expected, computed);
    }

    try {
        BorelResult borel = borel_homology(sa.complex, sa, 3, 1);
        checks.add("borel H_1", to_json(AbelianGroup(0, {Int(n)})), to_json(borel.groups[1]));
    } catch (const ScaleExceeded& e) {
        checks.skipped("borel H_1", e.what());
    }

    return json{{"checks", checks.rows}, {"all_pass", checks.all_pass}};
}

json reproduce_dihedral(int n)
{
    if (n < 3)
        throw ValidationError("dihedral reproduction needs n >= 3");
    CheckList checks;
    SimplicialAction sa = dihedral_action(n);
    ExtensionReport sub = subordinate_report(sa);
    checks.add("subordinate kind", "DIAGRAM-ONLY", to_json(sub).at("kind"));

    std::vector<int> rot(n);
    for (int i = 0; i < n; ++i)
        rot[i] = i;
    DiagramReport diagram = subgroup_diagram_check(sa, Subgroup{rot, 2 * n});
    checks.add("index of the rotation subgroup", 2, diagram.index);
    checks.add("quotient chi", 0, diagram.quotient_chi);
    checks.add("quotient H1", to_json(AbelianGroup::free_of_rank(1)),
               to_json(diagram.quotient_h1));
    Int entry = diagram.induced_h1_map(0, 0);
    checks.add("induced H1 map multiplies by", n,
               static_cast<long long>(entry < 0 ? -entry : entry));
    checks.add("H1 map cokernel order", n, static_cast<long long>(diagram.h1_cokernel_order));
    checks.add("nielsen-schreier row check", true, diagram.nielsen_schreier_ok);

    try {
        BorelResult borel = borel_homology(sa.complex, sa, 4, 1);
        checks.add("borel H_1", to_json(AbelianGroup(0, {Int(2), Int(2)})),
                   to_json(borel.groups[1]));
    } catch (const ScaleExceeded& e) {
        checks.skipped("borel H_1", e.what());
    }
    return json{{"checks", checks.rows}, {"all_pass", checks.all_pass}};
}

json reproduce_three_extensions()
{
    CheckList checks;
    FiniteGroup z2 = cyclic_group(2);
    H2Classification triv = h2_classes(z2, trivial_module_Z(z2));
    checks.add("classes over the trivial module", 2, triv.classes.size());
    int split = 0;
    for (const auto& c : triv.classes)
        split += c.is_split ? 1 : 0;
    checks.add("split classes over the trivial module", 1, split);

    H2Classification sign = h2_classes(z2, cyclic_sign_module(2));
    checks.add("classes over the sign module", 1, sign.classes.size());
    checks.add("the sign class splits", true, sign.classes.at(0).is_split);

    checks.add("total extensions", 3, triv.classes.size() + sign.classes.size());
    return json{{"checks", checks.rows}, {"all_pass", checks.all_pass}};
}

json reproduce_coset_wedge(const std::string& group_spec)
{
    CheckList checks;
    FiniteGroup g = parse_group(group_spec);
    SimplicialComplex k = order_complex(coset_poset(g));
    int comps = components(k);
    long long chi = euler_characteristic(k);
    checks.add("H0 counts the components", to_json(AbelianGroup::free_of_rank(comps)),
               to_json(homology_group(k, 0)));
    long long betti_alt = 0;
    int sign = 1;
    json betti = json::array();
    for (int d = 0; d <= k.dim(); ++d) {
        AbelianGroup h = homology_group(k, d);
        betti.push_back(to_json(h));
        betti_alt += sign * static_cast<long long>(h.free_rank);
        sign = -sign;
    }
    checks.add("euler characteristic equals the alternating betti sum", chi, betti_alt);
    if (k.dim() <= 1) {
        checks.add("graph H1 rank (components - chi)",
                   to_json(AbelianGroup::free_of_rank(static_cast<int>(comps - chi))),
                   to_json(homology_group(k, 1)));
        if (comps == 1)
            checks.add("wedge rank", 1 - chi,
                       static_cast<long long>(homology_group(k, 1).free_rank));
    }
    json out{{"checks", checks.rows}, {"all_pass", checks.all_pass}};
    out["vertices"] = k.count(0);
    out["edges"] = k.count(1);
    out["dimension"] = k.dim();
    out["homology"] = betti;
    return out;
}

json run_reproduce(const std::string& id)
{
    if (id.rfind("zpq:", 0) == 0) {
        auto parts = split(id.substr(4), ',');
        if (parts.size() != 2)
            throw ValidationError("zpq id has the form zpq:<p>,<q>");
        return reproduce_zpq(parse_positive(parts[0], "p"), parse_positive(parts[1], "q"));
    }
    if (id.rfind("dihedral:", 0) == 0)
        return reproduce_dihedral(parse_positive(id.substr(9), "n"));
    if (id == "three-extensions")
        return reproduce_three_extensions();
    if (id.rfind("coset-wedge:", 0) == 0)
        return reproduce_coset_wedge(id.substr(12));
    throw ValidationError("unknown example id '" + id +
                          "'; valid ids: zpq:<p>,<q>, dihedral:<n>, three-extensions, "
                          "coset-wedge:<group>");
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"exact invariants of finite group actions on graphs and posets"};
    app.require_subcommand(1);
    OutputOptions opts;
    app.add_option("--out", opts.out_path, "write the report to a file instead of stdout");
    app.add_flag("--timing", opts.timing, "print wall time to stderr");

    // reproduce -------------------------------------------------------------
    std::string reproduce_id;
    CLI::App* reproduce = app.add_subcommand("reproduce", "rerun a documented example end to end");
    reproduce->add_option("id", reproduce_id, "example id")->required();

    // compute ---------------------------------------------------------------
    CLI::App* compute = app.add_subcommand("compute", "run one computation");
    compute->require_subcommand(1);

    std::string group_spec, space_spec, action_spec, module_spec, subgroup_csv;
    bool want_subgroups = false, want_coset_poset = false, want_subgroup_lattice = false;
    bool want_complex = false, want_dot = false, cohomology = false, want_abutment = false;
    bool export_complex = false, with_generators = false;
    int degree = 0, pmax = 2, qmax = 1, levels = 4, kmax = 1;
    std::string resolution = "auto";

    CLI::App* cgroup = compute->add_subcommand("group", "group structure");
    cgroup->add_option("--group", group_spec)->required();
    cgroup->add_flag("--subgroups", want_subgroups, "list all subgroups");

    CLI::App* clattice = compute->add_subcommand("lattice", "coset posets and subgroup lattices");
    clattice->add_option("--group", group_spec)->required();
    clattice->add_flag("--coset-poset", want_coset_poset);
    clattice->add_flag("--subgroup-lattice", want_subgroup_lattice);
    clattice->add_flag("--complex", want_complex, "emit the order complex");
    clattice->add_flag("--dot", want_dot, "emit DOT instead of JSON");

    std::string complex_path;
    CLI::App* chomology = compute->add_subcommand("homology", "homology of a complex");
    chomology->add_option("--space", space_spec, "a space spec such as cycle:6");
    chomology->add_option("--complex", complex_path, "path to a complex JSON file");
    chomology->add_option("--degree", degree)->required();
    chomology->add_flag("--generators", with_generators);

    CLI::App* cghom = compute->add_subcommand("ghom", "group (co)homology");
    cghom->add_option("--group", group_spec)->required();
    cghom->add_option("--module", module_spec)->required();
    cghom->add_option("--degree", degree)->required();
    cghom->add_flag("--cohomology", cohomology);
    cghom->add_option("--resolution", resolution)->check(CLI::IsMember({"auto", "bar", "periodic"}));

    bool pretty = false;
    CLI::App* ce2 = compute->add_subcommand("e2", "second page of the equivariant spectral sequence");
    ce2->add_option("--space", space_spec)->required();
    ce2->add_option("--action", action_spec)->required();
    ce2->add_option("--pmax", pmax);
    ce2->add_option("--qmax", qmax);
    ce2->add_flag("--cohomological", cohomology);
    ce2->add_flag("--abutment", want_abutment);
    ce2->add_flag("--pretty", pretty, "render as text instead of JSON");

    CLI::App* cborel = compute->add_subcommand("borel", "homology of the homotopy quotient");
    cborel->add_option("--space", space_spec)->required();
    cborel->add_option("--action", action_spec)->required();
    cborel->add_option("--levels", levels, "join truncation level");
    cborel->add_option("--kmax", kmax);
    cborel->add_flag("--export-complex", export_complex);

    CLI::App* csub = compute->add_subcommand("subordinate", "extension report of a graph action");
    csub->add_option("--space", space_spec)->required();
    csub->add_option("--action", action_spec)->required();
    csub->add_option("--subgroup-check", subgroup_csv,
                     "comma-separated element indices of a subgroup to restrict to");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    auto started = std::chrono::steady_clock::now();
    int exit_code = 0;
    try {
        if (*reproduce) {
            json outputs = run_reproduce(reproduce_id);
            emit(opts, wrap_report("reproduce", json{{"id", reproduce_id}}, outputs));
            if (!outputs.at("all_pass").get<bool>())
                exit_code = 1;
        } else if (*cgroup) {
            FiniteGroup g = parse_group(group_spec);
            json out{{"group", to_json(g)},
                     {"abelian", g.is_abelian()},
                     {"cyclic", g.cyclic_generator().has_value()}};
            if (want_subgroups) {
                json subs = json::array();
                for (const auto& h : all_subgroups(g))
                    subs.push_back(to_json(h));
                out["subgroups"] = subs;
            }
            emit(opts, wrap_report("compute group", json{{"group", group_spec}}, out));
        } else if (*clattice) {
            if (want_coset_poset == want_subgroup_lattice)
                throw ValidationError(
                    "choose exactly one of --coset-poset and --subgroup-lattice");
            FiniteGroup g = parse_group(group_spec);
            Poset p = want_coset_poset ? coset_poset(g) : subgroup_lattice(g);
            if (want_dot) {
                emit(opts, want_complex ? dot_graph(order_complex(p)) : dot_hasse(p));
            } else {
                json out{{"elements", p.size()}, {"covering_pairs", p.hasse().size()}};
                json labels = json::array();
                for (const auto& e : p.elements())
                    labels.push_back(e.label);
                out["labels"] = labels;
                json hasse = json::array();
                for (const auto& [a, b] : p.hasse())
                    hasse.push_back(json::array({a, b}));
                out["hasse"] = hasse;
                if (want_complex)
                    out["order_complex"] = to_json(order_complex(p));
                emit(opts,
                     wrap_report("compute lattice",
                                 json{{"group", group_spec},
                                      {"poset", want_coset_poset ? "coset-poset"
                                                                 : "subgroup-lattice"}},
                                 out));
            }
        } else if (*chomology) {
            if (space_spec.empty() == complex_path.empty())
                throw ValidationError("choose exactly one of --space and --complex");
            if (!complex_path.empty())
                space_spec = "file:" + complex_path;
            SimplicialComplex k = parse_space(space_spec);
            json out{{"euler_characteristic", euler_characteristic(k)},
                     {"components", components(k)}};
            if (with_generators) {
                out["homology"] = to_json(homology(k, degree));
            } else {
                out["homology"] = to_json(homology_group(k, degree));
            }
            emit(opts, wrap_report("compute homology",
                                   json{{"space", space_spec}, {"degree", degree}}, out));
        } else if (*cghom) {
            FiniteGroup g = parse_group(group_spec);
            GModule m = parse_module(g, module_spec);
            AbelianGroup h;
            if (resolution == "bar")
                h = cohomology ? bar_group_cohomology(g, m, degree)
                               : bar_group_homology(g, m, degree);
            else if (resolution == "periodic")
                h = cohomology ? cyclic_group_cohomology(g.order, m, degree)
                               : cyclic_group_homology(g.order, m, degree);
            else
                h = cohomology ? group_cohomology(g, m, degree) : group_homology(g, m, degree);
            json out{{"group", to_json(h)},
                     {"resolution", resolution},
                     {"module_presentation",
                      json{{"generators", m.gens}, {"relations", to_json(m.relations)}}}};
            emit(opts, wrap_report("compute ghom",
                                   json{{"group", group_spec},
                                        {"module", module_spec},
                                        {"degree", degree},
                                        {"cohomology", cohomology}},
                                   out));
        } else if (*ce2) {
            SimplicialAction sa = parse_action(space_spec, action_spec);
            E2Page page = e2_page(sa, pmax, qmax, cohomology);
            if (pretty) {
                std::ostringstream os;
                os << (cohomology ? "E_2 page (cohomological)" : "E2 page (homological)")
                   << (page.aspherical_base ? ", converges to the extension group"
                                            : ", converges to the homotopy quotient")
                   << "\n";
                std::vector<std::vector<std::string>> cells(qmax + 1);
                size_t width = 4;
                for (int q = 0; q <= qmax; ++q)
                    for (int p = 0; p <= pmax; ++p) {
                        cells[q].push_back(page.at(p, q).str());
                        width = std::max(width, cells[q].back().size());
                    }
                for (int q = qmax; q >= 0; --q) {
                    os << "  q=" << q << " |";
                    for (int p = 0; p <= pmax; ++p) {
                        os << " " << cells[q][p];
                        os << std::string(width - cells[q][p].size(), ' ');
                    }
                    os << "\n";
                }
                os << "       ";
                for (int p = 0; p <= pmax; ++p)
                    os << " p=" << p << std::string(width - 2 - std::to_string(p).size(), ' ');
                os << "\n";
                if (want_abutment) {
                    os << "abutment:\n";
                    for (const AbutmentEntry& e : abutment(page).degrees) {
                        os << "  n=" << e.n << ": ";
                        if (e.status == Determinacy::Determined)
                            os << "DETERMINED  " << e.value->str();
                        else {
                            os << "GRADED-ONLY ";
                            for (const auto& [p, q, grp] : e.pieces)
                                os << " (" << p << "," << q << ")=" << grp.str();
                        }
                        os << "\n";
                    }
                }
                emit(opts, os.str());
            } else {
                json out{{"page", to_json(page)}};
                if (want_abutment)
                    out["abutment"] = to_json(abutment(page));
                emit(opts, wrap_report("compute e2",
                                       json{{"space", space_spec},
                                            {"action", action_spec},
                                            {"pmax", pmax},
                                            {"qmax", qmax},
                                            {"cohomological", cohomology}},
                                       out));
            }
        } else if (*cborel) {
            SimplicialAction sa = parse_action(space_spec, action_spec);
            BorelResult r = borel_homology(sa.complex, sa, levels, kmax);
            json out{{"result", to_json(r)}};
            if (export_complex)
                out["quotient_complex"] = to_json(borel_complex(sa.complex, sa, levels));
            emit(opts, wrap_report("compute borel",
                                   json{{"space", space_spec},
                                        {"action", action_spec},
                                        {"levels", levels},
                                        {"kmax", kmax}},
                                   out));
        } else if (*csub) {
            SimplicialAction sa = parse_action(space_spec, action_spec);
            json out{{"report", to_json(subordinate_report(sa))}};
            if (!subgroup_csv.empty()) {
                std::vector<int> members;
                for (const std::string& part : split(subgroup_csv, ',')) {
                    try {
                        size_t pos = 0;
                        int v = std::stoi(part, &pos);
                        if (pos != part.size() || v < 0 || v >= sa.group.order)
                            throw std::invalid_argument(part);
                        members.push_back(v);
                    } catch (...) {
                        throw ValidationError("bad subgroup element index '" + part + "'");
                    }
                }
                std::sort(members.begin(), members.end());
                members.erase(std::unique(members.begin(), members.end()), members.end());
                out["subgroup_check"] =
                    to_json(subgroup_diagram_check(sa, Subgroup{members, sa.group.order}));
            }
            emit(opts, wrap_report("compute subordinate",
                                   json{{"space", space_spec},
                                        {"action", action_spec},
                                        {"subgroup", subgroup_csv}},
                                   out));
        }
    } catch (const ScaleExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const CLI::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 4;
    }

    if (opts.timing) {
        auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
            std::chrono::steady_clock::now() - started);
        std::cerr << "wall time: " << elapsed.count() << " ms\n";
    }
    return exit_code;
}
