#include "asphera/borel.hpp"
#include "asphera/json_io.hpp"
#include "asphera/specseq.hpp"
#include "asphera/version.hpp"

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace asphera;

namespace {

py::object int_to_py(const Int& v)
{
    // arbitrary precision through the decimal string
    return py::module_::import("builtins").attr("int")(v.str());
}

py::object json_to_py(const json& j)
{
    return py::module_::import("json").attr("loads")(j.dump());
}

std::vector<Coset> poset_cosets(const Poset& p)
{
    std::vector<Coset> cosets;
    for (const auto& e : p.elements()) {
        if (!e.coset)
            throw ValidationError("poset elements carry no cosets");
        cosets.push_back(*e.coset);
    }
    return cosets;
}

SimplicialAction coset_shift(const FiniteGroup& g)
{
    Poset cp = coset_poset(g);
    return simplicial_action(induced_poset_action(shift_action(g, poset_cosets(cp)), cp));
}

SimplicialAction coset_conjugation(const FiniteGroup& g)
{
    Poset cp = coset_poset(g);
    return simplicial_action(induced_poset_action(conjugation_action(g, poset_cosets(cp)), cp));
}

} // namespace

PYBIND11_MODULE(_asphera, m)
{
    m.doc() = "exact invariants of finite group actions on graphs and posets";
    m.attr("__version__") = kVersion;

    py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
    py::register_exception<ScaleExceeded>(m, "ScaleExceeded", PyExc_RuntimeError);

    py::class_<AbelianGroup>(m, "AbelianGroup")
        .def_readonly("free_rank", &AbelianGroup::free_rank)
        .def_property_readonly("torsion",
                               [](const AbelianGroup& g) {
                                   py::list out;
                                   for (const Int& d : g.torsion)
                                       out.append(int_to_py(d));
                                   return out;
                               })
        .def("trivial", &AbelianGroup::trivial)
        .def("__eq__", [](const AbelianGroup& a, const AbelianGroup& b) { return a == b; })
        .def("__repr__", &AbelianGroup::str)
        .def("__str__", &AbelianGroup::str);

    py::class_<FiniteGroup>(m, "FiniteGroup")
        .def_readonly("order", &FiniteGroup::order)
        .def_readonly("names", &FiniteGroup::names)
        .def_readonly("table", &FiniteGroup::table)
        .def("mul", &FiniteGroup::mul)
        .def("inv", &FiniteGroup::inv)
        .def("element_order", &FiniteGroup::element_order)
        .def("is_abelian", &FiniteGroup::is_abelian)
        .def("is_cyclic", [](const FiniteGroup& g) { return g.cyclic_generator().has_value(); })
        .def("__repr__", [](const FiniteGroup& g) {
            return "<FiniteGroup of order " + std::to_string(g.order) + ">";
        });

    m.def("cyclic", &cyclic_group, py::arg("n"));
    m.def("dihedral", &dihedral_group, py::arg("n"), "dihedral group of order 2n");
    m.def("product", &direct_product);
    m.def("group_from_table", &group_from_table, py::arg("table"),
          py::arg("names") = std::vector<std::string>{});

    py::class_<Subgroup>(m, "Subgroup")
        .def(py::init([](std::vector<int> members, int parent_order) {
                 return Subgroup{std::move(members), parent_order};
             }),
             py::arg("members"), py::arg("parent_order"))
        .def_readonly("members", &Subgroup::members)
        .def("__len__", &Subgroup::size)
        .def("__repr__", [](const Subgroup& h) {
            std::string s = "Subgroup({";
            for (size_t i = 0; i < h.members.size(); ++i)
                s += (i ? "," : "") + std::to_string(h.members[i]);
            return s + "})";
        });

    m.def("all_subgroups", &all_subgroups);
    m.def("left_cosets", [](const FiniteGroup& g, const Subgroup& h) {
        py::list out;
        for (const auto& c : left_cosets(g, h))
            out.append(c.members);
        return out;
    });
    m.def("is_normal", &is_normal);
    m.def("quotient_group", &quotient_group);

    py::class_<Poset>(m, "Poset")
        .def("__len__", &Poset::size)
        .def("less", &Poset::less)
        .def_property_readonly("hasse", [](const Poset& p) { return p.hasse(); })
        .def_property_readonly("labels",
                               [](const Poset& p) {
                                   std::vector<std::string> out;
                                   for (const auto& e : p.elements())
                                       out.push_back(e.label);
                                   return out;
                               })
        .def("__repr__", [](const Poset& p) {
            return "<Poset with " + std::to_string(p.size()) + " elements, " +
                   std::to_string(p.hasse().size()) + " covering pairs>";
        });

    m.def("coset_poset", &coset_poset);
    m.def("subgroup_lattice", &subgroup_lattice);

    py::class_<SimplicialComplex>(m, "SimplicialComplex")
        .def_property_readonly("vertex_count", &SimplicialComplex::vertex_count)
        .def_property_readonly("dim", &SimplicialComplex::dim)
        .def("count", &SimplicialComplex::count)
        .def("simplices", [](const SimplicialComplex& k, int d) { return k.simplices(d); })
        .def("__repr__", [](const SimplicialComplex& k) {
            std::string s = "<SimplicialComplex f=(";
            for (int d = 0; d <= k.dim(); ++d)
                s += (d ? "," : "") + std::to_string(k.count(d));
            return s + ")>";
        });

    m.def("order_complex", &order_complex);
    m.def("closure", &SimplicialComplex::closure, py::arg("vertex_count"), py::arg("simplices"));
    m.def("cycle_complex", &cycle_complex);
    m.def("point_complex", &point_complex);

    py::class_<SimplicialAction>(m, "SimplicialAction")
        .def_readonly("group", &SimplicialAction::group)
        .def_readonly("complex", &SimplicialAction::complex)
        .def_readonly("vertex_perms", &SimplicialAction::vertex_perms)
        .def("__repr__", [](const SimplicialAction& sa) {
            return "<SimplicialAction of a group of order " + std::to_string(sa.group.order) +
                   ">";
        });

    m.def("simplicial_action", &make_simplicial_action, py::arg("group"), py::arg("complex"),
          py::arg("vertex_perms"));
    m.def("coset_shift_action", &coset_shift,
          "shift action on the order complex of the coset poset");
    m.def("coset_conjugation_action", &coset_conjugation);
    m.def("trivial_action", &trivial_simplicial_action);
    m.def("rotation_action", &rotation_action, py::arg("n"), py::arg("order"), py::arg("step"));
    m.def("reflection_action", &reflection_action, py::arg("n"));
    m.def("dihedral_action", &dihedral_action, py::arg("n"));

    m.def("euler_characteristic",
          [](const SimplicialComplex& k) { return euler_characteristic(k); });
    m.def("components", &components);
    m.def("homology", [](const SimplicialComplex& k, int degree) { return homology_group(k, degree); },
          py::arg("complex"), py::arg("degree"));
    m.def("homology_generators",
          [](const SimplicialComplex& k, int degree) { return json_to_py(to_json(homology(k, degree))); });
    m.def("is_free_action", [](const SimplicialAction& sa) {
        FreenessVerdict v = is_free_action(sa);
        py::dict out;
        out["free"] = v.free;
        if (!v.free)
            out["witness"] = v.describe(sa);
        return out;
    });
    m.def("quotient_homology", [](const SimplicialAction& sa, int degree) {
        return chain_homology_group(coinvariant_complex(sa.complex, sa).complex, degree);
    });

    py::class_<GModule>(m, "GModule")
        .def_readonly("group", &GModule::group)
        .def_readonly("gens", &GModule::gens)
        .def("underlying_group", &GModule::underlying_group)
        .def("__repr__", [](const GModule& mod) {
            return "<GModule on " + std::to_string(mod.gens) + " generators over a group of order " +
                   std::to_string(mod.group.order) + ">";
        });

    m.def("trivial_module", &trivial_module_Z);
    m.def("trivial_torsion_module",
          [](const FiniteGroup& g, long long mm) { return trivial_module_Zm(g, Int(mm)); });
    m.def("sign_module", &cyclic_sign_module, py::arg("n"));
    m.def("homology_module",
          [](const SimplicialAction& sa, int k) { return homology_gmodule(sa, k); });

    m.def("group_homology",
          [](const FiniteGroup& g, const GModule& mod, int k, const std::string& resolution) {
              if (resolution == "bar")
                  return bar_group_homology(g, mod, k);
              if (resolution == "periodic")
                  return cyclic_group_homology(g.order, mod, k);
              return group_homology(g, mod, k);
          },
          py::arg("group"), py::arg("module"), py::arg("degree"),
          py::arg("resolution") = "auto");
    m.def("group_cohomology",
          [](const FiniteGroup& g, const GModule& mod, int k, const std::string& resolution) {
              if (resolution == "bar")
                  return bar_group_cohomology(g, mod, k);
              if (resolution == "periodic")
                  return cyclic_group_cohomology(g.order, mod, k);
              return group_cohomology(g, mod, k);
          },
          py::arg("group"), py::arg("module"), py::arg("degree"),
          py::arg("resolution") = "auto");

    m.def("h2_classes", [](const FiniteGroup& g, const GModule& mod) {
        return json_to_py(to_json(h2_classes(g, mod)));
    });

    m.def("e2_page", [](const SimplicialAction& sa, int pmax, int qmax, bool cohomological) {
        return json_to_py(to_json(e2_page(sa, pmax, qmax, cohomological)));
    },
          py::arg("action"), py::arg("pmax"), py::arg("qmax"),
          py::arg("cohomological") = false);
    m.def("abutment", [](const SimplicialAction& sa, int pmax, int qmax) {
        return json_to_py(to_json(abutment(e2_page(sa, pmax, qmax))));
    });
    m.def("subordinate_report", [](const SimplicialAction& sa) {
        return json_to_py(to_json(subordinate_report(sa)));
    });
    m.def("subgroup_diagram_check", [](const SimplicialAction& sa, const Subgroup& h) {
        return json_to_py(to_json(subgroup_diagram_check(sa, h)));
    });

    m.def("milnor_join", [](const FiniteGroup& g, int levels) {
        JoinComplex join = milnor_join(g, levels);
        return py::make_tuple(join.complex, join.action);
    });
    m.def("staircase_product", &staircase_product);
    m.def("borel_homology",
          [](const SimplicialAction& sa, int levels, int kmax) {
              return json_to_py(to_json(borel_homology(sa.complex, sa, levels, kmax)));
          },
          py::arg("action"), py::arg("levels"), py::arg("kmax"));

    m.def("complex_to_json", [](const SimplicialComplex& k) { return json_to_py(to_json(k)); });
    m.def("dot_hasse", &dot_hasse);
}
