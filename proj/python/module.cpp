#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "strictclose/io.hpp"
#include "strictclose/strict_closure.hpp"
#include "strictclose/weakly_arf.hpp"

namespace py = pybind11;
using namespace strictclose;

namespace {

MonomialAlgebra make_algebra(size_t dim, const std::vector<ExponentVec>& gens) {
    return MonomialAlgebra(AffineSemigroup(dim, gens));
}

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::holds: return "holds";
        case Verdict::fails: return "fails";
        default: return "indeterminate";
    }
}

}  // namespace

PYBIND11_MODULE(strictclose, m) {
    m.doc() = "Exact strict closures, normalizations and weak-Arf verdicts for monomial algebras";

    py::class_<MonomialAlgebra>(m, "MonomialAlgebra")
        .def(py::init(&make_algebra), py::arg("ambient_dim"), py::arg("generators"))
        .def_property_readonly("ambient_dim", &MonomialAlgebra::dim)
        .def_property_readonly("generators", [](const MonomialAlgebra& a) { return a.gens(); })
        .def("__eq__", [](const MonomialAlgebra& a, const MonomialAlgebra& b) { return a == b; })
        .def("__repr__", [](const MonomialAlgebra& a) {
            return "MonomialAlgebra(dim=" + std::to_string(a.dim()) + ", " +
                   std::to_string(a.gens().size()) + " generators)";
        });

    py::class_<ModulePresentation>(m, "ModulePresentation")
        .def_readonly("module_gens", &ModulePresentation::module_gens)
        .def_readonly("complete", &ModulePresentation::complete);

    py::class_<SimplicialComplex>(m, "SimplicialComplex")
        .def(py::init<size_t, std::vector<std::set<int>>>(), py::arg("n_vertices"),
             py::arg("facets"))
        .def_readonly("n_vertices", &SimplicialComplex::n_vertices)
        .def_readonly("facets", &SimplicialComplex::facets);

    m.def("contains",
          [](const MonomialAlgebra& a, const ExponentVec& v) { return contains(a.semigroup, v); });
    m.def("minimize_generators", [](const MonomialAlgebra& a) {
        return MonomialAlgebra(minimize_generators(a.semigroup));
    });
    m.def("module_generators_over",
          [](const MonomialAlgebra& r, const MonomialAlgebra& t, const ExponentVec& box) {
              auto mg = module_generators_over(r, t, DegreeBox(box));
              return py::make_tuple(mg.gens, mg.complete);
          });

    m.def("group_lattice",
          [](const MonomialAlgebra& a) { return group_lattice(a.semigroup).rows; });
    m.def("cone_facets", [](const MonomialAlgebra& a) { return cone_facets(a.semigroup).normals; });
    m.def("saturation_contains", [](const MonomialAlgebra& a, const ExponentVec& v) {
        return saturation_contains(a.semigroup, v);
    });
    m.def("normalization_generators", [](const MonomialAlgebra& a, const ExponentVec& box) {
        auto n = normalization_generators(a.semigroup, DegreeBox(box));
        return py::make_tuple(n.generators, n.complete);
    });

    m.def("present", [](const MonomialAlgebra& r, const MonomialAlgebra& t, const ExponentVec& box) {
        return present(r, t, DegreeBox(box));
    });
    m.def("in_strict_closure", [](const ModulePresentation& p, const ExponentVec& h) {
        return in_strict_closure(p, h);
    });
    m.def("strict_closure",
          [](const MonomialAlgebra& r, const MonomialAlgebra& t, const ExponentVec& box) {
              auto rep = strict_closure(r, t, DegreeBox(box));
              return py::make_tuple(rep.closure, rep.new_degrees, rep.complete);
          });
    m.def("is_strictly_closed", [](const MonomialAlgebra& r, const ExponentVec& box) {
        return std::string(verdict_name(is_strictly_closed(r, DegreeBox(box))));
    });
    m.def("criterion_pairwise_products",
          [](const MonomialAlgebra& r, const std::vector<ExponentVec>& v) {
              return criterion_pairwise_products(r, v);
          });
    m.def("build_cor23b", [](const MonomialAlgebra& a, const std::vector<ExponentVec>& v) {
        return build_cor23b(a, v);
    });
    m.def("rees_algebra", [](size_t d, const std::vector<ExponentVec>& ideal_gens) {
        return rees_algebra(d, ideal_gens);
    });
    m.def("default_box", [](const MonomialAlgebra& r) { return default_box(r).bound; });

    m.def("monomial_weak_arf", [](const MonomialAlgebra& r, const ExponentVec& box) -> py::object {
        auto w = monomial_weak_arf(r, DegreeBox(box));
        if (!w) return py::none();
        return py::make_tuple(w->a, w->b, w->c);
    });
    m.def("numerical_weak_arf", [](const MonomialAlgebra& a) {
        auto res = numerical_weak_arf(a.semigroup);
        return py::make_tuple(res.weakly_arf,
                              res.witness ? py::cast(*res.witness) : py::none().cast<py::object>(),
                              res.conductor);
    });
    m.def("conductor_criterion", [](const MonomialAlgebra& r, const ExponentVec& box) {
        auto res = conductor_criterion(r, DegreeBox(box));
        return py::make_tuple(std::string(verdict_name(res.verdict)),
                              res.failure ? py::cast(*res.failure) : py::none().cast<py::object>());
    });

    m.def("sr_is_strictly_closed", &sr_is_strictly_closed);
    m.def("sr_component", [](const SimplicialComplex& cx, const std::set<int>& u) {
        auto c = sr_component(cx, u);
        return py::make_tuple(c.dim_star, c.dim_ring);
    });
    m.def("minimal_primes", [](const SimplicialComplex& cx) {
        std::vector<std::set<int>> out;
        for (const auto& p : minimal_primes(cx)) out.push_back(p.variables);
        return out;
    });

    m.def("parse_algebra", &parse_algebra);
    m.def("print_algebra", &print_algebra);
    m.def("parse_complex", &parse_complex);
}
