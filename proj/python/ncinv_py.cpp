// Python bindings. Scalars cross the boundary as strings ("p/q" or "[c0, c1, ...]@m").

#include "ncinv/auslander.hpp"
#include "ncinv/errors.hpp"
#include "ncinv/hj_series.hpp"
#include "ncinv/invariants.hpp"
#include "ncinv/presentations.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace ncinv;

namespace {

CycloScalar parse_q(const std::string& s) {
    if (s.rfind("root:", 0) == 0) return CycloScalar::root_of_unity(std::stol(s.substr(5)), 1);
    Rational r;
    if (r.set_str(s, 10) != 0 || r.get_den() == 0) throw std::invalid_argument("q must be root:m or a rational, got '" + s + "'");
    r.canonicalize();
    return CycloScalar(r);
}

py::list elts(const std::vector<AlgebraElt>& xs) {
    py::list out;
    for (auto& x : xs) out.append(x.str());
    return out;
}

}  // namespace

PYBIND11_MODULE(_ncinv, m) {
    m.doc() = "Invariants of finite groups acting on the quantum and Jordan planes";
    py::register_exception<InternalInconsistency>(m, "InternalInconsistency");

    py::class_<AlgebraSpec>(m, "Algebra")
        .def_static("quantum", [](const std::string& q) { return AlgebraSpec::quantum(parse_q(q)); }, py::arg("q"))
        .def_static("jordan", &AlgebraSpec::jordan)
        .def("__repr__", &AlgebraSpec::str);

    py::class_<GroupSpec>(m, "Group")
        .def_static("trivial", &GroupSpec::trivial)
        .def_static("cyclic", &GroupSpec::cyclic, py::arg("algebra"), py::arg("n"), py::arg("a"), py::arg("raw") = false)
        .def_static("gnk", &GroupSpec::gnk)
        .def_static("dihedral", &GroupSpec::dihedral)
        .def_property_readonly("algebra", &GroupSpec::ambient)
        .def("elements", [](const GroupSpec& G) {
            std::vector<std::string> out;
            for (auto& g : enumerate_group(G)) out.push_back(g.str());
            return out;
        })
        .def("__repr__", &GroupSpec::str);

    m.def("classify", [](const GroupSpec& G) {
        GroupReport r = group_report(G);
        py::dict d;
        d["order"] = r.order;
        d["is_small"] = r.is_small;
        d["hdet_trivial"] = r.hdet_trivial;
        d["gorenstein"] = r.gorenstein_flag;
        if (r.has_closed_form) d["is_small_closed_form"] = r.is_small_closed_form;
        if (r.commutative_invariants_flag) d["commutative_invariants"] = *r.commutative_invariants_flag;
        return d;
    });
    m.def("molien", [](const GroupSpec& G, long N) { return molien_dims(G.ambient(), G, N); }, py::arg("group"), py::arg("N"));
    m.def("hj", [](long num, long den) { return hj_expand(num, den).entries; });

    m.def("generators", [](const GroupSpec& G) {
        GeneratorSet s = generator_set(G.ambient(), G);
        py::dict d;
        d["generators"] = elts(s.generators);
        d["degrees"] = s.degrees;
        d["provenance"] = provenance_name(s.provenance);
        return d;
    });
    m.def("verify_generation", [](const GroupSpec& G, long N) {
        GenerationReport r = verify_generation(G.ambient(), G, generator_set(G.ambient(), G).generators, N);
        py::dict d;
        d["success"] = r.success;
        d["first_failure"] = r.first_failure;
        d["span_dims"] = r.span_dims;
        d["molien_dims"] = r.molien_dims;
        return d;
    });
    m.def("gnk_basis", [](int n, int k, int d) { return elts(gnk_basis(n, k, d)); });

    py::class_<Presentation>(m, "Presentation")
        .def_readonly("names", &Presentation::names)
        .def_readonly("degrees", &Presentation::degrees)
        .def_property_readonly("relations", [](const Presentation& p) {
            std::vector<std::string> out;
            for (auto& r : p.relations) out.push_back(p.poly_str(r));
            return out;
        })
        .def("__repr__", &Presentation::str);
    m.def("jordan_presentation", &jordan_presentation);
    m.def("quantum_presentation", [](int n, int a, const std::string& q) { return quantum_presentation(n, a, parse_q(q)); });
    m.def("gnk73_presentation", &gnk73_presentation);
    m.def("verify_presentation", [](const GroupSpec& G, const Presentation& p, long N) {
        PresentationReport r = verify_presentation(G.ambient(), G, p, N);
        py::dict d;
        d["success"] = r.success;
        d["first_failure"] = r.first_failure;
        d["relations_vanish"] = r.eval.all_zero;
        d["quotient_dims"] = r.quotient_dims;
        d["molien_dims"] = r.molien_dims;
        return d;
    });

    m.def(
        "auslander_witness",
        [](const GroupSpec& G, int N, bool exact) {
            WitnessReport r = finite_dim_witness(SmashContext(G), N, exact ? RankMode::exact : RankMode::modular);
            py::dict d;
            d["witness"] = r.witness ? py::object(py::int_(*r.witness)) : py::object(py::none());
            d["N"] = r.N;
            d["required_tail"] = r.required_tail;
            std::vector<std::pair<long, long>> dims;
            for (auto& x : r.dims) dims.emplace_back(x.ideal_dim, x.ambient_dim);
            d["dims"] = dims;
            return d;
        },
        py::arg("group"), py::arg("N"), py::arg("exact") = false);
    m.def("verify_gh_identities", [](int n, int k, long N) {
        GHReport r = verify_GH_identities(n, k, N);
        py::dict d;
        d["m"] = r.m;
        d["all_ok"] = r.all_ok();
        py::dict checks;
        for (auto& c : r.checks) checks[py::str(c.name)] = py::make_tuple(c.cases, c.failures);
        d["checks"] = checks;
        return d;
    });
    m.def("theta", [](int n, int k, long N) {
        ThetaReport r = theta_correspondence(n, k, N);
        py::dict d;
        d["target"] = r.target.str();
        d["series_equal"] = r.series_equal;
        d["degrees_equal"] = r.degrees_equal;
        d["source_series"] = r.source_series;
        return d;
    }, py::arg("n"), py::arg("k"), py::arg("N") = 40);
}
