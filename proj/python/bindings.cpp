#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "bqc/homology.hpp"
#include "bqc/invariant.hpp"
#include "bqc/registry.hpp"

namespace py = pybind11;
using namespace bqc;

namespace {

py::dict report_dict(const AxiomReport& r) {
    py::dict d;
    d["ok"] = r.ok();
    d["sampled"] = r.sampled;
    py::list checks;
    for (auto& c : r.checks) {
        py::dict cd;
        cd["name"] = c.name;
        cd["passed"] = c.passed;
        cd["witness"] = c.witness;
        cd["detail"] = c.detail;
        checks.append(cd);
    }
    d["checks"] = checks;
    return d;
}

py::dict invariant_dict(const InvariantResult& r) {
    py::dict d;
    d["counts"] = r.counts;
    d["colorings"] = r.colorings;
    d["modulus"] = r.modulus;
    d["seconds"] = r.seconds;
    d["non_cycles"] = r.non_cycles;
    return d;
}

const XSet* maybe_xset(const std::string& name, const XSet& Y) { return name.empty() ? nullptr : &Y; }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "colorings, cocycle invariants and homology of multiple conjugation biquandles";

    py::register_exception<StructuralError>(m, "StructuralError", PyExc_ValueError);
    py::register_exception<AxiomFailure>(m, "AxiomFailure", PyExc_ValueError);
    py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);

    m.def("algebra_names", &algebra_names);
    m.def("cocycle_names", &cocycle_names);

    m.def("algebra_size", [](const std::string& name) { return make_algebra(name).mcb->size(); });

    m.def(
        "verify_algebra",
        [](const std::string& name, const std::string& xset, bool biquandle_form) {
            AlgebraEntry A = make_algebra(name);
            AxiomReport r = biquandle_form ? A.mcb->verify_biquandle_form() : A.mcb->verify();
            if (!xset.empty())
                for (auto& c : make_xset(xset, A).verify().checks) r.checks.push_back(c);
            return report_dict(r);
        },
        py::arg("algebra"), py::arg("xset") = "", py::arg("biquandle_form") = false);

    m.def(
        "validate_diagram",
        [](const std::string& path) {
            Diagram D = Diagram::load(path);
            DiagramStats s = D.stats();
            py::dict d;
            d["semiarcs"] = s.semiarcs;
            d["regions"] = s.regions;
            d["positive"] = s.positive;
            d["negative"] = s.negative;
            d["two_in_one_out"] = s.two_in_one_out;
            d["one_in_two_out"] = s.one_in_two_out;
            return d;
        },
        py::arg("path"));

    m.def(
        "count_colorings",
        [](const std::string& path, const std::string& algebra, const std::string& xset, int jobs) {
            AlgebraEntry A = make_algebra(algebra);
            Diagram D = Diagram::load(path);
            XSet Y = make_xset(xset.empty() ? "trivial" : xset, A);
            SearchOptions so;
            so.jobs = jobs;
            py::gil_scoped_release nogil;
            return count_colorings(D, *A.mcb, maybe_xset(xset, Y), so);
        },
        py::arg("diagram"), py::arg("algebra"), py::arg("xset") = "", py::arg("jobs") = 1);

    m.def(
        "invariant",
        [](const std::string& path, const std::string& algebra, const std::string& cocycle, int jobs,
           bool check_cycles) {
            AlgebraEntry A = make_algebra(algebra);
            Diagram D = Diagram::load(path);
            CochainPtr th = make_cocycle(cocycle, A);
            InvariantOptions io;
            io.search.jobs = jobs;
            io.check_cycles = check_cycles;
            InvariantResult r;
            {
                py::gil_scoped_release nogil;
                r = phi_invariant(D, *th, io);
            }
            return invariant_dict(r);
        },
        py::arg("diagram"), py::arg("algebra"), py::arg("cocycle"), py::arg("jobs") = 1,
        py::arg("check_cycles") = false);

    m.def(
        "mirror_check",
        [](const std::string& path, const std::string& algebra, const std::string& cocycle, int jobs) {
            AlgebraEntry A = make_algebra(algebra);
            Diagram D = Diagram::load(path);
            CochainPtr th = make_cocycle(cocycle, A);
            InvariantOptions io;
            io.search.jobs = jobs;
            MirrorResult r;
            {
                py::gil_scoped_release nogil;
                r = mirror_check(D, *th, io);
            }
            py::dict d;
            d["ok"] = r.ok;
            d["original"] = invariant_dict(r.original);
            d["mirror"] = invariant_dict(r.mirrored);
            return d;
        },
        py::arg("diagram"), py::arg("algebra"), py::arg("cocycle"), py::arg("jobs") = 1);

    m.def(
        "verify_cocycle",
        [](const std::string& algebra, const std::string& cocycle, long long samples, bool force_sampled) {
            AlgebraEntry A = make_algebra(algebra);
            CochainPtr th = make_cocycle(cocycle, A);
            CocycleCheckOptions co;
            co.samples = samples;
            co.force_sampled = force_sampled;
            CocycleReport r = verify_mcb_cocycle(*th, co);
            py::dict d;
            d["ok"] = r.ok;
            d["sampled"] = r.sampled;
            d["witness"] = r.witness;
            d["summary"] = r.summary();
            return d;
        },
        py::arg("algebra"), py::arg("cocycle"), py::arg("samples") = 1000000, py::arg("force_sampled") = false);

    m.def(
        "homology",
        [](const std::string& algebra, const std::string& xset, int degree, long long modulus, long long cap) {
            AlgebraEntry A = make_algebra(algebra);
            HomologyOptions ho;
            ho.cap.max_generators = cap;
            QuotientComplex Q(A.mcb, make_xset(xset, A), ho);
            return (modulus > 0 ? Q.homology_mod(degree, modulus) : Q.homology(degree)).str();
        },
        py::arg("algebra"), py::arg("xset") = "trivial", py::arg("degree") = 2, py::arg("modulus") = 0,
        py::arg("cap") = 200000);

    m.def(
        "boundary",
        [](const std::string& algebra, const std::string& xset, int y, const std::vector<std::vector<int>>& blocks) {
            AlgebraEntry A = make_algebra(algebra);
            XSet Y = make_xset(xset, A);
            PrismGen g = PrismGen::make(y, blocks);
            check_generator(*A.mcb, Y, g);
            return boundary(*A.mcb, Y, g).str();
        },
        py::arg("algebra"), py::arg("xset"), py::arg("y"), py::arg("blocks"));

    m.def(
        "biquandle_type",
        [](const std::string& kind, int n, int t, int s) {
            FinBiquandle X = kind == "dihedral" ? FinBiquandle::dihedral(n)
                             : kind == "alexander" ? FinBiquandle::alexander(n, t, s)
                                                   : FinBiquandle::trivial(n);
            return biquandle_type(X);
        },
        py::arg("kind"), py::arg("n"), py::arg("t") = 1, py::arg("s") = 1);
}
