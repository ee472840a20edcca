#include "cledger/algebra.hpp"
#include "cledger/constants.hpp"
#include "cledger/cosmology.hpp"
#include "cledger/particles.hpp"
#include "cledger/relations.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <json.hpp>

namespace py = pybind11;
using nlohmann::json;

namespace {

cledger::ConstantsTable make_table(const std::string& text) {
    return text.empty() ? cledger::ConstantsTable::builtin()
                        : cledger::ConstantsTable::parse(text);
}

json result_json(const cledger::CheckResult& r) {
    json item = {{"id", r.id},
                 {"gap_decades", r.gap_decades},
                 {"tolerance_decades", r.tolerance_decades},
                 {"dimension_ok", r.dimension_ok},
                 {"waived", r.waived},
                 {"passed", r.passed},
                 {"notes", r.notes}};
    if (r.lhs_value) item["lhs"] = r.lhs_value->magnitude();
    if (r.rhs_value) item["rhs"] = r.rhs_value->magnitude();
    return item;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "order-of-magnitude relation checks and fluctuational-cosmology simulation";

    py::register_exception<cledger::Error>(m, "LedgerError", PyExc_ValueError);

    py::class_<cledger::ConstantsTable>(m, "ConstantsTable")
        .def_static("builtin", &cledger::ConstantsTable::builtin)
        .def_static("parse",
                    [](const std::string& text) { return cledger::ConstantsTable::parse(text); })
        .def("contains", &cledger::ConstantsTable::contains)
        .def("magnitude",
             [](const cledger::ConstantsTable& t, const std::string& name) {
                 return t.get(name).magnitude();
             })
        .def("unit",
             [](const cledger::ConstantsTable& t, const std::string& name) {
                 return t.get(name).dim().str();
             })
        .def("names",
             [](const cledger::ConstantsTable& t) {
                 std::vector<std::string> out;
                 for (const auto& e : t.entries()) out.push_back(e.name);
                 return out;
             })
        .def("fingerprint", &cledger::ConstantsTable::fingerprint)
        .def("serialize", &cledger::ConstantsTable::serialize)
        .def("set_magnitude", &cledger::ConstantsTable::set_magnitude);

    m.def("decade_gap", &cledger::decade_gap_magnitudes, py::arg("a"), py::arg("b"),
          "absolute log10 ratio of two magnitudes");

    m.def(
        "run_checks",
        [](const cledger::ConstantsTable& table,
           const std::optional<std::vector<std::string>>& rel,
           const std::optional<std::map<std::string, double>>& tol) {
            const auto report = cledger::run_registry(table, rel ? &*rel : nullptr,
                                                      tol ? &*tol : nullptr);
            return cledger::render_json(report).dump();
        },
        py::arg("table"), py::arg("rel") = std::nullopt, py::arg("tol") = std::nullopt,
        "run the built-in relation registry; returns the report as a JSON string");

    m.def("relation_ids", [] {
        std::vector<std::string> out;
        for (const auto& r : cledger::builtin_registry()) out.push_back(r.id);
        return out;
    });

    m.def("creation_rate", &cledger::creation_rate, py::arg("n"), py::arg("tau"));
    m.def("closed_form_n", &cledger::closed_form_N, py::arg("t"), py::arg("n0"),
          py::arg("tau"));

    m.def(
        "derived_observables",
        [](double n, const cledger::ConstantsTable& table) {
            const auto d = cledger::derived_observables(n, table);
            return py::dict(py::arg("G") = d.G, py::arg("R") = d.R, py::arg("H") = d.H,
                            py::arg("rho") = d.rho);
        },
        py::arg("n"), py::arg("table"));

    m.def(
        "simulate",
        [](const cledger::ConstantsTable& table, double n0, double t_end, double dt,
           const std::string& mode, std::uint64_t seed, int ensemble, int stride) {
            cledger::SimulationConfig cfg;
            cfg.N0 = n0;
            cfg.t_end = t_end;
            cfg.dt = dt;
            cfg.mode = mode == "stochastic" ? cledger::SimMode::stochastic
                                            : cledger::SimMode::deterministic;
            cfg.seed = seed;
            cfg.ensemble_size = ensemble;
            cfg.output_stride = stride;
            const auto ts = cledger::run_simulation(cfg, table);
            json doc = {{"fingerprint", ts.fingerprint}, {"ensemble", ts.ensemble}};
            json t = json::array(), n = json::array(), g = json::array(), r = json::array(),
                 h = json::array(), rho = json::array();
            for (const auto& s : ts.samples) {
                t.push_back(s.t);
                n.push_back(s.N);
                g.push_back(s.G);
                r.push_back(s.R);
                h.push_back(s.H);
                rho.push_back(s.rho);
            }
            doc["t"] = t;
            doc["N"] = n;
            doc["G"] = g;
            doc["R"] = r;
            doc["H"] = h;
            doc["rho"] = rho;
            if (ts.ensemble) {
                doc["N_mean"] = ts.n_mean;
                doc["N_std"] = ts.n_std;
            }
            return doc.dump();
        },
        py::arg("table"), py::arg("n0"), py::arg("t_end"), py::arg("dt"),
        py::arg("mode") = "deterministic", py::arg("seed") = 0, py::arg("ensemble") = 1,
        py::arg("stride") = 1, "integrate the creation law; returns a JSON string");

    m.def(
        "verify_clifford",
        [](const std::string& which) {
            const auto set = which == "quantized-coordinates" ? cledger::build_eq9_set()
                                                              : cledger::build_dirac_set();
            const auto r = cledger::verify_clifford(set);
            return py::dict(py::arg("label") = r.label,
                            py::arg("max_deviation") = r.max_deviation,
                            py::arg("inferred_signature") = r.inferred_signature,
                            py::arg("matches_declared") = r.matches_declared);
        },
        py::arg("which") = "dirac-standard");

    m.def("snyder_deformation", &cledger::snyder_deformation, py::arg("momentum"),
          py::arg("length"), py::arg("hbar"));

    m.def(
        "onshell_nullspace",
        [](double p0, double p1, double p2, double p3, double mass, double c, double tol) {
            return cledger::nullspace_dimension({p0, p1, p2, p3}, mass, c, tol);
        },
        py::arg("p0"), py::arg("p1"), py::arg("p2"), py::arg("p3"), py::arg("mass"),
        py::arg("c"), py::arg("tol"));

    m.def(
        "onshell_determinant",
        [](double p0, double p1, double p2, double p3, double mass, double c) {
            return cledger::onshell_determinant({p0, p1, p2, p3}, mass, c).real();
        },
        py::arg("p0"), py::arg("p1"), py::arg("p2"), py::arg("p3"), py::arg("mass"),
        py::arg("c"));

    m.def(
        "charge_fraction",
        [](int dims) { return cledger::charge_fraction(dims).fraction.str(); },
        py::arg("dims"));

    m.def(
        "quark_mass_estimate",
        [](const cledger::ConstantsTable& table) {
            const auto q = cledger::quark_mass_estimate(table);
            return py::dict(py::arg("mass") = q.mass.magnitude(),
                            py::arg("alpha_fs_over_9") = q.alpha_fs_over_9,
                            py::arg("ratio_to_electron") = q.ratio_to_electron);
        },
        py::arg("table"));

    m.def(
        "weak_coupling_check",
        [](const cledger::ConstantsTable& table) {
            const auto w = cledger::weak_coupling_check(table);
            json checks = json::array();
            for (const auto& r : w.checks) checks.push_back(result_json(r));
            return json{{"fermi_coupling", w.fermi_coupling.magnitude()},
                        {"g2_lw2", w.g2_lw2.magnitude()},
                        {"checks", checks}}
                .dump();
        },
        py::arg("table"));

    m.def(
        "zpf_energy",
        [](double length_cm, const cledger::ConstantsTable& table) {
            return cledger::zpf_energy(cledger::Quantity(length_cm, cledger::Dimension::length()),
                                       table)
                .magnitude();
        },
        py::arg("length_cm"), py::arg("table"));
}
