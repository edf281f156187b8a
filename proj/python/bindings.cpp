// Copyright 2026 The qptlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qptlab/dla.hpp"
#include "qptlab/hamiltonian.hpp"
#include "qptlab/harness.hpp"
#include "qptlab/mwis.hpp"
#include "qptlab/otoc.hpp"
#include "qptlab/qaa.hpp"
#include "qptlab/qaoa.hpp"
#include "qptlab/rng.hpp"
#include "qptlab/sat.hpp"
#include "qptlab/statevector.hpp"

namespace py = pybind11;
using namespace qptlab;

PYBIND11_MODULE(_qptlab, m) {
    m.doc() = "Variational and adiabatic studies of random satisfiability problems";

    py::enum_<SatMode>(m, "SatMode")
        .value("KSAT", SatMode::KSat)
        .value("ONE_IN_K", SatMode::OneInKSatPlus);

    py::class_<Literal>(m, "Literal")
        .def(py::init([](int var, int sign) { return Literal{var, sign}; }),
             py::arg("var"), py::arg("sign") = 1)
        .def_readwrite("var", &Literal::var)
        .def_readwrite("sign", &Literal::sign);

    py::class_<Clause>(m, "Clause")
        .def(py::init<>())
        .def_readwrite("lits", &Clause::lits);

    py::class_<SatInstance>(m, "SatInstance")
        .def(py::init<>())
        .def_readwrite("n", &SatInstance::n)
        .def_readwrite("k", &SatInstance::k)
        .def_readwrite("mode", &SatInstance::mode)
        .def_readwrite("seed", &SatInstance::seed)
        .def_readwrite("clauses", &SatInstance::clauses)
        .def_property_readonly("m", &SatInstance::m);

    m.def("generate_instance", &generate_instance, py::arg("n"), py::arg("m"),
          py::arg("k"), py::arg("mode"), py::arg("seed"),
          py::arg("reject_duplicates") = false);
    m.def("count_violations",
          py::overload_cast<const SatInstance&, uint64_t>(&count_violations));
    m.def("is_satisfiable", &is_satisfiable);
    m.def("brute_force_max_sat", [](const SatInstance& inst) {
        BruteForceResult r = brute_force_max_sat(inst);
        return py::make_tuple(r.max_satisfied, r.witness, r.ground_degeneracy);
    });
    m.def("write_dimacs", &write_dimacs);
    m.def("read_dimacs", &read_dimacs);
    m.def("derive_seed", &derive_seed, py::arg("master"), py::arg("instance"),
          py::arg("repetition") = 0);

    py::class_<CostHamiltonian>(m, "CostHamiltonian")
        .def_readonly("n", &CostHamiltonian::n)
        .def_readonly("m", &CostHamiltonian::m)
        .def_readonly("diag", &CostHamiltonian::diag)
        .def_property_readonly("dim", &CostHamiltonian::dim);

    m.def("build_cost_hamiltonian", &build_cost_hamiltonian);
    m.def("build_symmetric_hamiltonian", &build_symmetric_hamiltonian);
    m.def("random_guess_baseline", &random_guess_baseline);

    py::class_<QaoaParams>(m, "QaoaParams")
        .def(py::init([](std::vector<double> g, std::vector<double> b) {
                 return QaoaParams{std::move(g), std::move(b)};
             }),
             py::arg("gammas") = std::vector<double>{},
             py::arg("betas") = std::vector<double>{})
        .def_readwrite("gammas", &QaoaParams::gammas)
        .def_readwrite("betas", &QaoaParams::betas)
        .def_property_readonly("p", &QaoaParams::p);

    py::class_<StateVector>(m, "StateVector")
        .def_readonly("n", &StateVector::n)
        .def_readonly("amps", &StateVector::amps);

    m.def("evolve",
          [](const CostHamiltonian& ham, const QaoaParams& p) {
              return evolve(ham, p);
          });
    m.def("cost", &cost);
    m.def(
        "gradient",
        [](const CostHamiltonian& ham, const QaoaParams& p, const std::string& method) {
            return gradient(ham, p,
                            method == "fd" ? GradientMethod::CentralFD
                                           : GradientMethod::Adjoint);
        },
        py::arg("ham"), py::arg("params"), py::arg("method") = "adjoint");
    m.def("measure_distribution", &measure_distribution);

    py::class_<TrainResult>(m, "TrainResult")
        .def_readonly("params", &TrainResult::params)
        .def_readonly("final_cost", &TrainResult::final_cost)
        .def_readonly("initial_cost", &TrainResult::initial_cost)
        .def_readonly("steps", &TrainResult::steps);

    m.def(
        "train",
        [](const CostHamiltonian& ham, int p, uint64_t seed, bool pre_optimized,
           int max_steps) {
            InitStrategy init;
            if (pre_optimized) init.kind = InitStrategy::PreOptimized;
            StopRule stop;
            stop.max_steps = max_steps;
            return train(ham, p, init, stop, seed);
        },
        py::arg("ham"), py::arg("p"), py::arg("seed") = 1,
        py::arg("pre_optimized") = false, py::arg("max_steps") = 10000);

    m.def("gate_list_text", [](const CostHamiltonian& ham, const QaoaParams& p) {
        return gate_list_text(export_gate_list(ham, p));
    });

    m.def(
        "lie_closure_dim",
        [](const CostHamiltonian& ham, int64_t max_dim) {
            auto [hc, hb] = qaoa_generators(ham);
            LieClosure c = lie_closure({hc, hb}, max_dim, false);
            return py::make_tuple(c.dim, c.truncated);
        },
        py::arg("ham"), py::arg("max_dim") = -1);
    m.def("dla_dim_upper_bound", &dim_upper_bound);

    m.def(
        "otoc",
        [](const CostHamiltonian& ham, const QaoaParams& p) {
            return otoc_single(ham, p, OtocConfig::defaults(ham.n));
        },
        py::arg("ham"), py::arg("params"));
    m.def("haar_otoc_value", &haar_otoc_value);

    py::class_<GapReport>(m, "GapReport")
        .def_readonly("min_gap", &GapReport::min_gap)
        .def_readonly("argmin_s", &GapReport::argmin_s)
        .def_readonly("inverse_gap_sq", &GapReport::inverse_gap_sq)
        .def_readonly("gaps", &GapReport::gaps);

    m.def("default_s_grid", &default_s_grid, py::arg("n_points") = 201);
    m.def("min_gap", &min_gap);
    m.def(
        "anneal",
        [](const CostHamiltonian& ham, double total_time) {
            StateVector psi = evolve_anneal(ham, AnnealSchedule{total_time});
            return success_probability(ham, psi);
        },
        py::arg("ham"), py::arg("total_time") = 50.0);

    py::class_<WeightedGraph>(m, "WeightedGraph")
        .def(py::init<>())
        .def_readwrite("n", &WeightedGraph::n)
        .def_readwrite("weights", &WeightedGraph::weights)
        .def_readwrite("adj", &WeightedGraph::adj)
        .def("add_edge", &WeightedGraph::add_edge);

    py::enum_<GreedyRule>(m, "GreedyRule")
        .value("GWMIN", GreedyRule::GWMin)
        .value("GWMAX", GreedyRule::GWMax)
        .value("GWMIN2", GreedyRule::GWMin2)
        .value("WG", GreedyRule::WG);

    m.def("reduce_to_mwis", [](const CostHamiltonian& ham) {
        return reduce_to_mwis(ham.table);
    });
    m.def("greedy_mwis", &greedy_mwis);
    m.def("greedy_bound", &greedy_bound);
    m.def("is_independent_set", &is_independent_set);
    m.def("set_weight", &set_weight);
    m.def("brute_force_mwis", [](const WeightedGraph& g) {
        MwisResult r = brute_force_mwis(g);
        return py::make_tuple(r.weight, r.vertices);
    });
    m.def("write_graph", &write_graph);
    m.def("read_graph", &read_graph);
}
