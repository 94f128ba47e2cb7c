// Copyright 2026 The cargo-triangles Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// Python bindings. Ring values cross as Python ints in [0, 2^64); a pair of
// shares is a (s1, s2) tuple.

#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cargo/baselines.h"
#include "cargo/errors.h"
#include "cargo/graph.h"
#include "cargo/harness.h"
#include "cargo/mul3.h"
#include "cargo/perturbation.h"
#include "cargo/pipeline.h"
#include "cargo/projection.h"
#include "cargo/random.h"
#include "cargo/ring.h"
#include "cargo/secure_count.h"

namespace py = pybind11;

namespace cargo {
namespace {

using PyPair = std::tuple<uint64_t, uint64_t>;

SharePair ToPair(const PyPair& p) {
  return {RingElement(std::get<0>(p)), RingElement(std::get<1>(p))};
}
PyPair FromPair(const SharePair& p) { return {p.s1.value, p.s2.value}; }

std::vector<std::vector<NodeId>> Rows(const BitMatrix& m) {
  std::vector<std::vector<NodeId>> out(m.size());
  for (size_t i = 0; i < m.size(); ++i) out[i] = m.RowIndices(i);
  return out;
}

py::dict RecordToDict(const TrialRecord& r) {
  py::dict d;
  d["trial"] = r.trial;
  d["T_true"] = r.t_true;
  d["T_noisy"] = r.t_noisy;
  d["l2_loss"] = r.l2_loss;
  d["relative_error"] = r.relative_error;
  d["d_max_true"] = r.d_max_true;
  d["d_max_noisy"] = r.d_max_noisy;
  d["time_project_s"] = r.time_project_s;
  d["time_count_s"] = r.time_count_s;
  d["time_perturb_s"] = r.time_perturb_s;
  d["T_projected"] = r.t_projected;
  d["method"] = r.method;
  d["theta"] = r.theta;
  return d;
}

ExperimentConfig MakeConfig(const std::string& mechanism, double epsilon,
                            double epsilon_split, int64_t trials,
                            uint64_t seed, std::optional<uint64_t> dealer_seed,
                            std::vector<int64_t> thetas,
                            const std::string& bit_policy, bool record_timing,
                            unsigned workers, bool allow_large) {
  ExperimentConfig cfg;
  cfg.mechanism = ParseMechanism(mechanism);
  cfg.epsilon = epsilon;
  cfg.epsilon_split = epsilon_split;
  cfg.trials = trials;
  cfg.seed = seed;
  cfg.dealer_seed = dealer_seed;
  cfg.thetas = std::move(thetas);
  cfg.bit_policy = ParseBitPolicy(bit_policy);
  cfg.record_timing = record_timing;
  cfg.workers = workers;
  cfg.allow_large = allow_large;
  return cfg;
}

}  // namespace
}  // namespace cargo

PYBIND11_MODULE(_core, m) {
  using namespace cargo;
  m.doc() = "Two-server differentially private triangle counting";

  auto base = py::register_exception<Error>(m, "CargoError", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<ParameterError>(m, "ParameterError", base.ptr());
  py::register_exception<DomainError>(m, "DomainError", base.ptr());
  py::register_exception<ProtocolError>(m, "ProtocolError", base.ptr());
  py::register_exception<IoError>(m, "IoError", base.ptr());

  py::class_<NoiseRng>(m, "NoiseRng")
      .def(py::init<uint64_t>(), py::arg("seed"))
      .def("next", [](NoiseRng& r) { return r(); });

  py::class_<DealerRng>(m, "DealerRng")
      .def(py::init<uint64_t>(), py::arg("seed"))
      .def_property_readonly("seed", &DealerRng::seed)
      .def("next", [](DealerRng& r) { return r.Next().value; })
      .def("split", &DealerRng::Split, py::arg("index"));

  m.def("derive_seed",
        [](uint64_t seed, uint64_t index) { return DeriveSeed(seed, index); },
        py::arg("seed"), py::arg("index"));

  // Graphs.
  py::class_<Graph>(m, "Graph")
      .def_static(
          "from_edges",
          [](size_t n, const std::vector<Edge>& edges) {
            return Graph::FromEdges(n, edges);
          },
          py::arg("n"), py::arg("edges"))
      .def_property_readonly("num_nodes", &Graph::num_nodes)
      .def_property_readonly("num_edges", &Graph::num_edges)
      .def_property_readonly("degrees", &Graph::degrees)
      .def_property_readonly("max_degree", &Graph::MaxDegree)
      .def("degree", &Graph::Degree, py::arg("i"))
      .def("has_edge", &Graph::HasEdge, py::arg("i"), py::arg("j"))
      .def("edges", &Graph::Edges)
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        return "<Graph n=" + std::to_string(g.num_nodes()) +
               " edges=" + std::to_string(g.num_edges()) + ">";
      });

  m.def("load_edge_list", &LoadEdgeList, py::arg("path"),
        py::arg("n") = std::nullopt);
  m.def(
      "parse_edge_list",
      [](const std::string& text, std::optional<size_t> n) {
        std::istringstream in(text);
        return ParseEdgeList(in, n);
      },
      py::arg("text"), py::arg("n") = std::nullopt);
  m.def("write_edge_list", &WriteEdgeList, py::arg("graph"), py::arg("path"));
  m.def("exact_triangle_count",
        py::overload_cast<const Graph&>(&ExactTriangleCount), py::arg("graph"));

  // Secret sharing.
  m.def(
      "share",
      [](uint64_t secret, DealerRng& rng) {
        return FromPair(Share(RingElement(secret), rng));
      },
      py::arg("secret"), py::arg("rng"));
  m.def(
      "reconstruct", [](const PyPair& p) { return Reconstruct(ToPair(p)).value; },
      py::arg("shares"));
  m.def(
      "add_local",
      [](const PyPair& a, const PyPair& b) {
        return FromPair(AddLocal(ToPair(a), ToPair(b)));
      },
      py::arg("a"), py::arg("b"));

  py::class_<MultiplicationGroup>(m, "MultiplicationGroup")
      .def_property_readonly("x", [](const MultiplicationGroup& g) { return FromPair(g.x()); })
      .def_property_readonly("y", [](const MultiplicationGroup& g) { return FromPair(g.y()); })
      .def_property_readonly("z", [](const MultiplicationGroup& g) { return FromPair(g.z()); })
      .def_property_readonly("w", [](const MultiplicationGroup& g) { return FromPair(g.w()); })
      .def_property_readonly("o", [](const MultiplicationGroup& g) { return FromPair(g.o()); })
      .def_property_readonly("p", [](const MultiplicationGroup& g) { return FromPair(g.p()); })
      .def_property_readonly("q", [](const MultiplicationGroup& g) { return FromPair(g.q()); })
      .def_property_readonly("consumed", &MultiplicationGroup::consumed);

  m.def("deal_mg", &DealMg, py::arg("rng"));
  m.def(
      "deal_mg_with_values",
      [](uint64_t x, uint64_t y, uint64_t z, DealerRng& rng) {
        return DealMgWithValues(RingElement(x), RingElement(y), RingElement(z),
                                rng);
      },
      py::arg("x"), py::arg("y"), py::arg("z"), py::arg("rng"));
  m.def(
      "mul3",
      [](const PyPair& a, const PyPair& b, const PyPair& c,
         MultiplicationGroup& mg) {
        return FromPair(Mul3(ToPair(a), ToPair(b), ToPair(c), mg));
      },
      py::arg("a"), py::arg("b"), py::arg("c"), py::arg("mg"));

  // Projection.
  py::class_<NoisyDegrees>(m, "NoisyDegrees")
      .def_readonly("values", &NoisyDegrees::values)
      .def_readonly("max", &NoisyDegrees::max)
      .def_readonly("epsilon1", &NoisyDegrees::epsilon1);
  m.def(
      "max_private",
      [](const std::vector<int64_t>& degrees, double epsilon1, NoiseRng& rng) {
        return MaxPrivate(degrees, epsilon1, rng);
      },
      py::arg("degrees"), py::arg("epsilon1"), py::arg("rng"));
  m.def("theta_from_noisy_max", &ThetaFromNoisyMax, py::arg("noisy_max"));
  m.def("degree_similarity", &DegreeSimilarity, py::arg("d_self"),
        py::arg("d_other"));

  py::class_<ProjectedGraph>(m, "ProjectedGraph")
      .def_readonly("theta", &ProjectedGraph::theta)
      .def("rows", [](const ProjectedGraph& pg) { return Rows(pg.adjacency); })
      .def(
          "triangle_count",
          [](const ProjectedGraph& pg, const std::string& policy) {
            return ExactTriangleCount(
                EffectiveAdjacency(pg.adjacency, ParseBitPolicy(policy)));
          },
          py::arg("bit_policy") = "and");
  m.def(
      "project",
      [](const Graph& g, const std::vector<double>& neighbor_degrees,
         int64_t theta) { return Project(g, neighbor_degrees, theta); },
      py::arg("graph"), py::arg("neighbor_degrees"), py::arg("theta"));
  m.def("project_random", &ProjectRandom, py::arg("graph"), py::arg("theta"),
        py::arg("rng"));

  // Secure count.
  m.def(
      "secure_triangle_count",
      [](const Graph& g, uint64_t mask_seed, uint64_t dealer_seed,
         const std::string& policy, unsigned workers) {
        DealerRng masks(mask_seed);
        const SharedAdjacency sa =
            ShareAdjacency(g.adjacency(), ParseBitPolicy(policy), masks);
        CountOptions options;
        options.workers = workers;
        const CountResult r =
            SecureTriangleCount(sa, DealerRng(dealer_seed), options);
        py::dict d;
        d["shares"] = FromPair(r.t);
        d["count"] = Reconstruct(r.t).value;
        d["multiplications"] = r.multiplications;
        return d;
      },
      py::arg("graph"), py::arg("mask_seed"), py::arg("dealer_seed"),
      py::arg("bit_policy") = "and", py::arg("workers") = 1);

  // Perturbation.
  m.def("sample_gamma", &SampleGamma, py::arg("n"), py::arg("scale"),
        py::arg("rng"));
  m.def("sample_laplace", &SampleLaplace, py::arg("scale"), py::arg("rng"));
  m.def(
      "perturb",
      [](const PyPair& t_shares, double epsilon2, double sensitivity,
         int64_t n_users, NoiseRng& rng) {
        const PerturbResult r = Perturb(
            ToPair(t_shares),
            NoiseParams{epsilon2, sensitivity, n_users, kFixedPointScale}, rng);
        py::dict d;
        d["noisy_count"] = r.noisy_count;
        d["noise_sum"] = r.noise_sum;
        d["shares"] = PyPair{r.servers[0].t_share.value,
                             r.servers[1].t_share.value};
        return d;
      },
      py::arg("t_shares"), py::arg("epsilon2"), py::arg("sensitivity"),
      py::arg("n_users"), py::arg("rng"));

  // Baselines and end-to-end runs.
  m.def(
      "central_lap",
      [](const Graph& g, double epsilon, NoiseRng& rng) {
        return CentralLap(g, epsilon, rng).t_noisy;
      },
      py::arg("graph"), py::arg("epsilon"), py::arg("rng"));
  m.def(
      "run_cargo",
      [](const Graph& g, double epsilon, double epsilon_split,
         const std::string& policy, uint64_t noise_seed, uint64_t dealer_seed) {
        CargoParams params{epsilon, epsilon_split, ParseBitPolicy(policy), 1};
        const CargoOutcome o =
            RunCargoPipeline(g, params, noise_seed, dealer_seed);
        py::dict d;
        d["noisy_count"] = o.noisy_count;
        d["noisy_max_degree"] = o.noisy_degrees.max;
        d["theta"] = o.theta;
        d["epsilon1"] = o.budget.epsilon1;
        d["epsilon2"] = o.budget.epsilon2;
        d["projected_count"] = o.projected_count;
        d["multiplications"] = o.multiplications;
        return d;
      },
      py::arg("graph"), py::arg("epsilon") = 2.0,
      py::arg("epsilon_split") = 0.1, py::arg("bit_policy") = "and",
      py::arg("noise_seed") = 0, py::arg("dealer_seed") = 1);
  m.def(
      "run_experiment",
      [](const Graph& g, const std::string& mechanism, double epsilon,
         double epsilon_split, int64_t trials, uint64_t seed,
         std::optional<uint64_t> dealer_seed, std::vector<int64_t> thetas,
         const std::string& bit_policy, bool record_timing, unsigned workers,
         bool allow_large) {
        const ExperimentConfig cfg = MakeConfig(
            mechanism, epsilon, epsilon_split, trials, seed, dealer_seed,
            std::move(thetas), bit_policy, record_timing, workers, allow_large);
        py::list out;
        for (const TrialRecord& r : RunExperiment(g, cfg)) {
          out.append(RecordToDict(r));
        }
        return out;
      },
      py::arg("graph"), py::arg("mechanism") = "cargo",
      py::arg("epsilon") = 2.0, py::arg("epsilon_split") = 0.1,
      py::arg("trials") = 1, py::arg("seed") = 0,
      py::arg("dealer_seed") = std::nullopt,
      py::arg("thetas") = std::vector<int64_t>{},
      py::arg("bit_policy") = "and", py::arg("record_timing") = true,
      py::arg("workers") = 1, py::arg("allow_large") = false);
  m.def(
      "experiment_csv",
      [](const Graph& g, const std::string& mechanism, double epsilon,
         int64_t trials, uint64_t seed, std::vector<int64_t> thetas,
         bool summary) {
        const ExperimentConfig cfg =
            MakeConfig(mechanism, epsilon, 0.1, trials, seed, std::nullopt,
                       std::move(thetas), "and", false, 1, false);
        CsvOptions options;
        options.summary = summary;
        options.projection_columns =
            cfg.mechanism == Mechanism::kProjectCompare;
        return FormatCsv(RunExperiment(g, cfg), options);
      },
      py::arg("graph"), py::arg("mechanism") = "cargo",
      py::arg("epsilon") = 2.0, py::arg("trials") = 1, py::arg("seed") = 0,
      py::arg("thetas") = std::vector<int64_t>{}, py::arg("summary") = true);
  m.attr("CSV_HEADER") = kCsvHeader;
}
