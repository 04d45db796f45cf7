#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qganlab/classical.hpp"
#include "qganlab/encoding.hpp"
#include "qganlab/errors.hpp"
#include "qganlab/metrics.hpp"
#include "qganlab/models.hpp"
#include "qganlab/train.hpp"
#include "qganlab/validate.hpp"

namespace py = pybind11;
using namespace qgan;

namespace {

std::vector<PauliString> ansatz_from_strings(const std::vector<std::string>& terms) {
  std::vector<PauliString> out;
  out.reserve(terms.size());
  for (const std::string& t : terms) out.emplace_back(t);
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Density-matrix simulator and adversarial training loops for "
            "quantum and classical generators on discrete distributions.";

  py::register_exception<DimensionError>(m, "DimensionError", PyExc_ValueError);
  py::register_exception<SpecError>(m, "SpecError", PyExc_ValueError);
  py::register_exception<ConfigError>(m, "ConfigurationError", PyExc_ValueError);
  py::register_exception<NumericError>(m, "NumericError", PyExc_ArithmeticError);
  py::register_exception<IoError>(m, "IoError", PyExc_OSError);

  py::class_<DensityMatrix>(m, "DensityMatrix")
      .def(py::init<ComplexMatrix>(), py::arg("matrix"))
      .def_static("basis_state", &DensityMatrix::computational_basis_state, py::arg("n_qubits"),
                  py::arg("index"))
      .def_static("maximally_mixed", &DensityMatrix::maximally_mixed, py::arg("n_qubits"))
      .def_property_readonly("matrix", &DensityMatrix::matrix)
      .def_property_readonly("dim", &DensityMatrix::dim);

  m.def("pauli_matrix", [](const std::string& ops) { return pauli_matrix(PauliString(ops)); },
        py::arg("ops"), "Dense matrix of a Pauli string such as 'XIZ' (qubit 0 leftmost).");
  m.def("evolve_unitary", &evolve_unitary, py::arg("hamiltonian"), py::arg("t"));
  m.def("conjugate", &conjugate, py::arg("unitary"), py::arg("rho"));
  m.def("trace_distance", &trace_distance, py::arg("rho"), py::arg("sigma"));
  m.def("fidelity", &fidelity, py::arg("rho"), py::arg("sigma"));
  m.def("measure_probabilities",
        [](const DensityMatrix& rho) { return measure_probabilities(rho).probs(); }, py::arg("rho"));

  m.def("encode_distribution",
        [](const std::vector<double>& p) { return encode_distribution(ProbabilityVector(p)); },
        py::arg("probs"));
  m.def("empirical_distribution",
        [](const std::vector<std::uint64_t>& samples, int n_qubits) {
          return empirical_distribution(samples, n_qubits).probs();
        },
        py::arg("samples"), py::arg("n_qubits"));

  m.def("tv_distance",
        [](const std::vector<double>& p, const std::vector<double>& q) {
          return tv_distance(ProbabilityVector(p), ProbabilityVector(q));
        },
        py::arg("p"), py::arg("q"));
  m.def("kl_divergence",
        [](const std::vector<double>& p, const std::vector<double>& q) {
          return kl_divergence(ProbabilityVector(p), ProbabilityVector(q));
        },
        py::arg("p"), py::arg("q"));
  m.def("iterations_to_convergence",
        [](const std::vector<double>& tv, double epsilon, int patience) {
          return iterations_to_convergence(tv, epsilon, patience);
        },
        py::arg("tv_history"), py::arg("epsilon"), py::arg("patience"));

  py::enum_<ObjectiveMode>(m, "ObjectiveMode")
      .value("PROBABILISTIC", ObjectiveMode::kProbabilistic)
      .value("LITERAL", ObjectiveMode::kLiteral);

  py::class_<TrainingConfig>(m, "TrainingConfig")
      .def(py::init<>())
      .def_readwrite("n_qubits", &TrainingConfig::n_qubits)
      .def_readwrite("generator_ansatz", &TrainingConfig::generator_ansatz)
      .def_readwrite("discriminator_ansatz", &TrainingConfig::discriminator_ansatz)
      .def_readwrite("lambda_g", &TrainingConfig::lambda_g)
      .def_readwrite("lambda_d", &TrainingConfig::lambda_d)
      .def_readwrite("objective_mode", &TrainingConfig::objective_mode)
      .def_readwrite("learning_rate_g", &TrainingConfig::learning_rate_g)
      .def_readwrite("learning_rate_d", &TrainingConfig::learning_rate_d)
      .def_readwrite("fd_step", &TrainingConfig::fd_step)
      .def_readwrite("max_iterations", &TrainingConfig::max_iterations)
      .def_readwrite("d_steps_per_g_step", &TrainingConfig::d_steps_per_g_step)
      .def_readwrite("epsilon", &TrainingConfig::epsilon)
      .def_readwrite("patience", &TrainingConfig::patience)
      .def_readwrite("seed", &TrainingConfig::seed)
      .def_readwrite("evolution_time", &TrainingConfig::evolution_time);

  py::class_<IterationRecord>(m, "IterationRecord")
      .def_readonly("iteration", &IterationRecord::iteration)
      .def_readonly("loss_g", &IterationRecord::loss_g)
      .def_readonly("loss_d", &IterationRecord::loss_d)
      .def_readonly("tv_to_target", &IterationRecord::tv_to_target)
      .def_readonly("fidelity_to_target", &IterationRecord::fidelity_to_target)
      .def_readonly("wall_time_ms", &IterationRecord::wall_time_ms);

  py::class_<TrainingResult>(m, "TrainingResult")
      .def_readonly("history", &TrainingResult::history)
      .def_readonly("converged", &TrainingResult::converged)
      .def_readonly("iterations_to_convergence", &TrainingResult::iterations_to_convergence)
      .def_readonly("final_generated", &TrainingResult::final_generated)
      .def_readonly("error", &TrainingResult::error);

  m.def("train",
        [](const TrainingConfig& config, const std::vector<double>& target) {
          return train(config, ProbabilityVector(target));
        },
        py::arg("config"), py::arg("target"));
  m.def("train_classical",
        [](const TrainingConfig& config, const std::vector<double>& target) {
          return train_classical(config, ProbabilityVector(target));
        },
        py::arg("config"), py::arg("target"));
  m.def("classical_generator_probs",
        [](const std::vector<double>& phi) { return classical_generator_probs(phi).probs(); },
        py::arg("phi"));
  m.def("classical_discriminator",
        [](const std::vector<double>& w, std::size_t outcome) {
          return classical_discriminator(w, outcome);
        },
        py::arg("weights"), py::arg("outcome"));

  py::class_<GeneratorModel>(m, "GeneratorModel");
  py::class_<DiscriminatorModel>(m, "DiscriminatorModel");
  m.def("make_generator",
        [](int n_qubits, const std::vector<std::string>& ansatz, double lambda, double t,
           const std::vector<double>& theta) {
          GeneratorModel g = make_generator(n_qubits, ansatz_from_strings(ansatz), lambda, t);
          if (!theta.empty()) set_parameters(g.spec, theta);
          return g;
        },
        py::arg("n_qubits"), py::arg("ansatz"), py::arg("lambda_") = 0.0,
        py::arg("evolution_time") = 1.0, py::arg("theta") = std::vector<double>{});
  m.def("make_discriminator",
        [](int n_qubits, const std::vector<std::string>& ansatz, double lambda, double t,
           const std::vector<double>& theta) {
          DiscriminatorModel d = make_discriminator(n_qubits, ansatz_from_strings(ansatz), lambda, t);
          if (!theta.empty()) set_parameters(d.spec, theta);
          return d;
        },
        py::arg("n_qubits"), py::arg("ansatz"), py::arg("lambda_") = 0.0,
        py::arg("evolution_time") = 1.0, py::arg("theta") = std::vector<double>{});
  m.def("generate", &generate, py::arg("generator"));
  m.def("discriminate", &discriminate, py::arg("discriminator"), py::arg("rho"));
  m.def("objective_literal", &objective_literal, py::arg("rho_r"), py::arg("generator"),
        py::arg("discriminator"));
  m.def("loss_discriminator", &loss_discriminator, py::arg("rho_r"), py::arg("generator"),
        py::arg("discriminator"));
  m.def("loss_generator", &loss_generator, py::arg("generator"), py::arg("discriminator"));

  m.def("grid_search_discriminator",
        [](const DensityMatrix& rho_r, const DensityMatrix& rho_g,
           const std::vector<std::string>& ansatz, int grid_steps) {
          const GridSearchResult r =
              grid_search_discriminator(rho_r, rho_g, ansatz_from_strings(ansatz), grid_steps);
          return py::make_tuple(r.best_theta, r.best_objective);
        },
        py::arg("rho_r"), py::arg("rho_g"), py::arg("ansatz"), py::arg("grid_steps"));

  m.def("run_validation_suite", [] {
    py::list out;
    for (const CheckResult& r : run_validation_suite()) {
      out.append(py::make_tuple(r.name, r.passed, r.detail));
    }
    return out;
  });

  m.attr("__version__") = "0.1.0";
}
