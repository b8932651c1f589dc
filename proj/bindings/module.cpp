#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qlra/json_io.hpp"
#include "qlra/version.hpp"

namespace py = pybind11;

namespace {

qlra::Orientation orientation_from(const std::string& name) {
  if (name == "b_given_a") return qlra::Orientation::BGivenA;
  if (name == "a_given_b") return qlra::Orientation::AGivenB;
  throw py::value_error("orientation must be 'b_given_a' or 'a_given_b'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "amplitude reconstruction from two-observable probabilistic data";
  m.attr("__version__") = qlra::kVersion;
  m.attr("RNG_ALGORITHM") = qlra::kRngAlgorithm;

  static py::exception<qlra::Error> exc(m, "QlraError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const qlra::Error& e) {
      exc(e.what());
    }
  });

  py::class_<qlra::TransitionMatrix>(m, "TransitionMatrix")
      .def_readonly("entries", &qlra::TransitionMatrix::entries)
      .def_property_readonly("orientation",
                             [](const qlra::TransitionMatrix& t) {
                               return std::string(to_string(t.orientation));
                             })
      .def_property_readonly("parameter", &qlra::TransitionMatrix::parameter)
      .def("__repr__", [](const qlra::TransitionMatrix& t) {
        return qlra::write_json(qlra::to_json(t));
      });

  py::class_<qlra::ContextData>(m, "ContextData")
      .def_readonly("pa", &qlra::ContextData::pa)
      .def_readonly("pb", &qlra::ContextData::pb)
      .def("__repr__", [](const qlra::ContextData& c) {
        return qlra::write_json(qlra::to_json(c));
      });

  py::class_<qlra::InterferenceProfile>(m, "InterferenceProfile")
      .def_readonly("lambda_", &qlra::InterferenceProfile::lambda)
      .def_readonly("theta", &qlra::InterferenceProfile::theta)
      .def_property_readonly("classification",
                             [](const qlra::InterferenceProfile& p) {
                               return std::string(to_string(p.classification));
                             })
      .def_property_readonly("trigonometric",
                             &qlra::InterferenceProfile::trigonometric);

  py::class_<qlra::Basis>(m, "Basis")
      .def_readonly("v1", &qlra::Basis::v1)
      .def_readonly("v2", &qlra::Basis::v2);

  py::class_<qlra::QLState>(m, "QLState")
      .def_readonly("amp", &qlra::QLState::amp)
      .def_property_readonly("rep",
                             [](const qlra::QLState& s) {
                               return std::string(to_string(s.rep));
                             })
      .def_readonly("context", &qlra::QLState::context)
      .def_readonly("matrix", &qlra::QLState::matrix)
      .def_readonly("profile", &qlra::QLState::profile)
      .def("__repr__", [](const qlra::QLState& s) {
        return qlra::write_json(qlra::to_json(s));
      });

  py::class_<qlra::Expansion>(m, "Expansion")
      .def_readonly("coefficients", &qlra::Expansion::coefficients)
      .def_readonly("residual", &qlra::Expansion::residual)
      .def_readonly("coefficient_deviation",
                    &qlra::Expansion::coefficient_deviation);

  py::class_<qlra::BornResiduals>(m, "BornResiduals")
      .def_readonly("target", &qlra::BornResiduals::target)
      .def_readonly("conjugate", &qlra::BornResiduals::conjugate)
      .def("max", &qlra::BornResiduals::max);

  py::class_<qlra::UnitaryMap>(m, "UnitaryMap")
      .def_readonly("m", &qlra::UnitaryMap::m);

  py::class_<qlra::PhaseMatch>(m, "PhaseMatch")
      .def_readonly("equivalent", &qlra::PhaseMatch::equivalent)
      .def_property_readonly("kind",
                             [](const qlra::PhaseMatch& p) {
                               return std::string(to_string(p.kind));
                             })
      .def_readonly("gamma", &qlra::PhaseMatch::gamma)
      .def_readonly("overlap", &qlra::PhaseMatch::overlap);

  py::class_<qlra::EquivalenceReport>(m, "EquivalenceReport")
      .def_readonly("matrices_symmetric", &qlra::EquivalenceReport::matrices_symmetric)
      .def_readonly("phase_equivalent", &qlra::EquivalenceReport::phase_equivalent)
      .def_property_readonly("match_kind",
                             [](const qlra::EquivalenceReport& r) {
                               return std::string(to_string(r.match_kind));
                             })
      .def_readonly("matched_phase", &qlra::EquivalenceReport::matched_phase)
      .def_readonly("overlap", &qlra::EquivalenceReport::overlap)
      .def_readonly("identity_residuals", &qlra::EquivalenceReport::identity_residuals)
      .def("__repr__", [](const qlra::EquivalenceReport& r) {
        return qlra::write_json(qlra::to_json(r));
      });

  py::class_<qlra::GenConstraints>(m, "GenConstraints")
      .def(py::init<>())
      .def_readwrite("theta_range", &qlra::GenConstraints::theta_range)
      .def_readwrite("p_range", &qlra::GenConstraints::p_range)
      .def_readwrite("pa_range", &qlra::GenConstraints::pa_range)
      .def_readwrite("symmetric", &qlra::GenConstraints::symmetric)
      .def_readwrite("min_gap", &qlra::GenConstraints::min_gap);

  py::class_<qlra::GeneratedInstance>(m, "GeneratedInstance")
      .def_readonly("context", &qlra::GeneratedInstance::context)
      .def_readonly("p_ba", &qlra::GeneratedInstance::p_ba)
      .def_readonly("p_ab", &qlra::GeneratedInstance::p_ab)
      .def_readonly("theta_truth", &qlra::GeneratedInstance::theta_truth)
      .def_readonly("lambda_truth", &qlra::GeneratedInstance::lambda_truth)
      .def_readonly("seed", &qlra::GeneratedInstance::seed)
      .def("__repr__", [](const qlra::GeneratedInstance& i) {
        return qlra::write_json(qlra::to_json(i));
      });

  py::class_<qlra::CountTable>(m, "CountTable")
      .def_readonly("n", &qlra::CountTable::n)
      .def_readonly("a_counts", &qlra::CountTable::a_counts)
      .def_readonly("b_given_a", &qlra::CountTable::b_given_a)
      .def_readonly("seed", &qlra::CountTable::seed);

  py::class_<qlra::EmpiricalEstimate>(m, "EmpiricalEstimate")
      .def_readonly("context", &qlra::EmpiricalEstimate::context)
      .def_readonly("matrix", &qlra::EmpiricalEstimate::matrix);

  py::class_<qlra::EmpiricalRun>(m, "EmpiricalRun")
      .def_readonly("counts", &qlra::EmpiricalRun::counts)
      .def_readonly("estimate", &qlra::EmpiricalRun::estimate)
      .def_readonly("profile", &qlra::EmpiricalRun::profile)
      .def_readonly("target_residuals", &qlra::EmpiricalRun::target_residuals)
      .def_readonly("conjugate_residuals", &qlra::EmpiricalRun::conjugate_residuals)
      .def_readonly("max_born_residual", &qlra::EmpiricalRun::max_born_residual);

  py::class_<qlra::VerifyOptions>(m, "VerifyOptions")
      .def(py::init<>())
      .def_readwrite("seed", &qlra::VerifyOptions::seed)
      .def_readwrite("trials", &qlra::VerifyOptions::trials)
      .def_readwrite("tol", &qlra::VerifyOptions::tol)
      .def_readwrite("overlap_tol", &qlra::VerifyOptions::overlap_tol)
      .def_readwrite("asymmetry_gap", &qlra::VerifyOptions::asymmetry_gap)
      .def_readwrite("constraints", &qlra::VerifyOptions::constraints);

  py::class_<qlra::VerifyResult>(m, "VerifyResult")
      .def_readonly("trials", &qlra::VerifyResult::trials)
      .def_readonly("seed", &qlra::VerifyResult::seed)
      .def_readonly("max_born_residual", &qlra::VerifyResult::max_born_residual)
      .def_readonly("max_identity_residuals", &qlra::VerifyResult::max_identity_residuals)
      .def_readonly("symmetric_equivalent", &qlra::VerifyResult::symmetric_equivalent)
      .def_readonly("asymmetric_nonequivalent", &qlra::VerifyResult::asymmetric_nonequivalent)
      .def_readonly("median_asymmetric_overlap", &qlra::VerifyResult::median_asymmetric_overlap)
      .def_readonly("iff_violations", &qlra::VerifyResult::iff_violations)
      .def_readonly("failures", &qlra::VerifyResult::failures)
      .def("passed", &qlra::VerifyResult::passed)
      .def("__repr__", [](const qlra::VerifyResult& r) {
        return qlra::write_json(qlra::to_json(r));
      });

  m.def(
      "validate_transition",
      [](const qlra::Matrix2& raw, const std::string& orientation) {
        return qlra::validate_transition(raw, orientation_from(orientation));
      },
      py::arg("raw"), py::arg("orientation") = "b_given_a");
  m.def("validate_context", &qlra::validate_context, py::arg("pa"), py::arg("pb"));
  m.def(
      "transition_from_parameter",
      [](double p, const std::string& orientation) {
        return qlra::transition_from_parameter(p, orientation_from(orientation));
      },
      py::arg("p"), py::arg("orientation") = "b_given_a");
  m.def("classical_ftp", &qlra::classical_ftp, py::arg("cond"), py::arg("matrix"));
  m.def("interference_coefficients", &qlra::interference_coefficients,
        py::arg("context"), py::arg("matrix"));
  m.def(
      "build_state",
      [](const qlra::ContextData& c, const qlra::TransitionMatrix& t,
         const std::string& rep) {
        return qlra::build_state(c, t, orientation_from(rep));
      },
      py::arg("context"), py::arg("matrix"), py::arg("rep") = "b_given_a");
  m.def("conjugate_basis", &qlra::conjugate_basis, py::arg("matrix"));
  m.def("expand_in_conjugate_basis", &qlra::expand_in_conjugate_basis,
        py::arg("state"));
  m.def("born_residuals", &qlra::born_residuals, py::arg("state"));
  m.def("gram_deviation", &qlra::gram_deviation, py::arg("basis"));
  m.def("unitary_map", &qlra::unitary_map, py::arg("p_ba"));
  m.def("apply_unitary", &qlra::apply_unitary, py::arg("u"), py::arg("amp"));
  m.def("unitarity_deviation", &qlra::unitarity_deviation, py::arg("u"));
  m.def(
      "phase_equivalent",
      [](const qlra::QLState& a, const qlra::QLState& b, double tol) {
        return qlra::phase_equivalent(a, b, tol);
      },
      py::arg("s1"), py::arg("s2"), py::arg("tol") = qlra::kEpsEquiv);
  m.def(
      "phase_equivalent_amp",
      [](const qlra::ComplexPair& a, const qlra::ComplexPair& b, double tol) {
        return qlra::phase_equivalent(a, b, tol);
      },
      py::arg("s1"), py::arg("s2"), py::arg("tol") = qlra::kEpsEquiv);
  m.def("theorem_check", &qlra::theorem_check, py::arg("context"),
        py::arg("p_ba"), py::arg("p_ab"));
  m.def("proof_identity_suite", &qlra::proof_identity_suite, py::arg("context"),
        py::arg("p_ba"), py::arg("p_ab"));
  m.def("generate", &qlra::generate, py::arg("seed"),
        py::arg("constraints") = qlra::GenConstraints{});
  m.def("simulate_counts", &qlra::simulate_counts, py::arg("instance"),
        py::arg("n"), py::arg("seed"));
  m.def("estimate_from_counts", &qlra::estimate_from_counts, py::arg("counts"));
  m.def("empirical_pipeline", &qlra::empirical_pipeline, py::arg("instance"),
        py::arg("n"), py::arg("seed"));
  m.def("run_verification", &qlra::run_verification, py::arg("options"));
  m.def("derive_seed", &qlra::derive_seed, py::arg("base"), py::arg("index"));
}
