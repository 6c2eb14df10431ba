// Python bindings for the period-finding marginal toolkit. Exposes the main
// operations of each module; vectors of amplitudes cross the boundary as
// plain lists of complex numbers, which is plenty at desk scale.

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qpf/core.hpp"
#include "qpf/finder.hpp"
#include "qpf/format.hpp"
#include "qpf/model.hpp"
#include "qpf/oracle.hpp"
#include "qpf/rdm.hpp"
#include "qpf/state.hpp"

namespace py = pybind11;
using namespace qpf;

namespace {

std::vector<std::complex<double>> amplitudes_of(const StateVector& state) {
    return {state.amplitudes().begin(), state.amplitudes().end()};
}

} // namespace

PYBIND11_MODULE(_qpf_rdm, m) {
    m.doc() = "Quantum period finding from one-qubit marginals";

    py::class_<Domain>(m, "Domain")
        .def(py::init<int>(), py::arg("qubits"))
        .def_readonly("n", &Domain::n)
        .def_readonly("size", &Domain::size)
        .def("contains", &Domain::contains)
        .def("__repr__", [](const Domain& d) {
            return "Domain(n=" + std::to_string(d.n) + ", size=" + std::to_string(d.size) + ")";
        });

    m.def("beta_members", [](Domain domain, int q) {
        const BetaSet set = beta_members(domain, q);
        return std::vector<std::uint64_t>{set.begin(), set.end()};
    }, py::arg("domain"), py::arg("q"));
    m.def("complement_string", &complement_string, py::arg("b"), py::arg("q"));
    m.def("beta_range", [](Domain domain, int q) {
        const IntervalRange range = beta_range(domain, q);
        std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
        for (const Interval& iv : range.intervals()) out.emplace_back(iv.lo, iv.hi);
        return out;
    }, py::arg("domain"), py::arg("q"));

    py::enum_<OracleKind>(m, "OracleKind")
        .value("sawtooth", OracleKind::sawtooth)
        .value("modexp", OracleKind::modexp);

    py::class_<PeriodicFunction>(m, "PeriodicFunction")
        .def_static("sawtooth", &PeriodicFunction::sawtooth, py::arg("domain"), py::arg("period"))
        .def_static("modexp", &PeriodicFunction::modexp, py::arg("domain"), py::arg("base"),
                    py::arg("modulus"))
        .def("__call__", &PeriodicFunction::operator(), py::arg("x"))
        .def("fundamental_period", &PeriodicFunction::fundamental_period)
        .def("validate_period",
             py::overload_cast<std::uint64_t>(&PeriodicFunction::validate_period, py::const_),
             py::arg("r"))
        .def("domain", &PeriodicFunction::domain)
        .def("kind", &PeriodicFunction::kind)
        .def("with_domain", &PeriodicFunction::with_domain)
        .def("spec_string", &PeriodicFunction::spec_string);
    m.def("parse_oracle", &parse_oracle, py::arg("spec"), py::arg("domain"));

    py::class_<StateVector>(m, "StateVector")
        .def(py::init<Domain, std::vector<std::complex<double>>>(), py::arg("domain"),
             py::arg("amplitudes"))
        .def_static("computational_basis", &StateVector::computational_basis)
        .def("domain", &StateVector::domain)
        .def("qubits", &StateVector::qubits)
        .def("amplitudes", &amplitudes_of)
        .def("probability", &StateVector::probability, py::arg("b"))
        .def("norm", &StateVector::norm)
        .def("__len__", &StateVector::size);

    py::class_<MeasurementRecord>(m, "MeasurementRecord")
        .def_readonly("a0", &MeasurementRecord::a0)
        .def_readonly("multiplicity", &MeasurementRecord::multiplicity)
        .def_readonly("seed", &MeasurementRecord::seed)
        .def_readonly("sampled", &MeasurementRecord::sampled);

    py::class_<A0Mode>(m, "A0Mode")
        .def_static("sample", &A0Mode::sample, py::arg("seed"))
        .def_static("postselect", &A0Mode::postselect, py::arg("a0"));

    m.def("build_phi_direct", &build_phi_direct, py::arg("domain"), py::arg("r"),
          py::arg("x0") = 0);
    m.def("build_psi_direct", &build_psi_direct, py::arg("domain"), py::arg("r"),
          py::arg("x0") = 0);
    m.def("qft", &qft, py::arg("state"));
    m.def("run_full_circuit", &run_full_circuit, py::arg("domain"), py::arg("f"),
          py::arg("mode"));

    py::class_<BlochCoefficients>(m, "BlochCoefficients")
        .def_readonly("ax", &BlochCoefficients::ax)
        .def_readonly("ay", &BlochCoefficients::ay)
        .def_readonly("az", &BlochCoefficients::az)
        .def("length", &BlochCoefficients::length);

    py::class_<OneQubitRDM>(m, "OneQubitRDM")
        .def_readonly("rho00", &OneQubitRDM::rho00)
        .def_readonly("rho11", &OneQubitRDM::rho11)
        .def_readonly("rho01", &OneQubitRDM::rho01)
        .def_readonly("q", &OneQubitRDM::q)
        .def("bloch", &OneQubitRDM::bloch)
        .def("eigenvalues", &OneQubitRDM::eigenvalues)
        .def("purity_radius", &OneQubitRDM::purity_radius);

    py::class_<MarginalProfile>(m, "MarginalProfile")
        .def_readonly("n", &MarginalProfile::n)
        .def_readonly("r_true", &MarginalProfile::r_true)
        .def_readonly("az", &MarginalProfile::az);

    m.def("rdm_from_state", &rdm_from_state, py::arg("state"), py::arg("q"));
    m.def("rho00_direct", &rho00_direct, py::arg("domain"), py::arg("r"), py::arg("q"));
    m.def("rho01_direct", &rho01_direct, py::arg("domain"), py::arg("r"), py::arg("q"),
          py::arg("a0") = 0);
    m.def("profile", &profile, py::arg("domain"), py::arg("r"));
    m.def("profile_from_state", &profile_from_state, py::arg("state"),
          py::arg("r_true") = std::nullopt);

    m.def("az_analytic_pow2", &az_analytic_pow2, py::arg("n"), py::arg("k"), py::arg("q"));
    m.def("peak_predicate", &peak_predicate, py::arg("n"), py::arg("q"), py::arg("r"));
    m.def("peak_set", &peak_set, py::arg("n"), py::arg("q"));
    m.def("rho00_counting", &rho00_counting, py::arg("domain"), py::arg("r"), py::arg("q"));
    m.def("az_approx", &az_approx, py::arg("n"), py::arg("q_from_last"), py::arg("r"));

    py::class_<PeriodHypothesis>(m, "PeriodHypothesis")
        .def_readonly("first_peak", &PeriodHypothesis::first_peak)
        .def_readonly("q_from_last", &PeriodHypothesis::q_from_last)
        .def_readonly("candidates", &PeriodHypothesis::candidates);

    py::class_<FinderResult>(m, "FinderResult")
        .def_readonly("period", &FinderResult::period)
        .def_readonly("iterations", &FinderResult::iterations)
        .def_readonly("qubits_used", &FinderResult::qubits_used)
        .def_readonly("trace", &FinderResult::trace);

    py::class_<AccuracyReport>(m, "AccuracyReport")
        .def_readonly("bits", &AccuracyReport::bits)
        .def_readonly("extra", &AccuracyReport::extra)
        .def_readonly("total_periods", &AccuracyReport::total_periods)
        .def_readonly("correct", &AccuracyReport::correct)
        .def_readonly("accuracy", &AccuracyReport::accuracy);

    py::enum_<ProfileMode>(m, "ProfileMode")
        .value("direct", ProfileMode::direct)
        .value("full_circuit", ProfileMode::full_circuit);

    m.def("hypothesize", &hypothesize, py::arg("profile"), py::arg("eps") = kDefaultEpsZero);
    m.def("secant_refine", &secant_refine, py::arg("profile"), py::arg("hypothesis"),
          py::arg("eps") = kDefaultEpsZero);
    m.def("find_period", &find_period, py::arg("f"), py::arg("n_base"), py::arg("max_extra"),
          py::arg("mode") = ProfileMode::direct, py::arg("eps") = kDefaultEpsZero,
          py::call_guard<py::gil_scoped_release>());
    m.def("accuracy_sweep", &accuracy_sweep, py::arg("bits"), py::arg("extra_range"),
          py::arg("workers") = 0, py::arg("eps") = kDefaultEpsZero,
          py::call_guard<py::gil_scoped_release>());
}
