"""Quantum period finding from one-qubit marginals.

Thin wrapper around the compiled extension; see the project README for the
C++ library and CLI.
"""

from ._qpf_rdm import (
    A0Mode,
    AccuracyReport,
    BlochCoefficients,
    Domain,
    FinderResult,
    MarginalProfile,
    MeasurementRecord,
    OneQubitRDM,
    OracleKind,
    PeriodHypothesis,
    PeriodicFunction,
    ProfileMode,
    StateVector,
    accuracy_sweep,
    az_analytic_pow2,
    az_approx,
    beta_members,
    beta_range,
    build_phi_direct,
    build_psi_direct,
    complement_string,
    find_period,
    hypothesize,
    parse_oracle,
    peak_predicate,
    peak_set,
    profile,
    profile_from_state,
    qft,
    rdm_from_state,
    rho00_counting,
    rho00_direct,
    rho01_direct,
    run_full_circuit,
    secant_refine,
)

__all__ = [
    "A0Mode",
    "AccuracyReport",
    "BlochCoefficients",
    "Domain",
    "FinderResult",
    "MarginalProfile",
    "MeasurementRecord",
    "OneQubitRDM",
    "OracleKind",
    "PeriodHypothesis",
    "PeriodicFunction",
    "ProfileMode",
    "StateVector",
    "accuracy_sweep",
    "az_analytic_pow2",
    "az_approx",
    "beta_members",
    "beta_range",
    "build_phi_direct",
    "build_psi_direct",
    "complement_string",
    "find_period",
    "hypothesize",
    "parse_oracle",
    "peak_predicate",
    "peak_set",
    "profile",
    "profile_from_state",
    "qft",
    "rdm_from_state",
    "rho00_counting",
    "rho00_direct",
    "rho01_direct",
    "run_full_circuit",
    "secant_refine",
]
