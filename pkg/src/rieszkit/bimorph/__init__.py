"""Finite-dimensional bilinear-map lab: proportionality, bimorphisms, convergence."""

from .forms import Atom, AtomBimorphism, BilinearForm, BilinearMap, ConvergencePair
from .lab import (
    Inconclusive,
    KernelWitness,
    LabReport,
    Proportional,
    azz_scaling_check,
    check_bimorphism,
    check_multiplicative,
    convergence_bound_check,
    exhaustive_multiplicative,
    functional_reduction_check,
    proportionality,
    proportionality_report,
)

__all__ = (
    "Atom",
    "AtomBimorphism",
    "BilinearForm",
    "BilinearMap",
    "ConvergencePair",
    "Inconclusive",
    "KernelWitness",
    "LabReport",
    "Proportional",
    "azz_scaling_check",
    "check_bimorphism",
    "check_multiplicative",
    "convergence_bound_check",
    "exhaustive_multiplicative",
    "functional_reduction_check",
    "proportionality",
    "proportionality_report",
)
