"""Symbolic engine for small quantum loop modules of type A."""

from .desk import BandError, DeskModule, ModuleVector, ZERO_VECTOR
from .drinfeld import DrinfeldEngine
from .forms import FormError, TensorForm, fundamental_norms, psi_image
from .submodule import BarDomainError, GradedSubmodule, generate_submodule
from .verify import SuiteReport, UnknownSuite, suite_names, verify_suite

__all__ = [
    "BandError", "BarDomainError", "DeskModule", "DrinfeldEngine", "FormError", "GradedSubmodule",
    "ModuleVector", "SuiteReport", "TensorForm", "UnknownSuite", "ZERO_VECTOR", "fundamental_norms",
    "generate_submodule", "psi_image", "suite_names", "verify_suite",
]
