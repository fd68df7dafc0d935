"""Automorphisms of Z_n[x]: classification, conjugacy in the basic group,
and invariant subrings, each backed by a brute-force oracle."""

from .basicgroup import BasicAut, are_conjugate, canonical_rep, enumerate_classes, psi
from .endos import Endo, classify, compose_endo, invert, order
from .errors import RingAutoError
from .fixedrings import CoeffModule, SubgroupSpec, fixed_module, identify_z4, span_module
from .polyring import Poly

__all__ = [
    "BasicAut",
    "CoeffModule",
    "Endo",
    "Poly",
    "RingAutoError",
    "SubgroupSpec",
    "are_conjugate",
    "canonical_rep",
    "classify",
    "compose_endo",
    "enumerate_classes",
    "fixed_module",
    "identify_z4",
    "invert",
    "order",
    "psi",
    "span_module",
]
