"""Chiral and achiral polyhedra from quaternionic Coxeter groups."""

from __future__ import annotations

from .coxeter import DiagramId, FiniteGroup, coxeter_group, generate_group, proper_subgroup
from .field import SIGMA, SQRT2, SQRT5, TAU, ExactScalar
from .mesh import ChiralityReport, Polyhedron, analyze, build_faces, chirality_test, set_equal
from .quaternion import GroupElement, Quaternion
from .solids import SOLID_KINDS, ConstructionError, DegenerateParameterError, Solid, construct

__version__ = "0.1.0"

__all__ = [
    "SIGMA",
    "SOLID_KINDS",
    "SQRT2",
    "SQRT5",
    "TAU",
    "ChiralityReport",
    "ConstructionError",
    "DegenerateParameterError",
    "DiagramId",
    "ExactScalar",
    "FiniteGroup",
    "GroupElement",
    "Polyhedron",
    "Quaternion",
    "Solid",
    "analyze",
    "build_faces",
    "chirality_test",
    "construct",
    "coxeter_group",
    "generate_group",
    "proper_subgroup",
    "set_equal",
]
