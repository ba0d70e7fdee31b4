"""Compressing disks of unknot bridge spheres and the octahedral retraction of their disk complex."""

from .classifier import ClassLabel, EdgeVerdict, Unclassifiable, check_edge, classify, retraction_image
from .complex import ComplexSlice, build_complex, enumerate_vertices, homology_ranks, octahedron, twist_orbit
from .curve import (
    Curve,
    CurveError,
    apply_half_twist,
    apply_twists,
    is_essential,
    peripheral_word,
    puncture_partition,
    reference_curve,
    tighten,
    validate,
)
from .intersection import RegionSide, are_disjoint, geometric_intersection, is_isotopic, region_side
from .layout import BridgeLayout, Region, build_layout, reference_arc, reference_region
from .oracle import ArcInterval, arc_pair_intersection, equivariance_suite
from .suite import Report, verify_suite
from .tangle import DiskVertex, Side, compression_side, make_vertex
from .words import FreeWord

__all__ = [
    "ArcInterval",
    "BridgeLayout",
    "ClassLabel",
    "ComplexSlice",
    "Curve",
    "CurveError",
    "DiskVertex",
    "EdgeVerdict",
    "FreeWord",
    "Region",
    "RegionSide",
    "Report",
    "Side",
    "Unclassifiable",
    "apply_half_twist",
    "apply_twists",
    "arc_pair_intersection",
    "are_disjoint",
    "build_complex",
    "build_layout",
    "check_edge",
    "classify",
    "compression_side",
    "enumerate_vertices",
    "equivariance_suite",
    "geometric_intersection",
    "homology_ranks",
    "is_essential",
    "is_isotopic",
    "make_vertex",
    "octahedron",
    "peripheral_word",
    "puncture_partition",
    "reference_arc",
    "reference_curve",
    "reference_region",
    "region_side",
    "retraction_image",
    "tighten",
    "twist_orbit",
    "validate",
    "verify_suite",
]
