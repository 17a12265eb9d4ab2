"""Hyperbolic tetrahedron volumes from edge lengths or dihedral angles."""

from ._hytet import (  # noqa: F401
    InputError,
    NumericalError,
    RealizabilityError,
    ShapeError,
    angles_to_lengths,
    classify,
    clog,
    lengths_to_angles,
    li2,
    lobachevsky,
    oracle_volume,
    schlafli_defect,
    volume_from_angles,
    volume_from_lengths,
)

__all__ = [
    "InputError",
    "NumericalError",
    "RealizabilityError",
    "ShapeError",
    "angles_to_lengths",
    "classify",
    "clog",
    "lengths_to_angles",
    "li2",
    "lobachevsky",
    "oracle_volume",
    "schlafli_defect",
    "volume_from_angles",
    "volume_from_lengths",
]
