"""Finite groups, wreath products and their embeddings."""

from ._core import (
    Group,
    InvariantError,
    ParseError,
    SectionMismatch,
    SizeLimitError,
    Wreath,
    WreathlabError,
    build_wreath,
    chi,
    degree432,
    figure_data,
    kk_embedding,
    kummer_size,
    omega_embedding,
    omega_size,
    regular_size,
    table1,
    tower_embedding,
    verify,
)

__all__ = [
    "Group",
    "InvariantError",
    "ParseError",
    "SectionMismatch",
    "SizeLimitError",
    "Wreath",
    "WreathlabError",
    "build_wreath",
    "chi",
    "degree432",
    "figure_data",
    "kk_embedding",
    "kummer_size",
    "omega_embedding",
    "omega_size",
    "regular_size",
    "table1",
    "tower_embedding",
    "verify",
]
