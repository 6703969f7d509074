"""Iso-trees (discrete contour trees) of scalar graphs."""

from ._core import (
    IoError,
    IsoTree,
    IsoTreeError,
    ParseError,
    PreconditionError,
    ScalarGraph,
    ValidationError,
    build_iso_tree,
    gen_path,
    gen_tri_grid,
    is_mono_connected,
    level_cuts,
    load_graph_json,
    load_pgm,
    load_tree_json,
    validate_division,
)

__version__ = "0.1.0"

__all__ = [
    "IoError",
    "IsoTree",
    "IsoTreeError",
    "ParseError",
    "PreconditionError",
    "ScalarGraph",
    "ValidationError",
    "build_iso_tree",
    "gen_path",
    "gen_tri_grid",
    "is_mono_connected",
    "level_cuts",
    "load_graph_json",
    "load_pgm",
    "load_tree_json",
    "validate_division",
]
