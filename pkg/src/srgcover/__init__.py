"""Exact distance spectra of bipartite double covers of strongly regular graphs."""

from .graph import (
    Graph,
    SrgParams,
    bipartite_double_cover,
    diameter,
    distance_matrix,
    is_irreducible,
    is_strongly_regular,
    is_triangle_free,
    new_graph,
)
from .matrix import IntMatrix
from .quadfield import QuadNum, Spectrum
from .spectra import distance_spectrum_cover, srg_spectrum
from .verification import run_all, verify_entry

__all__ = [
    "Graph",
    "IntMatrix",
    "QuadNum",
    "Spectrum",
    "SrgParams",
    "bipartite_double_cover",
    "diameter",
    "distance_matrix",
    "distance_spectrum_cover",
    "is_irreducible",
    "is_strongly_regular",
    "is_triangle_free",
    "new_graph",
    "run_all",
    "srg_spectrum",
    "verify_entry",
]

__version__ = "0.1.0"
