"""Exact computation of cube-graded homology theories of simplicial complexes:
the triply graded colouring homology and its degree-zero table, double
homology of the associated moment-angle complex, the anti-star cover spectral
sequences that connect them, and the connected domination polynomial."""

from .doubleh import (DoubleHomologyTable, diagonal_euler, double_differential,
                      double_homology, hochster_table)
from .domination import (IntPolynomial, condom_check, domination_polynomial,
                         is_connected_dominating)
from .errors import (CycleTooSmall, Disconnected, GhostVertex, IsSimplex,
                     NotAComplex, NotChainMap, NotCubeEdge, SizeCap,
                     TorsionObstruction, UberdhError, VertexOutOfRange)
from .exactla import Coeffs, F2, GroupClass, Q, Z, parse_coeffs
from .homology import SubsetHomologyTable, homology, subset_homology_table
from .mvss import (REDUCED, UNREDUCED, SpectralPage, e1_page, e2_page,
                   euler_row0, total_acyclicity_check)
from .scomplex import (EMPTY, Graph, SimplicialComplex, boundary_simplex,
                       cycle, flag_complex, from_facets, icosahedron,
                       one_skeleton, simplex)
from .uber import uber_B, uberhomology
from .verify import VerificationReport, verify_all

__version__ = "1.0.0"

__all__ = [
    "DoubleHomologyTable", "diagonal_euler", "double_differential",
    "double_homology", "hochster_table",
    "IntPolynomial", "condom_check", "domination_polynomial",
    "is_connected_dominating",
    "CycleTooSmall", "Disconnected", "GhostVertex", "IsSimplex",
    "NotAComplex", "NotChainMap", "NotCubeEdge", "SizeCap",
    "TorsionObstruction", "UberdhError", "VertexOutOfRange",
    "Coeffs", "F2", "GroupClass", "Q", "Z", "parse_coeffs",
    "SubsetHomologyTable", "homology", "subset_homology_table",
    "REDUCED", "UNREDUCED", "SpectralPage", "e1_page", "e2_page",
    "euler_row0", "total_acyclicity_check",
    "EMPTY", "Graph", "SimplicialComplex", "boundary_simplex", "cycle",
    "flag_complex", "from_facets", "icosahedron", "one_skeleton", "simplex",
    "uber_B", "uberhomology",
    "VerificationReport", "verify_all",
    "__version__",
]
