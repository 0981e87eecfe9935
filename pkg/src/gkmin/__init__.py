"""Exact-arithmetic toolkit for the combinatorics of GL(n, C) representations
of minimal nonzero Gelfand-Kirillov dimension.

Subpackages cover symmetric-group combinatorics (``symgroup``), the
Robinson-Schensted correspondence and the two-column double cell
(``tableaux``), an ordinary Kazhdan-Lusztig oracle (``klpoly``), Dyck
skew-partitions and parabolic Kazhdan-Lusztig polynomials (``dyckpar``),
Goldie rank and Bernstein degree arithmetic (``weights``), Langlands
parameter classification (``langlands``), coherent-family linear algebra
(``coherent``), and the ``gkmin`` command line front end (``cli``).

All mathematical values are exact: arbitrary-precision integers,
``fractions.Fraction`` rationals, and integer-coefficient polynomials.
"""

from .symgroup import Permutation
from .tableaux import Partition, StandardTableau
from .klpoly import IntMatrix, OracleLimitError, QPoly
from .dyckpar import SkewPartition
from .weights import WeightVector
from .langlands import Character, GKClass, LanglandsParameter
from .coherent import BasisLabel, CoherentVector

__version__ = "0.1.0"

__all__ = [
    "Permutation",
    "Partition",
    "StandardTableau",
    "QPoly",
    "IntMatrix",
    "OracleLimitError",
    "SkewPartition",
    "WeightVector",
    "Character",
    "GKClass",
    "LanglandsParameter",
    "BasisLabel",
    "CoherentVector",
    "__version__",
]
