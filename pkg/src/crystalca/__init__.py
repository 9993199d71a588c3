"""Soliton cellular automata from crystal bases.

Cellular automata whose local states live in the vector-representation
crystal of a non-exceptional quantum affine algebra.  Solitons in these
automata carry labels from the crystals of the rank-lowered algebra, and
their scattering is computed by the combinatorial R-matrix with phase
shifts given by the energy function.  The package provides the crystal
combinatorics, the carrier time evolutions, the R-matrix, soliton
detection and scattering experiments, and the auxiliary-crystal
verification machinery.
"""

from crystalca.algebra import Algebra

__all__ = ["Algebra"]
__version__ = "0.1.0"
