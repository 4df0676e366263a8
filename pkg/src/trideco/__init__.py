"""trideco: exact Hopf algebras with triangular decomposition.

Builds a Hopf algebra u from a quasitriangular base H and a braided vector
space V on the normal-form basis B(V) (x) H (x) B(oV), then computes its
graded representation theory: Nichols algebras, Verma modules, simple heads,
graded characters, decomposition polynomials, BGG reciprocity and rigid
modules.  All arithmetic is exact over cyclotomic fields.
"""

from .cyclotomic import Cyclotomic, root_of_unity
from .linalg import Matrix

__all__ = ["Cyclotomic", "root_of_unity", "Matrix"]

__version__ = "0.1.0"
