"""engel_lab: commutator calculus in a metabelian-by-abelian Lie ring.

The objects of study are the ideal closure of a distinguished generator z
in a Lie ring presented by block generators [z, c_I], the quotients of that
closure by an explicitly described relator collection, and the unipotent
operator group generated by 1 + ad(z) and 1 + ad(c_i) acting on a finite
truncation over F_p.

Subpackages
-----------
core
    words, straightening, brackets, and two independent cross-check models
    (an associative envelope and a wedge/polynomial model).
ideal
    shape classification of basis words, relator families, spans of the
    explicitly described component versus the closure computed by a graded
    sweep, and the derivation replays that tie the two together.
matching / opgroup
    the pair-partition reduction used for the nonvanishing argument, and
    the finite operator group built on top of everything else.
"""

from .linalg import USING_EXTENSION

__version__ = "0.1.0"

__all__ = ["USING_EXTENSION", "__version__"]
