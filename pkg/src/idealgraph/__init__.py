"""Graph properties decided through polynomial-ideal encodings.

Three engines, each producing machine-verifiable evidence:

* non-3-colorability: degree-bounded infeasibility certificates over GF(2)
  and their equivalent parity-constrained cycle covers;
* unique Hamiltonicity: exact cyclotomic Groebner bases, variety point
  counts, and the cycle-ideal decomposition;
* automorphism structure: the doubly stochastic commuting polytope with
  exact-rational LP, compactness probes, and exactness conditions.
"""

from . import autpoly, covers, cyclo, cyclopoly, f2poly, gf2, graphs, hamilton, nulla, ratlp

__all__ = [
    "autpoly",
    "covers",
    "cyclo",
    "cyclopoly",
    "f2poly",
    "gf2",
    "graphs",
    "hamilton",
    "nulla",
    "ratlp",
]

__version__ = "0.1.0"
