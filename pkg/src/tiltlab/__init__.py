"""tiltlab: exact Hecke-algebra combinatorics and graded quiver algebras.

Two halves:

* Hecke side -- Laurent polynomials, root data, the extended affine Weyl
  group, the extended Hecke algebra with its canonical basis, the spherical
  and antispherical modules with their structural maps, canonical-basis
  tables with a verification suite, and an SL2 tilting-character oracle.

* Quiver side (tiltlab.quiverlab) -- graded path algebras with homogeneous
  relations, minimal resolutions, Ext algebras and Koszulity, quadratic
  duality, quasi-hereditary structure, tilting modules, Ringel duality and
  parity classification.
"""

from .laurent import LaurentInt
from .rootdata import (CARTAN, NotDominant, NotFiniteType, RootDatum,
                       build_root_datum, root_datum_from_file)
from .weyl import (DatumMismatch, ExtendedWeyl, NotMinimal,
                   OmegaDecomposition, WextElement)
from .hecke import HeckeAlgebra, HeckeElt
from .sphmod import (BadSigma, ParabolicElt, ParabolicModule, eta, get_module,
                     mod_iota, phi)

__all__ = [
    "LaurentInt", "CARTAN", "NotDominant", "NotFiniteType", "RootDatum",
    "build_root_datum", "root_datum_from_file", "DatumMismatch",
    "ExtendedWeyl", "NotMinimal", "OmegaDecomposition", "WextElement",
    "HeckeAlgebra", "HeckeElt", "BadSigma", "ParabolicElt", "ParabolicModule",
    "eta", "get_module", "mod_iota", "phi",
]

__version__ = "0.1.0"
