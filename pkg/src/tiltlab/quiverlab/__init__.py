"""Graded quiver algebras: resolutions, Ext, Koszul and Ringel duality."""

from .fields import GF, QQ
from .algebra import (GradedAlgebra, InhomogeneousRelation, NotQuadratic,
                      build_algebra, preset_algebra, quadratic_dual,
                      renaming_isomorphic)
from .modules import GradedModule, ModuleMap, BoundExceeded
from .resolutions import (MinimalResolution, NotComposable, NotKoszulInRange,
                          ext_algebra, ext_dims, ext_space, koszul_check,
                          minimal_resolution, yoneda_product)
from .qh import (QHStructure, qh_structure, qh_koszul_check, tilting_module,
                 ringel_dual, parity_check, infer_dag)
