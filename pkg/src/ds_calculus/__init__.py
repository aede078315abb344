"""Combinatorial Duflo-Serganova calculus for classical Lie superalgebras.

Submodules:

* ``algebras``   root data, forms, Weyl groups, dominance
* ``cone``       iso-sets and the geometry of the self-commuting cone
* ``diagrams``   weight diagrams and arc diagrams
* ``simples``    the functor on simple modules
* ``characters`` exact supercharacter arithmetic and the restriction map
* ``explicit``   matrix-level modules and kernel-mod-image cross-checks
* ``cli``        the ds-calculus command line tool
"""

from .algebras import (SuperalgebraId, Root, parse_algebra, gl, sl, osp,
                       p_alg, q_alg, d21a, g3, f4, roots, form, rho,
                       is_dominant, weight_parity)
from .cone import (IsoSet, OrbitDescriptor, defect, enumerate_iso_sets,
                   w_orbits_on_iso_sets, orbit_dimension, orbit_codimension,
                   rank_and_gx, p_orbit_representatives)
from .diagrams import (ArcDiagram, weight_diagram, build_arcs,
                       remove_maximal_arc, diagram_to_weight, atypicality,
                       dex, render)
from .simples import (SimpleLabel, DSEntry, DSResult, ds1_simple, ds_r_simple,
                      check_purity, check_multiplicity, ExceptionalBlock,
                      ds_exceptional)
from .characters import (SuperCharacter, weyl_character, kac_supercharacter,
                         p_kac_supercharacters, RestrictionMap,
                         restriction_map, ds_restrict, sdim, taylor_order)
from .explicit import (ExplicitModule, standard_module, tensor_module,
                       dual_module, kac_module_explicit, odd_operator,
                       ds_explicit, verify_against_calculus)
from .weights import Weight, weight

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
