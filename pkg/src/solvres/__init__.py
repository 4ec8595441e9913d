"""Left Gröbner bases, syzygies and minimal graded free resolutions over
weighted graded solvable polynomial algebras."""

from .algebra import (
    Cmp,
    MonomialOrder,
    Polynomial,
    SolvableAlgebra,
    ValidationReport,
    check_graded,
    check_solvable,
    compare,
    degree,
    is_homogeneous,
    leading,
    multiply,
    normalize_product,
)
from .catalog import mq2, polynomial_ring, quantum_plane, quantum_space, weyl
from .dsl import ProblemFile, parse_problem, render_problem
from .errors import *  # noqa: F401,F403
from .freemod import (
    FreeModule,
    ModuleElement,
    ModuleMonomial,
    combine,
    divide,
    divides,
    module_compare,
    s_polynomial,
)
from .groebner import (
    GroebnerBasis,
    TransitionMatrices,
    buchberger,
    contains,
    is_groebner,
    min_gens_gb,
    truncated_buchberger,
)
from .presentation import MinimalPresentation, Presentation, minimize_presentation
from .resolution import BettiTable, Resolution, betti, minimal_free_resolution, verify_resolution
from .scalar import GF, QQ, Field, Residue
from .syzygy import SyzygyGenerator, schreyer_syzygies, syzygies_of_generators

GradedFreeModule = FreeModule

__version__ = "0.1.0"
