"""Exact structure theory for finite-dimensional Lie algebras over Q and finite towers of them."""

from .errors import *  # noqa: F401,F403
from .exactla import (
    Polynomial,
    QMatrix,
    Rational,
    Subspace,
    canonicalize,
    char_poly,
    char_poly_with_rational_roots,
    kernel,
    solve_linear,
)
from .liecore import (
    LieAlgebra,
    ad,
    bracket_subspaces,
    centre,
    derivation_analyze,
    direct_sum,
    ideal_closure,
    series,
    validate_algebra,
)
from .weights import (
    Representation,
    WeightFunction,
    adjoint_representation,
    fitting_decompose,
    fitting_trace,
    mu_component,
    weight_decomposition,
    weight_string_identity,
)
from .forms import (
    BilinearForm,
    cartan_solvable,
    gram_split,
    killing_form,
    perp,
    radical,
    semisimple_check,
    trace_form,
)
from .structure import (
    a_omega,
    condition3_witness,
    decompose_semisimple,
    rep_stable_image,
    stable_annihilator,
)
from .tower import (
    Tower,
    TowerDerivation,
    tower_decompose,
    tower_derivation_inner,
    tower_verdicts,
    validate_tower,
)

__version__ = "0.1.0"
