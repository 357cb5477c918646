"""Exact invariants of real elliptic Lefschetz fibrations with real critical values.

The torus model lives in :mod:`.affine` (affine maps and real structures) and
:mod:`.curves` (invariant curves and twists).  :mod:`.codes` classifies real
codes, :mod:`.chains` builds and decorates chains, :mod:`.census` searches for
closed chains and :mod:`.genus` counts classes in higher genus.
"""
from .affine import (
    IDENTITY,
    STRUCTURE_REPS,
    AffineClass,
    FixedSetReport,
    affine,
    compose,
    conjugate,
    fixed_components,
    inverse,
    is_real_structure,
    isotopic_structures,
    normalize_structure,
    smith_normal_form,
    translation,
)
from .census import census_entries, enumerate_closed_chains
from .chains import (
    ConcreteChain,
    DecoratedChain,
    ambiguous_junctions,
    apply_twin_move,
    build_chain,
    chains_isomorphic,
    closed_invariant,
    cyclic_canonical,
    decorated_invariant,
    flip_twin,
    sphere_closure,
    total_monodromy,
    validate_chain,
)
from .codes import (
    CodeClass,
    LocalModel,
    RealCode,
    code_class,
    codes_conjugate,
    enumerate_code_classes,
    fiber_profile,
    local_model,
    new_code,
)
from .curves import (
    Action,
    CurveClass,
    InvariantCurveClass,
    apply_map_to_curve,
    are_twins,
    curve_action,
    dehn_twist,
    invariant_curve_classes,
    monodromy_twist,
    offset_transform,
)
from .errors import (
    IllegalMove,
    InvariantViolation,
    NonPrimitive,
    NotInvolution,
    RealLefschetzError,
    SearchLimitExceeded,
)
from .genus import (
    SymbolicStructureClass,
    count_code_classes_nonsep,
    crosscheck_genus1,
    harnack_bound,
    structure_classes,
)

__version__ = "0.1.0"
