"""Real codes ``(c, a)`` on the torus: a real structure together with an
invariant vanishing cycle.

Up to orientation-preserving conjugacy there are six classes, determined by
the number of real components of ``c`` and the action of ``c`` on ``a``.
Conjugacy is decided by moving ``c`` to its canonical representative and
comparing orbits of the transported cycle under the representative's finite
residual symmetry group.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .affine import (
    AffineClass,
    STRUCTURE_REPS,
    affine,
    component_count,
    compose,
    conjugate,
    eigenvectors,
    inverse,
    normalize_structure,
    require_real_structure,
    translation,
)
from .curves import (
    Action,
    CurveClass,
    InvariantCurveClass,
    apply_map_to_curve,
    equivariant_class,
    invariant_curve_classes,
    monodromy_twist,
)
from .errors import InvariantViolation

__all__ = [
    "CodeClass", "RealCode", "LocalModel", "new_code", "code_class",
    "local_model", "fiber_profile", "residual_symmetries", "canonical_code",
    "codes_conjugate", "conjugate_code", "enumerate_code_classes",
]


class CodeClass(enum.IntEnum):
    K2_REAL = 1
    K2_REFL = 2
    K1_REAL = 3
    K1_REFL = 4
    K1_ANTI = 5
    K0_ANTI = 6

    @property
    def label(self) -> str:
        return _LABELS[self]

    @classmethod
    def from_label(cls, label: str) -> "CodeClass":
        for member, name in _LABELS.items():
            if name == label:
                return member
        raise ValueError(f"unknown code class label {label!r}")


_LABELS = {
    CodeClass.K2_REAL: "k2-real",
    CodeClass.K2_REFL: "k2-refl",
    CodeClass.K1_REAL: "k1-real",
    CodeClass.K1_REFL: "k1-refl",
    CodeClass.K1_ANTI: "k1-anti",
    CodeClass.K0_ANTI: "k0-anti",
}

_CLASS_OF = {
    (2, Action.FIXED): CodeClass.K2_REAL,
    (2, Action.REFLECTION): CodeClass.K2_REFL,
    (1, Action.FIXED): CodeClass.K1_REAL,
    (1, Action.REFLECTION): CodeClass.K1_REFL,
    (1, Action.ANTIPODAL): CodeClass.K1_ANTI,
    (0, Action.ANTIPODAL): CodeClass.K0_ANTI,
}


class LocalModel(enum.Enum):
    XI_PLUS = "xi+"
    XI_MINUS = "xi-"


@dataclass(frozen=True)
class RealCode:
    """``structure`` with the geodesic ``curve`` it preserves; ``cycle`` is the
    equivariant class of that geodesic."""

    structure: AffineClass
    curve: CurveClass
    cycle: InvariantCurveClass

    @property
    def action(self) -> Action:
        return self.cycle.action


def new_code(c: AffineClass, k: CurveClass) -> RealCode:
    require_real_structure(c)
    if not isinstance(k, CurveClass):
        k = CurveClass(*k)
    try:
        cycle = equivariant_class(c, k)
    except InvariantViolation:
        raise InvariantViolation(f"{k!r} is not invariant under {c!r}") from None
    return RealCode(c, k, cycle)


def code_class(code: RealCode) -> CodeClass:
    return _CLASS_OF[(component_count(code.structure), code.action)]


def local_model(code: RealCode) -> LocalModel:
    return LocalModel.XI_MINUS if code.action is Action.REFLECTION else LocalModel.XI_PLUS


def fiber_profile(code: RealCode, mirror: bool = False) -> tuple[int, int]:
    """Real component counts ``(left, right)`` of the fibers beside the
    critical value.  The code's structure is the left one; with ``mirror`` it
    is read as the right one instead."""
    c, k = code.structure, code.curve
    twist = monodromy_twist(c, k)
    if mirror:
        other = compose(inverse(twist), c)
        pair = (other, c)
    else:
        other = compose(twist, c)
        pair = (c, other)
    require_real_structure(other)
    return component_count(pair[0]), component_count(pair[1])


@lru_cache(maxsize=None)
def residual_symmetries(rep: AffineClass) -> tuple[AffineClass, ...]:
    """Generators of the orientation-preserving affine maps that commute with
    the canonical structure ``rep``, modulo those acting trivially on its
    invariant curve classes."""
    u, v = eigenvectors(rep.matrix)
    half = Fraction(1, 2)
    gens = [
        affine(((-1, 0), (0, -1))),
        translation((u[0] * half, u[1] * half)),
        translation((v[0] * half, v[1] * half)),
    ]
    out = []
    for g in gens:
        if conjugate(g, rep) == rep and g not in out:
            out.append(g)
    return tuple(out)


def _normal_cycle(c: AffineClass, k: CurveClass) -> InvariantCurveClass:
    return equivariant_class(c, k)


@lru_cache(maxsize=None)
def _orbit_min(rep: AffineClass, first: InvariantCurveClass) -> InvariantCurveClass:
    gens = residual_symmetries(rep)
    seen = {first}
    todo = [first]
    while todo:
        cur = todo.pop()
        for g in gens:
            img = _normal_cycle(rep, apply_map_to_curve(g, cur.curve))
            if img not in seen:
                seen.add(img)
                todo.append(img)
    return min(seen, key=InvariantCurveClass.sort_key)


def canonical_code(code: RealCode) -> RealCode:
    """The least representative of the conjugacy class of ``code`` over its
    canonical structure."""
    phi, rep = normalize_structure(code.structure)
    moved = apply_map_to_curve(phi, code.curve)
    best = _orbit_min(rep, _normal_cycle(rep, moved))
    return RealCode(rep, best.curve, best)


def codes_conjugate(x: RealCode, y: RealCode) -> bool:
    return canonical_code(x) == canonical_code(y)


def conjugate_code(phi: AffineClass, code: RealCode) -> RealCode:
    """Push a code forward along ``phi`` (``det(phi) = +1`` for conjugacy)."""
    return new_code(conjugate(phi, code.structure), apply_map_to_curve(phi, code.curve))


def enumerate_code_classes() -> list[RealCode]:
    """One representative per conjugacy class, ordered by class id."""
    reps: dict[CodeClass, RealCode] = {}
    for k in (2, 1, 0):
        rep = STRUCTURE_REPS[k]
        for inv in invariant_curve_classes(rep):
            code = canonical_code(new_code(rep, inv.curve))
            reps.setdefault(code_class(code), code)
    return [reps[cid] for cid in sorted(reps)]
