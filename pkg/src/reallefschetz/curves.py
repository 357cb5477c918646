"""Essential simple closed curves on the torus and their behaviour under
real structures.

A :class:`CurveClass` is the straight geodesic ``L_s = {tau*a + s*b}`` in the
primitive class ``a``.  Its offset ``s`` is ``<a, x> mod 1`` for any point
``x`` on the line, so it does not depend on which complement ``b`` is used;
``b`` (see :func:`frame_complement`) only fixes base points.  Curves are
unoriented: the class vector is sign-normalized, which negates the offset.

A real structure ``c = (M, t)`` preserves geodesics of class ``a`` only when
``M a = +-a``.  On the offset coordinate it acts by ``s -> eps*s + delta`` with
``eps = -(eigenvalue of a)`` and ``delta = <a, t>``:

* eigenvalue +1 (``eps = -1``): two isolated invariant geodesics; ``c``
  restricts to each as a translation, so it fixes it pointwise or acts
  antipodally;
* eigenvalue -1 (``eps = +1``, ``delta = 0``): every parallel geodesic is
  invariant and ``c`` reflects each one; they form a single equivariant class.
"""
from __future__ import annotations

import enum
from functools import lru_cache
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .affine import (
    AffineClass,
    Point,
    Vector,
    compose,
    frame_complement,
    mat_vec,
    mod1,
    pairing,
    primitive,
    require_real_structure,
    translation,
)
from .errors import InvariantViolation, NonPrimitive

__all__ = [
    "Action", "CurveClass", "InvariantCurveClass", "frame_complement",
    "dehn_twist", "twist_matrix", "offset_transform", "curve_action",
    "invariant_curve_classes", "equivariant_class", "are_twins",
    "apply_map_to_curve", "monodromy_twist", "right_view", "twin_swap",
]


class Action(enum.Enum):
    FIXED = "fixed"
    REFLECTION = "reflection"
    ANTIPODAL = "antipodal"


@dataclass(frozen=True, order=True)
class CurveClass:
    vector: Vector
    offset: Fraction = Fraction(0)

    def __post_init__(self):
        p, q = int(self.vector[0]), int(self.vector[1])
        try:
            v = primitive((p, q))
        except ValueError:
            raise NonPrimitive("zero class vector") from None
        if v != (p, q) and v != (-p, -q):
            raise NonPrimitive(f"class vector {(p, q)} is not primitive")
        s = Fraction(self.offset)
        if v != (p, q):
            s = -s
        object.__setattr__(self, "vector", v)
        object.__setattr__(self, "offset", mod1(s))

    def base_point(self) -> Point:
        b = frame_complement(self.vector)
        return (mod1(self.offset * b[0]), mod1(self.offset * b[1]))

    def __repr__(self):
        return f"CurveClass({self.vector}, {self.offset})"


@dataclass(frozen=True)
class InvariantCurveClass:
    """An equivariant isotopy class of invariant curves, tagged by action.

    ``twin_index`` is 0/1 for the two members of a twin pair, else ``None``.
    """

    curve: CurveClass
    action: Action = Action.FIXED
    twin_index: Optional[int] = None

    def sort_key(self):
        return (self.curve.vector, self.curve.offset, self.action.value)

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()


def twist_matrix(a: Vector):
    """Matrix of ``v -> v + <v, a> a``."""
    p, q = a
    return ((1 + p * q, -p * p), (q * q, 1 - p * q))


def dehn_twist(k: CurveClass) -> AffineClass:
    """Affine right-handed twist fixing the geodesic of ``k`` pointwise.

    ``x -> x + (<x, a> + s) a``; for offset 0 this is ``(T_a, 0)``.
    """
    a, s = k.vector, k.offset
    return AffineClass(twist_matrix(a), (s * a[0], s * a[1]))


def offset_transform(c: AffineClass, v) -> Optional[tuple[int, Fraction]]:
    """``(eps, delta)`` with ``c`` acting on offsets of class ``v`` by
    ``s -> eps*s + delta``; ``None`` when ``M v != +-v``."""
    require_real_structure(c)
    v = CurveClass(v).vector
    mv = mat_vec(c.matrix, v)
    if mv == v:
        eigen = 1
    elif mv == (-v[0], -v[1]):
        eigen = -1
    else:
        return None
    return -eigen, mod1(pairing(v, c.translation))


def _invariant_offsets(c: AffineClass, v: Vector):
    """Isolated invariant offsets, ``"all"``, or ``()`` (none)."""
    tr = offset_transform(c, v)
    if tr is None:
        return ()
    eps, delta = tr
    if eps == 1:
        return "all" if delta == 0 else ()
    return tuple(sorted((mod1(delta / 2), mod1(delta / 2 + Fraction(1, 2)))))


def is_invariant(c: AffineClass, k: CurveClass) -> bool:
    offs = _invariant_offsets(c, k.vector)
    return offs == "all" or k.offset in offs


def curve_action(c: AffineClass, k: CurveClass) -> Action:
    if not is_invariant(c, k):
        raise InvariantViolation(f"{k!r} is not invariant under {c!r}")
    if mat_vec(c.matrix, k.vector) != k.vector:
        return Action.REFLECTION
    p = k.base_point()
    q = c(p)
    if Fraction(q[0] - p[0]).denominator == 1 and Fraction(q[1] - p[1]).denominator == 1:
        return Action.FIXED
    return Action.ANTIPODAL


def _raw_classes(c: AffineClass):
    from .affine import eigenvectors

    out = []
    for v in eigenvectors(c.matrix):
        offs = _invariant_offsets(c, v)
        if offs == "all":
            out.append(CurveClass(v, 0))
        else:
            out.extend(CurveClass(v, s) for s in offs)
    return out


def invariant_curve_classes(c: AffineClass) -> list[InvariantCurveClass]:
    """All equivariant isotopy classes of ``c``-invariant essential curves,
    sorted by class vector then offset, with twin indices assigned."""
    return list(_invariant_curve_classes(c))


@lru_cache(maxsize=1 << 16)
def _invariant_curve_classes(c: AffineClass) -> tuple[InvariantCurveClass, ...]:
    require_real_structure(c)
    curves = sorted(_raw_classes(c))
    acts = [curve_action(c, k) for k in curves]
    out = []
    for i, (k, act) in enumerate(zip(curves, acts)):
        partners = [j for j, (k2, a2) in enumerate(zip(curves, acts))
                    if j != i and k2.vector == k.vector and a2 == act]
        twin = None
        if partners and _twin_witness(c, k, curves[partners[0]]) is not None:
            twin = 0 if i < partners[0] else 1
        out.append(InvariantCurveClass(k, act, twin))
    return tuple(out)


def equivariant_class(c: AffineClass, k: CurveClass) -> InvariantCurveClass:
    """The invariant class containing the (invariant) geodesic ``k``."""
    act = curve_action(c, k)
    if act is Action.REFLECTION:
        k = CurveClass(k.vector, 0)
    for inv in _invariant_curve_classes(c):
        if inv.curve == k:
            return inv
    raise AssertionError("invariant geodesic missing from the class list")


def apply_map_to_curve(phi: AffineClass, k: CurveClass) -> CurveClass:
    """Image geodesic ``phi(L_s)``."""
    v = mat_vec(phi.matrix, k.vector)
    x = phi(k.base_point())
    return CurveClass(v, pairing(v, x))


def _twin_witness(c: AffineClass, k1: CurveClass, k2: CurveClass):
    """A half-period translation commuting with ``c`` carrying ``k1`` to ``k2``."""
    half = Fraction(1, 2)
    for w in ((0, half), (half, 0), (half, half)):
        mw = mat_vec(c.matrix, w)
        if any(Fraction(mw[i] - w[i]).denominator != 1 for i in (0, 1)):
            continue
        r = translation(w)
        if apply_map_to_curve(r, k1) == k2:
            return r
    return None


def are_twins(c: AffineClass, k1, k2) -> bool:
    k1 = k1.curve if isinstance(k1, InvariantCurveClass) else k1
    k2 = k2.curve if isinstance(k2, InvariantCurveClass) else k2
    e1, e2 = equivariant_class(c, k1), equivariant_class(c, k2)
    if e1 == e2 or e1.curve.vector != e2.curve.vector or e1.action != e2.action:
        return False
    return _twin_witness(c, e1.curve, e2.curve) is not None


def twin_swap(c: AffineClass) -> AffineClass:
    """Translation by half the -1 eigenvector: commutes with ``c``, fixes every
    reflection geodesic and exchanges the twin classes.  Defined when ``c``
    has 0 or 2 real components (for 1 component it would swap nothing)."""
    from .affine import component_count, eigenvectors

    if component_count(c) == 1:
        raise ValueError("a one-component real structure has no twin curves")
    v = eigenvectors(c.matrix)[1]
    return translation((Fraction(v[0], 2), Fraction(v[1], 2)))


def monodromy_twist(c: AffineClass, k: CurveClass) -> AffineClass:
    """Equivariant model of the local monodromy around a vanishing cycle ``k``.

    For a reflection class this is :func:`dehn_twist` of ``k``.  For an
    isolated class the twist is centred on the opposite invariant geodesic:
    a twist localized near ``k`` rotates ``k`` itself by a half period, which
    is what turns a pointwise-fixed vanishing cycle into an antipodal one on
    the other side of the critical value.
    """
    act = curve_action(c, k)
    if act is Action.REFLECTION:
        return dehn_twist(k)
    return dehn_twist(CurveClass(k.vector, k.offset + Fraction(1, 2)))


def right_view(c: AffineClass, k: CurveClass) -> tuple[AffineClass, InvariantCurveClass]:
    """The structure past the critical value and the vanishing cycle's class there."""
    c_next = compose(monodromy_twist(c, k), c)
    return c_next, equivariant_class(c_next, k)
