"""Affine mapping classes of the torus ``R^2 / Z^2``.

An :class:`AffineClass` is the map ``x -> M x + t`` with ``M`` an integer
matrix of determinant +-1 and ``t`` a pair of rationals reduced mod 1.
Real structures on the torus are the orientation-reversing involutions in
this family; every real structure is conjugate to one of three canonical
representatives, distinguished by the number of fixed circles (0, 1 or 2).

Everything is exact: integers and :class:`fractions.Fraction`, never floats.
"""
from __future__ import annotations

import math
from functools import lru_cache
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Sequence

from .errors import NotInvolution

Matrix = tuple[tuple[int, int], tuple[int, int]]
Vector = tuple[int, int]
Point = tuple[Fraction, Fraction]

IDENTITY_MATRIX: Matrix = ((1, 0), (0, 1))


# --- small exact linear algebra -------------------------------------------

def mod1(x) -> Fraction:
    x = Fraction(x)
    return x - math.floor(x)


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    return (
        (a[0][0] * b[0][0] + a[0][1] * b[1][0], a[0][0] * b[0][1] + a[0][1] * b[1][1]),
        (a[1][0] * b[0][0] + a[1][1] * b[1][0], a[1][0] * b[0][1] + a[1][1] * b[1][1]),
    )


def mat_vec(m: Matrix, v):
    return (m[0][0] * v[0] + m[0][1] * v[1], m[1][0] * v[0] + m[1][1] * v[1])


def det(m: Matrix) -> int:
    return m[0][0] * m[1][1] - m[0][1] * m[1][0]


def mat_inv(m: Matrix) -> Matrix:
    """Inverse of a unimodular integer matrix."""
    d = det(m)
    if d not in (1, -1):
        raise ValueError(f"matrix {m} is not unimodular")
    return ((d * m[1][1], -d * m[0][1]), (-d * m[1][0], d * m[0][0]))


def pairing(u, v):
    """Algebraic intersection form ``<u, v> = u1*v2 - u2*v1``."""
    return u[0] * v[1] - u[1] * v[0]


def primitive(v) -> Vector:
    """Divide out the content of a nonzero integer vector and make the first
    nonzero entry positive.

    >>> primitive((-4, 6))
    (2, -3)
    """
    p, q = int(v[0]), int(v[1])
    g = math.gcd(p, q)
    if g == 0:
        raise ValueError("zero vector has no primitive direction")
    p, q = p // g, q // g
    if p < 0 or (p == 0 and q < 0):
        p, q = -p, -q
    return (p, q)


def frame_complement(a: Vector) -> Vector:
    """Integer ``b`` with ``<a, b> = 1``, of least norm (ties: lexicographic).

    >>> frame_complement((1, 0)), frame_complement((0, 1)), frame_complement((1, 1))
    ((0, 1), (-1, 0), (-1, 0))
    """
    p, q = a
    g, x, y = _ext_gcd(p, q)
    if g != 1:
        raise ValueError(f"{a} is not primitive")
    b0 = (-y, x)  # p*x + q*y = 1  =>  <a, (-y, x)> = 1
    aa = p * p + q * q
    k0 = -((b0[0] * p + b0[1] * q) // aa)
    cands = [(b0[0] + k * p, b0[1] + k * q) for k in (k0 - 1, k0, k0 + 1, k0 + 2)]
    return min(cands, key=lambda b: (b[0] * b[0] + b[1] * b[1], b))


def _ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    if b == 0:
        return (abs(a), (1 if a >= 0 else -1), 0)
    g, x, y = _ext_gcd(b, a % b)
    return g, y, x - (a // b) * y


def _as_matrix(m) -> Matrix:
    return ((int(m[0][0]), int(m[0][1])), (int(m[1][0]), int(m[1][1])))


# --- the affine class itself -----------------------------------------------

@dataclass(frozen=True)
class AffineClass:
    """The torus map ``x -> matrix @ x + translation`` (translation mod 1)."""

    matrix: Matrix
    translation: Point = (Fraction(0), Fraction(0))

    def __post_init__(self):
        m = _as_matrix(self.matrix)
        if det(m) not in (1, -1):
            raise ValueError(f"det{m} = {det(m)}, expected +-1")
        t = (mod1(self.translation[0]), mod1(self.translation[1]))
        object.__setattr__(self, "matrix", m)
        object.__setattr__(self, "translation", t)

    @property
    def det(self) -> int:
        return det(self.matrix)

    def __call__(self, x) -> Point:
        """Image of a point of ``R^2`` (not reduced mod 1)."""
        mx = mat_vec(self.matrix, x)
        return (mx[0] + self.translation[0], mx[1] + self.translation[1])

    def __matmul__(self, other: "AffineClass") -> "AffineClass":
        return compose(self, other)

    def __repr__(self):
        t = ", ".join(str(c) for c in self.translation)
        return f"AffineClass({list(map(list, self.matrix))}, ({t}))"


def affine(m: Sequence[Sequence[int]], t=(0, 0)) -> AffineClass:
    """Convenience constructor accepting lists and strings like ``"1/2"``."""
    return AffineClass(_as_matrix(m), (Fraction(t[0]), Fraction(t[1])))


def translation(w) -> AffineClass:
    return affine(IDENTITY_MATRIX, w)


IDENTITY = AffineClass(IDENTITY_MATRIX)


def compose(f: AffineClass, g: AffineClass) -> AffineClass:
    """``f o g``: first ``g``, then ``f``."""
    tg = mat_vec(f.matrix, g.translation)
    return AffineClass(
        mat_mul(f.matrix, g.matrix),
        (tg[0] + f.translation[0], tg[1] + f.translation[1]),
    )


def inverse(f: AffineClass) -> AffineClass:
    mi = mat_inv(f.matrix)
    t = mat_vec(mi, f.translation)
    return AffineClass(mi, (-t[0], -t[1]))


def conjugate(phi: AffineClass, f: AffineClass) -> AffineClass:
    """``phi o f o phi^-1``."""
    return compose(compose(phi, f), inverse(phi))


@lru_cache(maxsize=1 << 16)
def is_real_structure(f: AffineClass) -> bool:
    return f.det == -1 and compose(f, f) == IDENTITY


def require_real_structure(f: AffineClass) -> None:
    if not is_real_structure(f):
        raise NotInvolution(f"{f!r} is not an orientation-reversing involution")


def eigenvectors(m: Matrix) -> tuple[Vector, Vector]:
    """Primitive (+1, -1) eigenvectors of an integer involution with det -1."""
    if det(m) != -1 or mat_mul(m, m) != IDENTITY_MATRIX:
        raise NotInvolution(f"{m} is not an orientation-reversing involution")
    return _kernel_direction(m, 1), _kernel_direction(m, -1)


def _kernel_direction(m: Matrix, eig: int) -> Vector:
    (a, b), (c, d) = m
    rows = ((a - eig, b), (c, d - eig))
    for p, q in rows:
        if p or q:
            return primitive((q, -p))
    raise AssertionError("scalar matrix cannot have det -1")


# --- Smith normal form -------------------------------------------------------

def smith_normal_form(a) -> tuple[Matrix, Matrix, Matrix]:
    """Return ``(U, D, V)`` with ``U @ a @ V == D``, ``U, V`` unimodular and
    ``D = diag(d1, d2)``, ``d1 | d2``, ``d1, d2 >= 0`` (zeros last)."""
    A = [list(r) for r in _as_matrix(a)]
    U = [[1, 0], [0, 1]]
    V = [[1, 0], [0, 1]]

    def swap_rows(i, j):
        A[i], A[j] = A[j], A[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for R in (A, V):
            for r in R:
                r[i], r[j] = r[j], r[i]

    def add_row(src, dst, k):
        for R in (A, U):
            R[dst] = [x + k * y for x, y in zip(R[dst], R[src])]

    def add_col(src, dst, k):
        for R in (A, V):
            for r in R:
                r[dst] += k * r[src]

    for t in range(2):
        while True:
            nonzero = [(abs(A[i][j]), i, j) for i in range(t, 2) for j in range(t, 2) if A[i][j]]
            if not nonzero:
                break
            _, i, j = min(nonzero)
            swap_rows(t, i)
            swap_cols(t, j)
            clean = True
            for i in range(t + 1, 2):
                add_row(t, i, -(A[i][t] // A[t][t]))
                clean = clean and A[i][t] == 0
            for j in range(t + 1, 2):
                add_col(t, j, -(A[t][j] // A[t][t]))
                clean = clean and A[t][j] == 0
            if not clean:
                continue
            bad = [i for i in range(t + 1, 2) for j in range(t + 1, 2) if A[i][j] % A[t][t]]
            if not bad:
                break
            add_row(bad[0], t, 1)
        if A[t][t] < 0:
            A[t] = [-x for x in A[t]]
            U[t] = [-x for x in U[t]]
    return _as_matrix(U), _as_matrix(A), _as_matrix(V)


# --- fixed sets and isotopy ---------------------------------------------------

class FixedCircle(NamedTuple):
    direction: Vector
    base_point: Point


class FixedSetReport(NamedTuple):
    component_count: int
    components: tuple[FixedCircle, ...]


def canonical_base_point(direction: Vector, x) -> Point:
    """Representative point of the line ``x + R*direction``: the multiple of
    the canonical frame complement at the line's offset, reduced mod 1."""
    s = mod1(pairing(direction, x))
    b = frame_complement(direction)
    return (mod1(s * b[0]), mod1(s * b[1]))


@lru_cache(maxsize=1 << 16)
def fixed_components(c: AffineClass) -> FixedSetReport:
    """Solve ``(M - I) x = -t (mod Z^2)`` through the Smith form of ``M - I``."""
    require_real_structure(c)
    (a, b), (cc, d) = c.matrix
    U, D, V = smith_normal_form(((a - 1, b), (cc, d - 1)))
    d1, d2 = D[0][0], D[1][1]
    assert d1 > 0 and d2 == 0, "M - I has rank one for torus real structures"
    r = mat_vec(U, (-c.translation[0], -c.translation[1]))
    if Fraction(r[1]).denominator != 1:
        return FixedSetReport(0, ())
    direction = primitive((V[0][1], V[1][1]))
    circles = set()
    for k in range(d1):
        y1 = (Fraction(r[0]) + k) / d1
        x = mat_vec(V, (y1, Fraction(0)))
        circles.add(FixedCircle(direction, canonical_base_point(direction, x)))
    comps = tuple(sorted(circles, key=lambda f: f.base_point))
    return FixedSetReport(len(comps), comps)


def component_count(c: AffineClass) -> int:
    return fixed_components(c).component_count


def _image_direction(c: AffineClass) -> Vector:
    """Primitive generator of the image of ``I - M`` (the -1 eigenvector)."""
    return eigenvectors(c.matrix)[1]


def isotopic_structures(c: AffineClass, c2: AffineClass) -> bool:
    """Same matrix, and translations differ by ``(I - M) R^2 + Z^2``."""
    require_real_structure(c)
    require_real_structure(c2)
    if c.matrix != c2.matrix:
        return False
    w = _image_direction(c)
    delta = (c2.translation[0] - c.translation[0], c2.translation[1] - c.translation[1])
    return Fraction(pairing(w, delta)).denominator == 1


def isotopy_translation(c: AffineClass, c2: AffineClass) -> Point:
    """Shortest ``s`` with ``c2 = T_s c T_s^-1`` for the translation ``T_s``.

    The solutions form a coset of ``(1/2) v Z`` (``v`` the -1 eigenvector)
    modulo translations commuting with ``c``; the representative with
    coefficient in ``(-1/4, 1/4]`` is returned.  Raises if not isotopic.
    """
    if not isotopic_structures(c, c2):
        raise ValueError("structures are not isotopic")
    v = _image_direction(c)
    delta = (c2.translation[0] - c.translation[0], c2.translation[1] - c.translation[1])
    # delta = lam * v + mu * b with <v, b> = 1; here mu is an integer
    b = frame_complement(v)
    mu = pairing(v, delta)
    lam = mod1(_coefficient_along(v, b, delta, mu))
    if lam > Fraction(1, 2):
        lam -= 1
    return (lam / 2 * v[0], lam / 2 * v[1])


def _coefficient_along(v, b, delta, mu):
    # delta - mu*b is a multiple of v
    rest = (delta[0] - mu * b[0], delta[1] - mu * b[1])
    return Fraction(rest[0]) / v[0] if v[0] else Fraction(rest[1]) / v[1]


# --- canonical representatives ---------------------------------------------

DIAG = ((1, 0), (0, -1))
SWAP = ((0, 1), (1, 0))

STRUCTURE_REPS: dict[int, AffineClass] = {
    2: AffineClass(DIAG),
    1: AffineClass(SWAP),
    0: AffineClass(DIAG, (Fraction(1, 2), Fraction(0))),
}
STRUCTURE_NAMES = {0: "k0", 1: "k1", 2: "k2"}


def normalize_structure(c: AffineClass) -> tuple[AffineClass, AffineClass]:
    """Return ``(phi, rep)`` with ``det(phi) = +1`` and
    ``conjugate(phi, c) == rep`` exactly, ``rep`` a canonical representative.
    """
    require_real_structure(c)
    u, v = eigenvectors(c.matrix)
    index = pairing(u, v)
    if abs(index) == 1:
        if index < 0:
            v = (-v[0], -v[1])
        p = mat_inv(((u[0], v[0]), (u[1], v[1])))
        lin = AffineClass(p)
        alpha, beta = conjugate(lin, c).translation
        assert alpha in (0, Fraction(1, 2))
        phi = compose(translation((0, -beta / 2)), lin)
    else:
        if index > 0:
            v = (-v[0], -v[1])
        e = ((u[0] + v[0]) // 2, (u[1] + v[1]) // 2)
        me = mat_vec(c.matrix, e)
        p = mat_inv(((e[0], me[0]), (e[1], me[1])))
        lin = AffineClass(p)
        t1, _ = conjugate(lin, c).translation
        phi = compose(translation((-t1, 0)), lin)
    rep = conjugate(phi, c)
    assert phi.det == 1 and rep in STRUCTURE_REPS.values(), rep
    return phi, rep


def structure_class(c: AffineClass) -> int:
    """Number of real components (0, 1 or 2), via the canonical form."""
    _, rep = normalize_structure(c)
    return next(k for k, r in STRUCTURE_REPS.items() if r == rep)
