"""Real Lefschetz chains over the disk and their decorated invariants.

A chain is a start structure ``c_1`` and vanishing cycles ``a_1..a_n`` with
``c_{i+1} = m_i o c_i`` where ``m_i`` is the local monodromy of the code
``(c_i, a_i)`` (see :func:`~reallefschetz.curves.monodromy_twist`).  Stored
structures only need to satisfy this up to isotopy; when they differ from the
exact product, curves are carried across by the shortest isotopy translation.

Junction ``j`` (``1 <= j < n``) sits between ``a_j`` and ``a_{j+1}`` on the
fiber with structure ``c_{j+1}``.  It is ambiguous when that fiber has no real
component, or has two and both cycles are real circles on it; there the two
cycles are either equal or twins, recorded as bit 0 or 1.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Optional, Sequence

from .affine import (
    IDENTITY,
    AffineClass,
    component_count,
    compose,
    conjugate,
    is_real_structure,
    isotopic_structures,
    isotopy_translation,
    translation,
)
from .codes import CodeClass, code_class, new_code
from .curves import (
    Action,
    CurveClass,
    InvariantCurveClass,
    apply_map_to_curve,
    curve_action,
    equivariant_class,
    is_invariant,
    monodromy_twist,
    twin_swap,
)
from .errors import IllegalMove, InvariantViolation, RealLefschetzError

__all__ = [
    "ConcreteChain", "DecoratedChain", "ValidationReport", "ClosureReason",
    "ClosureReport", "build_chain", "validate_chain", "ambiguous_junctions",
    "decorated_invariant", "chains_isomorphic", "total_monodromy",
    "sphere_closure", "closed_invariant", "rotate", "cyclic_canonical",
    "apply_twin_move", "flip_twin", "conjugate_chain", "junction_word",
]


@dataclass(frozen=True)
class ConcreteChain:
    """``structures`` holds ``c_1 .. c_{n+1}``, ``cycles`` holds ``a_1 .. a_n``."""

    structures: tuple[AffineClass, ...]
    cycles: tuple[CurveClass, ...]

    def __post_init__(self):
        object.__setattr__(self, "structures", tuple(self.structures))
        object.__setattr__(self, "cycles", tuple(self.cycles))
        if not self.cycles:
            raise RealLefschetzError("a chain needs at least one vanishing cycle")
        if len(self.structures) != len(self.cycles) + 1:
            raise RealLefschetzError("need exactly one more structure than cycles")

    @property
    def initial_structure(self) -> AffineClass:
        return self.structures[0]

    def __len__(self):
        return len(self.cycles)


@dataclass(frozen=True)
class DecoratedChain:
    """Code class ids plus twin bits; ``bits`` is a sorted tuple of
    ``(junction, bit)`` pairs.  ``closed`` marks invariants of sphere
    closures, whose ``closure_bit`` (``None`` if the infinity junction is not
    ambiguous) decorates the junction between ``a_n`` and ``a_1``."""

    classes: tuple[CodeClass, ...]
    bits: tuple[tuple[int, int], ...] = ()
    closed: bool = False
    closure_bit: Optional[int] = None

    def __post_init__(self):
        object.__setattr__(self, "classes", tuple(CodeClass(c) for c in self.classes))
        bits = self.bits.items() if isinstance(self.bits, dict) else self.bits
        object.__setattr__(self, "bits", tuple(sorted((int(j), int(b)) for j, b in bits)))
        if not self.closed and self.closure_bit is not None:
            raise ValueError("closure_bit only makes sense for closed chains")

    @property
    def bit_map(self) -> dict[int, int]:
        return dict(self.bits)

    def __len__(self):
        return len(self.classes)


class ValidationReport(NamedTuple):
    ok: bool
    diagnostics: tuple[str, ...]

    def __bool__(self):
        return self.ok


class ClosureReason(enum.Enum):
    OK = "ok"
    MONODROMY_NOT_IDENTITY = "monodromy-not-identity"
    END_STRUCTURES_NOT_CONJUGATE = "end-structures-not-conjugate"


class ClosureReport(NamedTuple):
    closable: bool
    reason: ClosureReason
    extension_count: Optional[int] = None


# --- construction and validation ------------------------------------------

def build_chain(c1: AffineClass, cycles: Iterable) -> ConcreteChain:
    """Derive ``c_2 .. c_{n+1}`` exactly, checking each ``a_i`` against ``c_i``."""
    structures = [c1]
    curves = []
    for i, k in enumerate(cycles, start=1):
        k = k if isinstance(k, CurveClass) else CurveClass(*k)
        c = structures[-1]
        if not is_real_structure(c):
            raise InvariantViolation(f"structure {i} is not a real structure", index=i)
        if not is_invariant(c, k):
            raise InvariantViolation(f"cycle {i} {k!r} is not invariant under c_{i}", index=i)
        structures.append(compose(monodromy_twist(c, k), c))
        curves.append(k)
    return ConcreteChain(tuple(structures), tuple(curves))


def validate_chain(chain: ConcreteChain) -> ValidationReport:
    problems = []
    for i, (c, k) in enumerate(zip(chain.structures, chain.cycles), start=1):
        if not is_real_structure(c):
            problems.append(f"c_{i} is not a real structure")
            break
        if not is_invariant(c, k):
            problems.append(f"a_{i} is not invariant under c_{i}")
            break
        nxt = chain.structures[i]
        if not is_real_structure(nxt):
            problems.append(f"c_{i + 1} is not a real structure")
            break
        if not isotopic_structures(compose(monodromy_twist(c, k), c), nxt):
            problems.append(f"c_{i + 1} is not isotopic to the monodromy image of c_{i}")
    return ValidationReport(not problems, tuple(problems))


def _require_valid(chain: ConcreteChain) -> None:
    report = validate_chain(chain)
    if not report:
        raise InvariantViolation("; ".join(report.diagnostics))


def _transport(src: AffineClass, dst: AffineClass) -> AffineClass:
    """Translation conjugating ``src`` onto the isotopic structure ``dst``."""
    if src == dst:
        return IDENTITY
    return translation(isotopy_translation(src, dst))


def right_class(chain: ConcreteChain, i: int) -> InvariantCurveClass:
    """Equivariant class of ``a_i`` on the fiber to its right (structure
    ``c_{i+1}`` as stored), 1-based."""
    c, k = chain.structures[i - 1], chain.cycles[i - 1]
    exact = compose(monodromy_twist(c, k), c)
    stored = chain.structures[i]
    return equivariant_class(stored, apply_map_to_curve(_transport(exact, stored), k))


def left_class(chain: ConcreteChain, i: int) -> InvariantCurveClass:
    return equivariant_class(chain.structures[i - 1], chain.cycles[i - 1])


def _junction_bit(c: AffineClass, left: InvariantCurveClass,
                  right: InvariantCurveClass) -> Optional[int]:
    """0/1 at an ambiguous junction on structure ``c``, else ``None``."""
    return junction_bit(component_count(c), left, right)


def junction_bit(k: int, left: InvariantCurveClass,
                 right: InvariantCurveClass) -> Optional[int]:
    """Same, given the number ``k`` of real components of the fiber."""
    if k == 1:
        return None
    if k == 2 and not (left.action is Action.FIXED and right.action is Action.FIXED):
        return None
    return 0 if left == right else 1


def ambiguous_junctions(chain: ConcreteChain) -> list[int]:
    return [j for j, _ in _bits(chain)]


def _bits(chain: ConcreteChain) -> list[tuple[int, int]]:
    out = []
    for j in range(1, len(chain)):
        bit = _junction_bit(chain.structures[j], right_class(chain, j), left_class(chain, j + 1))
        if bit is not None:
            out.append((j, bit))
    return out


def decorated_invariant(chain: ConcreteChain) -> DecoratedChain:
    _require_valid(chain)
    classes = tuple(code_class(new_code(c, k))
                    for c, k in zip(chain.structures, chain.cycles))
    return DecoratedChain(classes, tuple(_bits(chain)))


def chains_isomorphic(x: ConcreteChain, y: ConcreteChain) -> bool:
    return decorated_invariant(x) == decorated_invariant(y)


# --- moves -------------------------------------------------------------------

def conjugate_chain(phi: AffineClass, chain: ConcreteChain, start: int = 0) -> ConcreteChain:
    """Conjugate every structure from index ``start`` (0-based) on, and every
    cycle from the same index on, by ``phi``."""
    structures = chain.structures[:start] + tuple(
        conjugate(phi, c) for c in chain.structures[start:])
    cycles = chain.cycles[:start] + tuple(
        apply_map_to_curve(phi, k) for k in chain.cycles[start:])
    return ConcreteChain(structures, cycles)


def apply_twin_move(chain: ConcreteChain, i: int) -> ConcreteChain:
    """Half-period rotation along a reflection cycle ``a_i`` applied to
    everything right of it.  It commutes with ``c_i`` and ``c_{i+1}``, so the
    result is again a chain with the same decorated invariant."""
    if not 1 <= i <= len(chain):
        raise IllegalMove(f"no code at index {i}")
    c, k = chain.structures[i - 1], chain.cycles[i - 1]
    if curve_action(c, k) is not Action.REFLECTION:
        raise IllegalMove(f"code {i} does not act on its cycle as a reflection")
    a = k.vector
    rot = translation((a[0] / 2, a[1] / 2))
    # positions after i: c_{i+1}.. and a_{i+1}..
    return conjugate_chain(rot, chain, start=i)


def flip_twin(chain: ConcreteChain, j: int) -> ConcreteChain:
    """Swap twins across junction ``j``: conjugate ``a_{j+1}, c_{j+2}, ...``
    by the twin swap of ``c_{j+1}``."""
    if not 1 <= j < len(chain):
        raise IllegalMove(f"no junction {j}")
    try:
        swap = twin_swap(chain.structures[j])
    except ValueError as err:
        raise IllegalMove(str(err)) from None
    return conjugate_chain(swap, chain, start=j)


# --- closure -----------------------------------------------------------------

def total_monodromy(chain: ConcreteChain) -> AffineClass:
    """Product of the local monodromies, last one outermost."""
    total = IDENTITY
    for c, k in zip(chain.structures, chain.cycles):
        total = compose(monodromy_twist(c, k), total)
    return total


def _infinity_bit(chain: ConcreteChain) -> Optional[int]:
    first, last = chain.structures[0], chain.structures[-1]
    tail = right_class(chain, len(chain))
    moved = equivariant_class(first, apply_map_to_curve(_transport(last, first), tail.curve))
    return _junction_bit(first, moved, left_class(chain, 1))


def sphere_closure(chain: ConcreteChain) -> ClosureReport:
    _require_valid(chain)
    if total_monodromy(chain).matrix != IDENTITY.matrix:
        return ClosureReport(False, ClosureReason.MONODROMY_NOT_IDENTITY)
    first, last = chain.structures[0], chain.structures[-1]
    if not isotopic_structures(last, first):
        return ClosureReport(False, ClosureReason.END_STRUCTURES_NOT_CONJUGATE)
    count = 1 if _infinity_bit(chain) is None else 2
    return ClosureReport(True, ClosureReason.OK, count)


def closed_invariant(chain: ConcreteChain, flip: bool = False) -> DecoratedChain:
    """Decorated invariant of a sphere closure.  When the closure is not
    unique, ``flip`` selects the extension with the opposite bit at infinity."""
    report = sphere_closure(chain)
    if not report.closable:
        raise RealLefschetzError(f"chain does not close: {report.reason.value}")
    d = decorated_invariant(chain)
    bit = _infinity_bit(chain)
    if bit is not None and flip:
        bit ^= 1
    return DecoratedChain(d.classes, d.bits, True, bit)


def junction_word(d: DecoratedChain) -> tuple[tuple[int, int], ...]:
    """``(class id, bit or -1)`` per position; the last junction is the one at
    infinity."""
    if not d.closed:
        raise ValueError("cyclic operations need a closed decorated chain")
    bits = d.bit_map
    n = len(d)
    word = []
    for i, cls in enumerate(d.classes, start=1):
        b = d.closure_bit if i == n else bits.get(i)
        word.append((int(cls), -1 if b is None else b))
    return tuple(word)


def _from_word(word: Sequence[tuple[int, int]]) -> DecoratedChain:
    n = len(word)
    bits = tuple((i, b) for i, (_, b) in enumerate(word[:-1], start=1) if b >= 0)
    last = word[-1][1]
    return DecoratedChain(tuple(c for c, _ in word), bits, True,
                          None if last < 0 else last)


def rotate(d: DecoratedChain, k: int) -> DecoratedChain:
    """Start the cyclic sequence at position ``k + 1``."""
    word = junction_word(d)
    k %= len(word)
    return _from_word(word[k:] + word[:k])


def cyclic_canonical(d: DecoratedChain) -> DecoratedChain:
    word = junction_word(d)
    best = min(word[k:] + word[:k] for k in range(len(word)))
    return _from_word(best)
