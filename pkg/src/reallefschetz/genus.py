"""Class counts for real structures and real codes on a closed genus-g surface.

Only the torus has a concrete model in this package; for higher genus the
real structures are listed symbolically by separating type and number of
real components, and real-code classes are counted by closed formula.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional, Sequence


class Kind(enum.Enum):
    SEPARATING = "sep"
    NON_SEPARATING = "nonsep"


@dataclass(frozen=True)
class SymbolicStructureClass:
    genus: int
    kind: Kind
    components: int

    def __post_init__(self):
        g, k = self.genus, self.components
        if g < 1:
            raise ValueError("genus must be at least 1")
        if not 0 <= k <= harnack_bound(g):
            raise ValueError(f"{k} components exceed the bound {harnack_bound(g)}")
        if self.kind is Kind.SEPARATING and (k < 1 or (g + 1 - k) % 2):
            raise ValueError("a separating structure needs k >= 1 and k = g + 1 (mod 2)")
        if self.kind is Kind.NON_SEPARATING and k > g:
            raise ValueError("a non-separating structure has at most g components")

    def __lt__(self, other):
        return (self.genus, self.kind.value, self.components) < (
            other.genus, other.kind.value, other.components)


def harnack_bound(g: int) -> int:
    if g < 0:
        raise ValueError("genus must be non-negative")
    return g + 1


def structure_classes(g: int) -> list[SymbolicStructureClass]:
    """All real structures on the genus-g surface up to equivalence."""
    if g < 1:
        raise ValueError("genus must be at least 1")
    sep = [SymbolicStructureClass(g, Kind.SEPARATING, k)
           for k in range(g + 1, 0, -2)]
    nonsep = [SymbolicStructureClass(g, Kind.NON_SEPARATING, k) for k in range(g + 1)]
    return sorted(sep) + sorted(nonsep)


def count_code_classes_nonsep(g: int) -> int:
    """Conjugacy classes of real codes with non-separating vanishing cycle."""
    if g < 1:
        raise ValueError("genus must be at least 1")
    if g == 1:
        return 6
    return 8 * g - 3 if g % 2 else 8 * g - 4


def crosscheck_genus1(enumerated: Optional[Sequence] = None) -> bool:
    """Compare the closed-form torus count with the concrete enumeration.

    ``enumerated`` overrides the concrete list (used to test the check itself).
    """
    if enumerated is None:
        from .codes import enumerate_code_classes

        enumerated = enumerate_code_classes()
    return count_code_classes_nonsep(1) == len(enumerated)
