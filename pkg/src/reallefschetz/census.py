"""Exhaustive search for chains that close up over the sphere.

The search walks chains from each canonical start structure.  After every
step the new structure is replaced by an isotopic one with a canonical
translation, and the right view of the vanishing cycle is carried along by
the same translation; this keeps all translations in ``(1/2) Z^2`` and lets
transitions be memoized per structure.  A witness chain with exact chain
relations is rebuilt from the accumulated translations for every result.
"""
from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, NamedTuple, Optional

from .affine import (
    STRUCTURE_REPS,
    AffineClass,
    component_count,
    compose,
    eigenvectors,
    isotopic_structures,
    isotopy_translation,
    translation,
)
from .chains import (
    ConcreteChain,
    DecoratedChain,
    _from_word,
    junction_bit,
    build_chain,
    closed_invariant,
    cyclic_canonical,
    junction_word,
)
from .codes import CodeClass, code_class, new_code
from .curves import (
    CurveClass,
    InvariantCurveClass,
    apply_map_to_curve,
    equivariant_class,
    invariant_curve_classes,
    monodromy_twist,
)
from .errors import SearchLimitExceeded

__all__ = ["CensusEntry", "enumerate_closed_chains", "census_entries", "to_jsonl"]


class CensusEntry(NamedTuple):
    """A canonical closed invariant with a concrete chain realizing it
    (``closed_invariant(witness, flip)`` rotates to ``invariant``)."""

    invariant: DecoratedChain
    witness: ConcreteChain
    flip: bool


class _Step(NamedTuple):
    curve: CurveClass            # the cycle, in the current state's frame
    left: InvariantCurveClass    # its class under the current state
    cls: int                     # code class id
    right: InvariantCurveClass   # its class under the next state
    nxt: AffineClass             # next state (normalized)
    shift: tuple                 # translation taking the exact image to nxt
    k_next: int                  # real components of nxt


def normalize_translation(c: AffineClass) -> AffineClass:
    """The isotopic structure with translation ``0`` or ``u/2`` (``u`` the
    +1 eigenvector), whichever comes first."""
    u, _ = eigenvectors(c.matrix)
    for t in ((0, 0), (Fraction(u[0], 2), Fraction(u[1], 2))):
        cand = AffineClass(c.matrix, t)
        try:
            if isotopic_structures(c, cand):
                return cand
        except ValueError:
            continue
    raise AssertionError(f"no canonical translation for {c!r}")


class _Engine:
    def __init__(self):
        self.memo: dict[AffineClass, tuple[_Step, ...]] = {}

    def steps(self, c: AffineClass) -> tuple[_Step, ...]:
        got = self.memo.get(c)
        if got is not None:
            return got
        out = []
        for inv in invariant_curve_classes(c):
            k = inv.curve
            exact = compose(monodromy_twist(c, k), c)
            nxt = normalize_translation(exact)
            shift = (0, 0) if nxt == exact else isotopy_translation(exact, nxt)
            right = equivariant_class(nxt, apply_map_to_curve(translation(shift), k))
            cls = int(code_class(new_code(c, k)))
            out.append(_Step(k, inv, cls, right, nxt, shift, component_count(nxt)))
        got = tuple(out)
        self.memo[c] = got
        return got

    def count(self, c: AffineClass) -> int:
        return component_count(c)


@dataclass
class _Search:
    n: int
    classes: Optional[frozenset]
    limit: Optional[int]
    engine: _Engine
    nodes: int = 0

    def run(self, rep: AffineClass, prefix: tuple[int, ...] = ()):
        """Yield ``(word, path)`` for each closed chain from ``rep`` whose
        first branch choices match ``prefix``."""
        yield from self._dfs(rep, rep, component_count(rep), [], [], None, prefix)

    def _dfs(self, rep, state, k, word, path, prev_right, prefix):
        self.nodes += 1
        if self.limit is not None and self.nodes > self.limit:
            raise _Budget()
        depth = len(word)
        if depth == self.n:
            if state == rep:
                yield from self._close(rep, word, path, prev_right)
            return
        for b, st in enumerate(self.engine.steps(state)):
            if depth < len(prefix) and b != prefix[depth]:
                continue
            if depth == 0 and self.classes is not None and st.cls not in self.classes:
                continue
            if depth > 0:
                bit = junction_bit(k, prev_right, st.left)
                word[-1] = (word[-1][0], -1 if bit is None else bit)
            word.append((st.cls, -1))
            path.append(b)
            yield from self._dfs(rep, st.nxt, st.k_next, word, path, st.right, prefix)
            word.pop()
            path.pop()

    def _close(self, rep, word, path, prev_right):
        first = self.engine.steps(rep)[path[0]].left
        bit = junction_bit(self.engine.count(rep), prev_right, first)
        if bit is None:
            yield tuple(word[:-1]) + ((word[-1][0], -1),), tuple(path)
        else:
            for b in (0, 1):
                yield tuple(word[:-1]) + ((word[-1][0], b),), tuple(path)


class _Budget(Exception):
    pass


def _rotation_min(word):
    return min(word[k:] + word[:k] for k in range(len(word)))


_ENGINE = _Engine()  # pure cache of structure -> steps, shared by jobs in a process


def _search_subtree(args):
    n, classes, limit, start, prefix = args
    search = _Search(n, classes, limit, _ENGINE)
    found: dict[tuple, tuple] = {}
    exhausted = True
    try:
        for word, path in search.run(STRUCTURE_REPS[start], prefix):
            key = _rotation_min(word)
            if key not in found:
                found[key] = (start, path, word)
    except _Budget:
        exhausted = False
    return found, exhausted, search.nodes


def _witness(n: int, start: int, path: tuple[int, ...], word) -> CensusEntry:
    """Replay a search path as an exact chain and pick the matching flip."""
    engine = _Engine()
    state = STRUCTURE_REPS[start]
    shift = (Fraction(0), Fraction(0))
    cycles = []
    for b in path:
        st = engine.steps(state)[b]
        back = translation((-shift[0], -shift[1]))
        cycles.append(apply_map_to_curve(back, st.curve))
        shift = (shift[0] + st.shift[0], shift[1] + st.shift[1])
        state = st.nxt
    chain = build_chain(STRUCTURE_REPS[start], cycles)
    target = _from_word(_rotation_min(word))
    inv = closed_invariant(chain)
    if cyclic_canonical(inv) == target:
        return CensusEntry(target, chain, False)
    if inv.closure_bit is not None:
        other = DecoratedChain(inv.classes, inv.bits, True, inv.closure_bit ^ 1)
        if cyclic_canonical(other) == target:
            return CensusEntry(target, chain, True)
    raise AssertionError("witness replay disagrees with the search")


def _jobs(n, classes, limit):
    # one job per first branch, whatever the worker count, so that ``limit``
    # means the same thing in serial and parallel runs
    jobs = []
    for start in (2, 1, 0):
        width = len(_ENGINE.steps(STRUCTURE_REPS[start]))
        jobs.extend((n, classes, limit, start, (b,)) for b in range(width))
    return jobs


def census_entries(n: int, start_classes: Optional[Iterable[int]] = None,
                   limit: Optional[int] = None, workers: int = 1) -> list[CensusEntry]:
    """Closed chains of length ``n``, one entry per cyclic decorated
    invariant, sorted by the canonical junction word.

    ``start_classes`` keeps only chains containing a code of one of the given
    class ids.  ``limit`` caps the number of search nodes per subtree;
    exceeding it raises :class:`SearchLimitExceeded` with the partial
    (non-exhaustive) results attached.  The output does not depend on
    ``workers``.
    """
    if n < 1:
        raise ValueError("chains have at least one vanishing cycle")
    classes = None if start_classes is None else frozenset(int(CodeClass(c)) for c in start_classes)
    jobs = _jobs(n, classes, limit)
    if workers <= 1:
        results = [_search_subtree(j) for j in jobs]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_search_subtree, jobs))
    merged: dict[tuple, tuple] = {}
    exhausted = True
    for found, done, _ in results:
        exhausted &= done
        for key, val in found.items():
            merged.setdefault(key, val)
    entries = [_witness(n, *merged[key]) for key in sorted(merged)]
    if not exhausted:
        raise SearchLimitExceeded(f"node limit {limit} reached; results are partial", entries)
    return entries


def enumerate_closed_chains(n: int, start_classes: Optional[Iterable[int]] = None,
                            limit: Optional[int] = None, workers: int = 1) -> list[DecoratedChain]:
    return [e.invariant for e in census_entries(n, start_classes, limit, workers)]


def to_jsonl(chains: Iterable[DecoratedChain]) -> str:
    from .serialize import decorated_to_json

    lines = [json.dumps(decorated_to_json(d), sort_keys=True, separators=(",", ":"))
             for d in chains]
    return "".join(line + "\n" for line in lines)
