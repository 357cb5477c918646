"""JSON encodings of the domain objects (plain dicts/lists, ready for json)."""
from __future__ import annotations

from fractions import Fraction
from typing import Any

from .affine import AffineClass
from .chains import ConcreteChain, DecoratedChain, build_chain
from .codes import CodeClass, RealCode, new_code
from .curves import Action, CurveClass, InvariantCurveClass
from .genus import Kind, SymbolicStructureClass


class FormatError(ValueError):
    """Input JSON does not have the expected shape."""


def fraction_to_json(x: Fraction) -> str:
    return str(Fraction(x))


def fraction_from_json(s) -> Fraction:
    if isinstance(s, bool) or not isinstance(s, (str, int)):
        raise FormatError(f"expected a fraction string, got {s!r}")
    try:
        return Fraction(s)
    except (ValueError, ZeroDivisionError) as err:
        raise FormatError(f"bad fraction {s!r}") from err


def _int(x) -> int:
    if isinstance(x, bool) or not isinstance(x, int):
        raise FormatError(f"expected an integer, got {x!r}")
    return x


def _field(obj, key):
    if not isinstance(obj, dict) or key not in obj:
        raise FormatError(f"missing field {key!r}")
    return obj[key]


def affine_to_json(f: AffineClass) -> dict:
    return {"m": [list(row) for row in f.matrix],
            "t": [fraction_to_json(x) for x in f.translation]}


def affine_from_json(obj) -> AffineClass:
    m, t = _field(obj, "m"), obj.get("t", ["0", "0"])
    try:
        rows = [[_int(x) for x in row] for row in m]
        if len(rows) != 2 or any(len(r) != 2 for r in rows) or len(t) != 2:
            raise FormatError("matrix must be 2x2 and translation a pair")
        return AffineClass((tuple(rows[0]), tuple(rows[1])),
                           (fraction_from_json(t[0]), fraction_from_json(t[1])))
    except TypeError as err:
        raise FormatError(str(err)) from err
    except ValueError as err:
        if isinstance(err, FormatError):
            raise
        raise FormatError(str(err)) from err


def curve_to_json(k: CurveClass) -> dict:
    return {"v": list(k.vector), "s": fraction_to_json(k.offset)}


def curve_from_json(obj) -> CurveClass:
    v = _field(obj, "v")
    if not isinstance(v, list) or len(v) != 2:
        raise FormatError("class vector must be a pair")
    return CurveClass((_int(v[0]), _int(v[1])), fraction_from_json(obj.get("s", "0")))


def invariant_class_to_json(inv: InvariantCurveClass) -> dict:
    out = curve_to_json(inv.curve)
    out["action"] = inv.action.value
    if inv.twin_index is not None:
        out["twin"] = inv.twin_index
    return out


def invariant_class_from_json(obj) -> InvariantCurveClass:
    twin = obj.get("twin")
    return InvariantCurveClass(curve_from_json(obj), Action(_field(obj, "action")),
                               None if twin is None else _int(twin))


def code_to_json(code: RealCode) -> dict:
    return {"c": affine_to_json(code.structure), "a": curve_to_json(code.curve)}


def code_from_json(obj) -> RealCode:
    return new_code(affine_from_json(_field(obj, "c")), curve_from_json(_field(obj, "a")))


def chain_to_json(chain: ConcreteChain) -> dict:
    return {"c1": affine_to_json(chain.initial_structure),
            "cycles": [curve_to_json(k) for k in chain.cycles]}


def chain_from_json(obj) -> ConcreteChain:
    """Rebuild a chain file.  An optional ``"structures"`` list replaces the
    derived structures (for chains that hold only up to isotopy)."""
    c1 = affine_from_json(_field(obj, "c1"))
    cycles = _field(obj, "cycles")
    if not isinstance(cycles, list):
        raise FormatError("cycles must be a list")
    curves = [curve_from_json(k) for k in cycles]
    if "structures" in obj:
        structures = [affine_from_json(s) for s in obj["structures"]]
        return ConcreteChain(tuple(structures), tuple(curves))
    return build_chain(c1, curves)


def decorated_to_json(d: DecoratedChain) -> dict:
    out: dict[str, Any] = {
        "classes": [CodeClass(c).label for c in d.classes],
        "bits": {str(j): b for j, b in d.bits},
    }
    if d.closed:
        out["closure_bit"] = d.closure_bit
    return out


def decorated_from_json(obj) -> DecoratedChain:
    classes = tuple(CodeClass.from_label(x) for x in _field(obj, "classes"))
    bits = tuple((int(j), _int(b)) for j, b in obj.get("bits", {}).items())
    closed = "closure_bit" in obj
    return DecoratedChain(classes, bits, closed, obj.get("closure_bit") if closed else None)


def genus_class_to_json(s: SymbolicStructureClass) -> dict:
    return {"g": s.genus, "kind": s.kind.value, "k": s.components}


def genus_class_from_json(obj) -> SymbolicStructureClass:
    return SymbolicStructureClass(_int(_field(obj, "g")), Kind(_field(obj, "kind")),
                                  _int(_field(obj, "k")))
