"""Command-line entry point.  Every command prints one JSON object
``{"status", "payload", "diagnostics"}`` (or JSON lines for ``census --jsonl``).

Exit codes: 0 ok, 1 usage or parse error, 2 domain error, 3 search limit.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Optional, Sequence

from .affine import STRUCTURE_NAMES, fixed_components, normalize_structure, structure_class
from .census import enumerate_closed_chains
from .chains import (
    ClosureReason,
    closed_invariant,
    cyclic_canonical,
    decorated_invariant,
    sphere_closure,
    validate_chain,
)
from .codes import code_class, enumerate_code_classes, fiber_profile, local_model
from .errors import InvariantViolation, RealLefschetzError, SearchLimitExceeded
from .genus import count_code_classes_nonsep, harnack_bound, structure_classes
from .serialize import (
    FormatError,
    affine_from_json,
    affine_to_json,
    chain_from_json,
    code_to_json,
    decorated_to_json,
    genus_class_to_json,
    invariant_class_to_json,
)

EXIT_OK, EXIT_USAGE, EXIT_DOMAIN, EXIT_LIMIT = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _result(payload: Any = None, diagnostics: Sequence[str] = (), ok: bool = True) -> dict:
    return {"status": "ok" if ok else "error", "payload": payload,
            "diagnostics": list(diagnostics)}


def _load(path: Optional[str]):
    if path is None:
        raise UsageError("--input is required")
    try:
        if path == "-":
            return json.load(sys.stdin)
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as err:
        raise UsageError(f"cannot read {path}: {err.strerror}") from None
    except json.JSONDecodeError as err:
        raise FormatError(f"invalid JSON in {path}: {err.msg}") from None


def cmd_classify(args) -> tuple[dict, int]:
    c = affine_from_json(_load(args.input))
    report = fixed_components(c)
    phi, rep = normalize_structure(c)
    payload = {
        "components": report.component_count,
        "class": STRUCTURE_NAMES[structure_class(c)],
        "canonical": affine_to_json(rep),
        "conjugator": affine_to_json(phi),
        "fixed_circles": [{"direction": list(f.direction),
                           "base_point": [str(x) for x in f.base_point]}
                          for f in report.components],
    }
    return _result(payload), EXIT_OK


def cmd_codes(args) -> tuple[dict, int]:
    entries = []
    for code in enumerate_code_classes():
        cid = code_class(code)
        entries.append({
            "id": int(cid),
            "name": cid.label,
            "code": code_to_json(code),
            "cycle": invariant_class_to_json(code.cycle),
            "local_model": local_model(code).value,
            "fiber_profile": list(fiber_profile(code, mirror=args.mirror)),
        })
    return _result(entries), EXIT_OK


def cmd_validate(args) -> tuple[dict, int]:
    chain = chain_from_json(_load(args.input))
    report = validate_chain(chain)
    if not report:
        return _result(None, report.diagnostics, ok=False), EXIT_DOMAIN
    return _result({"n": len(chain),
                    "structures": [affine_to_json(c) for c in chain.structures]}), EXIT_OK


def cmd_decorate(args) -> tuple[dict, int]:
    chain = chain_from_json(_load(args.input))
    return _result(decorated_to_json(decorated_invariant(chain))), EXIT_OK


def cmd_close(args) -> tuple[dict, int]:
    chain = chain_from_json(_load(args.input))
    report = sphere_closure(chain)
    payload: dict[str, Any] = {"closable": report.closable, "reason": report.reason.value,
                               "extension_count": report.extension_count}
    if report.reason is ClosureReason.OK:
        flips = (False, True) if report.extension_count == 2 else (False,)
        payload["extensions"] = [decorated_to_json(cyclic_canonical(closed_invariant(chain, f)))
                                 for f in flips]
    return _result(payload), EXIT_OK


def cmd_census(args) -> tuple[dict, int]:
    if args.n is None:
        raise UsageError("--n is required")
    try:
        found = enumerate_closed_chains(args.n, limit=args.limit, workers=args.workers)
        exhaustive, code, diags = True, EXIT_OK, []
    except SearchLimitExceeded as err:
        found = [e.invariant for e in err.partial]
        exhaustive, code, diags = False, EXIT_LIMIT, [str(err)]
    chains = [decorated_to_json(d) for d in found]
    payload = {"n": args.n, "exhaustive": exhaustive, "count": len(chains), "chains": chains}
    return _result(payload, diags, ok=exhaustive), code


def cmd_counts(args) -> tuple[dict, int]:
    if args.g is None:
        raise UsageError("--g is required")
    classes = structure_classes(args.g)
    payload = {
        "g": args.g,
        "structures": len(classes),
        "separating": sum(c.kind.value == "sep" for c in classes),
        "nonseparating": sum(c.kind.value == "nonsep" for c in classes),
        "harnack_bound": harnack_bound(args.g),
        "code_classes_nonsep": count_code_classes_nonsep(args.g),
        "classes": [genus_class_to_json(c) for c in classes],
    }
    return _result(payload), EXIT_OK


COMMANDS = {
    "classify": cmd_classify,
    "codes": cmd_codes,
    "validate": cmd_validate,
    "decorate": cmd_decorate,
    "close": cmd_close,
    "census": cmd_census,
    "counts": cmd_counts,
}


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="reallefschetz", description=__doc__.splitlines()[0])
    parser.add_argument("--pretty", action="store_true", help="indent JSON output")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    helps = {
        "classify": "classify a real structure",
        "codes": "list the six real-code classes",
        "validate": "check a chain file",
        "decorate": "decorated invariant of a chain file",
        "close": "sphere closure of a chain file",
        "census": "closed chains of a given length",
        "counts": "genus-g class counts",
    }
    for name, text in helps.items():
        p = sub.add_parser(name, help=text)
        p.add_argument("--pretty", action="store_true", default=argparse.SUPPRESS)
        if name in ("classify", "validate", "decorate", "close"):
            p.add_argument("--input", metavar="FILE", help="JSON file, or - for stdin")
        if name == "codes":
            p.add_argument("--mirror", action="store_true",
                           help="read each code's structure as the right-hand one")
        if name == "census":
            p.add_argument("--n", type=int)
            p.add_argument("--limit", type=int, help="node budget per search subtree")
            p.add_argument("--workers", type=int, default=1)
            p.add_argument("--jsonl", action="store_true",
                           help="print one chain per line instead of a result object")
        if name == "counts":
            p.add_argument("--g", type=int)
    return parser


def _dump(obj, pretty: bool) -> str:
    if pretty:
        return json.dumps(obj, sort_keys=True, indent=2)
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def run(argv: Optional[Sequence[str]] = None) -> tuple[str, int]:
    """Execute a command line; return ``(stdout text, exit code)``."""
    pretty = False
    try:
        args = build_parser().parse_args(argv)
        pretty = args.pretty
        if args.command is None:
            raise UsageError("a subcommand is required")
        result, code = COMMANDS[args.command](args)
        if args.command == "census" and args.jsonl and code == EXIT_OK:
            lines = [_dump(d, False) for d in result["payload"]["chains"]]
            return "".join(line + "\n" for line in lines), code
    except (UsageError, FormatError) as err:
        result, code = _result(None, [str(err)], ok=False), EXIT_USAGE
    except InvariantViolation as err:
        msg = str(err) if err.index is None else f"index {err.index}: {err}"
        result, code = _result(None, [msg], ok=False), EXIT_DOMAIN
    except (RealLefschetzError, ValueError) as err:
        result, code = _result(None, [str(err)], ok=False), EXIT_DOMAIN
    return _dump(result, pretty) + "\n", code


def main(argv: Optional[Sequence[str]] = None) -> int:
    text, code = run(argv)
    sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
