"""Command-line front end: JSON input, subcommand dispatch, report output.

Subcommands
-----------
``element``       per-generator order, determinant and eigenvalue data
``group``         closure order, catalog label, s, SL-part label
``surface``       full quotient-surface classification report
``fixed-points``  fixed-point sets (per generator, one generator, or common)
``catalog``       ``verify`` | ``realize --label L [--param b1=...]`` | ``dump``

Input documents are JSON objects ``{"ring": {"d": ..., "f": ...},
"generators": [{"linear": [[..]], "translation": [..]?}, ...],
"options": {"cap": ...}?}``.  One document describes one ring; every matrix
entry must be integral in it.  Rationals are written ``"a/b"`` or as ints.

Exit codes: 0 success, 1 parse/input error (ValueError), 2 domain error
(DomainError: exceeded caps, non-unit determinants, infinite order,
unrealizable entries, violated torsion constraints).  Errors are emitted on
stdout as JSON objects with the keys ``error`` and ``detail``, with a
one-line summary on stderr.

JSON output is deterministic: sorted keys, canonical rational strings.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional, Tuple

from . import catalog
from .classifier import surface_type
from .errors import DomainError, NotIntegral
from .fixed_points import common_fixed_set, element_eig_class, fixed_set
from .matrix_group import (
    classify_gl,
    det,
    eigen_classify,
    element_order,
    is_scalar,
    mat_to_json,
    trace,
)
from .quad_order import (
    RingSpec,
    elem_to_json,
    is_unit,
    ring_from_json,
    ring_to_json,
    unit_to_root,
)
from .torus import (
    AFFINE_CLOSURE_CAP,
    AffineAut,
    affine_from_json,
    affine_order,
    close_affine,
)


class _Parser(argparse.ArgumentParser):
    """argparse parser whose usage errors become exit-code-1 parse errors."""

    def error(self, message: str):
        raise ValueError(message)


# ---------------------------------------------------------------------------
# input documents
# ---------------------------------------------------------------------------

def load_document(path: str) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise ValueError(f"cannot read input file {path}: {exc}") from exc
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"invalid JSON in {path}: {exc}") from exc
    if not isinstance(doc, dict):
        raise ValueError("input document must be a JSON object")
    return doc


def parse_document(doc: dict) -> Tuple[RingSpec, List[AffineAut], dict]:
    """Validate an input document into (ring, generators, options)."""
    if "ring" not in doc:
        raise ValueError("input document: missing 'ring'")
    ring = ring_from_json(doc["ring"])
    raw = doc.get("generators")
    if not isinstance(raw, list) or not raw:
        raise ValueError("input document: 'generators' must be a non-empty "
                         "list")
    gens = []
    for idx, g in enumerate(raw):
        try:
            aut = affine_from_json(ring, g)
        except (ValueError, NotIntegral) as exc:
            # a document that does not define integral matrices over its
            # declared ring failed to parse, whatever layer noticed first
            raise ValueError(f"generator {idx}: {exc}") from exc
        gens.append(aut)
    options = doc.get("options", {})
    if not isinstance(options, dict):
        raise ValueError("input document: 'options' must be an object")
    return ring, gens, options


def _load(args) -> Tuple[RingSpec, List[AffineAut], int]:
    ring, gens, options = parse_document(load_document(args.input))
    cap = args.cap if args.cap is not None else options.get("cap")
    if cap is None:
        cap = AFFINE_CLOSURE_CAP
    if not isinstance(cap, int) or cap < 1:
        raise ValueError("cap must be a positive integer")
    return ring, gens, cap


# ---------------------------------------------------------------------------
# subcommand handlers (each returns the JSON payload)
# ---------------------------------------------------------------------------

def _cmd_element(args) -> dict:
    ring, gens, _ = _load(args)
    rows = []
    for idx, g in enumerate(gens):
        lin = g.linear
        d = det(lin)
        eig = eigen_classify(lin)
        rows.append({
            "index": idx,
            "order": element_order(lin),
            "affine_order": affine_order(g),
            "det": elem_to_json(d),
            "det_order": unit_to_root(d).order if is_unit(d) else None,
            "trace": elem_to_json(trace(lin)),
            "eigenvalues": eig.to_json() if eig is not None else None,
            "scalar": is_scalar(lin),
            "eig_class": element_eig_class(g).value,
            "translation": g.translation.to_json(),
        })
    return {"ring": ring_to_json(ring), "elements": rows}


def _cmd_group(args) -> dict:
    ring, gens, cap = _load(args)
    group = close_affine(gens, cap=cap)
    linear = group.linear_image
    rec = classify_gl(linear)
    return {
        "ring": ring_to_json(ring),
        "order": group.order,
        "translation_order": len(group.translation_subgroup),
        "linear_order": linear.order,
        "label": str(rec.label),
        "all_matches": [str(lab) for lab in rec.all_matches],
        "sl_label": str(rec.sl_label),
        "s": rec.s,
        "abelian": linear.is_abelian,
    }


def _cmd_surface(args) -> dict:
    _, gens, cap = _load(args)
    group = close_affine(gens, cap=cap)
    return surface_type(group).to_json()


def _cmd_fixed_points(args) -> dict:
    ring, gens, cap = _load(args)
    if args.common and args.element is not None:
        raise ValueError("--element and --common are mutually exclusive")
    payload: dict = {"ring": ring_to_json(ring)}
    if args.common:
        group = close_affine(gens, cap=cap)
        payload["common"] = True
        payload["fixed_set"] = common_fixed_set(group.elements).to_json()
        return payload
    if args.element is not None:
        k = args.element
        if not 0 <= k < len(gens):
            raise ValueError(
                f"--element {k} out of range (document has {len(gens)} "
                f"generators)")
        payload["element"] = k
        payload["fixed_set"] = fixed_set(gens[k]).to_json()
        return payload
    payload["elements"] = [
        {"index": idx, "fixed_set": fixed_set(g).to_json()}
        for idx, g in enumerate(gens)
    ]
    return payload


def _cmd_catalog(args) -> dict:
    if args.catalog_command == "verify":
        return catalog.verify_catalog()
    if args.catalog_command == "dump":
        return {"entries": catalog.entries_json(),
                "duplicate_sets": [list(d) for d in catalog.DUPLICATE_SETS],
                "defects": list(catalog.DEFECTS)}
    # realize
    params = _parse_params(args.param or [])
    ring = params.pop("ring", None)
    b1 = params.pop("b1", 1)
    if params:
        raise ValueError(f"unknown realize parameters: "
                         f"{', '.join(sorted(params))}")
    gens = catalog.realize(args.label, b1=b1, ring=ring)
    return {
        "label": str(catalog.get_entry(args.label).label),
        "ring": ring_to_json(gens[0].ring),
        "generators": [mat_to_json(g) for g in gens],
    }


def _parse_params(pairs: List[str]) -> dict:
    out: dict = {}
    for raw in pairs:
        key, sep, value = raw.partition("=")
        if not sep or not key:
            raise ValueError(f"--param expects key=value, got {raw!r}")
        if key == "ring":
            d, _, f = value.partition(",")
            out["ring"] = ring_from_json({"d": int(d), "f": int(f or 1)})
        elif key == "b1":
            out["b1"] = _parse_b1(value)
        else:
            out[key] = value
    return out


def _parse_b1(value: str):
    text = value.strip()
    if "," in text:
        a, _, b = text.partition(",")
        return (int(a), int(b))
    if "/" in text:
        from fractions import Fraction

        return Fraction(text)
    return int(text)


# ---------------------------------------------------------------------------
# rendering
# ---------------------------------------------------------------------------

def _text_lines(value, indent: int = 0):
    pad = "  " * indent
    if isinstance(value, dict):
        for key, item in value.items():
            if isinstance(item, (dict, list)):
                yield f"{pad}{key}:"
                yield from _text_lines(item, indent + 1)
            else:
                yield f"{pad}{key}: {item}"
    elif isinstance(value, list):
        for item in value:
            if isinstance(item, (dict, list)):
                yield f"{pad}-"
                yield from _text_lines(item, indent + 1)
            else:
                yield f"{pad}- {item}"
    else:
        yield f"{pad}{value}"


def render(payload: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(payload, indent=2, sort_keys=True)
    return "\n".join(_text_lines(payload))


def _emit_error(exc: BaseException) -> None:
    """Write the error payload to stdout (the single output stream) and a
    one-line summary to stderr for interactive shells."""
    payload = {"error": type(exc).__name__, "detail": str(exc)}
    print(json.dumps(payload, indent=2, sort_keys=True))
    print(f"{type(exc).__name__}: {exc}", file=sys.stderr)


# ---------------------------------------------------------------------------
# argument parsing and dispatch
# ---------------------------------------------------------------------------

def _add_common(sp, needs_input: bool = True) -> None:
    if needs_input:
        sp.add_argument("--input", required=True, metavar="FILE",
                        help="input document (JSON)")
        sp.add_argument("--cap", type=int, default=None,
                        help="closure size bound (default: document option "
                             "or 10000)")
    sp.add_argument("--format", choices=("json", "text"), default="json",
                    help="output format (default json)")
    sp.add_argument("--quiet", action="store_true",
                    help="suppress normal output (exit code only)")


def build_parser() -> _Parser:
    parser = _Parser(prog="quotsurf",
                     description="finite automorphism groups of E x E and "
                                 "the Kodaira type of their quotients")
    sub = parser.add_subparsers(dest="command", required=True,
                                parser_class=_Parser)

    sp = sub.add_parser("element", help="per-generator order and "
                                        "eigenvalue data")
    _add_common(sp)
    sp.set_defaults(handler=_cmd_element)

    sp = sub.add_parser("group", help="close the group and recognize it")
    _add_common(sp)
    sp.set_defaults(handler=_cmd_group)

    sp = sub.add_parser("surface", help="classify the quotient surface")
    _add_common(sp)
    sp.set_defaults(handler=_cmd_surface)

    sp = sub.add_parser("fixed-points", help="fixed-point sets on the torus")
    _add_common(sp)
    sp.add_argument("--element", type=int, default=None, metavar="K",
                    help="only the K-th generator")
    sp.add_argument("--common", action="store_true",
                    help="common fixed points of the closed group")
    sp.set_defaults(handler=_cmd_fixed_points)

    sp = sub.add_parser("catalog", help="catalog verification and witnesses")
    csub = sp.add_subparsers(dest="catalog_command", required=True,
                             parser_class=_Parser)
    cv = csub.add_parser("verify", help="check every realizable entry")
    _add_common(cv, needs_input=False)
    cv.set_defaults(handler=_cmd_catalog)
    cr = csub.add_parser("realize", help="emit witness generators")
    cr.add_argument("--label", required=True, help="catalog label, e.g. K7 "
                                                   "or HQ8(2)")
    cr.add_argument("--param", action="append", metavar="KEY=VALUE",
                    help="free parameters (b1=unit, ring=d,f)")
    _add_common(cr, needs_input=False)
    cr.set_defaults(handler=_cmd_catalog)
    cd = csub.add_parser("dump", help="dump the entry table as JSON")
    _add_common(cd, needs_input=False)
    cd.set_defaults(handler=_cmd_catalog)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        payload = args.handler(args)
    except ValueError as exc:
        _emit_error(exc)
        return 1
    except DomainError as exc:
        _emit_error(exc)
        return 2
    if not args.quiet:
        sys.stdout.write(render(payload, args.format) + "\n")
    return 0


if __name__ == "__main__":
    sys.exit(main())
