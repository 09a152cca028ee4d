"""Command-line front end: ``quasialg {table,check,phi,double,repcheck,regular}``.

Exit codes: 0 when the command ran (a false predicate is still a success),
1 for usage errors, 2 for invalid input data.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
import time
from fractions import Fraction
from pathlib import Path
from typing import Callable

from . import quasialgebra as qa
from .cayley_dickson import DoublingData, double
from .cochains import Cochain1, CochainError, cochain_from_json, cochain_to_json, scalar_to_json, to_scalar
from .group_core import AbelianGroup, element_key, element_label, parse_group
from .quasialgebra import AlgebraElement, QuasiAlgebra
from .representations import left_regular, module_from_json, module_to_json, representation_violation
from . import standard_algebras as std

EXIT_OK, EXIT_USAGE, EXIT_DATA = 0, 1, 2
DEFAULT_SEED = qa.DEFAULT_SEED


class InputError(Exception):
    """Unresolvable algebra spec or malformed input file."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


# -- algebra specs ----------------------------------------------------------

BUILTINS = ("complex", "quaternion", "octonion", "clifford-neg-N", "clifford-pos-N",
            "cayley-N", "all-distinct", "hadamard", "trivial")


def _load_json(path: str | Path):
    p = Path(path)
    if not p.is_file():
        raise InputError(f"no such file: {p}")
    try:
        return json.loads(p.read_text())
    except json.JSONDecodeError as exc:
        raise InputError(f"{p}: invalid JSON ({exc})") from None


def resolve_spec(spec, group: list | None = None, matrix: str | None = None) -> QuasiAlgebra:
    """Turn a built-in name, a cochain file path, or an inline cochain object into an algebra."""
    try:
        if isinstance(spec, dict):
            return QuasiAlgebra(cochain_from_json(spec), spec.get("name"))
        G = parse_group(group) if group is not None else None
        simple = {"complex": std.complexes, "quaternion": std.quaternions, "octonion": std.octonions}
        if spec in simple:
            return simple[spec]()
        mt = re.fullmatch(r"clifford-(neg|pos)-(\d+)", spec)
        if mt:
            return std.clifford(int(mt.group(2)), "negative" if mt.group(1) == "neg" else "positive")
        mt = re.fullmatch(r"cayley-(\d+)", spec)
        if mt:
            return std.cayley(int(mt.group(1)))
        if spec == "all-distinct":
            return std.all_distinct_cochain(G or AbelianGroup.elementary(2))
        if spec == "trivial":
            return std.trivial_algebra(G or AbelianGroup())
        if spec == "hadamard":
            if matrix is None:
                raise InputError("hadamard needs --matrix FILE")
            doc = _load_json(matrix)
            rows = doc["matrix"] if isinstance(doc, dict) else doc
            if isinstance(doc, dict) and "group" in doc:
                G = parse_group(doc["group"])
            if G is None:
                raise InputError("hadamard needs a group (--group or a \"group\" key in the matrix file)")
            return std.hadamard_algebra(G, rows)
        doc = _load_json(spec)
        return QuasiAlgebra(cochain_from_json(doc), doc.get("name") or Path(spec).stem)
    except (CochainError, ValueError, KeyError, TypeError) as exc:
        raise InputError(f"{spec}: {exc}") from None


# -- reports ----------------------------------------------------------------

def _jsonify(obj):
    if isinstance(obj, AlgebraElement):
        return {element_key(x): scalar_to_json(c) for x, c in obj.coeffs.items()}
    if isinstance(obj, Fraction):
        return scalar_to_json(obj)
    if isinstance(obj, (tuple, list)):
        return [_jsonify(o) for o in obj]
    if isinstance(obj, dict):
        return {str(k): _jsonify(v) for k, v in obj.items()}
    return obj


def _from_witness(witness) -> dict:
    return {"value": witness is None, "witness": _jsonify(witness)}


def _chosen_involution(A: QuasiAlgebra) -> Cochain1 | None:
    """Natural s(x) = F(x,x) when strong, else the first strong diagonal involution."""
    s = qa.natural_s(A)
    if qa.is_diagonal_involution(A, s) and qa.is_strong_involution(A, s):
        return s
    if A.dim > qa.MAX_INVOLUTION_SEARCH:
        return None
    for inv in qa.find_diagonal_involutions(A):
        if qa.is_strong_involution(A, inv.s):
            return inv.s
    return None


def _battery(A: QuasiAlgebra, seed: int, pairs: int) -> dict[str, Callable[[], dict]]:
    searchable = A.dim <= qa.MAX_INVOLUTION_SEARCH
    skipped = {"value": None, "witness": f"skipped: |G| > {qa.MAX_INVOLUTION_SEARCH}"}

    def alternative():
        return _from_witness(qa.alternativity_violation(A))

    def laws():
        return _from_witness(qa.alternative_laws_violation(A, qa.random_pairs(A, pairs, seed)))

    def involution():
        if not searchable:
            return skipped
        found = qa.find_diagonal_involutions(A)
        return {"value": bool(found), "witness": None}

    def strong():
        if not searchable:
            return skipped
        rep = qa.strong_involution_characterization(A)
        return {"value": rep["lhs"], "witness": None}

    def strong_criterion():
        if not searchable:
            return skipped
        rep = qa.strong_involution_characterization(A)
        return {"value": rep["agree"], "witness": None if rep["agree"] else [rep["lhs"], rep["rhs"]]}

    def composition():
        s = _chosen_involution(A)
        if s is None:
            return {"value": False, "witness": "no strong diagonal involution"}
        return _from_witness(qa.composition_violation(A, s))

    def euclidean():
        if not A.group.is_elementary_2():
            return {"value": False, "witness": "group is not (Z2)^n"}
        return _from_witness(qa.euclidean_composition_violation(A))

    def norm_mult():
        s = _chosen_involution(A)
        if s is None:
            return {"value": False, "witness": "no strong diagonal involution"}
        return _from_witness(qa.norm_multiplicativity_violation(A, s, qa.random_pairs(A, pairs, seed)))

    return {
        "quasiassociative": lambda: _from_witness(qa.quasiassociativity_violation(A)),
        "quasicommutative": lambda: _from_witness(qa.quasicommutativity_violation(A)),
        "associative": lambda: _from_witness(qa.associativity_violation(A)),
        "commutative": lambda: _from_witness(qa.commutativity_violation(A)),
        "altercommutative": lambda: _from_witness(qa.altercommutativity_violation(A)),
        "alternative": alternative,
        "alternative-consequences": lambda: {"value": qa.alternative_phi_consequences(A), "witness": None},
        "alternative-laws": laws,
        "diagonal-involution": involution,
        "strong-involution": strong,
        "strong-involution-criterion": strong_criterion,
        "composition": composition,
        "euclidean-composition": euclidean,
        "norm-multiplicative": norm_mult,
        "graded-simple": lambda: _from_witness(qa.proper_graded_ideal(A)),
        "representation": lambda: _from_witness(representation_violation(left_regular(A))),
    }


def property_report(A: QuasiAlgebra, battery: list[str] | None = None, seed: int = DEFAULT_SEED,
                    pairs: int = 1000, timing: bool = False) -> dict:
    """Run the named predicates (all by default) and collect values and witnesses."""
    checks = _battery(A, seed, pairs)
    names = list(checks) if not battery or battery == ["all"] else battery
    unknown = [n for n in names if n not in checks]
    if unknown:
        raise InputError(f"unknown predicate(s): {', '.join(unknown)}")
    results, times = {}, {}
    for name in dict.fromkeys(names):
        t0 = time.perf_counter()
        results[name] = checks[name]()
        times[name] = round(time.perf_counter() - t0, 6)
    report = {
        "algebra": {"name": A.name, "group": list(A.group.orders), "order": A.dim},
        "seed": seed,
        "predicates": results,
    }
    if timing:
        report["timing"] = times
    return report


PREDICATES = tuple(_battery(std.trivial_algebra(), 0, 0))


# -- rendering --------------------------------------------------------------

def _signed_label(c: Fraction, x) -> str:
    lab = element_label(x)
    if c == 1:
        return lab
    if c == -1:
        return "-" + lab
    return f"{scalar_to_json(c)}*{lab}"


def render_table(A: QuasiAlgebra, fmt: str = "text") -> str:
    els = A.elements()
    if fmt == "json":
        table = [
            [{"sign": scalar_to_json(A.F.table[i][j]), "index": A._mul[i][j]} for j in range(A.dim)]
            for i in range(A.dim)
        ]
        return json.dumps({"dim": A.dim, "elements": [list(x) for x in els], "table": table})
    cells = [[element_label(x) for x in els]]
    for x in els:
        cells.append([_signed_label(*A.basis_product(x, y)) for y in els])
    width = max(len(c) for row in cells for c in row) + 1
    head = " " * width + "|" + "".join(c.rjust(width) for c in cells[0])
    lines = [head, "-" * len(head)]
    for x, row in zip(els, cells[1:]):
        lines.append(element_label(x).rjust(width) + "|" + "".join(c.rjust(width) for c in row))
    return "\n".join(lines)


def render_phi(A: QuasiAlgebra, fmt: str = "text") -> str:
    P, R = A.phi.table, A.R.table
    els = A.elements()
    if fmt == "json":
        return json.dumps({
            "group": list(A.group.orders),
            "elements": [list(x) for x in els],
            "phi": [[[scalar_to_json(v) for v in r] for r in t] for t in P],
            "R": [[scalar_to_json(v) for v in r] for r in R],
        })
    n = A.dim
    lines = ["# phi(x, y, z)"]
    for i in range(n):
        for j in range(n):
            for k in range(n):
                lines.append(f"{element_label(els[i])} {element_label(els[j])} {element_label(els[k])} "
                             f"{scalar_to_json(P[i][j][k])}")
    lines.append("# R(x, y)")
    for i in range(n):
        lines.append(element_label(els[i]) + " " + " ".join(str(scalar_to_json(v)) for v in R[i]))
    return "\n".join(lines)


def _render_report(report: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(report, indent=2)
    a = report["algebra"]
    lines = [f"{a['name']}  |G| = {a['order']}  group {a['group']}  seed {report['seed']}"]
    for name, res in report["predicates"].items():
        val = {True: "true", False: "false", None: "skipped"}[res["value"]]
        extra = f"  witness: {json.dumps(res['witness'])}" if res["witness"] is not None else ""
        lines.append(f"  {name:28s} {val}{extra}")
    return "\n".join(lines)


def _parse_s(text: str, A: QuasiAlgebra) -> Cochain1:
    if text == "natural":
        return qa.natural_s(A)
    text = text.strip()
    vals = json.loads(text) if text.startswith("[") else [v for v in text.split(",") if v.strip()]
    try:
        return Cochain1(A.group, vals)
    except CochainError as exc:
        raise InputError(f"invalid s: {exc}") from None


# -- commands ---------------------------------------------------------------

def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text + "\n")
    else:
        print(text)


def _algebra(args) -> QuasiAlgebra:
    group = json.loads(args.group) if args.group else None
    return resolve_spec(args.spec, group, args.matrix)


def cmd_table(args) -> int:
    _emit(render_table(_algebra(args), args.format), args.out)
    return EXIT_OK


def cmd_check(args) -> int:
    A = _algebra(args)
    battery = None if args.battery == "all" else [b.strip() for b in args.battery.split(",")]
    report = property_report(A, battery, args.seed, args.pairs, args.timing)
    _emit(_render_report(report, args.format), args.out)
    return EXIT_OK


def cmd_phi(args) -> int:
    _emit(render_phi(_algebra(args), args.format), args.out)
    return EXIT_OK


def cmd_double(args) -> int:
    A = _algebra(args)
    s = _parse_s(args.s, A)
    try:
        alpha = to_scalar(args.alpha)
        D, _ = double(DoublingData(A, s, alpha))
    except (CochainError, ValueError) as exc:
        raise InputError(str(exc)) from None
    _emit(json.dumps(cochain_to_json(D.F, name=D.name)), args.out)
    return EXIT_OK


def cmd_regular(args) -> int:
    A = _algebra(args)
    doc = {"algebra": cochain_to_json(A.F, A.name), **module_to_json(left_regular(A))}
    _emit(json.dumps(doc), args.out)
    return EXIT_OK


def cmd_repcheck(args) -> int:
    doc = _load_json(args.module)
    spec = args.algebra if args.algebra else doc.get("algebra")
    if spec is None:
        raise InputError('module file has no "algebra" entry and --algebra was not given')
    A = resolve_spec(spec)
    try:
        M = module_from_json(doc, A)
    except (ValueError, KeyError, TypeError, AttributeError) as exc:
        raise InputError(f"{args.module}: {exc}") from None
    result = _from_witness(representation_violation(M))
    _emit(json.dumps(result) if args.format == "json" else
          ("true" if result["value"] else f"false  witness: {json.dumps(result['witness'])}"), args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="quasialg", description="Twisted group algebras k_F G over the rationals.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def spec_cmd(name, help, func, formats=("text", "json")):
        c = sub.add_parser(name, help=help)
        c.add_argument("spec", help=f"built-in ({', '.join(BUILTINS)}) or cochain JSON path")
        c.add_argument("--group", help="group as a JSON list of orders, for all-distinct/trivial/hadamard")
        c.add_argument("--matrix", help="Hadamard matrix JSON file")
        c.add_argument("--format", choices=formats, default=formats[0])
        c.add_argument("--out", help="write output here instead of stdout")
        c.set_defaults(func=func)
        return c

    spec_cmd("table", "signed multiplication table", cmd_table)
    c = spec_cmd("check", "run the property battery", cmd_check, ("json", "text"))
    c.add_argument("--battery", default="all", help="'all' or comma-separated predicate names")
    c.add_argument("--seed", type=int, default=DEFAULT_SEED)
    c.add_argument("--pairs", type=int, default=1000, help="random element pairs for generic checks")
    c.add_argument("--timing", action="store_true", help="include per-predicate timings")
    spec_cmd("phi", "associator and braiding tables", cmd_phi)
    c = spec_cmd("double", "generalized Cayley-Dickson doubling", cmd_double, ("json",))
    c.add_argument("--s", default="natural", help="'natural' (F(x,x)) or a sign vector like 1,-1,-1,-1")
    c.add_argument("--alpha", default="-1", help="nonzero rational, e.g. -1 or 3/2")
    spec_cmd("regular", "emit the left regular module as a module file", cmd_regular, ("json",))

    c = sub.add_parser("repcheck", help="check the representation law on a module file")
    c.add_argument("module")
    c.add_argument("--algebra", help="algebra spec overriding the file's \"algebra\" entry")
    c.add_argument("--format", choices=("json", "text"), default="json")
    c.add_argument("--out")
    c.set_defaults(func=cmd_repcheck)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"quasialg: {exc}", file=sys.stderr)
        return EXIT_DATA
    except json.JSONDecodeError as exc:
        print(f"quasialg: invalid JSON argument: {exc}", file=sys.stderr)
        return EXIT_DATA


if __name__ == "__main__":
    sys.exit(main())
