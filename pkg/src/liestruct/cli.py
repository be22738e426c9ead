"""Command-line front end.

Every invocation runs one analysis and prints an :class:`AnalysisReport`,
as ``key: value`` text or as JSON (``--format json``).  Exit codes:

    0  definite success (valid, solvable, semisimple, inner, ...)
    1  definite negative verdict (invalid, not solvable, not semisimple, ...)
    2  undecided within the given bounds (Inconclusive, NotSplit, no witness
       within --dim-cap, not inner within the supplied levels)
    3  input errors (unreadable or invalid files, bad flags, failed preconditions)

Element arguments are comma-separated linear combinations of basis labels,
e.g. ``--subalgebra h`` or ``--generators "e+f, 2*h"``.  A file argument
that does not exist but names a bundled fixture (``sl2.json``) uses the
fixture.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import re
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

from . import __version__
from .errors import Inconclusive, InputError, LieStructError, NotSemisimple, NotSplit, NoWitnessWithinCap
from .exactla import Subspace, to_rational
from .fileformats import matrix_to_json, parse_input, rational_to_json, subspace_to_json, vector_to_json
from .fixtures import FIXTURE_DIR
from .forms import cartan_solvable, invariance_violations, killing_form, radical, semisimple_check
from .liecore import LieAlgebra, is_ideal, is_solvable, validate_algebra
from .structure import DEFAULT_TRIAL_BUDGET, a_omega, ad_chain_exponent, condition3_witness, decompose_semisimple
from .tower import tower_decompose, tower_derivation_inner, tower_verdicts, validate_tower
from .weights import adjoint_representation, fitting_decompose, fitting_trace, weight_decomposition

__all__ = ["AnalysisReport", "COMMANDS", "execute", "main", "parse_elements"]

EXIT_OK, EXIT_NEGATIVE, EXIT_UNDECIDED, EXIT_INPUT = 0, 1, 2, 3

COMMANDS = (
    "check",
    "killing",
    "solvable",
    "semisimple",
    "radical",
    "weights",
    "fitting",
    "decompose",
    "condition3",
    "aomega",
    "tower-verdicts",
    "tower-decompose",
    "tower-derivation",
)


@dataclass(frozen=True)
class AnalysisReport:
    """Outcome of one command; ``results`` holds only JSON values, rationals as strings."""

    command: str
    inputs: tuple  # ((path as given, sha256 hex), ...)
    results: dict
    seed: Optional[int] = None

    def to_dict(self) -> dict:
        return {
            "command": self.command,
            "inputs": [{"path": p, "sha256": d} for p, d in self.inputs],
            "seed": self.seed,
            "results": self.results,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, ensure_ascii=False) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "AnalysisReport":
        data = json.loads(text)
        inputs = tuple((item["path"], item["sha256"]) for item in data["inputs"])
        return cls(data["command"], inputs, data["results"], data["seed"])

    def to_text(self) -> str:
        lines = [f"command: {self.command}"]
        for p, d in self.inputs:
            lines.append(f"input: {p} (sha256 {d[:16]})")
        if self.seed is not None:
            lines.append(f"seed: {self.seed}")
        lines.extend(_render(self.results, 0))
        return "\n".join(lines) + "\n"


def _scalar(v) -> str:
    if v is None:
        return "-"
    if isinstance(v, bool):
        return "yes" if v else "no"
    return str(v)


def _is_row(v) -> bool:
    return isinstance(v, list) and all(not isinstance(a, (list, dict)) for a in v)


def _render(value, depth):
    pad = "  " * depth
    out = []
    for key, v in value.items():
        if isinstance(v, dict):
            out.append(f"{pad}{key}:")
            out.extend(_render(v, depth + 1))
        elif isinstance(v, list) and v and not _is_row(v):
            out.append(f"{pad}{key}:")
            for item in v:
                if isinstance(item, dict):
                    first, *rest = _render(item, depth + 2)
                    out.append(f"{pad}  - {first.strip()}")
                    out.extend(rest)
                else:
                    out.append(f"{pad}  [{', '.join(_scalar(a) for a in item)}]" if _is_row(item) else f"{pad}  {item}")
        elif isinstance(v, list):
            out.append(f"{pad}{key}: [{', '.join(_scalar(a) for a in v)}]")
        else:
            out.append(f"{pad}{key}: {_scalar(v)}")
    return out


# -- argument handling ---------------------------------------------------------------------


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


_TERM = re.compile(r"([+-]?)(?:(\d+(?:/\d+)?)\*?)?([A-Za-z_][A-Za-z0-9_']*)")


def parse_elements(L: LieAlgebra, text: str) -> list:
    """``"e+f, 2*h, -1/2*x+y"`` -> coordinate vectors in the basis of ``L``."""
    vectors = []
    for item in text.split(","):
        item = item.replace(" ", "")
        if not item:
            raise InputError(f"empty element in {text!r}")
        v = [to_rational(0)] * L.dim
        pos = 0
        while pos < len(item):
            m = _TERM.match(item, pos)
            if m is None or (pos > 0 and not m.group(1)):
                raise InputError(f"cannot read element {item!r} at position {pos}")
            sign, coeff, label = m.groups()
            if label not in L.basis_labels:
                raise InputError(f"unknown basis label {label!r}; basis is {', '.join(L.basis_labels)}")
            c = to_rational(coeff) if coeff else to_rational(1)
            v[L.basis_labels.index(label)] += -c if sign == "-" else c
            pos = m.end()
        vectors.append(tuple(v))
    return vectors


def _resolve(path: str) -> Path:
    p = Path(path)
    if not p.exists() and p.parent == Path(".") and (FIXTURE_DIR / p.name).is_file():
        return FIXTURE_DIR / p.name
    return p


class _Inputs:
    """Reads files and records their digests in command-line order."""

    def __init__(self):
        self.digests = []

    def load(self, path: str, kind: str, validate: bool = True):
        resolved = _resolve(path)
        try:
            data = resolved.read_bytes()
        except OSError as exc:
            raise InputError(f"{path}: {exc.strerror or exc}") from None
        self.digests.append((path, hashlib.sha256(data).hexdigest()))
        return parse_input(resolved, kind, validate=validate)


def _labelled_pairs(L, pairs):
    return [[L.basis_labels[i] for i in p] for p in pairs]


def _detect_kind(path: Path) -> str:
    try:
        data = json.loads(path.read_text(encoding="utf-8"))
    except (OSError, ValueError):
        return "algebra"  # let the parser produce the precise error
    if isinstance(data, dict):
        if "levels" in data:
            return "tower"
        if "operators" in data:
            return "representation"
        if "per_level" in data:
            return "derivation"
    return "algebra"


def _rep_for(inputs, args, L):
    if args.rep is None:
        return adjoint_representation(L)
    rep = inputs.load(args.rep, "representation")
    if rep.algebra != L:
        raise InputError(f"{args.rep}: representation is for a different algebra than {args.file}")
    return rep


def _subspace_json(U: Subspace) -> dict:
    return {"dim": U.dim, "basis": subspace_to_json(U)}


# -- commands ------------------------------------------------------------------------------


def _cmd_check(args, inputs):
    kind = args.kind or _detect_kind(_resolve(args.file))
    obj = inputs.load(args.file, kind, validate=False)
    if kind == "algebra":
        report = validate_algebra(obj)
        res = {
            "kind": kind,
            "dim": obj.dim,
            "basis": list(obj.basis_labels),
            "valid": report.valid,
            "antisymmetry_failures": _labelled_pairs(obj, report.antisymmetry_failures),
            "jacobi_failures": _labelled_pairs(obj, report.jacobi_failures),
        }
        return (EXIT_OK if report.valid else EXIT_NEGATIVE), res
    if kind == "representation":
        alg = validate_algebra(obj.algebra)
        bad = obj.homomorphism_failures()
        valid = alg.valid and not bad
        res = {
            "kind": kind,
            "algebra_dim": obj.algebra.dim,
            "module_dim": obj.module_dim,
            "valid": valid,
            "algebra_valid": alg.valid,
            "homomorphism_failures": _labelled_pairs(obj.algebra, bad),
        }
        return (EXIT_OK if valid else EXIT_NEGATIVE), res
    if kind == "tower":
        report = validate_tower(obj)
        res = {
            "kind": kind,
            "level_dims": [L.dim for L in obj.levels],
            "valid": report.valid,
            "failures": report.summary() if not report.valid else None,
        }
        return (EXIT_OK if report.valid else EXIT_NEGATIVE), res
    res = {
        "kind": kind,
        "shapes": [[M.nrows, M.ncols] for M in obj.per_level],
        "valid": all(M.nrows == M.ncols for M in obj.per_level),
    }
    return (EXIT_OK if res["valid"] else EXIT_NEGATIVE), res


def _cmd_killing(args, inputs):
    L = inputs.load(args.file, "algebra")
    K = killing_form(L)
    res = {
        "basis": list(L.basis_labels),
        "gram": matrix_to_json(K.gram),
        "determinant": rational_to_json(K.determinant()),
        "invariant": not invariance_violations(K, L),
    }
    return EXIT_OK, res


def _cmd_solvable(args, inputs):
    L = inputs.load(args.file, "algebra")
    rep = None if args.rep is None else _rep_for(inputs, args, L)
    v = cartan_solvable(L, rep)
    res = {
        "verdict": v.verdict,
        "witness": None if v.witness is None else vector_to_json(v.witness),
        "witness_trace_square": None if v.witness_value is None else rational_to_json(v.witness_value),
        "oracle_agreement": v.oracle_agreement,
    }
    if not v.oracle_agreement:
        return EXIT_UNDECIDED, res
    return (EXIT_OK if v.solvable else EXIT_NEGATIVE), res


def _cmd_semisimple(args, inputs):
    L = inputs.load(args.file, "algebra")
    v = semisimple_check(L)
    res = {
        "verdict": "semisimple" if v.semisimple else "not_semisimple",
        "killing_det": rational_to_json(v.killing_det),
    }
    return (EXIT_OK if v.semisimple else EXIT_NEGATIVE), res


def _cmd_radical(args, inputs):
    L = inputs.load(args.file, "algebra")
    R = radical(L)
    res = {
        "radical": _subspace_json(R),
        "solvable": is_solvable(L, R),
        "ideal": is_ideal(L, R),
    }
    return EXIT_OK, res


def _cmd_weights(args, inputs):
    L = inputs.load(args.file, "algebra")
    rep = _rep_for(inputs, args, L)
    H = L.span(parse_elements(L, args.subalgebra))
    decomp = weight_decomposition(rep, H)
    res = {
        "subalgebra": _subspace_json(H),
        "module_dim": rep.module_dim,
        "weights": [
            {"values": vector_to_json(w.values), "dim": S.dim, "basis": subspace_to_json(S)}
            for w, S in decomp
        ],
    }
    return EXIT_OK, res


def _cmd_fitting(args, inputs):
    L = inputs.load(args.file, "algebra")
    rep = _rep_for(inputs, args, L)
    (x,) = parse_elements(L, args.element)
    A = rep.rho(x)
    split = fitting_decompose(A)
    res = {
        "element": vector_to_json(x),
        "operator": matrix_to_json(A),
        "null_component": _subspace_json(split.null_component),
        "one_component": _subspace_json(split.one_component),
        "fitting_trace": rational_to_json(fitting_trace(A)),
        "trace": rational_to_json(A.trace()),
    }
    return EXIT_OK, res


def _cmd_decompose(args, inputs):
    L = inputs.load(args.file, "algebra")
    d = decompose_semisimple(L, args.seed, args.trial_budget)
    res = {
        "trial_budget": d.trial_budget,
        "ideals": [_subspace_json(I) for I in d.ideals],
    }
    return EXIT_OK, res


def _cmd_condition3(args, inputs):
    L = inputs.load(args.file, "algebra")
    gens = parse_elements(L, args.generators)
    w = condition3_witness(L, gens, args.dim_cap)
    res = {
        "generators": [vector_to_json(g) for g in gens],
        "dim_cap": args.dim_cap,
        "subalgebra": _subspace_json(w.subalgebra),
        "exponent": w.exponent,
        "escalated_to_ideal": w.escalated,
    }
    return EXIT_OK, res


def _cmd_aomega(args, inputs):
    L = inputs.load(args.file, "algebra")
    A = L.span(parse_elements(L, args.subalgebra))
    omega = a_omega(L, A)
    res = {
        "subalgebra": _subspace_json(A),
        "exponent": ad_chain_exponent(L, A),
        "a_omega": _subspace_json(omega),
        "ideal": is_ideal(L, omega),
    }
    return EXIT_OK, res


def _cmd_tower_verdicts(args, inputs):
    T = inputs.load(args.file, "tower")
    v = tower_verdicts(T)
    res = {
        "limit": v.limit,
        "violated_level": v.violated_level,
        "note": v.note,
        "radical_monotone": list(v.radical_monotone),
        "levels": [
            {
                "level": lv.level,
                "dim": lv.dim,
                "solvable": lv.solvable,
                "semisimple": lv.semisimple,
                "killing_det": rational_to_json(lv.killing_det),
                "radical_dim": lv.radical.dim,
            }
            for lv in v.levels
        ],
    }
    return (EXIT_UNDECIDED if v.limit == "inconclusive" else EXIT_OK), res


def _cmd_tower_decompose(args, inputs):
    T = inputs.load(args.file, "tower")
    d = tower_decompose(T, args.seed, args.trial_budget)
    res = {
        "coherent": d.coherent,
        "matching": [list(row) for row in d.matching],
        "complement_intersection_dims": list(d.complement_intersections),
        "levels": [
            {"level": k, "ideals": [_subspace_json(I) for I in dec.ideals]}
            for k, dec in enumerate(d.per_level)
        ],
    }
    return (EXIT_OK if d.coherent else EXIT_NEGATIVE), res


def _cmd_tower_derivation(args, inputs):
    T = inputs.load(args.file, "tower")
    D = inputs.load(args.derivation, "derivation")
    v = tower_derivation_inner(T, D)
    res = {
        "verdict": v.verdict,
        "witness": None if v.witness is None else vector_to_json(v.witness),
        "witness_level": v.witness_level,
        "level_witnesses": [vector_to_json(a) for a in v.level_witnesses],
        "note": v.note,
    }
    return (EXIT_OK if v.inner else EXIT_UNDECIDED), res


_HANDLERS = {
    "check": _cmd_check,
    "killing": _cmd_killing,
    "solvable": _cmd_solvable,
    "semisimple": _cmd_semisimple,
    "radical": _cmd_radical,
    "weights": _cmd_weights,
    "fitting": _cmd_fitting,
    "decompose": _cmd_decompose,
    "condition3": _cmd_condition3,
    "aomega": _cmd_aomega,
    "tower-verdicts": _cmd_tower_verdicts,
    "tower-decompose": _cmd_tower_decompose,
    "tower-derivation": _cmd_tower_derivation,
}

_SEEDED = {"decompose", "tower-decompose"}


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--seed", type=int, default=0, help="seed for randomized searches (default 0)")
    common.add_argument(
        "--trial-budget", type=int, default=DEFAULT_TRIAL_BUDGET, help="random trials per search (default 32)"
    )
    common.add_argument("--dim-cap", type=int, default=64, help="largest witness dimension tried (default 64)")

    parser = _Parser(prog="liestruct", description="Exact structure theory of Lie algebras over Q.")
    parser.add_argument("--version", action="version", version=f"liestruct {__version__}")
    sub = parser.add_subparsers(dest="command", metavar="COMMAND", parser_class=_Parser)

    def add(name, help_text, file_help="algebra JSON file"):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.add_argument("file", help=file_help)
        return p

    p = add("check", "validate an algebra, representation, tower or derivation file", "input JSON file")
    p.add_argument("--kind", choices=("algebra", "representation", "tower", "derivation"))
    add("killing", "Killing form Gram matrix and determinant")
    p = add("solvable", "Cartan solvability criterion with a witness")
    p.add_argument("--rep", help="representation file (default: adjoint)")
    add("semisimple", "nondegeneracy of the Killing form")
    add("radical", "solvable radical as the Killing complement of [L, L]")
    p = add("weights", "weight-space decomposition relative to a nilpotent subalgebra")
    p.add_argument("--subalgebra", required=True, help="spanning elements, e.g. 'h'")
    p.add_argument("--rep", help="representation file (default: adjoint)")
    p = add("fitting", "Fitting null and one components of one operator")
    p.add_argument("--element", required=True, help="element whose operator is split, e.g. 'e+h'")
    p.add_argument("--rep", help="representation file (default: adjoint)")
    add("decompose", "split a semisimple algebra into simple ideals")
    p = add("condition3", "finite-dimensional A with L (ad A)^n inside A containing the generators")
    p.add_argument("--generators", required=True)
    p = add("aomega", "stable lower central term of a subalgebra")
    p.add_argument("--subalgebra", required=True, help="spanning elements of A")
    add("tower-verdicts", "per-level radicals and the horizon-limited limit verdict", "tower JSON file")
    add("tower-decompose", "simple ideals per level and their matching", "tower JSON file")
    p = add("tower-derivation", "innerness of a derivation given on every level", "tower JSON file")
    p.add_argument("derivation", help="derivation JSON file")
    return parser


def _exit_for(exc: Exception) -> int:
    if isinstance(exc, NotSemisimple):
        return EXIT_NEGATIVE
    if isinstance(exc, (Inconclusive, NotSplit, NoWitnessWithinCap)):
        return EXIT_UNDECIDED
    return EXIT_INPUT


def _requested_format(argv) -> str:
    """Best-effort ``--format`` lookup for reports about unparsable arguments."""
    for i, a in enumerate(argv):
        if a == "--format=json" or (a == "--format" and argv[i + 1 : i + 2] == ["json"]):
            return "json"
    return "text"


def execute(command: str, argv) -> tuple:
    """Run ``command`` with its argument list; returns ``(exit code, report, format)``."""
    argv = list(argv)
    if command not in _HANDLERS:
        report = AnalysisReport(
            str(command), (), {"status": "input_error", "error": "UsageError", "message": f"unknown command {command!r}"}
        )
        return EXIT_INPUT, report, _requested_format(argv)
    try:
        args = build_parser().parse_args([command] + argv)
        fmt = args.format
        if args.trial_budget < 1 or args.dim_cap < 0:
            raise _UsageError("--trial-budget must be positive and --dim-cap nonnegative")
    except _UsageError as exc:
        fmt = _requested_format(argv)
        report = AnalysisReport(command, (), {"status": "input_error", "error": "UsageError", "message": str(exc)})
        return EXIT_INPUT, report, fmt
    inputs = _Inputs()
    seed = args.seed if command in _SEEDED else None
    try:
        code, results = _HANDLERS[command](args, inputs)
        status = {EXIT_OK: "success", EXIT_NEGATIVE: "negative", EXIT_UNDECIDED: "undecided"}[code]
        results = {"status": status, **results}
    except LieStructError as exc:
        code = _exit_for(exc)
        status = {EXIT_NEGATIVE: "negative", EXIT_UNDECIDED: "undecided", EXIT_INPUT: "input_error"}[code]
        results = {"status": status, "error": type(exc).__name__, "message": str(exc)}
        level = getattr(exc, "level", None)
        if level is not None:
            results["level"] = level
    return code, AnalysisReport(command, tuple(inputs.digests), results, seed), fmt


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    if not argv or argv[0] in ("-h", "--help", "--version"):
        parser = build_parser()
        if not argv:
            parser.print_help()
            return EXIT_INPUT
        try:
            parser.parse_args(argv)
        except SystemExit as exc:
            return int(exc.code or 0)
        return EXIT_OK
    command, rest = argv[0], argv[1:]
    if "-h" in rest or "--help" in rest:
        try:
            build_parser().parse_args(argv)
        except SystemExit as exc:
            return int(exc.code or 0)
    code, report, fmt = execute(command, rest)
    out = report.to_json() if fmt == "json" else report.to_text()
    sys.stdout.write(out)
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
