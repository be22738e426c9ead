"""JSON file formats for algebras, representations, towers and tower derivations.

Rationals are written as strings (``"3"``, ``"-1/2"``); integers are also
accepted on input, floats never are.  Every schema problem is reported as an
:class:`InputError` naming the offending field, e.g. ``brackets[1][2][0][1]``.

Algebra::

    {"dim": 3, "basis": ["e", "h", "f"],
     "brackets": [[0, 1, [[0, "-2"]]], [0, 2, [[1, "1"]]], [1, 2, [[2, "-2"]]]]}

Only ``[e_i, e_j]`` with ``i < j`` is listed, as ``(k, coefficient)`` pairs.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Optional

from .errors import DimensionMismatch, InputError
from .exactla import QMatrix, Subspace, format_rational, to_rational
from .liecore import LieAlgebra, validate_algebra
from .tower import Tower, TowerDerivation, validate_tower
from .weights import Representation

__all__ = [
    "KINDS",
    "rational_to_json",
    "vector_to_json",
    "matrix_to_json",
    "subspace_to_json",
    "algebra_to_json",
    "representation_to_json",
    "tower_to_json",
    "derivation_to_json",
    "algebra_from_json",
    "representation_from_json",
    "tower_from_json",
    "derivation_from_json",
    "parse_input",
    "to_text",
    "dump",
]

KINDS = ("algebra", "representation", "tower", "derivation")


# -- writing -------------------------------------------------------------------------------


def rational_to_json(q) -> str:
    return format_rational(to_rational(q))


def vector_to_json(v) -> list:
    return [rational_to_json(a) for a in v]


def matrix_to_json(M: QMatrix) -> list:
    return [vector_to_json(r) for r in M.rows]


def subspace_to_json(U: Subspace) -> list:
    """Canonical (reduced echelon) basis as rows of rational strings."""
    return [vector_to_json(b) for b in U.basis]


def algebra_to_json(L: LieAlgebra) -> dict:
    return {
        "dim": L.dim,
        "basis": list(L.basis_labels),
        "brackets": [
            [i, j, [[k, rational_to_json(c)] for k, c in terms]] for i, j, terms in L.upper_brackets()
        ],
    }


def representation_to_json(rep: Representation, algebra_ref: Optional[str] = None) -> dict:
    """``algebra_ref`` (a path relative to the written file) replaces the inline algebra object."""
    return {
        "algebra": algebra_ref if algebra_ref is not None else algebra_to_json(rep.algebra),
        "module_dim": rep.module_dim,
        "operators": [matrix_to_json(op) for op in rep.operators],
    }


def tower_to_json(T: Tower) -> dict:
    return {
        "levels": [algebra_to_json(L) for L in T.levels],
        "embeddings": [matrix_to_json(phi) for phi in T.embeddings],
    }


def derivation_to_json(D: TowerDerivation) -> dict:
    return {"per_level": [matrix_to_json(M) for M in D.per_level]}


def to_text(data: dict) -> str:
    """JSON text with one top-level key per line and one row (or entry) of each list per line."""

    def compact(v):
        return json.dumps(v, ensure_ascii=False, separators=(", ", ": "))

    lines = []
    for key, value in data.items():
        head = f"  {json.dumps(key)}: "
        if isinstance(value, list) and value and all(isinstance(v, (list, dict)) for v in value):
            inner = ",\n".join("    " + compact(v) for v in value)
            lines.append(f"{head}[\n{inner}\n  ]")
        else:
            lines.append(head + compact(value))
    return "{\n" + ",\n".join(lines) + "\n}\n"


def dump(obj, path) -> None:
    """Write an algebra, representation, tower or tower derivation as indented JSON."""
    if isinstance(obj, LieAlgebra):
        data = algebra_to_json(obj)
    elif isinstance(obj, Representation):
        data = representation_to_json(obj)
    elif isinstance(obj, Tower):
        data = tower_to_json(obj)
    elif isinstance(obj, TowerDerivation):
        data = derivation_to_json(obj)
    else:
        raise TypeError(f"cannot serialize {type(obj).__name__}")
    Path(path).write_text(to_text(data), encoding="utf-8")


# -- reading -------------------------------------------------------------------------------


def _fail(field: str, msg: str):
    raise InputError(f"{field}: {msg}")


def _obj(data, field: str) -> dict:
    if not isinstance(data, dict):
        _fail(field, f"expected an object, got {type(data).__name__}")
    return data


def _key(data: dict, key: str, field: str):
    if key not in data:
        _fail(field, f"missing key {key!r}")
    return data[key]


def _list(data, field: str) -> list:
    if not isinstance(data, list):
        _fail(field, f"expected a list, got {type(data).__name__}")
    return data


def _int(data, field: str) -> int:
    if isinstance(data, bool) or not isinstance(data, int):
        _fail(field, f"expected an integer, got {data!r}")
    return data


def _rational(data, field: str):
    if not isinstance(data, (str, int)) or isinstance(data, bool):
        _fail(field, f"expected a rational string, got {data!r}")
    try:
        return to_rational(data)
    except (ValueError, TypeError) as exc:
        _fail(field, str(exc))


def _matrix(data, field: str, shape=None) -> QMatrix:
    rows = _list(data, field)
    parsed = []
    for i, row in enumerate(rows):
        row = _list(row, f"{field}[{i}]")
        parsed.append([_rational(a, f"{field}[{i}][{j}]") for j, a in enumerate(row)])
    ncols = shape[1] if shape is not None else (len(parsed[0]) if parsed else 0)
    for i, row in enumerate(parsed):
        if len(row) != ncols:
            _fail(f"{field}[{i}]", f"row has {len(row)} entries, expected {ncols}")
    if shape is not None and len(parsed) != shape[0]:
        _fail(field, f"{len(parsed)} rows, expected {shape[0]}")
    return QMatrix._trusted(parsed, ncols)


def algebra_from_json(data, field: str = "algebra") -> LieAlgebra:
    data = _obj(data, field)
    dim = _int(_key(data, "dim", field), f"{field}.dim")
    if dim < 0:
        _fail(f"{field}.dim", "dimension must be nonnegative")
    labels = None
    if "basis" in data:
        labels = _list(data["basis"], f"{field}.basis")
        for i, name in enumerate(labels):
            if not isinstance(name, str):
                _fail(f"{field}.basis[{i}]", f"expected a label string, got {name!r}")
        if len(labels) != dim:
            _fail(f"{field}.basis", f"{len(labels)} labels for dimension {dim}")
        if len(set(labels)) != dim:
            _fail(f"{field}.basis", "labels must be distinct")
    entries = _list(data.get("brackets", []), f"{field}.brackets")
    seen = set()
    brackets = []
    for n, entry in enumerate(entries):
        where = f"{field}.brackets[{n}]"
        entry = _list(entry, where)
        if len(entry) != 3:
            _fail(where, "expected [i, j, [[k, coefficient], ...]]")
        i = _int(entry[0], f"{where}[0]")
        j = _int(entry[1], f"{where}[1]")
        if not 0 <= i < j < dim:
            _fail(where, f"need 0 <= i < j < {dim}, got i={i}, j={j}")
        if (i, j) in seen:
            _fail(where, f"bracket [{i}, {j}] listed twice")
        seen.add((i, j))
        terms = []
        for t, term in enumerate(_list(entry[2], f"{where}[2]")):
            tw = f"{where}[2][{t}]"
            term = _list(term, tw)
            if len(term) != 2:
                _fail(tw, "expected [k, coefficient]")
            k = _int(term[0], f"{tw}[0]")
            if not 0 <= k < dim:
                _fail(f"{tw}[0]", f"basis index {k} out of range")
            terms.append((k, _rational(term[1], f"{tw}[1]")))
        brackets.append((i, j, terms))
    return LieAlgebra.from_brackets(dim, brackets, labels)


def _load_json(path: Path):
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror or exc}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: line {exc.lineno}, column {exc.colno}: {exc.msg}") from None


def representation_from_json(data, field: str = "representation", base_dir: Optional[Path] = None) -> Representation:
    """The ``algebra`` entry is an algebra object or a path relative to ``base_dir``."""
    data = _obj(data, field)
    ref = _key(data, "algebra", field)
    if isinstance(ref, str):
        path = Path(ref)
        if not path.is_absolute() and base_dir is not None:
            path = base_dir / path
        L = algebra_from_json(_load_json(path), f"{field}.algebra ({ref})")
    else:
        L = algebra_from_json(ref, f"{field}.algebra")
    m = _int(_key(data, "module_dim", field), f"{field}.module_dim")
    ops = _list(_key(data, "operators", field), f"{field}.operators")
    if len(ops) != L.dim:
        _fail(f"{field}.operators", f"{len(ops)} operators for an algebra of dimension {L.dim}")
    mats = [_matrix(op, f"{field}.operators[{i}]", (m, m)) for i, op in enumerate(ops)]
    return Representation(L, mats, m)


def tower_from_json(data, field: str = "tower") -> Tower:
    data = _obj(data, field)
    levels = [
        algebra_from_json(L, f"{field}.levels[{k}]")
        for k, L in enumerate(_list(_key(data, "levels", field), f"{field}.levels"))
    ]
    embs = []
    for k, phi in enumerate(_list(_key(data, "embeddings", field), f"{field}.embeddings")):
        embs.append(_matrix(phi, f"{field}.embeddings[{k}]"))
    return Tower(levels, embs)


def derivation_from_json(data, field: str = "derivation") -> TowerDerivation:
    data = _obj(data, field)
    mats = _list(_key(data, "per_level", field), f"{field}.per_level")
    return TowerDerivation([_matrix(M, f"{field}.per_level[{k}]") for k, M in enumerate(mats)])


class ValidationFailure(InputError):
    """Parsed cleanly but failed the structural checks; ``report`` holds the details."""

    def __init__(self, message, report):
        super().__init__(message)
        self.report = report


def parse_input(path, kind: str, validate: bool = True):
    """Read and (by default) validate a file of the given kind."""
    if kind not in KINDS:
        raise ValueError(f"unknown input kind {kind!r}")
    path = Path(path)
    data = _load_json(path)
    try:
        if kind == "algebra":
            obj = algebra_from_json(data)
        elif kind == "representation":
            obj = representation_from_json(data, base_dir=path.parent)
        elif kind == "tower":
            obj = tower_from_json(data)
        else:
            obj = derivation_from_json(data)
    except InputError as exc:
        raise InputError(f"{path}: {exc}") from None
    except DimensionMismatch as exc:
        raise InputError(f"{path}: {exc}") from None
    if not validate:
        return obj
    if kind == "algebra":
        report = validate_algebra(obj)
        if not report:
            raise ValidationFailure(f"{path}: not a Lie algebra ({report.summary()})", report)
    elif kind == "representation":
        algebra_report = validate_algebra(obj.algebra)
        if not algebra_report:
            raise ValidationFailure(
                f"{path}: algebra is not a Lie algebra ({algebra_report.summary()})", algebra_report
            )
        bad = obj.homomorphism_failures()
        if bad:
            i, j = bad[0]
            labels = obj.algebra.basis_labels
            raise ValidationFailure(
                f"{path}: operators break the bracket [{labels[i]}, {labels[j]}]"
                + (f" and {len(bad) - 1} more" if len(bad) > 1 else ""),
                bad,
            )
    elif kind == "tower":
        report = validate_tower(obj)
        if not report:
            raise ValidationFailure(f"{path}: invalid tower ({report.summary()})", report)
    return obj
