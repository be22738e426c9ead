"""Bundled JSON fixtures and the facts known about them from their construction.

``facts.json`` maps each algebra fixture to properties that follow from how
it was built (e.g. ``sl2 + r2`` has the ``r2`` summand as its radical), not
from running this library.  :func:`write_fixtures` regenerates every file
from :mod:`liestruct.catalog`.
"""

from __future__ import annotations

import json
from pathlib import Path

from .. import catalog
from ..fileformats import dump, representation_to_json, to_text
from ..liecore import direct_sum

__all__ = ["FIXTURE_DIR", "fixture_path", "fixture_names", "facts", "write_fixtures"]

FIXTURE_DIR = Path(__file__).resolve().parent

# (solvable, nilpotent, radical_dim, killing_det) per algebra fixture
_FACTS = {
    "sl2": (False, False, 0, "-128"),
    "so3": (False, False, 0, "-8"),
    "r2": (True, False, 2, "0"),
    "h3": (True, True, 3, "0"),
    "n3": (True, True, 3, "0"),
    "gl2": (False, False, 1, "0"),
    "abelian3": (True, True, 3, "0"),
    "sl2_plus_r2": (False, False, 2, "0"),
    "sl2_so3_sl2": (False, False, 0, "-131072"),
}


def fixture_path(name: str) -> Path:
    """Path of a bundled fixture; ``name`` may omit the ``.json`` suffix."""
    if not name.endswith(".json"):
        name += ".json"
    path = FIXTURE_DIR / name
    if not path.is_file():
        raise FileNotFoundError(f"no bundled fixture named {name!r}")
    return path


def fixture_names() -> list:
    return sorted(p.stem for p in FIXTURE_DIR.glob("*.json") if p.stem != "facts")


def facts() -> dict:
    return json.loads((FIXTURE_DIR / "facts.json").read_text(encoding="utf-8"))


def _algebras():
    sl2, so3, r2 = catalog.sl2(), catalog.so3(), catalog.r2()
    return {
        "sl2": sl2,
        "so3": so3,
        "r2": r2,
        "h3": catalog.h3(),
        "n3": catalog.n3(),
        "gl2": catalog.gl2(),
        "abelian3": catalog.abelian(3),
        "sl2_plus_r2": direct_sum(sl2, r2),
        "sl2_so3_sl2": direct_sum(direct_sum(sl2, so3), sl2),
    }


def write_fixtures(directory=FIXTURE_DIR) -> None:
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    for name, L in _algebras().items():
        dump(L, directory / f"{name}.json")
    for name, rep, ref in [
        ("sl2_natural", catalog.sl2_natural_rep(), "sl2.json"),
        ("n3_natural", catalog.n3_natural_rep(), "n3.json"),
    ]:
        data = representation_to_json(rep, algebra_ref=ref)
        (directory / f"{name}.json").write_text(to_text(data), encoding="utf-8")
    tower = catalog.sl2_sum_tower(5)
    dump(tower, directory / "sl2_sum_tower.json")
    dump(catalog.summand_derivation(tower), directory / "summand_derivation.json")
    dump(catalog.fresh_derivation(tower), directory / "fresh_derivation.json")
    dump(catalog.zero_derivation(tower), directory / "zero_derivation.json")
    dump(catalog.strictly_upper_tower(3, 4), directory / "strictly_upper_tower.json")
    table = {
        name: {
            "solvable": s,
            "nilpotent": n,
            "semisimple": r == 0,
            "radical_dim": r,
            "killing_det": det,
        }
        for name, (s, n, r, det) in _FACTS.items()
    }
    (directory / "facts.json").write_text(json.dumps(table, indent=2) + "\n", encoding="utf-8")
