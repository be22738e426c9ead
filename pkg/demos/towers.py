"""A finite tower sl2 < sl2 + sl2 < ... and two derivations on it.

Every verdict here speaks only for the levels supplied.
Run with ``python demos/towers.py``.
"""

from liestruct import catalog
from liestruct.tower import tower_decompose, tower_derivation_inner, tower_verdicts, validate_tower

if __name__ == "__main__":
    T = catalog.sl2_sum_tower(5)
    print("valid:", validate_tower(T).valid)
    v = tower_verdicts(T)
    print("limit verdict:", v.limit, f"({v.note})")
    d = tower_decompose(T)
    print("simple ideals per level:", [len(level.ideals) for level in d.per_level])
    print("matching along the embeddings:", d.matching)
    print("coherent:", d.coherent)

    inner = tower_derivation_inner(T, catalog.summand_derivation(T))
    print("ad(h) of the first summand:", inner.verdict, "witness", [str(a) for a in inner.witness], "at level", inner.witness_level)
    fresh = tower_derivation_inner(T, catalog.fresh_derivation(T))
    print("sum of all h's, one more summand per level:", fresh.verdict)
