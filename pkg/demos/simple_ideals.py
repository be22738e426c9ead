"""Splitting semisimple algebras into simple ideals, in a scrambled basis.

Run with ``python demos/simple_ideals.py``.
"""

import random

from liestruct import catalog
from liestruct.liecore import change_basis, direct_sum
from liestruct.structure import decompose_semisimple


def report(name, L, seed=0):
    d = decompose_semisimple(L, seed=seed)
    print(f"{name}: {len(d.ideals)} simple ideals of dimensions {[I.dim for I in d.ideals]}")
    for I in d.ideals:
        print("   ", [[str(a) for a in b] for b in I.basis])


if __name__ == "__main__":
    L = direct_sum(direct_sum(catalog.sl2(), catalog.so3()), catalog.sl2())
    report("sl2 + so3 + sl2", L)
    P = catalog.random_unimodular(L.dim, random.Random(3))
    report("same algebra, random integral basis", change_basis(L, P))
    # sl2 over Q(i) is simple over Q but its centroid is the field Q(i)
    report("sl2 over Q(i), as a 6-dimensional algebra over Q", catalog.sl2_gaussian())
