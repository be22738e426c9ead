"""Killing forms, Cartan's criterion and the radical on a few small algebras.

Run with ``python demos/killing_and_cartan.py``.
"""

from liestruct import catalog
from liestruct.forms import cartan_solvable, killing_form, radical, semisimple_check
from liestruct.liecore import direct_sum


def show(name, L):
    K = killing_form(L)
    verdict = cartan_solvable(L)
    R = radical(L)
    print(f"{name} (basis {', '.join(L.basis_labels)})")
    print(f"  Killing Gram matrix: {[[str(a) for a in row] for row in K.gram.rows]}")
    print(f"  det = {semisimple_check(L).killing_det}")
    if verdict.solvable:
        print("  solvable: the Killing form vanishes on [L, L]")
    else:
        w = ", ".join(str(a) for a in verdict.witness)
        print(f"  not solvable: x = ({w}) in [L, L] has K(x, x) = {verdict.witness_value}")
    print(f"  radical has dimension {R.dim}: {[[str(a) for a in b] for b in R.basis]}")
    print()


if __name__ == "__main__":
    show("sl2", catalog.sl2())
    show("r2", catalog.r2())
    show("h3", catalog.h3())
    # the radical of a sum with a solvable summand is exactly that summand
    show("sl2 + r2", direct_sum(catalog.sl2(), catalog.r2()))
