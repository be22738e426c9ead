"""Fitting components of one operator and weight spaces of a nilpotent subalgebra.

Run with ``python demos/weights_and_fitting.py``.
"""

from liestruct import catalog
from liestruct.errors import NotSplit
from liestruct.exactla import QMatrix
from liestruct.weights import adjoint_representation, fitting_decompose, fitting_trace, weight_decomposition


def fmt(U):
    return [[str(a) for a in b] for b in U.basis]


if __name__ == "__main__":
    A = QMatrix([[0, 1, 0], [0, 0, 0], [0, 0, 3]])
    split = fitting_decompose(A)
    print("A =", [[str(a) for a in r] for r in A.rows])
    print("  null component:", fmt(split.null_component))
    print("  one component: ", fmt(split.one_component))
    print("  trace on the one component:", fitting_trace(A))
    print()

    sl2 = catalog.sl2()
    H = sl2.span([sl2.element(h=1)])
    print("adjoint sl2 relative to span{h} (rows act on the right, so ad h = diag(-2, 0, 2))")
    for w, S in weight_decomposition(adjoint_representation(sl2), H):
        print(f"  h -> {w.values[0]}: {fmt(S)}")
    nat = catalog.sl2_natural_rep()
    print("natural sl2 module")
    for w, S in weight_decomposition(nat, H):
        print(f"  h -> {w.values[0]}: {fmt(S)}")
    print()

    so3 = catalog.so3()
    try:
        weight_decomposition(adjoint_representation(so3), so3.span([so3.element(x=1)]))
    except NotSplit as exc:
        print("so3 relative to span{x}:", exc)
