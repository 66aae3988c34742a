"""Print the interval arrays for the two worked 3x3 examples."""
import numpy as np

from bapsens import (
    assignment_sensitivity,
    build_edge_intervals,
    build_exclusive_set,
    edge_sensitivity,
    lex_compare,
    lexicographic_assignment,
    sensitivity_radius,
)
from bapsens.core import Edge

EX1 = np.array([[0, 10, 0], [100, 1, 5], [0, 5, 0]], dtype=float)
EX2 = np.array([[2, 91, 63], [26, 89, 93], [48, 60, 71]], dtype=float)


def fmt(x, sign):
    if np.isinf(x):
        return f"{sign}inf"
    return f"{sign if sign == '-' else ''}{x:g}"


def show(title, L):
    print(title)
    for i in range(L.shape[0]):
        cells = []
        for j in range(L.shape[1]):
            lo, hi = L.lower[i, j], L.upper[i, j]
            left = "(" if np.isinf(lo) else "["
            right = ")" if np.isinf(hi) else "]"
            cells.append(f"{left}{fmt(lo, '-')}, {fmt(hi, '')}{right}".rjust(14))
        print("  " + " ".join(cells))
    print()


def main():
    r = edge_sensitivity(EX2)
    show(f"Edge intervals, 3x3 example, anchor {r.anchor.one_based()} "
         f"(certified={r.certified})", r.intervals)

    anchor = Edge(1, 1)
    lex = lexicographic_assignment(EX1).assignment
    left = build_edge_intervals(EX1, anchor, build_exclusive_set(EX1, anchor, tie_breaks=[Edge(1, 2)]), lex)
    right = build_edge_intervals(EX1, anchor, build_exclusive_set(EX1, anchor, tie_breaks=[Edge(2, 1)]), lex)
    show("Tied example, remove (2,3) first", left)
    show("Tied example, remove (3,2) first", right)
    print(f"left vs right: {lex_compare(left, right).name}\n")

    A = lexicographic_assignment(EX2).assignment
    r = assignment_sensitivity(EX2, A)
    show(f"Assignment intervals, lexicographic assignment ({r.iterations} iterations)", r.intervals)
    print(f"uniform radius: {sensitivity_radius(EX2, A):g}")


if __name__ == "__main__":
    main()
