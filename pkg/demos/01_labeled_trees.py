#!/usr/bin/env python3
"""Counting labeled trees by eliminating one edge at a time.

Removing an edge from a tree on d labeled nodes leaves two smaller trees;
reconnecting them in all ways gives the quadratic recursion

    (d - 1) T_d = (1/2) * sum_{a+b=d} a b C(d, a) T_a T_b,   T_1 = 1,

whose solution is the famous power formula T_d = d^(d-2).  The same
sequence, rescaled by (d - 1)!, reappears as the one-part genus-0 cover
counts, which is why the whole library starts here.
"""

from math import factorial

from orbifold_hurwitz import HurwitzIndex, MemoTable, arrowed_hurwitz, tree_number


def main() -> None:
    print("tree counts from the edge-elimination recursion:")
    for d in range(1, 11):
        closed = d ** (d - 2) if d >= 2 else 1
        marker = "ok" if tree_number(d) == closed else "MISMATCH"
        print(f"  T({d:2d}) = {tree_number(d):>10d}   d^(d-2) = {closed:>10d}   {marker}")

    print()
    print("the same numbers as genus-0 one-part cover counts (r = 1):")
    memo = MemoTable()
    for d in range(1, 9):
        count = arrowed_hurwitz(HurwitzIndex(1, 0, (d,)), memo)
        print(
            f"  d = {d}: count = {str(count):>8s},"
            f"  (d-1)! * count = {factorial(d - 1) * count}"
        )


if __name__ == "__main__":
    main()
