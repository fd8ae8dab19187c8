#!/usr/bin/env python3
"""Exact cover counts from the edge-contraction recursion.

The arrowed count for (r, g, mu) is driven by the number of edges
s = 2g - 2 + d/r + n: contracting one edge expresses the count through
strictly smaller s, down to the single seed graph at (g, n, mu) = (0, 1, (r)).
Dividing by mu_1 * ... * mu_n converts to the orbifold Hurwitz number.
"""

from orbifold_hurwitz import (
    HurwitzIndex,
    MemoTable,
    arrowed_hurwitz,
    orbifold_hurwitz,
    partitions,
)


def main() -> None:
    memo = MemoTable()

    showcase = HurwitzIndex(2, 0, (3, 1))
    print("the classic worked example, r = 2 and profile (3, 1):")
    print(f"  edges s        = {showcase.s}")
    print(f"  arrowed count  = {arrowed_hurwitz(showcase, memo)}")
    print(f"  orbifold count = {orbifold_hurwitz(showcase, memo)}")
    print()

    print("base cases: the identity cover of the r-orbifold line has weight 1/r")
    for r in range(1, 6):
        print(f"  r = {r}:  H(0, ({r})) = {orbifold_hurwitz(HurwitzIndex(r, 0, (r,)), memo)}")
    print()

    print("a small genus-0 table for r = 2 (degrees up to 6):")
    print("  d  mu           s   arrowed      orbifold")
    for d in (2, 4, 6):
        for mu in partitions(d):
            idx = HurwitzIndex(2, 0, mu)
            print(
                "  {0}  {1:<12s} {2}   {3:<12s} {4}".format(
                    d, str(mu), idx.s,
                    str(arrowed_hurwitz(idx, memo)),
                    str(orbifold_hurwitz(idx, memo)),
                )
            )
    print()

    print("queries outside the admissible range are simply zero:")
    for idx in (HurwitzIndex(2, 0, (3,)), HurwitzIndex(1, 1, (1,))):
        print(f"  {idx.r=} {idx.g=} mu={idx.mu}: {arrowed_hurwitz(idx, memo)}")


if __name__ == "__main__":
    main()
