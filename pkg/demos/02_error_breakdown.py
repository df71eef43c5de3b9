"""Split the worst-case error of a vertex-modified rule into its parts.

In the unanchored Sobolev space the squared worst-case error of any
cubature rule splits exactly into a multilinear part, a periodic
(Korobov) part, and a mixture term. For the optimally weighted rule the
multilinear part vanishes and, in two dimensions, the mixture has a
closed form built from cotangent sums, bracketed by two simple bounds
whose ratio is exactly pi^2 / 6.
"""

import math

from vmlattice.rules import LatticeRule, build_rule
from vmlattice.wce import (
    mixture_bounds_s2,
    mixture_term_s2,
    wce_decomposition,
    wce_generic,
    wce_trapezoid_1d,
)


def breakdown(rule, scheme):
    wrule = build_rule(rule, scheme)
    dec = wce_decomposition(wrule)
    print(f"scheme={scheme}")
    print(f"  multilinear part : {dec.sq_multilinear:.6e}")
    print(f"  korobov part     : {dec.sq_korobov:.6e}")
    print(f"  mixture term     : {dec.mixture:.6e}")
    print(f"  total e^2        : {dec.sq_total:.6e}")
    print(f"  wce               : {math.sqrt(dec.sq_total):.6e}")
    direct = wce_generic(wrule, "usobolev1") ** 2
    print(f"  direct kernel sum : {direct:.6e} (same thing, O(M^2))")


def main():
    rule = LatticeRule((1, 5), 17)
    print(f"z = {rule.z}, N = {rule.N}\n")
    for scheme in ("plain", "trapezoidal", "optimal"):
        breakdown(rule, scheme)
        print()

    mix = mixture_term_s2(rule)
    lo, hi = mixture_bounds_s2(rule)
    print("closed-form mixture for the optimal rule:")
    print(f"  halves w1={mix.w1}, w2={mix.w2}: {mix.term_w1:.6e} + {mix.term_w2:.6e}")
    print(f"  total {mix.total:.6e}, bracketed by [{lo:.6e}, {hi:.6e}]")
    print(f"  upper/lower = {hi / lo:.12f} = pi^2/6 = {math.pi ** 2 / 6:.12f}")
    print()

    # 1-D sanity check: the trapezoidal vertex rule is the composite
    # trapezoid rule, with error sqrt(1/12) / N
    for n in (4, 16, 64):
        closed = wce_trapezoid_1d(n)
        oracle = wce_generic(build_rule(LatticeRule((1,), n), "trapezoidal"),
                             "usobolev1")
        print(f"1-D trapezoid, N={n}: closed {closed:.12e} vs direct {oracle:.12e}")


if __name__ == "__main__":
    main()
