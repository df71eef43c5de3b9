"""Build vertex-modified lattice rules and look at their weights.

A rank-1 lattice rule averages a function over the points {z k / N}.
The vertex-modified variants move the origin's share of the weight onto
the 2^s corners of the unit cube: either equally (trapezoidal) or tuned
so that every multilinear function integrates exactly (optimal).
"""

import numpy as np

from vmlattice.rules import LatticeRule, apply_rule, build_rule, lattice_points


def show(rule, scheme):
    wrule = build_rule(rule, scheme)
    print(f"scheme={scheme}: {wrule.M} nodes, weight sum = {wrule.weight_sum:.15f}")
    for node, w in zip(wrule.nodes[: 2 ** rule.s], wrule.weights):
        print(f"  corner {node} -> {w:.12f}")


def main():
    rule = LatticeRule((1, 3), 13)
    print(f"generator z = {rule.z}, modulus N = {rule.N}")
    pts = lattice_points(rule)
    print(f"first lattice points: {pts[:3]} ...")
    print()

    for scheme in ("plain", "trapezoidal", "optimal"):
        show(rule, scheme)
        print()

    # the optimal corner weights make bilinear integrands exact
    a = np.array([0.3, 0.7])
    b = np.array([0.9, 0.4])
    f = lambda x: float(np.prod(a + b * x))
    exact = float(np.prod(a + 0.5 * b))
    for scheme in ("plain", "trapezoidal", "optimal"):
        q = apply_rule(build_rule(rule, scheme), f)
        print(f"{scheme:12s} Q(f) = {q:.15f}   error = {q - exact:+.2e}")
    print(f"{'exact':12s} I(f) = {exact:.15f}")


if __name__ == "__main__":
    main()
