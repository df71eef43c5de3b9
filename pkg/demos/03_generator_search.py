"""Search every generator of a prime modulus and tabulate the optima.

For prime N the map z -> mixture term (and z -> Korobov term) over all
z = 1..N-1 collapses to cyclic convolutions over the multiplicative
group, so scanning the full generator set costs O(N log N) instead of
O(N^2). The winning z recurs at N - z and at the modular inverses of
both: those four rules share one point set up to reflection and
coordinate swap, so their errors tie exactly.
"""

import math
import time

from vmlattice.numtheory import mod_inverse
from vmlattice.search import best_generator, reproduce_table, results_to_csv


def main():
    res = best_generator(17, keep_rows=True)
    print(f"N=17: best z = {res.z}")
    print("  z   e^2 total      korobov        mixture")
    for z, total, kor, mix in res.all_rows[:6]:
        print(f"  {int(z):2d}  {total:.6e}  {kor:.6e}  {mix:.6e}")
    print("  ...")
    zinv = mod_inverse(res.z, 17)
    orbit = sorted({res.z, 17 - res.z, zinv, 17 - zinv})
    print(f"tied orbit of the optimum: {orbit}\n")

    primes = [17, 37, 67, 131, 257, 521, 1031, 2053, 4099]
    t0 = time.perf_counter()
    results = reproduce_table(primes)
    dt = time.perf_counter() - t0
    print(f"full scan over {len(primes)} moduli in {dt:.2f}s:")
    print(results_to_csv(results))

    # decay rates: the total tracks log^2(N)/N, the mixture sqrt(log N)/N
    print("scaled columns (flat means the reference rate is right):")
    print("  N      sqrt(total)*N/log^2 N   sqrt(mixture)*N/sqrt(log N)")
    for r in results:
        t = math.sqrt(r.sq_total) * r.N / math.log(r.N) ** 2
        m = math.sqrt(r.mixture) * r.N / math.sqrt(math.log(r.N))
        print(f"  {r.N:<6d} {t:>23.6f}   {m:>27.6f}")


if __name__ == "__main__":
    main()
