"""Command line front end.

Subcommands: weights, wce, search, fib, conjecture, plotdata. CSV by
default, JSON behind --format json. Exit codes: 0 success, 2 bad
usage or domain error, 3 internal numerical-consistency failure.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from concurrent.futures import ThreadPoolExecutor

from .errors import ConsistencyError, DomainError
from .kernels import ProductWeights
from .numtheory import is_prime
from .rules import (
    SCHEMES,
    LatticeRule,
    build_rule,
    optimal_vertex_weights,
    trapezoidal_weights,
)
from .search import (
    _resolve_jobs,
    fibonacci_rule,
    conjecture_sweep,
    reproduce_table,
    results_to_csv,
)
from .wce import (
    inverse_symmetry_deviation,
    mixture_bounds_s2,
    mixture_term_s2,
    wce_decomposition,
    wce_generic,
)

# generic-kernel cross-check is O(M^2 s); keep the CLI snappy
_ORACLE_NODE_CAP = 4096
_CONJECTURE_TOL_PER_N = 1e-10


def _parse_ints(text: str, label: str, expand=None) -> list[int]:
    """Parse '3,17' and 'a..b' specs into a sorted deduplicated list.

    Range pieces go through `expand` (e.g. a primality filter); comma
    singletons are kept verbatim so a bad one can be reported.
    """
    out: set[int] = set()
    for piece in text.split(","):
        piece = piece.strip()
        if not piece:
            continue
        if ".." in piece:
            lo_s, hi_s = piece.split("..", 1)
            try:
                lo, hi = int(lo_s), int(hi_s)
            except ValueError:
                raise DomainError(f"bad {label} range {piece!r}") from None
            if hi < lo:
                raise DomainError(f"empty {label} range {piece!r}")
            vals = range(lo, hi + 1)
            out.update(expand(vals) if expand else vals)
        else:
            try:
                out.add(int(piece))
            except ValueError:
                raise DomainError(f"bad {label} value {piece!r}") from None
    if not out:
        raise DomainError(f"no {label} values given")
    return sorted(out)


def _parse_gamma(text: str) -> tuple[float, ...]:
    try:
        vals = tuple(float(p) for p in text.split(",") if p.strip())
    except ValueError:
        raise DomainError(f"bad gamma spec {text!r}") from None
    if not vals:
        raise DomainError("empty gamma spec")
    return vals


def _rule_from_args(args) -> tuple[LatticeRule, ProductWeights]:
    try:
        z = tuple(int(p) for p in args.z.split(",") if p.strip())
    except ValueError:
        raise DomainError(f"bad z spec {args.z!r}") from None
    if not z:
        raise DomainError("empty z spec")
    rule = LatticeRule(z, args.N)
    if args.s is not None and args.s != rule.s:
        raise DomainError(f"--s {args.s} disagrees with len(z) = {rule.s}")
    gamma_spec = getattr(args, "gamma", None)
    gamma = ProductWeights.broadcast(
        _parse_gamma(gamma_spec) if gamma_spec else None, rule.s
    )
    return rule, gamma


def _csv_escape(field: str) -> str:
    if "," in field or '"' in field:
        return '"' + field.replace('"', '""') + '"'
    return field


def _emit(lines: list[str]) -> str:
    return "\n".join(lines) + "\n"


def cmd_weights(args) -> str:
    rule, _ = _rule_from_args(args)
    if args.scheme == "plain":
        raise DomainError("plain rules keep no corner weights; "
                          "pick trapezoidal or optimal")
    if args.scheme == "trapezoidal":
        vw = trapezoidal_weights(rule.s, rule.N)
    else:
        vw = optimal_vertex_weights(rule)
    if args.format == "json":
        payload = {
            "N": rule.N,
            "s": rule.s,
            "z": list(rule.z),
            "scheme": args.scheme,
            "vertex_weights": [
                {"corner": list(c), "w": float(w)}
                for c, w in zip(vw.corners, vw.weights)
            ],
        }
        return json.dumps(payload, indent=2) + "\n"
    lines = ["corner,weight"]
    for c, w in zip(vw.corners, vw.weights):
        lines.append(f"{_csv_escape(','.join(map(str, c)))},{float(w)!r}")
    return _emit(lines)


def cmd_wce(args) -> str:
    rule, gamma = _rule_from_args(args)
    wrule = build_rule(rule, args.scheme)
    bd = wce_decomposition(wrule, gamma)
    if wrule.M <= _ORACLE_NODE_CAP:
        direct = wce_generic(wrule, "usobolev1", gamma) ** 2
        if abs(direct - bd.sq_total) > 1e-10 * max(abs(direct), 1e-300):
            raise ConsistencyError(
                f"decomposition total {bd.sq_total!r} disagrees with "
                f"direct kernel quadratic form {direct!r}"
            )
    closed = None
    if rule.s == 2 and args.scheme == "optimal":
        pair = mixture_term_s2(rule, gamma)
        lo, hi = mixture_bounds_s2(rule, gamma)
        total_cf = bd.sq_korobov + pair.total
        agrees = abs(total_cf - bd.sq_total) <= 1e-9 * max(abs(bd.sq_total), 1e-300)
        if not agrees:
            raise ConsistencyError(
                f"closed-form total {total_cf!r} disagrees with "
                f"decomposition total {bd.sq_total!r}"
            )
        closed = {
            "mixture": pair.total,
            "lower": lo,
            "upper": hi,
            "agrees": agrees,
        }
    wce = math.sqrt(max(bd.sq_total, 0.0))
    if args.format == "json":
        payload = dict(bd.to_dict(), wce=wce)
        if closed is not None:
            payload["closed_form"] = closed
        return json.dumps(payload, indent=2) + "\n"
    d = bd.to_dict()
    lines = [
        ",".join(d),
        ",".join(repr(float(v)) for v in d.values()),
        f"# wce={wce!r}",
    ]
    if closed is not None:
        lines.append(f"# closed_form_mixture={closed['mixture']!r}")
        lines.append(f"# mixture_lower={closed['lower']!r}")
        lines.append(f"# mixture_upper={closed['upper']!r}")
        lines.append(f"# closed_form_agrees={'true' if closed['agrees'] else 'false'}")
    return _emit(lines)


def _expand_primes(vals) -> list[int]:
    return [n for n in vals if is_prime(n)]


def cmd_search(args) -> str:
    ns = _parse_ints(args.N, "N", expand=_expand_primes)
    gamma = _parse_gamma(args.gamma) if args.gamma else None
    results = reproduce_table(ns, gamma, jobs=args.jobs, keep_rows=args.full)
    if args.format == "json":
        return json.dumps([r.to_dict() for r in results], indent=2) + "\n"
    return results_to_csv(results, full=args.full)


def cmd_fib(args) -> str:
    ks = _parse_ints(args.k, "k")
    gamma = _parse_gamma(args.gamma) if args.gamma else None
    rows = []
    for k in ks:
        bd = fibonacci_rule(k, gamma)
        rows.append((k, bd))
    if args.format == "json":
        payload = [dict({"k": k}, **bd.to_dict(), halves_equal=True)
                   for k, bd in rows]
        return json.dumps(payload, indent=2) + "\n"
    lines = ["k,sq_total,sq_korobov,sq_multilinear,mixture,halves_equal"]
    for k, bd in rows:
        lines.append(
            f"{k},{bd.sq_total!r},{bd.sq_korobov!r},"
            f"{bd.sq_multilinear!r},{bd.mixture!r},true"
        )
    return _emit(lines)


def cmd_conjecture(args) -> str:
    ns = _parse_ints(args.N, "N")
    if min(ns) < 2:
        raise DomainError("conjecture sweep needs N >= 2")
    if args.z is not None:
        if len(ns) != 1:
            raise DomainError("--z needs a single N")
        N = ns[0]
        zs = _parse_ints(args.z, "z")
        rows = [(N, z, inverse_symmetry_deviation(z, N)) for z in zs]
        if args.format == "json":
            payload = [{"N": n, "z": z, "deviation": d} for n, z, d in rows]
            return json.dumps(payload, indent=2) + "\n"
        lines = ["N,z,deviation"]
        lines.extend(f"{n},{z},{d!r}" for n, z, d in rows)
        return _emit(lines)

    def one(N: int):
        dev = conjecture_sweep(N)
        tol = _CONJECTURE_TOL_PER_N * N
        return N, dev, tol, dev < tol

    workers = min(len(ns), _resolve_jobs(args.jobs))
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(one, ns))
    else:
        rows = [one(n) for n in ns]
    if args.format == "json":
        payload = [
            {"N": n, "max_deviation": d, "tolerance": t, "ok": ok}
            for n, d, t, ok in rows
        ]
        return json.dumps(payload, indent=2) + "\n"
    lines = ["N,max_deviation,tolerance,ok"]
    lines.extend(
        f"{n},{d!r},{t!r},{'true' if ok else 'false'}" for n, d, t, ok in rows
    )
    return _emit(lines)


def cmd_plotdata(args) -> str:
    ns = _parse_ints(args.N, "N", expand=_expand_primes)
    gamma = _parse_gamma(args.gamma) if args.gamma else None
    results = reproduce_table(ns, gamma, jobs=args.jobs)
    rows = []
    for r in results:
        rows.append((
            r.N,
            math.sqrt(r.sq_total),
            math.sqrt(r.mixture),
            math.sqrt(math.log(r.N)) / r.N,
            math.log(r.N) ** 2 / r.N,
        ))
    if args.format == "json":
        payload = [
            {
                "N": n,
                "sqrt_sq_total": a,
                "sqrt_mixture": b,
                "ref_loghalf": c,
                "ref_log2": d,
            }
            for n, a, b, c, d in rows
        ]
        return json.dumps(payload, indent=2) + "\n"
    lines = ["N,sqrt_sq_total,sqrt_mixture,ref_loghalf,ref_log2"]
    lines.extend(
        f"{n},{a:.6g},{b:.6g},{c:.6g},{d:.6g}" for n, a, b, c, d in rows
    )
    return _emit(lines)


def _add_common(p, *, gamma=True, fmt=True, output=True) -> None:
    if gamma:
        p.add_argument("--gamma", default=None,
                       help="weight per dimension, scalar or comma list (default 1)")
    if fmt:
        p.add_argument("--format", choices=("csv", "json"), default="csv")
    if output:
        p.add_argument("--output", default=None, help="write here instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="vmlattice",
        description="Vertex modified rank-1 lattice rules: weights, "
                    "worst-case errors, generator search.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("weights", help="corner weight table of a rule")
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--z", required=True, help="generator components, comma list")
    p.add_argument("--s", type=int, default=None)
    p.add_argument("--scheme", choices=SCHEMES, default="optimal")
    _add_common(p, gamma=False)
    p.set_defaults(func=cmd_weights)

    p = sub.add_parser("wce", help="squared worst-case error breakdown")
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--z", required=True, help="generator components, comma list")
    p.add_argument("--s", type=int, default=None)
    p.add_argument("--scheme", choices=SCHEMES, default="optimal")
    _add_common(p)
    p.set_defaults(func=cmd_wce)

    p = sub.add_parser("search", help="best generator per prime modulus")
    p.add_argument("--N", required=True,
                   help="comma list and a..b ranges; ranges keep primes only")
    p.add_argument("--full", action="store_true", help="dump every z, not just the best")
    p.add_argument("--jobs", type=int, default=None)
    _add_common(p)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("fib", help="error breakdown of Fibonacci rules")
    p.add_argument("--k", required=True, help="index or range, e.g. 7 or 4..12")
    _add_common(p)
    p.set_defaults(func=cmd_fib)

    p = sub.add_parser("conjecture", help="inverse-symmetry deviation sweep")
    p.add_argument("--N", required=True,
                   help="comma list and a..b ranges (every integer kept)")
    p.add_argument("--z", default=None, help="restrict to these z instead of all")
    p.add_argument("--jobs", type=int, default=None)
    _add_common(p, gamma=False)
    p.set_defaults(func=cmd_conjecture)

    p = sub.add_parser("plotdata", help="error decay columns for plotting")
    p.add_argument("--N", required=True,
                   help="comma list and a..b ranges; ranges keep primes only")
    p.add_argument("--jobs", type=int, default=None)
    _add_common(p)
    p.set_defaults(func=cmd_plotdata)
    return ap


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        text = args.func(args)
    except ConsistencyError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (ValueError, OverflowError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
