"""Command line front end: compute, render, sweep, and verify.

Exit codes: 0 success, 1 domain/parse error, 2 verification failure.
Output is deterministic text by default, JSON behind --json.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from fractions import Fraction
from typing import List, Optional, Sequence

from . import algebras as al
from . import characters as ch
from . import cone
from . import diagrams as dg
from . import explicit as ex
from . import simples as sp
from .weights import Weight, parse_rational


class CliError(ValueError):
    pass


def parse_weight_spec(text: str, alg: al.SuperalgebraId) -> Weight:
    """Comma/pipe-separated rationals in the eps|delta basis of lambda."""
    parts = text.split("|")
    if len(parts) > 2:
        raise CliError(f"weight spec {text!r}: more than one '|' (at position {text.index('|', text.index('|') + 1)})")
    eps_part = parts[0].strip()
    delta_part = parts[1].strip() if len(parts) == 2 else ""

    def parse_side(chunk: str, offset: int) -> List[Fraction]:
        if not chunk:
            return []
        out = []
        pos = offset
        for tok in chunk.split(","):
            try:
                out.append(parse_rational(tok))
            except ValueError:
                raise CliError(f"weight spec: bad rational {tok.strip()!r} at position {pos}") from None
            pos += len(tok) + 1
        return out

    eps = parse_side(eps_part, 0)
    delta = parse_side(delta_part, len(eps_part) + 1)
    if len(eps) != alg.eps_rank or len(delta) != alg.delta_rank:
        raise CliError(
            f"weight spec has shape {len(eps)}|{len(delta)}, but {alg} needs "
            f"{alg.eps_rank}|{alg.delta_rank}")
    return Weight(tuple(eps), tuple(delta))


def _parse_alg(text: str, t_flag: Optional[int] = None) -> al.SuperalgebraId:
    try:
        alg = al.parse_algebra(text)
    except ValueError as exc:
        raise CliError(str(exc)) from None
    if t_flag is not None:
        k, t = al.osp_principal_kt(alg)
        if t != t_flag:
            raise CliError(f"--t {t_flag} conflicts with {alg} (which has t = {t})")
    return alg


def _print_json(data) -> None:
    print(json.dumps(data, indent=2, sort_keys=True))


# ---------------------------------------------------------------------------
# subcommands


def cmd_ds(args) -> int:
    alg = _parse_alg(args.algebra, args.t)
    lam = parse_weight_spec(args.weight, alg)
    label = sp.SimpleLabel(alg, lam)
    r = args.rank if args.rank is not None else 1
    result = sp.ds_r_simple(label, r)
    if args.json:
        _print_json({"input": {"algebra": str(alg), "weight": lam.to_json()},
                     "rank": r, "output": result.to_json()})
    else:
        print(f"DS^{r} L({alg}, {lam}) =")
        if not result.entries:
            print("  0")
        for e in result.entries:
            print(f"  {e}")
    return 0


def cmd_diagram(args) -> int:
    alg = _parse_alg(args.algebra, args.t)
    lam = parse_weight_spec(args.weight, alg)
    arc = dg.build_arcs(dg.weight_diagram(alg, lam))
    if args.json:
        _print_json({
            "algebra": str(alg), "weight": lam.to_json(),
            "arcs": [{"position": a.position, "endpoints": list(a.endpoints),
                      "level": a.level} for a in arc.arcs],
            "maximal": [{"position": a.position, "endpoints": list(a.endpoints),
                         "level": a.level} for a in arc.maximal],
            "text": dg.render(arc),
        })
    else:
        print(dg.render(arc))
    return 0


def cmd_orbits(args) -> int:
    alg = _parse_alg(args.algebra)
    d = cone.defect(alg)
    ks = [args.k] if args.k is not None else list(range(d + 1))
    records = []
    for k in ks:
        orbs = cone.w_orbits_on_iso_sets(alg, k)
        records.append({
            "k": k,
            "orbit_count": len(orbs),
            "dims": [o.dimension for o in orbs],
            "sizes": [o.size for o in orbs],
            "representatives": [str(o.representative) for o in orbs],
        })
    if args.json:
        _print_json({"algebra": str(alg), "defect": d, "orbits": records})
    else:
        print(f"{alg}: defect {d}")
        print(f"{'k':>3} {'orbits':>7}  dims")
        for rec in records:
            dims = ",".join("-" if v is None else str(v) for v in rec["dims"])
            print(f"{rec['k']:>3} {rec['orbit_count']:>7}  [{dims}]")
    return 0


def cmd_char(args) -> int:
    alg = _parse_alg(args.algebra, args.t)
    if args.input:
        with open(args.input, "r", encoding="utf-8") as fh:
            f = ch.SuperCharacter.from_json(json.load(fh))
    else:
        lam = parse_weight_spec(args.weight, alg)
        if alg.family == al.P:
            thin, primed = ch.p_kac_supercharacters(alg.n, lam)
            f = primed if args.primed else thin
        else:
            f = ch.kac_supercharacter(alg, lam)
    if args.char_op == "kac":
        out = f
    elif args.char_op == "restrict":
        out = ch.ds_restrict(f, ch.restriction_map(alg, args.rank or 1))
    elif args.char_op == "sdim":
        print(ch.sdim(f))
        return 0
    else:  # order
        cap = args.cap if args.cap is not None else 8
        order = ch.taylor_order(f, cap)
        print(f">{cap}" if order is None else order)
        return 0
    if args.json:
        _print_json(out.to_json())
    else:
        print(out)
    return 0


def cmd_verify(args) -> int:
    failures = 0
    total = 0
    mmax, nmax = args.max_m, args.max_n
    for m in range(1, mmax + 1):
        for n in range(1, nmax + 1):
            alg = al.gl(m, n)
            V = ex.standard_module(alg)
            mods = [("standard", V), ("standard*standard", ex.tensor_module(V, V)),
                    ("standard*dual", ex.tensor_module(V, ex.dual_module(V)))]
            for iso in cone.enumerate_iso_sets(alg, 1, check_span=False):
                for name, M in mods:
                    x = ex.odd_operator(M, iso, seed=args.seed)
                    rep = ex.verify_against_calculus(M, x)
                    total += 1
                    if not rep.passed:
                        failures += 1
                        print(f"FAIL {alg} {name} {iso}")
    for algname, lams in [("gl(1|1)", [([0], [0]), ([2], [-1])]),
                          ("gl(2|1)", [([2, 0], [0]), ([1, 0], [5])])]:
        alg = al.parse_algebra(algname)
        for eps, delta in lams:
            lam0 = Weight(tuple(Fraction(v) for v in eps), tuple(Fraction(v) for v in delta))
            K = ex.kac_module_explicit(alg, lam0)
            for iso in cone.enumerate_iso_sets(alg, 1, check_span=False):
                x = ex.odd_operator(K, iso, seed=args.seed)
                rep = ex.verify_against_calculus(K, x)
                total += 1
                ok = rep.passed and not ex.ds_explicit(K, x).supercharacter()
                if not ok:
                    failures += 1
                    print(f"FAIL kac {alg} {lam0} {iso}")
    print(f"{total} checks, {failures} failures")
    return 2 if failures else 0


def cmd_sweep(args) -> int:
    alg = _parse_alg(args.algebra)
    bound = args.bound
    violations = 0
    cases = 0
    if args.what == "kernel":
        if alg.family == al.P:
            rmap1 = ch.restriction_map(alg, 1)
            rmap2 = ch.restriction_map(alg, 2)
            for lam0 in _p_dominant_weights(alg.n, bound):
                thin, primed = ch.p_kac_supercharacters(alg.n, lam0)
                cases += 1
                if ch.ds_restrict(primed, rmap1) or ch.ds_restrict(thin, rmap2):
                    violations += 1
        else:
            rmap = ch.restriction_map(alg, 1)
            cache = {}
            for lam in _kernel_sweep_weights(alg, bound):
                cases += 1
                if not kernel_membership(alg, lam, rmap, cache):
                    violations += 1
    elif args.what in ("purity", "multiplicity"):
        for label in _dominant_labels(alg, bound):
            res = sp.ds1_simple(label)
            cases += 1
            ok = sp.check_purity(res) if args.what == "purity" \
                else sp.check_multiplicity(res, alg.family)
            if not ok:
                violations += 1
    else:
        raise CliError(f"unknown sweep {args.what!r}")
    print(f"{cases} cases, {violations} violations")
    return 2 if violations else 0


def _p_dominant_weights(n: int, bound: int):
    """Dominant even-part weights (weakly increasing, the p(n) convention)
    with coordinates in [0, bound]."""
    from itertools import combinations_with_replacement

    for combo in combinations_with_replacement(range(0, bound + 1), n):
        yield Weight(tuple(Fraction(c) for c in combo), ())


def kernel_membership(alg: al.SuperalgebraId, lam: Weight,
                      rmap: ch.RestrictionMap, cache: dict) -> bool:
    """Whether ds^1(k(lam)) = 0, memoised on the translation class.

    Translating lam by a constant vector on the eps side (or the delta
    side) multiplies k(lam) by the corresponding monomial, so kernel
    membership only depends on the coordinate differences.
    """
    if alg.family == al.GL:
        key = (tuple(c - lam.eps[-1] for c in lam.eps),
               tuple(c - lam.delta[-1] for c in lam.delta))
    else:
        key = (lam.eps, lam.delta)
    if key not in cache:
        norm = Weight(*key)
        cache[key] = not ch.ds_restrict(ch.kac_supercharacter(alg, norm), rmap)
    return cache[key]


def _kernel_sweep_weights(alg: al.SuperalgebraId, bound: int):
    """Even-dominant weights shifted by rho_iso with coordinates within the bound."""
    from itertools import combinations_with_replacement

    shift = ch.rho_iso(alg)
    if alg.family == al.GL:
        m, n = alg.m, alg.n
        lo, hi = -bound - 2, bound + 2
        eps_opts = combinations_with_replacement(range(hi, lo - 1, -1), m)
        eps_list = [tuple(Fraction(c) for c in combo) for combo in eps_opts]
        delta_opts = combinations_with_replacement(range(hi, lo - 1, -1), n)
        delta_list = [tuple(Fraction(c) for c in combo) for combo in delta_opts]
        for ecomb in eps_list:
            lam_e = tuple(c + s for c, s in zip(ecomb, shift.eps))
            if any(abs(c) > bound for c in lam_e):
                continue
            for dcomb in delta_list:
                lam = Weight(lam_e, tuple(c + s for c, s in zip(dcomb, shift.delta)))
                if all(abs(c) <= bound for c in lam.delta):
                    yield lam
    elif alg.family == al.OSP:
        yield from _osp_even_dominant(alg, bound, shift)
    else:
        raise CliError(f"kernel sweep implemented for gl, osp, p; not {alg}")


def _osp_even_dominant(alg: al.SuperalgebraId, bound: int, shift: Weight):
    b = ch.borel(alg)
    span = range(-bound - 2, bound + 3)

    def rec(idx, cur):
        if idx == alg.dim_cartan:
            mu = Weight(tuple(cur[: alg.eps_rank]), tuple(cur[alg.eps_rank:]))
            lam = mu + shift
            if any(abs(c) > bound for c in lam.coords()):
                return
            for alpha in b.delta0_plus:
                pairing = 2 * al.form(alg, mu, alpha) / al.form(alg, alpha, alpha)
                if pairing.denominator != 1 or pairing < 0:
                    return
            yield lam
            return
        for c in span:
            yield from rec(idx + 1, cur + [Fraction(c)])

    yield from rec(0, [])


def _dominant_labels(alg: al.SuperalgebraId, bound: int):
    from itertools import combinations

    if alg.family == al.GL:
        positions = range(0, bound + 1)
        for aset in combinations(positions, alg.m):
            for bset in combinations(positions, alg.n):
                lam = al.gl_weight_from_ab(alg.m, alg.n, aset, bset)
                yield sp.SimpleLabel(alg, lam)
    elif alg.family == al.OSP:
        k, t = al.osp_principal_kt(alg)
        for j in range(0, k + 1):
            for xs in combinations(range(1, bound + 1), j):
                a = tuple(sorted(xs, reverse=True)) + (0,) * (k - j)
                diag = dg.OspDiagram(k, t, tuple(sorted(xs, reverse=True)), k - j, None)
                xis = [1, -1] if diag.sign_required() else [None]
                for xi in xis:
                    lam = al.osp_weight_from_data(alg, a, xi)
                    yield sp.SimpleLabel(alg, lam)
    elif alg.family == al.P:
        for aset in combinations(range(0, bound + 1), alg.n):
            yield sp.SimpleLabel(alg, al.p_weight_from_a(alg.n, aset))
    else:
        raise CliError(f"dominant sweeps implemented for gl, osp, p; not {alg}")


# ---------------------------------------------------------------------------
# parser


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # domain errors exit with 1
        self.print_usage(sys.stderr)
        raise CliError(message)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="ds-calculus",
                description="Duflo-Serganova calculus on classical Lie superalgebras")
    sub = p.add_subparsers(dest="command", required=True)

    def add_common(q, weight=True):
        q.add_argument("algebra", help='algebra spec, e.g. "gl(6|7)", "osp(11|10)", "p(9)"')
        if weight:
            q.add_argument("--weight", required=True,
                           help='lambda in the eps|delta basis, e.g. "3,3,2,1,1,0|0,-2,-2,-2,-3,-3,-6"')
        q.add_argument("--json", action="store_true")
        q.add_argument("--t", type=int, default=None,
                       help="assert the osp principal-block type (0, 1 or 2)")

    q = sub.add_parser("ds", help="value of the functor on a simple module")
    add_common(q)
    q.add_argument("--rank", type=int, default=None)
    q.set_defaults(func=cmd_ds)

    q = sub.add_parser("diagram", help="ASCII arc diagram of a dominant weight")
    add_common(q)
    q.set_defaults(func=cmd_diagram)

    q = sub.add_parser("orbits", help="Weyl orbits of iso-sets and their dimensions")
    q.add_argument("algebra")
    q.add_argument("--k", type=int, default=None)
    q.add_argument("--json", action="store_true")
    q.set_defaults(func=cmd_orbits)

    q = sub.add_parser("char", help="supercharacter operations on k(lambda)")
    q.add_argument("char_op", choices=["kac", "restrict", "sdim", "order"])
    q.add_argument("algebra")
    q.add_argument("--weight", default=None)
    q.add_argument("--input", default=None, help="JSON supercharacter file instead of k(lambda)")
    q.add_argument("--rank", type=int, default=None)
    q.add_argument("--cap", type=int, default=None)
    q.add_argument("--primed", action="store_true", help="p(n): use the primed Kac supercharacter")
    q.add_argument("--json", action="store_true")
    q.add_argument("--t", type=int, default=None)
    q.set_defaults(func=cmd_char)

    q = sub.add_parser("verify", help="matrix-level cross-checks of the calculus")
    q.add_argument("--max-m", type=int, default=2)
    q.add_argument("--max-n", type=int, default=2)
    q.add_argument("--seed", type=int, default=None)
    q.set_defaults(func=cmd_verify)

    q = sub.add_parser("sweep", help="kernel / purity / multiplicity sweeps")
    q.add_argument("what", choices=["kernel", "purity", "multiplicity"])
    q.add_argument("algebra")
    q.add_argument("--bound", type=int, default=4)
    q.set_defaults(func=cmd_sweep)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if getattr(args, "char_op", None) in ("kac", "restrict", "sdim", "order"):
            if args.input is None and args.weight is None:
                raise CliError("char needs --weight or --input")
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ValueError, al.FormUnavailableError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
