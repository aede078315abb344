"""Exact supercharacter arithmetic on the weight lattice.

Supercharacters are finitely supported integer combinations of formal
exponentials e^mu.  The module provides the ring operations, Weyl
characters of the reductive even part by exact alternant division,
Kac-type virtual supercharacters and their p(n) analogues, the
restriction homomorphism induced by the Duflo-Serganova functor
(coordinate projection), superdimension, and the order of vanishing of
a supercharacter at the group identity.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from . import algebras as al
from .algebras import SuperalgebraId
from .weights import HALF, Weight, weight

Coords = Tuple[Fraction, ...]


class ExactDivisionError(ArithmeticError):
    """A denominator failed to divide exactly; always a bug upstream."""


class SuperCharacter:
    """Finitely supported map Weight -> Z, written sum m_nu e^nu."""

    __slots__ = ("terms",)

    def __init__(self, terms: Optional[Dict[Weight, int]] = None):
        self.terms: Dict[Weight, int] = {}
        if terms:
            for w, c in terms.items():
                if c:
                    self.terms[w] = self.terms.get(w, 0) + c
            self.terms = {w: c for w, c in self.terms.items() if c}

    @staticmethod
    def exp(w: Weight, coeff: int = 1) -> "SuperCharacter":
        return SuperCharacter({w: coeff})

    @staticmethod
    def one(eps_rank: int, delta_rank: int = 0) -> "SuperCharacter":
        from .weights import zero_weight

        return SuperCharacter.exp(zero_weight(eps_rank, delta_rank))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        return isinstance(other, SuperCharacter) and self.terms == other.terms

    def __hash__(self):  # pragma: no cover
        return hash(frozenset(self.terms.items()))

    def __add__(self, other: "SuperCharacter") -> "SuperCharacter":
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out.get(w, 0) + c
        return SuperCharacter(out)

    def __sub__(self, other: "SuperCharacter") -> "SuperCharacter":
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out.get(w, 0) - c
        return SuperCharacter(out)

    def __neg__(self) -> "SuperCharacter":
        return SuperCharacter({w: -c for w, c in self.terms.items()})

    def __mul__(self, other) -> "SuperCharacter":
        if isinstance(other, int):
            return SuperCharacter({w: other * c for w, c in self.terms.items()})
        out: Dict[Weight, int] = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = w1 + w2
                out[w] = out.get(w, 0) + c1 * c2
        return SuperCharacter(out)

    __rmul__ = __mul__

    def translate(self, w: Weight) -> "SuperCharacter":
        return SuperCharacter({u + w: c for u, c in self.terms.items()})

    def support(self) -> List[Weight]:
        return sorted(self.terms, key=lambda w: w.coords())

    def sdim(self) -> int:
        return sum(self.terms.values())

    def to_json(self) -> list:
        return [{"weight": w.to_json(), "coeff": c}
                for w, c in sorted(self.terms.items(), key=lambda t: t[0].coords())]

    @staticmethod
    def from_json(data: Iterable[dict]) -> "SuperCharacter":
        out: Dict[Weight, int] = {}
        for rec in data:
            w = Weight.from_json(rec["weight"])
            out[w] = out.get(w, 0) + int(rec["coeff"])
        return SuperCharacter(out)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        bits = []
        for w in self.support():
            c = self.terms[w]
            bits.append(f"{'+' if c > 0 else '-'}{abs(c) if abs(c) != 1 else ''}e{w}")
        return " ".join(bits)


def sdim(f: SuperCharacter) -> int:
    """Superdimension: the coefficient sum (evaluation at the identity)."""
    return f.sdim()


# ---------------------------------------------------------------------------
# Borel data for the families with a fixed positive system here


@dataclass(frozen=True)
class BorelData:
    alg: SuperalgebraId
    delta0_plus: Tuple[Weight, ...]
    delta1_plus: Tuple[Weight, ...]
    rho: Weight      # half sum difference, for this positive system
    rho0: Weight     # half sum of even positives


@lru_cache(maxsize=None)
def borel(alg: SuperalgebraId) -> BorelData:
    """The fixed positive system: distinguished for gl, mixed for
    principal osp, the one-negative-eps system for p(n)."""
    f = alg.family
    ev, od = al.roots(alg)
    if f == al.GL:
        m, n = alg.m, alg.n
        d0 = [r.weight for r in ev
              if _gl_positive(r.weight, m)]
        d1 = [r.weight for r in od if sum(r.weight.eps) > 0]  # eps_i - delta_j
    elif f == al.OSP:
        k, t = al.osp_principal_kt(alg)
        d0, d1 = _osp_positive(alg)
    elif f == al.P:
        d0 = [r.weight for r in ev if _p_positive_even(r.weight)]
        d1 = [r.weight for r in od if sum(r.weight.eps) > 0]  # the g^1 part
    else:
        raise ValueError(f"no fixed positive system for {alg}")
    rho0 = _half_sum(d0, alg.zero())
    rho1 = _half_sum(d1, alg.zero())
    return BorelData(alg, tuple(d0), tuple(d1), rho0 - rho1, rho0)


def _half_sum(ws: Sequence[Weight], zero: Weight) -> Weight:
    total = zero
    for w in ws:
        total = total + w
    return total.scale(HALF)


def _gl_positive(w: Weight, m: int) -> bool:
    for c in w.coords():
        if c != 0:
            return c > 0
    return False


def _p_positive_even(w: Weight) -> bool:
    # eps_j - eps_i with j > i positive: last nonzero coordinate +1
    nz = [c for c in w.eps if c != 0]
    return bool(nz) and w.eps[max(i for i, c in enumerate(w.eps) if c != 0)] > 0


def _osp_positive(alg: SuperalgebraId):
    """Positive roots of the mixed bases for osp(2k+t|2k)."""
    k, t = al.osp_principal_kt(alg)
    ev, od = al.roots(alg)

    # order the coordinate functionals as interleaved in the mixed base:
    # t=0:  d1 > e1 > d2 > e2 > ... > dk > ek
    # t=1:  e1 > d1 > e2 > d2 > ... > ek > dk
    # t=2:  e1 > d1 > ... > ek > dk > e_{k+1}
    order: List[Tuple[str, int]] = []
    for i in range(k):
        if t == 0:
            order.append(("d", i))
            order.append(("e", i))
        else:
            order.append(("e", i))
            order.append(("d", i))
    if t == 2:
        order.append(("e", k))

    rank_of = {key: pos for pos, key in enumerate(order)}

    def key_coords(w: Weight) -> List[Fraction]:
        out = [Fraction(0)] * len(order)
        for i, c in enumerate(w.eps):
            out[rank_of[("e", i)]] = c
        for j, c in enumerate(w.delta):
            out[rank_of[("d", j)]] = c
        return out

    def positive(w: Weight) -> bool:
        for c in key_coords(w):
            if c != 0:
                return c > 0
        return False

    d0 = [r.weight for r in ev if positive(r.weight)]
    d1 = [r.weight for r in od if positive(r.weight)]
    return d0, d1


def rho_iso(alg: SuperalgebraId) -> Weight:
    """Half sum of the positive isotropic roots of the fixed system."""
    b = borel(alg)
    iso = [w for w in b.delta1_plus if al.form(alg, w, w) == 0]
    return _half_sum(iso, alg.zero())


# ---------------------------------------------------------------------------
# exact alternant division


def _dot(u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def divide_exact(f: SuperCharacter, alpha: Weight, direction: Sequence[Fraction]) -> SuperCharacter:
    """Exact division of f by (1 - e^alpha).

    ``direction`` is any rational functional with <alpha, direction> < 0;
    monomials are eliminated from the top through a lazy max-heap.  A
    nonzero remainder raises ExactDivisionError.
    """
    import heapq

    step = _dot(alpha.coords(), direction)
    if step >= 0:
        raise ValueError("direction must make alpha negative")
    if not f.terms:
        return SuperCharacter()

    def key(w: Weight):
        return (-_dot(w.coords(), direction), tuple(-c for c in w.coords()))

    floor = -max(key(w)[0] for w in f.terms)
    rem: Dict[Weight, int] = dict(f.terms)
    heap = [(key(w), w) for w in rem]
    heapq.heapify(heap)
    quo: Dict[Weight, int] = {}
    while heap:
        k, lead = heapq.heappop(heap)
        c = rem.pop(lead, 0)
        if not c:
            continue
        if -k[0] < floor:
            raise ExactDivisionError(f"division by 1 - e^{alpha} leaves a remainder")
        quo[lead] = quo.get(lead, 0) + c
        nxt = lead + alpha
        if nxt in rem:
            newc = rem[nxt] + c
            if newc:
                rem[nxt] = newc
            else:
                del rem[nxt]
        else:
            rem[nxt] = c
            heapq.heappush(heap, (key(nxt), nxt))
    return SuperCharacter(quo)


def _generic_direction(alg: SuperalgebraId, positives: Sequence[Weight]) -> Tuple[Fraction, ...]:
    """A rational functional strictly positive on all listed roots."""
    d = alg.dim_cartan
    for base in ([Fraction(3 ** (d - i)) for i in range(d)],     # gl, osp
                 [Fraction(3 ** (i + 1)) for i in range(d)]):    # p(n)
        if all(_dot(w.coords(), base) > 0 for w in positives):
            return tuple(base)
    raise ValueError("no strictly positive direction found")


# ---------------------------------------------------------------------------
# Weyl characters and Kac-type supercharacters


def _even_pairing(alg: SuperalgebraId, lam: Weight, alpha: Weight) -> Fraction:
    """lam evaluated on the coroot of the even root alpha."""
    if alg.family in (al.P, al.Q):
        # even part gl(n); the natural pairing is the coordinate dot
        num = _dot(lam.coords(), alpha.coords())
        den = _dot(alpha.coords(), alpha.coords())
        return 2 * num / den
    return 2 * al.form(alg, lam, alpha) / al.form(alg, alpha, alpha)


def weyl_character(alg: SuperalgebraId, lam0: Weight) -> SuperCharacter:
    """Character of the simple module of the reductive even part.

    Exact alternant quotient over the even Weyl group; raises on
    non-dominant input and on (impossible) inexact division.
    """
    b = borel(alg)
    for alpha in b.delta0_plus:
        pairing = _even_pairing(alg, lam0, alpha)
        if pairing.denominator != 1 or pairing < 0:
            raise ValueError(f"{lam0} is not dominant integral for the even part of {alg}")
    num = SuperCharacter()
    for wmat, det in al.weyl_elements(alg):
        num = num + SuperCharacter.exp(al.apply_matrix(wmat, lam0 + b.rho0), det)
    direction = _generic_direction(alg, b.delta0_plus)
    out = num
    for alpha in b.delta0_plus:
        out = divide_exact(out, -alpha, direction)
    return out.translate(-b.rho0)


def kac_supercharacter(alg: SuperalgebraId, lam: Weight, check: bool = False) -> SuperCharacter:
    """The virtual supercharacter k(lambda).

    Computed as R^{-1} sum_w (-1)^{l(w) + p(w rho - rho)} e^{w(lam+rho)-rho}.
    For gl(m|n) the induced-module product form
    sch L_0(lam) * prod_{odd negative alpha} (1 - e^alpha)
    applies; ``check=True`` computes both and asserts agreement.
    """
    if alg.family == al.GL:
        prod = _kac_product(alg, lam)
        if check:
            alt = _kac_alternant(alg, lam)
            if alt != prod:
                raise AssertionError("product and alternant Kac supercharacters disagree")
        return prod
    if alg.family == al.OSP:
        return _kac_alternant(alg, lam)
    raise ValueError(f"k(lambda) implemented for gl and principal osp, not {alg}")


def _kac_product(alg: SuperalgebraId, lam: Weight) -> SuperCharacter:
    b = borel(alg)
    out = weyl_character(alg, lam)
    for alpha in b.delta1_plus:
        out = out * (SuperCharacter.one(*lam.shape) - SuperCharacter.exp(-alpha))
    return out


def _kac_alternant(alg: SuperalgebraId, lam: Weight) -> SuperCharacter:
    b = borel(alg)
    num = SuperCharacter()
    for wmat, det in al.weyl_elements(alg):
        wrho = al.apply_matrix(wmat, b.rho)
        sign = det * (-1) ** al.weight_parity(alg, wrho - b.rho)
        num = num + SuperCharacter.exp(al.apply_matrix(wmat, lam + b.rho), sign)
    # multiply by R_1 = prod over negative odd roots of (1 - e^alpha)
    for alpha in b.delta1_plus:
        num = num * (SuperCharacter.one(*lam.shape) - SuperCharacter.exp(-alpha))
    direction = _generic_direction(alg, b.delta0_plus)
    out = num
    for alpha in b.delta0_plus:
        out = divide_exact(out, -alpha, direction)
    return out.translate(-b.rho)


def p_kac_supercharacters(n: int, lam0: Weight) -> Tuple[SuperCharacter, SuperCharacter]:
    """(thin, primed) virtual supercharacters for p(n).

    thin = sch L_0(lam) * prod over the lower odd roots of (1 - e^alpha);
    the primed variant carries the extra factor prod_i (1 - e^{-eps_i}).
    """
    alg = al.p_alg(n)
    chi = weyl_character(alg, lam0)
    one = SuperCharacter.one(n, 0)
    thin = chi
    for i in range(n):
        for j in range(i + 1, n):
            alpha = al._e(alg, i) + al._e(alg, j)
            thin = thin * (one - SuperCharacter.exp(-alpha))
    primed = thin
    for i in range(n):
        primed = primed * (one - SuperCharacter.exp(-al._e(alg, i)))
    return thin, primed


# ---------------------------------------------------------------------------
# the restriction homomorphism


@dataclass(frozen=True)
class RestrictionMap:
    """Coordinate projection realising the map on supercharacter rings."""

    alg: SuperalgebraId
    rank: int
    keep_eps: Tuple[int, ...]
    keep_delta: Tuple[int, ...]
    target: SuperalgebraId

    def apply(self, w: Weight) -> Weight:
        return Weight(tuple(w.eps[i] for i in self.keep_eps),
                      tuple(w.delta[j] for j in self.keep_delta))


def restriction_map(alg: SuperalgebraId, r: int) -> RestrictionMap:
    """The canonical rank-r projection.

    gl drops the last r eps and the first r delta coordinates; osp drops
    the last r of each; p(n) drops the last r eps coordinates.
    """
    if r < 0:
        raise ValueError("rank >= 0")
    f = alg.family
    if f == al.GL:
        if r > min(alg.m, alg.n):
            raise ValueError(f"rank {r} too large for {alg}")
        return RestrictionMap(alg, r, tuple(range(alg.m - r)), tuple(range(r, alg.n)),
                              al.gl(alg.m - r, alg.n - r))
    if f == al.OSP:
        k, t = al.osp_principal_kt(alg)
        if r > k:
            raise ValueError(f"rank {r} too large for {alg}")
        ell = 1 if t == 2 else 0
        return RestrictionMap(alg, r, tuple(range(k + ell - r)), tuple(range(k - r)),
                              al.osp(2 * (k - r) + t, 2 * (k - r)))
    if f == al.P:
        if r > alg.n:
            raise ValueError(f"rank {r} too large for {alg}")
        return RestrictionMap(alg, r, tuple(range(alg.n - r)), (), al.p_alg(alg.n - r))
    raise ValueError(f"no canonical restriction for {alg}")


def projection_for_iso_set(alg: SuperalgebraId, iso) -> RestrictionMap:
    """The projection attached to an explicit iso-set (gl and p only).

    Each gl root +-(eps_i - delta_j) removes the pair (i, j); each p(n)
    root removes the eps indices in its support.
    """
    f = alg.family
    if f == al.GL:
        drop_e, drop_d = set(), set()
        for rt in iso.roots:
            i = next(k for k, c in enumerate(rt.weight.eps) if c != 0)
            j = next(k for k, c in enumerate(rt.weight.delta) if c != 0)
            drop_e.add(i)
            drop_d.add(j)
        keep_e = tuple(i for i in range(alg.m) if i not in drop_e)
        keep_d = tuple(j for j in range(alg.n) if j not in drop_d)
        return RestrictionMap(alg, len(iso.roots), keep_e, keep_d,
                              al.gl(len(keep_e), len(keep_d)))
    if f == al.P:
        drop = set()
        for rt in iso.roots:
            drop.update(k for k, c in enumerate(rt.weight.eps) if c != 0)
        keep = tuple(i for i in range(alg.n) if i not in drop)
        return RestrictionMap(alg, len(drop), keep, (), al.p_alg(len(keep)))
    raise ValueError(f"iso-set projections implemented for gl and p, not {alg}")


def ds_restrict(f: SuperCharacter, rmap: RestrictionMap) -> SuperCharacter:
    """The induced map on supercharacters: e^nu -> e^{nu restricted}."""
    out: Dict[Weight, int] = {}
    for w, c in f.terms.items():
        pw = rmap.apply(w)
        out[pw] = out.get(pw, 0) + c
    return SuperCharacter(out)


def ds_restrict_filtered(f: SuperCharacter, rmap: RestrictionMap,
                         beta: Weight) -> SuperCharacter:
    """Diagnostic form of the restriction: drop the nonzero coroot fibers.

    Keeps only terms with (nu, beta) = 0 before projecting.  Agrees with
    ds_restrict on genuine supercharacters of finite-dimensional modules
    (the nonzero fibers cancel in pairs), not on arbitrary ring elements.
    """
    out: Dict[Weight, int] = {}
    for w, c in f.terms.items():
        if al.form(rmap.alg, w, beta) != 0:
            continue
        pw = rmap.apply(w)
        out[pw] = out.get(pw, 0) + c
    return SuperCharacter(out)


# ---------------------------------------------------------------------------
# Taylor order at the identity


def taylor_order(f: SuperCharacter, cap: int) -> Optional[int]:
    """Smallest i <= cap with a nonzero degree-i term of sum m_nu nu(h)^i/i!.

    Returns None when every term up to the cap vanishes (order > cap).
    Exact: works with i! times the homogeneous part.
    """
    if cap < 0:
        raise ValueError("cap >= 0")
    terms = [(w.coords(), c) for w, c in f.terms.items()]
    if not terms:
        return None
    d = len(terms[0][0])
    # powers[j] = dict monomial -> coefficient of nu_j(h)^i, built incrementally
    powers: List[Dict[Tuple[int, ...], Fraction]] = [
        {(0,) * d: Fraction(1)} for _ in terms
    ]
    for i in range(cap + 1):
        if i > 0:
            new_powers = []
            for (coords, _), poly in zip(terms, powers):
                nxt: Dict[Tuple[int, ...], Fraction] = {}
                for mono, val in poly.items():
                    for j, cj in enumerate(coords):
                        if cj:
                            m2 = list(mono)
                            m2[j] += 1
                            key = tuple(m2)
                            nxt[key] = nxt.get(key, 0) + val * cj
                new_powers.append(nxt)
            powers = new_powers
        total: Dict[Tuple[int, ...], Fraction] = {}
        for (_, coeff), poly in zip(terms, powers):
            if not coeff:
                continue
            for mono, val in poly.items():
                total[mono] = total.get(mono, 0) + coeff * val
        if any(v != 0 for v in total.values()):
            return i
    return None
