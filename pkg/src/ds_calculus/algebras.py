"""Root data for the classical Lie superalgebras.

Covers gl(m|n), sl(m|n) (m != n), osp(m|2n), p(n), q(n), D(2|1;a) with
rational 0 < a < 1, G(3) and F(4): root lists with parities and isotropy,
the invariant bilinear form where one exists, the fixed Weyl vectors used
by the diagram calculus, dominance tests, weight parity, and Weyl group
generators realised as exact matrices on eps/delta coordinates.

Coordinate conventions: gl/sl use eps_1..eps_m, delta_1..delta_n; osp(m|2n)
uses eps_1..eps_l (l = floor(m/2)) and delta_1..delta_n; p(n)/q(n) use
eps_1..eps_n; D(2|1;a) uses eps_1..eps_3; G(3) uses eps_1, eps_2 (with
eps_3 = -eps_1-eps_2 eliminated) and delta; F(4) uses eps_1..eps_3, delta.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import List, Optional, Sequence, Tuple

from .weights import HALF, Weight, weight, zero_weight

GL, SL, OSP, P, Q, D21A, G3, F4 = "gl", "sl", "osp", "p", "q", "D21a", "G3", "F4"

BASIC_FAMILIES = (GL, SL, OSP, D21A, G3, F4)


class FormUnavailableError(ValueError):
    """Raised when the invariant bilinear form does not exist (p(n), q(n))."""


@dataclass(frozen=True)
class SuperalgebraId:
    family: str
    m: int = 0
    n: int = 0
    a: Optional[Fraction] = None  # D(2|1;a) parameter, in lowest terms

    def __post_init__(self):
        f = self.family
        if f in (GL, SL):
            if self.m < 0 or self.n < 0:
                raise ValueError(f"bad {f}({self.m}|{self.n})")
            if f == SL and self.m == self.n:
                raise ValueError("sl(n|n) is outside the supported list; use gl(n|n)")
        elif f == OSP:
            # stored as osp(m|2n)
            if self.m < 0 or self.n < 0:
                raise ValueError(f"bad osp({self.m}|{2 * self.n})")
        elif f in (P, Q):
            # n = 0 is the zero algebra, allowed as a DS target
            if self.n < 0:
                raise ValueError(f"bad {f}({self.n})")
        elif f == D21A:
            if self.a is None or not (0 < self.a < 1):
                raise ValueError("D(2|1;a) requires a rational parameter 0 < a < 1")
        elif f in (G3, F4):
            pass
        else:
            raise ValueError(f"unknown family {f!r}")

    @property
    def eps_rank(self) -> int:
        return {GL: self.m, SL: self.m, OSP: self.m // 2, P: self.n, Q: self.n,
                D21A: 3, G3: 2, F4: 3}[self.family]

    @property
    def delta_rank(self) -> int:
        return {GL: self.n, SL: self.n, OSP: self.n, P: 0, Q: 0,
                D21A: 0, G3: 1, F4: 1}[self.family]

    @property
    def dim_cartan(self) -> int:
        return self.eps_rank + self.delta_rank

    def zero(self) -> Weight:
        return zero_weight(self.eps_rank, self.delta_rank)

    def __str__(self) -> str:
        f = self.family
        if f in (GL, SL):
            return f"{f}({self.m}|{self.n})"
        if f == OSP:
            return f"osp({self.m}|{2 * self.n})"
        if f in (P, Q):
            return f"{f}({self.n})"
        if f == D21A:
            return f"D(2|1;{self.a})"
        return "G(3)" if f == G3 else "F(4)"


def gl(m: int, n: int) -> SuperalgebraId:
    return SuperalgebraId(GL, m=m, n=n)


def sl(m: int, n: int) -> SuperalgebraId:
    return SuperalgebraId(SL, m=m, n=n)


def osp(m: int, two_n: int) -> SuperalgebraId:
    if two_n % 2 != 0:
        raise ValueError(f"osp({m}|{two_n}): symplectic side must be even")
    return SuperalgebraId(OSP, m=m, n=two_n // 2)


def p_alg(n: int) -> SuperalgebraId:
    return SuperalgebraId(P, n=n)


def q_alg(n: int) -> SuperalgebraId:
    return SuperalgebraId(Q, n=n)


def d21a(num, den=1) -> SuperalgebraId:
    return SuperalgebraId(D21A, a=Fraction(num, den))


def g3() -> SuperalgebraId:
    return SuperalgebraId(G3)


def f4() -> SuperalgebraId:
    return SuperalgebraId(F4)


_ALG_RE = re.compile(r"^\s*(gl|sl|osp)\s*\(\s*(\d+)\s*\|\s*(\d+)\s*\)\s*$")
_PQ_RE = re.compile(r"^\s*([pq])\s*\(\s*(\d+)\s*\)\s*$")
_D_RE = re.compile(r"^\s*D\s*\(\s*2\s*\|\s*1\s*;\s*(-?\d+)\s*(?:/\s*(\d+))?\s*\)\s*$")


def parse_algebra(text: str) -> SuperalgebraId:
    """Parse algebra spec strings like "gl(6|7)", "osp(11|10)", "p(9)", "D(2|1;1/2)"."""
    m = _ALG_RE.match(text)
    if m:
        fam, x, y = m.group(1), int(m.group(2)), int(m.group(3))
        if fam == OSP:
            return osp(x, y)
        return SuperalgebraId(fam, m=x, n=y)
    m = _PQ_RE.match(text)
    if m:
        return SuperalgebraId(m.group(1), n=int(m.group(2)))
    m = _D_RE.match(text)
    if m:
        return d21a(int(m.group(1)), int(m.group(2) or 1))
    s = text.strip()
    if s in ("G(3)", "G3"):
        return g3()
    if s in ("F(4)", "F4"):
        return f4()
    raise ValueError(f"cannot parse algebra spec {text!r}")


# ---------------------------------------------------------------------------
# roots


@dataclass(frozen=True)
class Root:
    weight: Weight
    parity: int
    isotropic: bool
    both_parities: bool = False  # q(n): every root space has both parities

    def __neg__(self) -> "Root":
        return Root(-self.weight, self.parity, self.isotropic, self.both_parities)


def _e(alg: SuperalgebraId, i: int) -> Weight:
    v = [Fraction(0)] * alg.eps_rank
    v[i] = Fraction(1)
    return Weight(tuple(v), (Fraction(0),) * alg.delta_rank)


def _d(alg: SuperalgebraId, j: int) -> Weight:
    v = [Fraction(0)] * alg.delta_rank
    v[j] = Fraction(1)
    return Weight((Fraction(0),) * alg.eps_rank, tuple(v))


def _is_isotropic(alg: SuperalgebraId, w: Weight) -> bool:
    try:
        return form(alg, w, w) == 0
    except FormUnavailableError:
        # p(n), q(n): no invariant form; every root usable in an iso-set
        # is flagged isotropic by convention.
        return True


@lru_cache(maxsize=None)
def roots(alg: SuperalgebraId) -> Tuple[Tuple[Root, ...], Tuple[Root, ...]]:
    """All roots of ``alg`` as (even list, odd list).

    For q(n) each root appears once in both lists, carrying the
    both_parities flag.
    """
    even: List[Weight] = []
    odd: List[Weight] = []
    f = alg.family
    if f in (GL, SL):
        m, n = alg.m, alg.n
        for i in range(m):
            for j in range(m):
                if i != j:
                    even.append(_e(alg, i) - _e(alg, j))
        for i in range(n):
            for j in range(n):
                if i != j:
                    even.append(_d(alg, i) - _d(alg, j))
        for i in range(m):
            for j in range(n):
                odd.append(_e(alg, i) - _d(alg, j))
                odd.append(_d(alg, j) - _e(alg, i))
    elif f == OSP:
        l, n = alg.m // 2, alg.n
        for i in range(l):
            for j in range(i + 1, l):
                for s in (1, -1):
                    even.append(_e(alg, i) + _e(alg, j).scale(s))
                    even.append(-(_e(alg, i) + _e(alg, j).scale(s)))
        if alg.m % 2 == 1:
            for i in range(l):
                even.append(_e(alg, i))
                even.append(-_e(alg, i))
        for i in range(n):
            for j in range(i + 1, n):
                for s in (1, -1):
                    even.append(_d(alg, i) + _d(alg, j).scale(s))
                    even.append(-(_d(alg, i) + _d(alg, j).scale(s)))
            even.append(_d(alg, i).scale(2))
            even.append(_d(alg, i).scale(-2))
        for i in range(l):
            for j in range(n):
                for s in (1, -1):
                    odd.append(_e(alg, i) + _d(alg, j).scale(s))
                    odd.append(-(_e(alg, i) + _d(alg, j).scale(s)))
        if alg.m % 2 == 1:
            for j in range(n):
                odd.append(_d(alg, j))
                odd.append(-_d(alg, j))
    elif f == P:
        n = alg.n
        for i in range(n):
            for j in range(n):
                if i != j:
                    even.append(_e(alg, i) - _e(alg, j))
        for i in range(n):
            for j in range(i, n):
                odd.append(_e(alg, i) + _e(alg, j))  # upper block, symmetric
        for i in range(n):
            for j in range(i + 1, n):
                odd.append(-(_e(alg, i) + _e(alg, j)))  # lower block, skew
    elif f == Q:
        n = alg.n
        both = []
        for i in range(n):
            for j in range(n):
                if i != j:
                    both.append(_e(alg, i) - _e(alg, j))
        ev = tuple(Root(w, 0, True, both_parities=True) for w in both)
        od = tuple(Root(w, 1, True, both_parities=True) for w in both)
        return ev, od
    elif f == D21A:
        for i in range(3):
            even.append(_e(alg, i).scale(2))
            even.append(_e(alg, i).scale(-2))
        for s1 in (1, -1):
            for s2 in (1, -1):
                for s3 in (1, -1):
                    odd.append(_e(alg, 0).scale(s1) + _e(alg, 1).scale(s2) + _e(alg, 2).scale(s3))
    elif f == G3:
        # G2 part in eps_1, eps_2 coordinates with eps_3 = -eps_1-eps_2.
        e1, e2 = _e(alg, 0), _e(alg, 1)
        e3 = -(e1 + e2)
        shorts = [e1, e2, e3]
        longs = [e1 - e2, e2 - e3, e1 - e3]
        for r in shorts + longs:
            even.append(r)
            even.append(-r)
        dl = _d(alg, 0)
        even.append(dl.scale(2))
        even.append(dl.scale(-2))
        for r in shorts:
            for s in (1, -1):
                odd.append(r + dl.scale(s))
                odd.append(-(r + dl.scale(s)))
        odd.append(dl)
        odd.append(-dl)
    elif f == F4:
        for i in range(3):
            for j in range(i + 1, 3):
                for s in (1, -1):
                    even.append(_e(alg, i) + _e(alg, j).scale(s))
                    even.append(-(_e(alg, i) + _e(alg, j).scale(s)))
            even.append(_e(alg, i))
            even.append(-_e(alg, i))
        dl = _d(alg, 0)
        even.append(dl)
        even.append(-dl)
        for s1 in (1, -1):
            for s2 in (1, -1):
                for s3 in (1, -1):
                    for s4 in (1, -1):
                        odd.append((_e(alg, 0).scale(s1) + _e(alg, 1).scale(s2)
                                    + _e(alg, 2).scale(s3) + dl.scale(s4)).scale(HALF))
    else:  # pragma: no cover
        raise ValueError(f"unsupported family {f}")
    ev = tuple(Root(w, 0, False) for w in even)
    od = tuple(Root(w, 1, _is_isotropic(alg, w)) for w in odd)
    return ev, od


def even_roots(alg: SuperalgebraId) -> Tuple[Root, ...]:
    return roots(alg)[0]


def odd_roots(alg: SuperalgebraId) -> Tuple[Root, ...]:
    return roots(alg)[1]


# ---------------------------------------------------------------------------
# invariant form


@lru_cache(maxsize=None)
def gram(alg: SuperalgebraId) -> Tuple[Tuple[Fraction, ...], ...]:
    """Gram matrix of the invariant form on eps+delta coordinates."""
    f = alg.family
    d = alg.dim_cartan
    if f in (GL, SL, OSP):
        diag = [Fraction(1)] * alg.eps_rank + [Fraction(-1)] * alg.delta_rank
    elif f == D21A:
        a = alg.a
        diag = [-(1 + a) / 2, Fraction(1, 2), a / 2]
    elif f == G3:
        g = [[Fraction(0)] * 3 for _ in range(3)]
        g[0][0] = g[1][1] = Fraction(2)
        g[0][1] = g[1][0] = Fraction(-1)
        g[2][2] = Fraction(-2)
        return tuple(tuple(row) for row in g)
    elif f == F4:
        diag = [Fraction(1)] * 3 + [Fraction(-3)]
    else:
        raise FormUnavailableError(f"{alg} has no invariant bilinear form")
    g = [[Fraction(0)] * d for _ in range(d)]
    for i, v in enumerate(diag):
        g[i][i] = v
    return tuple(tuple(row) for row in g)


def form(alg: SuperalgebraId, mu: Weight, nu: Weight) -> Fraction:
    """The invariant symmetric bilinear form (mu, nu); exact."""
    g = gram(alg)
    u, v = mu.coords(), nu.coords()
    total = Fraction(0)
    for i, ui in enumerate(u):
        if ui:
            row = g[i]
            for j, vj in enumerate(v):
                if vj and row[j]:
                    total += ui * row[j] * vj
    return total


def coroot_pairing(alg: SuperalgebraId, beta: Root, mu: Weight) -> Fraction:
    """mu evaluated on the coroot of ``beta``.

    Basic classical: isotropic coroots are form-duals, so the pairing is
    (mu, beta); non-isotropic coroots give 2(mu,beta)/(beta,beta).  For
    q(n) the coroot of eps_i - eps_j is the formal datum h_i + h_j, the
    convention that makes coroots Weyl-equivariant.
    """
    if alg.family == Q:
        i = next(k for k, c in enumerate(beta.weight.eps) if c == 1)
        j = next(k for k, c in enumerate(beta.weight.eps) if c == -1)
        return mu.eps[i] + mu.eps[j]
    b = form(alg, beta.weight, beta.weight)
    if b == 0:
        return form(alg, mu, beta.weight)
    return 2 * form(alg, mu, beta.weight) / b


# ---------------------------------------------------------------------------
# Weyl vectors, dominance, parity (the fixed Borel choices of the calculus)


def osp_principal_kt(alg: SuperalgebraId) -> Tuple[int, int]:
    """(k, t) for osp(2k+t|2k) with t in {0,1,2}; rejects other osp shapes."""
    if alg.family != OSP:
        raise ValueError(f"{alg} is not osp")
    k = alg.n
    t = alg.m - 2 * k
    if t not in (0, 1, 2):
        raise ValueError(f"{alg} is not of principal-block shape osp(2k+t|2k)")
    return k, t


def rho(alg: SuperalgebraId) -> Weight:
    """The fixed Weyl vector of the diagram calculus for gl, principal osp, p, q."""
    f = alg.family
    if f == GL:
        m, n = alg.m, alg.n
        eps = [Fraction(-(i)) for i in range(m)]
        delta = [Fraction(m - 1 - j) for j in range(n)]
        return weight(eps, delta)
    if f == OSP:
        k, t = osp_principal_kt(alg)
        if t == 1:
            return Weight((-HALF,) * k, (HALF,) * k)
        return alg.zero()
    if f == P:
        return weight([Fraction(i) for i in range(alg.n)])
    if f == Q:
        return alg.zero()
    raise ValueError(f"no fixed Borel convention for {alg}")


def weight_parity(alg: SuperalgebraId, mu: Weight) -> int:
    """Parity of a weight in the root lattice: delta-part mod 2.

    gl/sl/osp count delta coefficients mod 2; G(3) likewise; F(4) works
    on the half-integral lattice where delta/2 is odd; D(2|1;a) counts
    all coordinates (every odd root has coordinate sum 3 there).
    """
    f = alg.family
    if f in (GL, SL, OSP, G3):
        s = sum(mu.delta)
        if s.denominator != 1:
            raise ValueError(f"non-integral delta-part in {mu}")
        return int(s) % 2
    if f == F4:
        s = sum(mu.delta) * 2
        if s.denominator != 1:
            raise ValueError(f"{mu} not in the half-integral lattice")
        return int(s) % 2
    if f == D21A:
        s = sum(mu.eps)
        if s.denominator != 1:
            raise ValueError(f"non-integral coordinates in {mu}")
        return int(s) % 2
    raise ValueError(f"no parity homomorphism on the weight lattice of {alg}")


def gl_ab(alg: SuperalgebraId, lam: Weight) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
    """(a_1..a_m, b_1..b_n) with lam+rho = sum a_i eps_i - sum b_j delta_j."""
    if alg.family != GL:
        raise ValueError("gl only")
    lr = lam + rho(alg)
    if not lr.is_integral():
        raise ValueError(f"{lam} is not integral for {alg}")
    a = tuple(int(c) for c in lr.eps)
    b = tuple(int(-c) for c in lr.delta)
    return a, b


def gl_weight_from_ab(m: int, n: int, a: Sequence[int], b: Sequence[int]) -> Weight:
    """Dominant gl(m|n) weight with the given index sets (a decreasing, b increasing)."""
    a = tuple(sorted(a, reverse=True))
    b = tuple(sorted(b))
    alg = gl(m, n)
    lr = weight([Fraction(x) for x in a], [Fraction(-x) for x in b])
    return lr - rho(alg)


def osp_weight_data(alg: SuperalgebraId, lam: Weight) -> Tuple[Tuple[int, ...], Optional[int]]:
    """(a_1..a_k, xi) for a principal-block dominant osp weight; raises otherwise.

    a is ordered with the distinct positive entries strictly decreasing,
    zeros at the end.  xi is +1/-1 when the weight carries a sign, None
    otherwise.
    """
    k, t = osp_principal_kt(alg)
    if not lam.is_integral():
        raise ValueError(f"{lam} is not integral for {alg}")
    a = tuple(int(c) for c in lam.delta)
    pos = [x for x in a if x > 0]
    zeros = len([x for x in a if x == 0])
    if min(a, default=0) < 0 or pos + [0] * zeros != list(a):
        raise ValueError(f"{lam}: delta-part not (decreasing positives, zeros)")
    if any(pos[i] <= pos[i + 1] for i in range(len(pos) - 1)):
        raise ValueError(f"{lam}: positive entries not strictly decreasing")
    tail = zeros
    xi: Optional[int] = None
    if t == 0 and tail == 0 and k >= 1:
        q = Fraction(lam.eps[k - 1], a[k - 1])
        if q not in (1, -1):
            raise ValueError(f"{lam}: bad sign coordinate")
        xi = int(q)
    if t == 1 and tail >= 1:
        s = len(pos)  # 0-based index of the sign slot
        c = lam.eps[s]
        if c == 1:
            xi = 1
        elif c == 0:
            xi = -1
        else:
            raise ValueError(f"{lam}: bad sign coordinate")
    expected = osp_weight_from_data(alg, a, xi)
    if expected != lam:
        raise ValueError(f"{lam} is not in the principal dominant set of {alg}")
    return a, xi


def osp_weight_from_data(alg: SuperalgebraId, a: Sequence[int],
                         xi: Optional[int]) -> Weight:
    """Inverse of osp_weight_data: rebuild lambda from (a, xi)."""
    k, t = osp_principal_kt(alg)
    a = tuple(a)
    if len(a) != k:
        raise ValueError(f"need {k} entries, got {len(a)}")
    pos = [x for x in a if x > 0]
    tail = k - len(pos)
    ell = 1 if t == 2 else 0
    eps = [Fraction(0)] * (k + ell)
    delta = [Fraction(x) for x in a]
    lr_eps: List[Fraction] = [Fraction(0)] * (k + ell)
    lr_delta: List[Fraction] = [Fraction(0)] * k
    if t == 0:
        for i, x in enumerate(a):
            lr_delta[i] = Fraction(x)
            lr_eps[i] = Fraction(x)
        if tail == 0 and k >= 1:
            if xi not in (1, -1):
                raise ValueError("sign required for t=0 with no zeros")
            lr_eps[k - 1] = Fraction(xi * a[k - 1])
        rho_w = alg.zero()
    elif t == 2:
        for i, x in enumerate(a):
            lr_delta[i] = Fraction(x)
            lr_eps[i] = Fraction(x)
        rho_w = alg.zero()
    else:  # t == 1
        s = len(pos)
        for i, x in enumerate(pos):
            lr_eps[i] = x + HALF
            lr_delta[i] = x + HALF
        for i in range(s, k):
            lr_delta[i] = HALF
            lr_eps[i] = -HALF
        if tail >= 1:
            if xi not in (1, -1):
                raise ValueError("sign required for t=1 with zeros")
            lr_eps[s] = HALF * xi
        rho_w = rho(alg)
    lr = Weight(tuple(lr_eps), tuple(lr_delta))
    lam = lr - rho_w
    # consistency of the raw coordinates
    if tuple(lam.delta) != tuple(Fraction(x) for x in a):
        raise AssertionError("internal: delta part mismatch")
    return lam


def p_a(alg: SuperalgebraId, lam: Weight) -> Tuple[int, ...]:
    """(a_1 < ... < a_n) with lam+rho = sum a_i eps_i for dominant p(n) weights."""
    if alg.family != P:
        raise ValueError("p(n) only")
    lr = lam + rho(alg)
    if not lr.is_integral():
        raise ValueError(f"{lam} is not integral for {alg}")
    return tuple(int(c) for c in lr.eps)


def p_weight_from_a(n: int, a: Sequence[int]) -> Weight:
    a = tuple(sorted(a))
    alg = p_alg(n)
    return weight([Fraction(x) for x in a]) - rho(alg)


def is_dominant(alg: SuperalgebraId, lam: Weight) -> bool:
    """Membership in the dominant set used by the diagram calculus.

    gl: a strictly decreasing and b strictly increasing (the printed
    diagram examples force the increasing direction for b); osp: the
    principal-block set; p: a strictly increasing.
    """
    f = alg.family
    try:
        if f == GL:
            a, b = gl_ab(alg, lam)
            return (all(a[i] > a[i + 1] for i in range(len(a) - 1))
                    and all(b[j] < b[j + 1] for j in range(len(b) - 1)))
        if f == OSP:
            osp_weight_data(alg, lam)
            return True
        if f == P:
            a = p_a(alg, lam)
            return all(a[i] < a[i + 1] for i in range(len(a) - 1))
    except ValueError:
        return False
    raise ValueError(f"no dominance test for {alg}")


# ---------------------------------------------------------------------------
# Weyl groups

Matrix = Tuple[Tuple[Fraction, ...], ...]


def _identity(d: int) -> Matrix:
    return tuple(tuple(Fraction(int(i == j)) for j in range(d)) for i in range(d))


def _perm_matrix(d: int, i: int, j: int) -> Matrix:
    rows = [[Fraction(int(r == c)) for c in range(d)] for r in range(d)]
    rows[i][i] = rows[j][j] = Fraction(0)
    rows[i][j] = rows[j][i] = Fraction(1)
    return tuple(tuple(r) for r in rows)


def _reflection_matrix(alg: SuperalgebraId, alpha: Weight) -> Matrix:
    """s_alpha(mu) = mu - 2(mu,alpha)/(alpha,alpha) alpha, on coordinates."""
    g = gram(alg)
    d = alg.dim_cartan
    ac = alpha.coords()
    norm = form(alg, alpha, alpha)
    galpha = [sum(g[i][j] * ac[j] for j in range(d)) for i in range(d)]
    rows = []
    for i in range(d):
        row = []
        for j in range(d):
            val = Fraction(int(i == j)) - 2 * ac[i] * galpha[j] / norm
            row.append(val)
        rows.append(tuple(row))
    return tuple(rows)


def apply_matrix(mat: Matrix, w: Weight) -> Weight:
    c = w.coords()
    d = len(c)
    out = [sum(mat[i][j] * c[j] for j in range(d) if c[j]) for i in range(d)]
    ne = len(w.eps)
    return Weight(tuple(out[:ne]), tuple(out[ne:]))


@lru_cache(maxsize=None)
def weyl_generators(alg: SuperalgebraId) -> Tuple[Matrix, ...]:
    """Generating set for the Weyl group of the even part, as matrices."""
    f = alg.family
    d = alg.dim_cartan
    gens: List[Matrix] = []
    if f in (GL, SL):
        m, n = alg.m, alg.n
        for i in range(m - 1):
            gens.append(_perm_matrix(d, i, i + 1))
        for j in range(n - 1):
            gens.append(_perm_matrix(d, m + j, m + j + 1))
    elif f == OSP:
        l, n = alg.m // 2, alg.n
        for i in range(l - 1):
            gens.append(_perm_matrix(d, i, i + 1))
        if alg.m % 2 == 1 and l >= 1:
            gens.append(_reflection_matrix(alg, _e(alg, l - 1)))
        if alg.m % 2 == 0 and l >= 2:
            gens.append(_reflection_matrix(alg, _e(alg, l - 2) + _e(alg, l - 1)))
        for j in range(n - 1):
            gens.append(_perm_matrix(d, l + j, l + j + 1))
        if n >= 1:
            gens.append(_reflection_matrix(alg, _d(alg, n - 1).scale(2)))
    elif f in (P, Q):
        for i in range(alg.n - 1):
            gens.append(_perm_matrix(d, i, i + 1))
    else:
        for r in even_roots(alg):
            gens.append(_reflection_matrix(alg, r.weight))
    return tuple(gens)


@lru_cache(maxsize=None)
def weyl_elements(alg: SuperalgebraId, limit: int = 200000) -> Tuple[Tuple[Matrix, int], ...]:
    """Full Weyl group as (matrix, det) pairs; det = (-1)^length."""
    from .linalg import mat_det, mat_mul

    gens = weyl_generators(alg)
    ident = _identity(alg.dim_cartan)
    seen = {ident}
    frontier = [ident]
    while frontier:
        new = []
        for w in frontier:
            for gmat in gens:
                prod = tuple(tuple(row) for row in mat_mul(gmat, w))
                if prod not in seen:
                    seen.add(prod)
                    new.append(prod)
                    if len(seen) > limit:
                        raise ValueError(f"Weyl group of {alg} too large to enumerate")
        frontier = new
    out = []
    for w in sorted(seen):
        det = mat_det(w)
        if det not in (1, -1):
            raise AssertionError("Weyl matrix with |det| != 1")
        out.append((w, int(det)))
    return tuple(out)
