"""Weight diagrams and arc diagrams for gl(m|n), principal osp, and p(n).

A weight diagram places symbols on the integer line:

* gl(m|n): the index sets of lambda+rho give ``x`` (both sides), ``<``
  (eps side only), ``>`` (delta side only); empty positions are ``o``.
* osp(2k+t|2k), principal block: an ``x`` at every positive entry of the
  a-vector, a stack of ``x``'s at 0 (one per zero entry), a ``>`` at 0
  when t = 2, and a sign in front of the diagram when the weight carries
  one.
* p(n): a bullet at every entry of lambda+rho.

Arcs pair each x (or bullet) with empty positions; removing a maximal
arc is the elementary Duflo-Serganova step on highest weights.  The gl
and p matchings are bracket matchings (x opens rightward, bullet closes
leftward); the osp zero stack is matched bottom-to-top against the
nearest free empty positions, one arc for the bottom x when t < 2 and
two arcs in every other case.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Dict, List, Optional, Tuple, Union

from . import algebras as al
from .algebras import SuperalgebraId
from .weights import Weight


@dataclass(frozen=True)
class GlDiagram:
    m: int
    n: int
    symbols: Tuple[Tuple[int, str], ...]  # (position, one of "x", "<", ">"); "o" implicit

    def as_dict(self) -> Dict[int, str]:
        return dict(self.symbols)

    def counts(self) -> Tuple[int, int, int]:
        d = self.as_dict()
        x = sum(1 for s in d.values() if s == "x")
        lt = sum(1 for s in d.values() if s == "<")
        gt = sum(1 for s in d.values() if s == ">")
        return x, lt, gt


@dataclass(frozen=True)
class OspDiagram:
    k: int
    t: int
    xs: Tuple[int, ...]       # strictly decreasing positive x positions
    tail: int                 # number of x's stacked at position 0
    sign: Optional[int] = None

    def __post_init__(self):
        object.__setattr__(self, "xs", tuple(sorted(self.xs, reverse=True)))
        if len(set(self.xs)) != len(self.xs) or any(p <= 0 for p in self.xs):
            raise ValueError("x positions must be distinct positive integers")
        if len(self.xs) + self.tail != self.k:
            raise ValueError("x count plus tail must equal k")
        if self.sign is not None and not self.sign_required():
            raise ValueError("diagram does not carry a sign")

    def sign_required(self) -> bool:
        if self.k == 0:
            return False
        if self.t == 0:
            return self.tail == 0
        if self.t == 1:
            return self.tail >= 1
        return False


@dataclass(frozen=True)
class PDiagram:
    n: int
    bullets: Tuple[int, ...]  # strictly increasing

    def __post_init__(self):
        object.__setattr__(self, "bullets", tuple(sorted(self.bullets)))
        if len(set(self.bullets)) != self.n:
            raise ValueError("bullets must be n distinct integers")


Diagram = Union[GlDiagram, OspDiagram, PDiagram]


@dataclass(frozen=True)
class Arc:
    """One removable symbol with its empty-position endpoints.

    ``position`` is the x (gl, osp) or bullet (p); ``endpoints`` the
    empty positions it connects to (two of them for osp double arcs);
    ``level`` the height in the osp zero stack, 0 for everything else.
    """

    position: int
    endpoints: Tuple[int, ...]
    level: int = 0

    @property
    def span(self) -> Tuple[int, int]:
        pts = (self.position,) + self.endpoints
        return min(pts), max(pts)


@dataclass(frozen=True)
class ArcDiagram:
    diagram: Diagram
    arcs: Tuple[Arc, ...]
    maximal: Tuple[Arc, ...]


# ---------------------------------------------------------------------------
# weight -> diagram


def gl_weight_diagram(lam: Weight, m: int, n: int) -> GlDiagram:
    alg = al.gl(m, n)
    if not al.is_dominant(alg, lam):
        raise ValueError(f"{lam} is not dominant for {alg}")
    a, b = al.gl_ab(alg, lam)
    sa, sb = set(a), set(b)
    syms = []
    for p in sorted(sa | sb):
        if p in sa and p in sb:
            syms.append((p, "x"))
        elif p in sa:
            syms.append((p, "<"))
        else:
            syms.append((p, ">"))
    return GlDiagram(m, n, tuple(syms))


def osp_weight_diagram(alg: SuperalgebraId, lam: Weight) -> OspDiagram:
    k, t = al.osp_principal_kt(alg)
    a, xi = al.osp_weight_data(alg, lam)
    xs = tuple(x for x in a if x > 0)
    return OspDiagram(k, t, xs, len(a) - len(xs), xi)


def p_weight_diagram(lam: Weight, n: int) -> PDiagram:
    alg = al.p_alg(n)
    if not al.is_dominant(alg, lam):
        raise ValueError(f"{lam} is not dominant for {alg}")
    return PDiagram(n, al.p_a(alg, lam))


def weight_diagram(alg: SuperalgebraId, lam: Weight) -> Diagram:
    if alg.family == al.GL:
        return gl_weight_diagram(lam, alg.m, alg.n)
    if alg.family == al.OSP:
        return osp_weight_diagram(alg, lam)
    if alg.family == al.P:
        return p_weight_diagram(lam, alg.n)
    raise ValueError(f"no weight diagrams for {alg}")


# ---------------------------------------------------------------------------
# diagram -> weight


def diagram_to_weight(diag: Diagram) -> Weight:
    """The unique dominant weight with the given diagram (round-trips)."""
    if isinstance(diag, GlDiagram):
        d = diag.as_dict()
        a = [p for p, s in d.items() if s in ("x", "<")]
        b = [p for p, s in d.items() if s in ("x", ">")]
        if len(a) != diag.m or len(b) != diag.n:
            raise ValueError(f"symbol counts {len(a)}|{len(b)} do not match gl({diag.m}|{diag.n})")
        return al.gl_weight_from_ab(diag.m, diag.n, a, b)
    if isinstance(diag, OspDiagram):
        alg = al.osp(2 * diag.k + diag.t, 2 * diag.k)
        if diag.sign_required() and diag.sign is None:
            raise ValueError("diagram requires a sign but carries none")
        a = tuple(diag.xs) + (0,) * diag.tail
        return al.osp_weight_from_data(alg, a, diag.sign)
    if isinstance(diag, PDiagram):
        return al.p_weight_from_a(diag.n, diag.bullets)
    raise TypeError(type(diag))


def diagram_algebra(diag: Diagram) -> SuperalgebraId:
    if isinstance(diag, GlDiagram):
        return al.gl(diag.m, diag.n)
    if isinstance(diag, OspDiagram):
        return al.osp(2 * diag.k + diag.t, 2 * diag.k)
    if isinstance(diag, PDiagram):
        return al.p_alg(diag.n)
    raise TypeError(type(diag))


# ---------------------------------------------------------------------------
# arcs


def build_arcs(diag: Diagram) -> ArcDiagram:
    if isinstance(diag, GlDiagram):
        arcs = _bracket_match_gl(diag)
    elif isinstance(diag, OspDiagram):
        arcs = _osp_arcs(diag)
    elif isinstance(diag, PDiagram):
        arcs = _bracket_match_p(diag)
    else:
        raise TypeError(type(diag))
    return ArcDiagram(diag, tuple(arcs), tuple(_maximal_arcs(arcs)))


def _bracket_match_gl(diag: GlDiagram) -> List[Arc]:
    d = diag.as_dict()
    xs = sorted(p for p, s in d.items() if s == "x")
    if not xs:
        return []
    arcs: List[Arc] = []
    stack: List[int] = []
    pos = min(d) if d else 0
    while len(arcs) < len(xs):
        sym = d.get(pos, "o")
        if sym == "x":
            stack.append(pos)
        elif sym == "o" and stack:
            arcs.append(Arc(stack.pop(), (pos,)))
        pos += 1
    return arcs


def _bracket_match_p(diag: PDiagram) -> List[Arc]:
    """Bullets close against the nearest free empty position on their left."""
    bullets = set(diag.bullets)
    arcs: List[Arc] = []
    stack: List[int] = []
    lo = min(diag.bullets) - diag.n  # enough empty positions to match every bullet
    for pos in range(lo, max(diag.bullets) + 1):
        if pos in bullets:
            arcs.append(Arc(pos, (stack.pop(),)))
        else:
            stack.append(pos)
    return arcs


def _osp_arcs(diag: OspDiagram) -> List[Arc]:
    on_arc = set()  # positions used as endpoints or carrying a matched x
    arcs: List[Arc] = []
    xs = set(diag.xs)
    # step 1: positive positions, gl-style bracket matching
    stack: List[int] = []
    matched = 0
    pos = 1
    while matched < len(xs):
        if pos in xs:
            stack.append(pos)
        elif stack:
            arcs.append(Arc(stack.pop(), (pos,)))
            on_arc.add(pos)
            matched += 1
        pos += 1
    for a in arcs:
        on_arc.add(a.position)

    def take_free(count: int) -> Tuple[int, ...]:
        found: List[int] = []
        q = 1
        while len(found) < count:
            if q not in xs and q not in on_arc:
                found.append(q)
                on_arc.add(q)
            q += 1
        return tuple(found)

    # step 2: the zero stack, bottom to top
    for level in range(diag.tail):
        double = diag.t == 2 or level > 0
        arcs.append(Arc(0, take_free(2 if double else 1), level=level))
    return arcs


def _contains(outer: Arc, inner: Arc) -> bool:
    if outer == inner:
        return False
    lo, hi = outer.span
    ilo, ihi = inner.span
    if outer.position == 0 and inner.position == 0:
        return inner.level < outer.level
    return lo <= ilo and ihi <= hi


def _maximal_arcs(arcs: List[Arc]) -> List[Arc]:
    return [a for a in arcs if not any(_contains(b, a) for b in arcs)]


def remove_maximal_arc(arcdiag: ArcDiagram, arc: Arc) -> Diagram:
    """Erase the symbol of a maximal arc; the result lives one rank down.

    For a t=0 osp diagram whose reduced form requires a sign, the sign is
    left unresolved (both signed variants are meaningful); t=1 inherits
    the sign of the parent.
    """
    if arc not in arcdiag.maximal:
        raise ValueError(f"{arc} is not a maximal arc")
    diag = arcdiag.diagram
    if isinstance(diag, GlDiagram):
        syms = tuple((p, s) for p, s in diag.symbols if p != arc.position)
        return GlDiagram(diag.m - 1, diag.n - 1, syms)
    if isinstance(diag, OspDiagram):
        if arc.position == 0:
            new = OspDiagram(diag.k - 1, diag.t, diag.xs, diag.tail - 1, None)
        else:
            new = OspDiagram(diag.k - 1, diag.t,
                             tuple(p for p in diag.xs if p != arc.position),
                             diag.tail, None)
        if new.sign_required() and diag.t == 1:
            new = replace(new, sign=diag.sign)
        return new
    if isinstance(diag, PDiagram):
        return PDiagram(diag.n - 1, tuple(p for p in diag.bullets if p != arc.position))
    raise TypeError(type(diag))


# ---------------------------------------------------------------------------
# statistics


def atypicality(alg: SuperalgebraId, lam: Weight) -> int:
    """Number of x symbols in the weight diagram (with zero-stack multiplicity)."""
    if alg.family == al.GL:
        return gl_weight_diagram(lam, alg.m, alg.n).counts()[0]
    if alg.family == al.OSP:
        d = osp_weight_diagram(alg, lam)
        return len(d.xs) + d.tail
    raise ValueError(f"no atypicality via diagrams for {alg}")


def gl_core_reduced_positions(diag: GlDiagram) -> Tuple[int, ...]:
    """x positions after sliding core symbols out to the right.

    Each non-core symbol at position p moves to p - #{core symbols left
    of p}; the result is the diagram of the attached principal-block
    weight of gl(k|k).
    """
    d = diag.as_dict()
    cores = sorted(p for p, s in d.items() if s in ("<", ">"))
    out = []
    for p, s in d.items():
        if s == "x":
            shift = sum(1 for c in cores if c < p)
            out.append(p - shift)
    return tuple(sorted(out))


def dex(alg: SuperalgebraId, lam: Weight) -> int:
    """The parity of the highest weight vector in the normalised simple module."""
    if alg.family == al.GL:
        diag = gl_weight_diagram(lam, alg.m, alg.n)
        pos = gl_core_reduced_positions(diag)
        k = len(pos)
        if k == 0:
            return 0
        lam_bar = al.gl_weight_from_ab(k, k, pos, pos)
        return al.weight_parity(al.gl(k, k), lam_bar)
    if alg.family == al.OSP:
        k, t = al.osp_principal_kt(alg)
        a, _ = al.osp_weight_data(alg, lam)
        ell = 1 if t == 2 else 0
        d = osp_weight_diagram(alg, lam)
        norm = sum(a) - ell * (k - d.tail)
        return norm % 2
    if alg.family == al.P:
        return 0  # highest weight vectors of p(n) simples are even by convention
    raise ValueError(f"no parity normalisation for {alg}")


def free_positions_left(arcdiag: ArcDiagram, arc: Arc) -> int:
    """osp e-statistic: free empty positions strictly left of the removed arc.

    Free means carrying an ``o`` and lying on no arc; position 0 counts
    when it is empty.
    """
    diag = arcdiag.diagram
    if not isinstance(diag, OspDiagram):
        raise TypeError("e-statistic is osp-only")
    occupied = set(diag.xs)
    if diag.tail > 0 or diag.t == 2:
        occupied.add(0)
    for a in arcdiag.arcs:
        occupied.update(a.endpoints)
    return sum(1 for q in range(0, arc.position) if q not in occupied)


def arcs_strictly_right(arcdiag: ArcDiagram, arc: Arc) -> int:
    """p(n) z-statistic: arcs whose span starts beyond the removed arc's span."""
    _, hi = arc.span
    return sum(1 for a in arcdiag.arcs if a.span[0] > hi)


# ---------------------------------------------------------------------------
# rendering


def render(arcdiag_or_diag: Union[ArcDiagram, Diagram]) -> str:
    """Deterministic ASCII picture: arc rows above a symbol row."""
    arcdiag = arcdiag_or_diag
    if not isinstance(arcdiag, ArcDiagram):
        arcdiag = build_arcs(arcdiag)
    diag = arcdiag.diagram

    cells: Dict[int, str] = {}
    sign = ""
    if isinstance(diag, GlDiagram):
        d = diag.as_dict()
        lo = min(d) if d else 0
        hi = max([a.span[1] for a in arcdiag.arcs] + [max(d, default=0)])
        for p in range(lo, hi + 1):
            cells[p] = d.get(p, "o")
    elif isinstance(diag, OspDiagram):
        lo = 0
        hi = max([a.span[1] for a in arcdiag.arcs] + list(diag.xs) + [1])
        for p in range(lo, hi + 1):
            cells[p] = "x" if p in set(diag.xs) else "o"
        if diag.t == 2:
            cells[0] = f"x^{diag.tail}/>" if diag.tail else ">"
        elif diag.tail:
            cells[0] = f"x^{diag.tail}"
        if diag.sign is not None:
            sign = "+ " if diag.sign > 0 else "- "
    else:
        bullets = set(diag.bullets)
        lo = min(a.span[0] for a in arcdiag.arcs) if arcdiag.arcs else min(bullets, default=0)
        hi = max(bullets, default=0)
        for p in range(lo, hi + 1):
            cells[p] = "*" if p in bullets else "o"

    positions = sorted(cells)
    width = max((len(s) for s in cells.values()), default=1) + 2
    col = {p: len(sign) + i * width for i, p in enumerate(positions)}
    total = len(sign) + width * len(positions)

    def depth(a: Arc) -> int:
        return sum(1 for b in arcdiag.arcs if _contains(b, a))

    rows: Dict[int, List[str]] = {}
    for a in arcdiag.arcs:
        r = depth(a)
        row = rows.setdefault(r, [" "] * total)
        lo_c = col[a.span[0]]
        hi_c = col[a.span[1]]
        for c in range(lo_c, hi_c + 1):
            row[c] = "-"
        for pt in (a.position,) + a.endpoints:
            row[col[pt]] = "."
    lines = ["".join(rows[r]).rstrip() for r in sorted(rows)]
    symrow = [" "] * total
    for i, ch in enumerate(sign):
        symrow[i] = ch
    for p in positions:
        for i, ch in enumerate(cells[p]):
            symrow[col[p] + i] = ch
    lines.append("".join(symrow).rstrip())
    return "\n".join(lines)
