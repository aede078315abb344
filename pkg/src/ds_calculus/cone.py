"""Iso-sets, defect, and the orbit geometry of the self-commuting cone.

An iso-set is a linearly independent set A of odd roots such that no sum
of two elements of A u (-A) is an even root.  Orbits of the even Weyl
group on iso-sets classify the even-group orbits on the cone of
self-commuting odd elements; their dimensions and codimensions follow
closed formulas in terms of A-perpendicularity.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple, Union

from . import algebras as al
from .algebras import Root, SuperalgebraId
from .linalg import in_row_span, matrix_rank
from .weights import Weight

DEFECT_TABLE = {
    al.GL: lambda a: min(a.m, a.n),
    al.SL: lambda a: min(a.m, a.n),
    al.OSP: lambda a: min(a.m // 2, a.n),
    al.P: lambda a: a.n,
    al.Q: lambda a: a.n // 2,
    al.D21A: lambda a: 1,
    al.G3: lambda a: 1,
    al.F4: lambda a: 1,
}


def defect(alg: SuperalgebraId) -> int:
    return DEFECT_TABLE[alg.family](alg)


@dataclass(frozen=True)
class IsoSet:
    roots: Tuple[Root, ...]

    def __post_init__(self):
        object.__setattr__(
            self, "roots", tuple(sorted(self.roots, key=lambda r: r.weight.coords()))
        )

    def __len__(self) -> int:
        return len(self.roots)

    def weights(self) -> Tuple[Weight, ...]:
        return tuple(r.weight for r in self.roots)

    def key(self) -> Tuple:
        return tuple(r.weight.coords() for r in self.roots)

    def __str__(self) -> str:
        return "{" + ", ".join(str(r.weight) for r in self.roots) + "}"


def _root_set(roots: Sequence[Root]) -> set:
    return {r.weight.coords() for r in roots}


def _pair_ok(alpha: Weight, beta: Weight, even_set: set) -> bool:
    return ((alpha + beta).coords() not in even_set
            and (alpha - beta).coords() not in even_set)


def enumerate_iso_sets(alg: SuperalgebraId, k: int, check_span: bool = True) -> List[IsoSet]:
    """All iso-sets of size k, canonically ordered, no duplicates.

    ``check_span`` additionally asserts, for the families where it is a
    theorem (basic classical and q(n)), that every root lying in the span
    of A already belongs to A u (-A).
    """
    if k < 0:
        raise ValueError("k must be >= 0")
    if k == 0:
        return [IsoSet(())]
    ev, od = al.roots(alg)
    even_set = _root_set(ev)
    cands = sorted(od, key=lambda r: r.weight.coords())
    out: List[IsoSet] = []

    def extend(chosen: List[Root], rows: List[List[Fraction]], start: int) -> None:
        if len(chosen) == k:
            out.append(IsoSet(tuple(chosen)))
            return
        for idx in range(start, len(cands)):
            cand = cands[idx]
            cw = cand.weight
            if (cw + cw).coords() in even_set:
                continue  # non-isotropic odd root (2 alpha even)
            if any(not _pair_ok(cw, prev.weight, even_set) for prev in chosen):
                continue
            new_rows = rows + [list(cw.coords())]
            if matrix_rank(new_rows) != len(new_rows):
                continue
            chosen.append(cand)
            extend(chosen, new_rows, idx + 1)
            chosen.pop()

    extend([], [], 0)
    if check_span and alg.family not in (al.P,):
        all_roots = list(ev) + list(od)
        for iso in out:
            _assert_span_closure(iso, all_roots)
    return out


def _assert_span_closure(iso: IsoSet, all_roots: Sequence[Root]) -> None:
    rows = [list(w.coords()) for w in iso.weights()]
    members = {w.coords() for w in iso.weights()}
    members |= {(-w).coords() for w in iso.weights()}
    for r in all_roots:
        if r.weight.coords() in members:
            continue
        if in_row_span(rows, list(r.weight.coords())):
            raise AssertionError(f"root {r.weight} lies in span({iso}) but not in A u (-A)")


def max_iso_set_size(alg: SuperalgebraId, cap: int = 16) -> int:
    """Defect by brute enumeration: the largest k with a nonempty S_k."""
    last = 0
    for k in range(1, cap + 1):
        if not enumerate_iso_sets(alg, k, check_span=False):
            break
        last = k
    return last


# ---------------------------------------------------------------------------
# Weyl orbits


@dataclass(frozen=True)
class OrbitDescriptor:
    representative: IsoSet
    size: int
    dimension: Optional[int]


def _orbit_of(alg: SuperalgebraId, iso_key: Tuple, gens) -> set:
    seen = {iso_key}
    frontier = [iso_key]
    while frontier:
        new = []
        for key in frontier:
            ws = [Weight(c[: alg.eps_rank], c[alg.eps_rank:]) for c in key]
            for g in gens:
                moved = tuple(sorted(al.apply_matrix(g, w).coords() for w in ws))
                if moved not in seen:
                    seen.add(moved)
                    new.append(moved)
        frontier = new
    return seen


def w_orbits_on_iso_sets(alg: SuperalgebraId, k: int) -> List[OrbitDescriptor]:
    """Partition of S_k into Weyl orbits, with sizes and orbit dimensions."""
    isos = enumerate_iso_sets(alg, k, check_span=False)
    by_key: Dict[Tuple, IsoSet] = {iso.key(): iso for iso in isos}
    gens = al.weyl_generators(alg)
    remaining = dict(by_key)
    out: List[OrbitDescriptor] = []
    while remaining:
        key = min(remaining)
        orbit = _orbit_of(alg, key, gens)
        unknown = orbit - set(by_key)
        if unknown:
            raise AssertionError("Weyl action left the enumerated iso-sets")
        rep = by_key[min(orbit)]
        try:
            dim = orbit_dimension(alg, rep)
        except (ValueError, al.FormUnavailableError):
            dim = None
        out.append(OrbitDescriptor(rep, len(orbit), dim))
        for okey in orbit:
            remaining.pop(okey, None)
    out.sort(key=lambda d: d.representative.key())
    return out


def a_perp_odd_count(alg: SuperalgebraId, iso: IsoSet) -> int:
    """|Delta_1 intersect A-perp| via coroot pairings (= form pairings here)."""
    _, od = al.roots(alg)
    count = 0
    for r in od:
        if all(al.coroot_pairing(alg, beta, r.weight) == 0 for beta in iso.roots):
            count += 1
    return count


def orbit_dimension(alg: SuperalgebraId, iso: IsoSet) -> int:
    """dim of the cone orbit attached to A: |Delta_1 \\ A-perp|/2 + |A|."""
    if alg.family not in al.BASIC_FAMILIES:
        raise al.FormUnavailableError(f"orbit dimension needs the invariant form; {alg} has none")
    # both the coroot-kernel and the form-orthogonality descriptions of
    # A-perp are the same computation for isotropic roots (form duals)
    n_odd = len(al.roots(alg)[1])
    perp = a_perp_odd_count(alg, iso)
    num = n_odd - perp
    if num % 2 != 0:
        raise AssertionError("odd |Delta_1 \\ A-perp|")
    return num // 2 + len(iso)


def all_odd_isotropic(alg: SuperalgebraId) -> bool:
    try:
        return all(r.isotropic for r in al.roots(alg)[1]) and alg.family in al.BASIC_FAMILIES
    except al.FormUnavailableError:
        return False


def cone_dimension(alg: SuperalgebraId) -> int:
    """dim X = |Delta_1|/2 for the families whose odd roots are all isotropic."""
    if not all_odd_isotropic(alg):
        raise ValueError(f"dim X = |Delta_1|/2 needs all odd roots isotropic; not true for {alg}")
    return len(al.roots(alg)[1]) // 2


def orbit_codimension(alg: SuperalgebraId, iso: IsoSet) -> int:
    """codim of the orbit of A inside the cone: |Delta_1 n A-perp|/2 - |A|."""
    if not all_odd_isotropic(alg):
        raise ValueError(f"codimension formula needs all odd roots isotropic; not true for {alg}")
    perp = a_perp_odd_count(alg, iso)
    if perp % 2 != 0:
        raise AssertionError("odd |Delta_1 n A-perp|")
    return perp // 2 - len(iso)


# ---------------------------------------------------------------------------
# rank and the reduced algebra g_x


def _p_two_eps_count(iso: IsoSet) -> int:
    count = 0
    for r in iso.roots:
        nz = [c for c in r.weight.eps if c != 0]
        if len(nz) == 1 and nz[0] == 2:
            count += 1
    return count


def rank_of(alg: SuperalgebraId, iso: IsoSet) -> int:
    k = len(iso)
    if k == 0:
        return 0
    if alg.family in (al.D21A, al.G3, al.F4):
        return 1
    if alg.family == al.P:
        return 2 * k - _p_two_eps_count(iso)
    return k


def rank_and_gx(alg: SuperalgebraId,
                iso_or_pair: Union[IsoSet, Tuple[int, int]]) -> Tuple[int, SuperalgebraId]:
    """(rank x, g_x) for x built from an iso-set (or a p(n) orbit pair (r, s))."""
    if isinstance(iso_or_pair, tuple):
        if alg.family != al.P:
            raise ValueError("orbit pairs (r, s) only parameterise p(n) orbits")
        r, s = iso_or_pair
        iso = p_orbit_iso_set(alg.n, r, s)
    else:
        iso = iso_or_pair
    rk = rank_of(alg, iso)
    if rk > defect(alg):
        raise ValueError(f"rank {rk} exceeds the defect of {alg}")
    f = alg.family
    k = len(iso)
    if f == al.GL:
        return rk, al.gl(alg.m - k, alg.n - k)
    if f == al.SL:
        return rk, al.sl(alg.m - k, alg.n - k)
    if f == al.OSP:
        return rk, al.osp(alg.m - 2 * k, 2 * (alg.n - k))
    if f == al.P:
        return rk, al.p_alg(alg.n - rk)
    if f == al.Q:
        return rk, al.q_alg(alg.n - 2 * k)
    if f == al.D21A:
        return rk, al.gl(1, 0)  # g_x = C, the 1-dim torus
    if f == al.F4:
        return rk, al.sl(3, 0)
    if f == al.G3:
        return rk, al.sl(2, 0)
    raise ValueError(f"unsupported family {f}")


def p_orbit_representatives(n: int) -> List[Tuple[Tuple[int, int], IsoSet]]:
    """All p(n) orbit labels (r, s) with r + 2s <= n and their representatives."""
    if n < 1:
        raise ValueError("n >= 1")
    out = []
    for s in range(0, n // 2 + 1):
        for r in range(0, n - 2 * s + 1):
            out.append(((r, s), p_orbit_iso_set(n, r, s)))
    out.sort(key=lambda t: (t[0][0] + 2 * t[0][1], t[0]))
    return out


def p_orbit_iso_set(n: int, r: int, s: int) -> IsoSet:
    """The explicit representative: r roots 2eps_j plus s roots -(eps_i + eps_{i+1})."""
    if r < 0 or s < 0 or r + 2 * s > n:
        raise ValueError(f"(r, s) = ({r}, {s}) needs r + 2s <= {n}")
    alg = al.p_alg(n)
    _, od = al.roots(alg)
    by_coords = {rt.weight.coords(): rt for rt in od}
    chosen = []
    for j in range(r):
        w = al._e(alg, j).scale(2)
        chosen.append(by_coords[w.coords()])
    for i in range(s):
        w = -(al._e(alg, r + 2 * i) + al._e(alg, r + 2 * i + 1))
        chosen.append(by_coords[w.coords()])
    return IsoSet(tuple(chosen))
