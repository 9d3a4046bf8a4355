"""Semimodules over a numerical semigroup.

A semimodule here is a subset D of the naturals with D + S contained in D,
stored normalized (0 is a member) through its unique minimal generating set,
which is a lean set: all pairwise differences of generators are gaps of the
base semigroup.  For a two-generator base the generators trace a staircase
path in the gap lattice whose opposite corners are the minimal generators of
the syzygy module; that correspondence drives the closed-form conductor and
delta computations, each of which is kept separate from the direct scans so
the two can be compared.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import EmptyInput, NotTwoGenerated, PrincipalModule
from .semigroup import NumericalSemigroup


class GammaSemimodule:
    """Normalized semimodule with cached direct-scan invariants."""

    __slots__ = ("base", "min_generators", "conductor", "delta", "_mask", "_gapmask", "_gap_list")

    def __init__(self, base: NumericalSemigroup, min_generators):
        self.base = base
        self.min_generators = tuple(min_generators)
        c = base.conductor
        full = (1 << c) - 1
        table = base.member_mask(c)
        mask = 0
        for g in self.min_generators:
            mask |= (table << g) & full
        gapmask = ~mask & full
        self._mask = mask
        self._gapmask = gapmask
        self._gap_list = None
        self.conductor = gapmask.bit_length()
        self.delta = (mask & ((1 << self.conductor) - 1)).bit_count()

    @property
    def gap_list(self):
        """Naturals missing from the module, ascending."""
        if self._gap_list is None:
            self._gap_list = tuple(_bits(self._gapmask))
        return self._gap_list

    @property
    def ed(self) -> int:
        """Embedding dimension: the number of minimal generators."""
        return len(self.min_generators)

    def member(self, x: int) -> bool:
        if x < 0:
            return False
        if x >= self.base.conductor:
            return True
        return bool((self._mask >> x) & 1)

    __contains__ = member

    def lattice_points(self):
        """Lattice cells of the nonzero generators (two-generator base only)."""
        T = self.base.two_gen()
        return tuple(T.gap_to_lattice(g) for g in self.min_generators if g != 0)

    def __eq__(self, other):
        return (
            isinstance(other, GammaSemimodule)
            and self.base == other.base
            and self.min_generators == other.min_generators
        )

    def __hash__(self):
        return hash((self.base, self.min_generators))

    def __repr__(self):
        return f"GammaSemimodule({self.base!r}, {list(self.min_generators)})"


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def make_semimodule(S: NumericalSemigroup, generators) -> GammaSemimodule:
    """Normalize a generating set and reduce it to the minimal lean system."""
    if not generators:
        raise EmptyInput("need at least one generator")
    base = min(generators)
    values = sorted(set(g - base for g in generators))
    keep = []
    for x in values:
        if not any(S.contains(x - k) for k in keep):
            keep.append(x)
    if len(S.generators) == 2 and len(keep) > 1:
        T = S.two_gen()
        # order by the gap partial order: 0 first, then column ascending
        rest = sorted(keep[1:], key=lambda g: T.gap_to_lattice(g).a)
        keep = [0] + rest
    return GammaSemimodule(S, keep)


def is_lean(S: NumericalSemigroup, values) -> bool:
    """Whether all pairwise absolute differences of the set are gaps of S."""
    vals = sorted(set(values))
    return all(not S.contains(y - x) for x, y in combinations(vals, 2))


def _syzygy_mask(delta: GammaSemimodule, nbits: int) -> int:
    S = delta.base
    table = S.member_mask(nbits)
    full = (1 << nbits) - 1
    shifted = [(table << g) & full for g in delta.min_generators]
    out = 0
    for mi, mj in combinations(shifted, 2):
        out |= mi & mj
    return out


def _minimal_generators_of_mask(S: NumericalSemigroup, mask: int, nbits: int):
    table = S.member_mask(nbits)
    full = (1 << nbits) - 1
    out = []
    while mask:
        h = (mask & -mask).bit_length() - 1
        out.append(h)
        mask &= ~((table << h) & full)
    return out


def _scan_bits(S: NumericalSemigroup) -> int:
    # Everything past c(S) + max generator of the module is redundant; the
    # extra alpha*beta (or 2 * max gen) headroom covers syzygy generators.
    extra = S.generators[0] * S.generators[-1] if len(S.generators) == 2 else 2 * S.generators[-1]
    return S.conductor + S.generators[-1] + extra + 1


def syzygy_generators(delta: GammaSemimodule):
    """Minimal generators of the union of pairwise intersections (G+g_i) n (G+g_j)."""
    if delta.ed < 2:
        raise PrincipalModule("syzygies need at least two generators")
    nbits = _scan_bits(delta.base) + max(delta.min_generators)
    mask = _syzygy_mask(delta, nbits)
    return _minimal_generators_of_mask(delta.base, mask, nbits)


def syzygy(delta: GammaSemimodule) -> GammaSemimodule:
    """The syzygy module, returned normalized."""
    return make_semimodule(delta.base, syzygy_generators(delta))


def dual_generators(delta: GammaSemimodule):
    """Minimal generators of {x : x + D is contained in the base semigroup}.

    For a two-generator base this is closed-form in the lattice coordinates
    of the lean set; otherwise it falls back to a direct scan.
    """
    if len(delta.base.generators) == 2 and delta.ed >= 2:
        pts = delta.lattice_points()
        a, b = delta.base.generators
        xs = [p.a for p in pts]
        ys = [p.b for p in pts]
        gens = [ys[0] * b]
        gens += [xs[k] * a + ys[k + 1] * b for k in range(len(pts) - 1)]
        gens.append(xs[-1] * a)
        return sorted(set(gens))
    return _dual_generators_scan(delta)


def _dual_generators_scan(delta: GammaSemimodule):
    S = delta.base
    nbits = 2 * S.conductor + 2
    table = S.member_mask(nbits + max(delta.min_generators) + 1)
    full = (1 << nbits) - 1
    mask = full
    for g in delta.min_generators:
        mask &= table >> g
    return _minimal_generators_of_mask(S, mask, nbits)


def dual(delta: GammaSemimodule) -> GammaSemimodule:
    """The dual module, returned normalized."""
    return make_semimodule(delta.base, dual_generators(delta))


@dataclass(frozen=True)
class LeanCouple:
    """Staircase-path data of a semimodule over a two-generator base.

    es_turns are the lattice points of the nonzero minimal generators
    (corners turning from east to south along the path); se_turns are the
    opposite corners, whose values are the minimal syzygy generators.
    """

    es_turns: tuple
    se_turns: tuple
    h_values: tuple
    max_syzygy: int
    max_point: tuple


def lattice_path(delta: GammaSemimodule) -> LeanCouple:
    """Corner data of the lattice path; needs a two-generator base."""
    S = delta.base
    if len(S.generators) != 2:
        raise NotTwoGenerated(f"base has generators {S.generators}")
    if delta.ed < 2:
        raise PrincipalModule("a principal module has no syzygy path")
    T = S.two_gen()
    pts = [(p.a, p.b) for p in delta.lattice_points()]
    corners = [(0, pts[0][1])]
    corners += [(pts[i][0], pts[i + 1][1]) for i in range(len(pts) - 1)]
    corners.append((pts[-1][0], 0))
    hv = tuple(T.value(a, b) for a, b in corners)
    m = max(hv)
    return LeanCouple(
        es_turns=tuple(pts),
        se_turns=tuple(corners),
        h_values=hv,
        max_syzygy=m,
        max_point=corners[hv.index(m)],
    )


def sm_conductor_formula(delta: GammaSemimodule) -> int:
    """Conductor from the largest syzygy generator: M - alpha - beta + 1."""
    S = delta.base
    if len(S.generators) != 2:
        raise NotTwoGenerated(f"base has generators {S.generators}")
    if delta.ed < 2:
        return S.conductor
    a, b = S.generators
    return lattice_path(delta).max_syzygy - a - b + 1


def delta_formula(delta: GammaSemimodule) -> int:
    """Delta invariant from the staircase column widths and row heights."""
    S = delta.base
    if len(S.generators) != 2:
        raise NotTwoGenerated(f"base has generators {S.generators}")
    if delta.ed < 2:
        return S.delta
    pts = [(p.a, p.b) for p in delta.lattice_points()]
    cols = [0] + [a for a, _ in pts]
    area = sum((cols[i + 1] - cols[i]) * pts[i][1] for i in range(len(pts)))
    return sm_conductor_formula(delta) - S.delta + area


def is_fixed_point(delta: GammaSemimodule) -> bool:
    """Whether the normalized syzygy module has the same minimal generators."""
    if delta.ed < 2:
        raise PrincipalModule("fixed points are defined via the syzygy module")
    return syzygy(delta).min_generators == delta.min_generators


def is_selfdual(delta: GammaSemimodule) -> bool:
    """Whether the dual is a translate of the module itself.

    Always evaluated through the direct dual scan so that it stays an
    independent cross-check of the closed-form dual generators.
    """
    gens = _dual_generators_scan(delta)
    return make_semimodule(delta.base, gens).min_generators == delta.min_generators


def is_symmetric_sm(delta: GammaSemimodule) -> bool:
    """Whether x is a member iff conductor - 1 - x is not, below the conductor."""
    cd = delta.conductor
    if cd == 0:
        return True
    m = delta._mask & ((1 << cd) - 1)
    rev = int(f"{m:0{cd}b}"[::-1], 2)
    return m == ~rev & ((1 << cd) - 1)


@dataclass(frozen=True)
class PicardOrbit:
    """Iterates of normalize(syzygy(.)) until a repeat or the step cap."""

    states: tuple
    cycle_length: int | None


def picard_orbit(delta: GammaSemimodule, max_steps: int = 64) -> PicardOrbit:
    if delta.ed < 2:
        raise PrincipalModule("orbit iteration needs the syzygy module")
    states = [delta.min_generators]
    seen = {delta.min_generators: 0}
    cur = delta
    for _ in range(max_steps):
        if cur.ed < 2:
            return PicardOrbit(tuple(states), None)
        cur = syzygy(cur)
        key = cur.min_generators
        states.append(key)
        if key in seen:
            return PicardOrbit(tuple(states), len(states) - 1 - seen[key])
        seen[key] = len(states) - 1
    return PicardOrbit(tuple(states), None)
