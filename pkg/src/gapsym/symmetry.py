"""Gap-triangle symmetry: the two side triangles, their reflections, the
zero-Wilf cells, borders, the five-block partition of the gap lattice, and
the reconstruction game that recovers every gap from the two symmetric sets.

Cell sets are plain frozensets of (a, b) pairs; no connectivity is assumed
or checked anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import Ambiguous, InconsistentInput, PartitionViolation
from .semigroup import NumericalSemigroup, TwoGen
from .semimodule import make_semimodule
from .wilf import wilf_gap_formula

Cells = frozenset


def _lg_cells(T: TwoGen) -> frozenset:
    return frozenset((e.a, e.b) for e in T.lattice_gaps())


def triangle_u(T: TwoGen) -> frozenset:
    """Gap cells strictly above the horizontal midline b = floor(alpha/2)."""
    half = T.alpha // 2
    return frozenset(p for p in _lg_cells(T) if p[1] > half)


def triangle_r(T: TwoGen) -> frozenset:
    """Gap cells strictly right of the vertical midline a = floor(beta/2)."""
    half = T.beta // 2
    return frozenset(p for p in _lg_cells(T) if p[0] > half)


def supersymmetric_gaps(T: TwoGen):
    """The smaller of the two triangles, with its side tag.

    Ties go to the upper triangle; the tag records the choice.
    """
    tu, tr = triangle_u(T), triangle_r(T)
    if len(tu) <= len(tr):
        return "T_u", tu
    return "T_r", tr


def self_symmetric_gaps(T: TwoGen) -> frozenset:
    """Cells on a half-line alpha = 2b or beta = 2a; exactly the zero-Wilf gaps."""
    out = set()
    if T.alpha % 2 == 0:
        b = T.alpha // 2
        for a in range(1, T.beta):
            if T.in_lattice(a, b):
                out.add((a, b))
    if T.beta % 2 == 0:
        a = T.beta // 2
        for b in range(1, T.alpha):
            if T.in_lattice(a, b):
                out.add((a, b))
    return frozenset(out)


def reflect_alpha(T: TwoGen, cells) -> frozenset:
    """Pointwise reflection (a, b) -> (a, alpha - b)."""
    return frozenset((a, T.alpha - b) for a, b in cells)


def reflect_beta(T: TwoGen, cells) -> frozenset:
    """Pointwise reflection (a, b) -> (beta - a, b)."""
    return frozenset((T.beta - a, b) for a, b in cells)


def translate_tau(cells, step: int = 1) -> frozenset:
    """Pointwise horizontal translation (a, b) -> (a + step, b)."""
    return frozenset((a + step, b) for a, b in cells)


def right_border(T: TwoGen, cells) -> frozenset:
    """Cells whose right neighbor (a+1, b) leaves the gap lattice."""
    return frozenset((a, b) for a, b in cells if not T.in_lattice(a + 1, b))


def border(T: TwoGen, cells) -> frozenset:
    """Cells whose right or upper neighbor leaves the gap lattice."""
    return frozenset(
        (a, b)
        for a, b in cells
        if not T.in_lattice(a + 1, b) or not T.in_lattice(a, b + 1)
    )


def border_transport(T: TwoGen):
    """Both sides of the border identity linking the two triangles.

    With the upper triangle as the smaller side the translated reflection of
    its right border equals the reflected right border of the other triangle;
    when the right triangle is smaller, the right border of the zero-Wilf
    column joins the right-hand side.  Returns (side, lhs, rhs).
    """
    side, _ = supersymmetric_gaps(T)
    lhs = translate_tau(reflect_alpha(T, right_border(T, triangle_u(T))))
    rhs = reflect_beta(T, right_border(T, triangle_r(T)))
    if side == "T_r":
        rhs |= right_border(T, self_symmetric_gaps(T))
    return side, lhs, rhs


@dataclass(frozen=True)
class GapPartition:
    """The five disjoint blocks covering every gap cell."""

    t_u: frozenset
    s_alpha_t_u: frozenset
    ssg: frozenset
    t_r: frozenset
    s_beta_t_r: frozenset

    def blocks(self):
        return (self.t_u, self.s_alpha_t_u, self.ssg, self.t_r, self.s_beta_t_r)

    def block_sizes(self):
        return tuple(len(b) for b in self.blocks())


def rectangle_cells(T: TwoGen) -> frozenset:
    """Cells with a <= floor(beta/2) and b <= floor(alpha/2): gaps g with 2g in the semigroup."""
    return frozenset(
        p for p in _lg_cells(T) if p[0] <= T.beta // 2 and p[1] <= T.alpha // 2
    )


def gap_partition(T: TwoGen) -> GapPartition:
    """Split the gap lattice into the five blocks and verify the split."""
    tu = triangle_u(T)
    tr = triangle_r(T)
    ssg = self_symmetric_gaps(T)
    part = GapPartition(tu, reflect_alpha(T, tu), ssg, tr, reflect_beta(T, tr))
    lg = _lg_cells(T)
    union = set()
    total = 0
    for block in part.blocks():
        union |= block
        total += len(block)
    if union != lg or total != len(lg):
        raise PartitionViolation(f"blocks do not partition the gap lattice of {T!r}")
    rect = rectangle_cells(T)
    if part.s_alpha_t_u | part.ssg | part.s_beta_t_r != rect:
        raise PartitionViolation(f"reflected blocks do not tile the rectangle of {T!r}")
    return part


def cell_values(T: TwoGen, cells):
    """Sorted gap values of a cell set."""
    return sorted(T.lattice_to_gap(a, b) for a, b in cells)


def reconstruct_from_symmetric(alpha, beta, sg_cells, sg_side, ssg_cells):
    """Recover the full sorted gap set from the two symmetric cell sets.

    The game: reflect the smaller triangle into the rectangle, complement
    inside the rectangle to get the other triangle's reflection, reflect
    back, and take the union of the five blocks.  Input is untrusted; the
    result is validated against the gap-count identity.
    """
    T = TwoGen(alpha, beta)
    sg = frozenset(tuple(p) for p in sg_cells)
    ssg = frozenset(tuple(p) for p in ssg_cells)
    if sg_side not in ("T_u", "T_r"):
        raise InconsistentInput(f"unknown side tag {sg_side!r}")
    lg = _lg_cells(T)
    if not sg <= lg or not ssg <= lg:
        raise InconsistentInput("input cells outside the gap lattice")
    rect = frozenset(
        (a, b) for a in range(1, T.beta // 2 + 1) for b in range(1, T.alpha // 2 + 1)
    )
    if sg_side == "T_r":
        reflected = reflect_beta(T, sg)
        other = reflect_alpha
    else:
        reflected = reflect_alpha(T, sg)
        other = reflect_beta
    covered = reflected | ssg
    if not covered <= rect or len(reflected) + len(ssg) != len(covered):
        raise InconsistentInput("reflected cells do not tile inside the rectangle")
    complement = rect - covered
    blocks = (sg, reflected, ssg, complement, other(T, complement))
    result = set()
    total = 0
    for block in blocks:
        result |= block
        total += len(block)
    if total != len(result) or total != T.genus or not result <= lg:
        raise InconsistentInput(
            f"reconstruction yields {total} cells, expected {T.genus}"
        )
    return cell_values(T, result)


def infer_semigroup(values, max_beta: int):
    """Search coprime pairs for the one whose symmetric gap values match.

    Returns (alpha, beta), or None when nothing matches; raises Ambiguous
    with all matches when several pairs share the same symmetric values.
    """
    from math import gcd

    target = set(values)
    matches = []
    for alpha in range(2, max_beta):
        for beta in range(alpha + 1, max_beta + 1):
            if gcd(alpha, beta) != 1:
                continue
            T = TwoGen(alpha, beta)
            _, sg = supersymmetric_gaps(T)
            vals = set(cell_values(T, sg)) | set(cell_values(T, self_symmetric_gaps(T)))
            if vals == target and vals:
                matches.append((alpha, beta))
    if not matches:
        return None
    if len(matches) > 1:
        raise Ambiguous(f"{len(matches)} pairs match {sorted(target)}", matches)
    return matches[0]


@dataclass(frozen=True)
class CardinalityReport:
    """Printed-sum cardinalities next to direct cell counts."""

    ssg_formula: int
    ssg_direct: int
    t_u_formula: int
    t_u_direct: int
    t_r_formula: int
    t_r_direct: int
    sg_side: str
    sg_formula: int
    sg_direct: int
    agree: bool
    warnings: tuple


def card_formulas(T: TwoGen) -> CardinalityReport:
    """Evaluate the closed cardinality sums against direct counts.

    The right-triangle sum clamps negative terms at zero; the upper-triangle
    sum is evaluated as printed, which undercounts for odd alpha, so `agree`
    is reported rather than asserted.
    """
    a, b = T.alpha, T.beta
    if a % 2 == 1 and b % 2 == 1:
        ssg_formula = 0
    elif a % 2 == 0:
        ssg_formula = (b - 1) // 2
    else:
        ssg_formula = (a - 1) // 2
    t_u_formula = sum(j * b // a for j in range(1, a // 2))
    h = a // 2 + 1 if a % 2 == 0 else a // 2
    t_r_formula = sum(max(0, j * b // a - b // 2) for j in range(h, a))
    tu, tr = triangle_u(T), triangle_r(T)
    ssg = self_symmetric_gaps(T)
    side, sg = supersymmetric_gaps(T)
    warnings = []
    if t_u_formula != len(tu):
        warnings.append(
            f"upper-triangle sum {t_u_formula} != direct count {len(tu)} (odd alpha)"
        )
    if t_r_formula != len(tr):
        warnings.append(f"right-triangle sum {t_r_formula} != direct count {len(tr)}")
    if ssg_formula != len(ssg):
        warnings.append(f"zero-Wilf count {ssg_formula} != direct count {len(ssg)}")
    return CardinalityReport(
        ssg_formula=ssg_formula,
        ssg_direct=len(ssg),
        t_u_formula=t_u_formula,
        t_u_direct=len(tu),
        t_r_formula=t_r_formula,
        t_r_direct=len(tr),
        sg_side=side,
        sg_formula=t_u_formula if side == "T_u" else t_r_formula,
        sg_direct=len(sg),
        agree=not warnings,
        warnings=tuple(warnings),
    )


@dataclass(frozen=True)
class GapClass:
    """Gaps sharing the conductor of their [0, g] module."""

    conductor: int
    members: tuple
    pairs: tuple
    self_symmetric: int | None


def gap_conductor_partition(S: NumericalSemigroup):
    """Group gaps by the conductor of [0, g]; pair members of equal |W|.

    Within a class, two gaps of equal absolute Wilf number form a pair; a
    singleton class is its own representative, and for a two-generator base
    the lone unpaired member of an odd class (always Wilf number zero) is
    flagged the same way.
    """
    by_conductor = {}
    wilf = {}
    for g in S.gaps:
        d = make_semimodule(S, [0, g])
        by_conductor.setdefault(d.conductor, []).append(g)
        wilf[g] = 2 * d.delta - d.conductor
    out = []
    for c in sorted(by_conductor):
        members = sorted(by_conductor[c])
        buckets = {}
        for g in members:
            buckets.setdefault(abs(wilf[g]), []).append(g)
        pairs = []
        unpaired = []
        for w in sorted(buckets):
            group = buckets[w]
            if len(group) == 2:
                pairs.append((min(group), max(group)))
            else:
                unpaired.extend(group)
        self_symmetric = None
        if len(members) == 1:
            self_symmetric = members[0]
        elif len(unpaired) == 1 and wilf[unpaired[0]] == 0:
            self_symmetric = unpaired[0]
        out.append(
            GapClass(
                conductor=c,
                members=tuple(members),
                pairs=tuple(pairs),
                self_symmetric=self_symmetric,
            )
        )
    return out


def wilf_grid(T: TwoGen):
    """All cells with gap value and Wilf number, row-major (b desc, a asc)."""
    return tuple(
        (e.a, e.b, e.value, wilf_gap_formula(T, e.a, e.b).w) for e in T.lattice_gaps()
    )
