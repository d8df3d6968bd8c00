"""Zero-neighborhood descriptors and their finitely checkable certificates.

Two shapes of zero neighborhood arise for an extension with adjoined zero:
either zero is isolated, or the basic neighborhoods of zero are complements
of finitely many boxes.  Both shapes are recorded as descriptors, and the
facts that matter about them (translates of a basic staying inside another,
almost-all-boxes coverage, finite exception rows, compactness of the box
variant, and what the index map does to either) reduce to exact arithmetic
on finite box sets.  Everything here is a certificate producer or checker;
no open-ended topology is represented.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import bicyclic
from .bruck_reilly import Box, BRElem, BRSystem, ZERO, box, brmul, is_zero
from .errors import MalformedDescriptor

ISOLATED = "isolated"
EXCLUDED_BOXES = "excluded_boxes"


@dataclass(frozen=True)
class ZeroNbhdDescriptor:
    """Which of the two zero-neighborhood shapes a system carries."""

    kind: str


ISOLATED_ZERO = ZeroNbhdDescriptor(ISOLATED)
EXCLUDED_BOXES_BASE = ZeroNbhdDescriptor(EXCLUDED_BOXES)


def descriptor_from_obj(obj) -> ZeroNbhdDescriptor:
    """Parse {'kind': ...}; anything unknown is malformed."""
    if isinstance(obj, ZeroNbhdDescriptor):
        obj = {"kind": obj.kind}
    if not isinstance(obj, dict) or set(obj) != {"kind"}:
        raise MalformedDescriptor(f"descriptor must be {{'kind': ...}}, got {obj!r}")
    if obj["kind"] not in (ISOLATED, EXCLUDED_BOXES):
        raise MalformedDescriptor(f"unknown descriptor kind {obj['kind']!r}")
    return ZeroNbhdDescriptor(obj["kind"])


@dataclass(frozen=True)
class BasicZeroNbhd:
    """Complement of finitely many boxes, plus zero itself.

    Membership of a nonzero element is a single box lookup.
    """

    excluded: frozenset[Box]

    @classmethod
    def excluding(cls, boxes) -> "BasicZeroNbhd":
        return cls(frozenset(Box(int(i), int(j)) for i, j in boxes))

    def contains_box(self, i: int, j: int) -> bool:
        return Box(i, j) not in self.excluded

    def contains(self, x) -> bool:
        if is_zero(x):
            return True
        return self.contains_box(x.i, x.j)


WHOLE_SPACE = BasicZeroNbhd(frozenset())


class BoxFamily:
    """A box-membership predicate for families that are not known cofinite.

    Used to fault-inject degenerate neighborhood candidates into the bounded
    checkers below; a BasicZeroNbhd never needs this wrapper.
    """

    def __init__(self, contains, label: str = ""):
        self._contains = contains
        self.label = label

    def contains_box(self, i: int, j: int) -> bool:
        return bool(self._contains(i, j))


def box_solve(a_box: Box, target: Box, side: str) -> frozenset[Box]:
    """All boxes x with a_box * x = target (side 'left') or x * a_box = target.

    Closed form from the bicyclic index arithmetic.  For the left side with
    a = (a1, a2): products with x = (i, j), i <= a2 pin the first coordinate
    to a1 and trace the diagonal j - i = t2 - a2, while i > a2 determines x
    uniquely; the cases are disjoint on the first target coordinate.  The
    right side is the mirror image.  At most min-index + 1 boxes come back.
    """
    a1, a2 = a_box
    t1, t2 = target
    if side == "left":
        if t1 == a1:
            return frozenset(
                Box(i, i + t2 - a2) for i in range(max(0, a2 - t2), a2 + 1)
            )
        if t1 > a1:
            return frozenset({Box(t1 - a1 + a2, t2)})
        return frozenset()
    if side == "right":
        if t2 == a2:
            return frozenset(
                Box(t1 - a1 + j, j) for j in range(max(0, a1 - t1), a1 + 1)
            )
        if t2 > a2:
            return frozenset({Box(t1, t2 - a2 + a1)})
        return frozenset()
    raise ValueError(f"side must be 'left' or 'right', not {side!r}")


def box_solve_brute(a_box: Box, target: Box, side: str, bound: int = 20) -> frozenset[Box]:
    """Independent route: scan all boxes up to the bound and multiply."""
    if side not in ("left", "right"):
        raise ValueError(f"side must be 'left' or 'right', not {side!r}")
    a = bicyclic.BicyclicElem(*a_box)
    t = bicyclic.BicyclicElem(*target)
    out = set()
    for i in range(bound + 1):
        for j in range(bound + 1):
            x = bicyclic.BicyclicElem(i, j)
            prod = bicyclic.bmul(a, x) if side == "left" else bicyclic.bmul(x, a)
            if prod == t:
                out.add(Box(i, j))
    return frozenset(out)


@dataclass
class ContinuityCertificate:
    """Witness that translating `found` by `a` stays inside `target`.

    trace records, for every excluded box of the target, the solved boxes
    that forced exclusions in `found`.  verify_certificate re-walks a finite
    window with real products; `violations` stays empty for sound output.
    """

    a: BRElem
    side: str
    target: BasicZeroNbhd
    found: BasicZeroNbhd
    trace: dict
    violations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def continuity_cert_zero(B: BRSystem, a: BRElem, target: BasicZeroNbhd, side: str, mul=None) -> ContinuityCertificate:
    """Build the basic U with a * U inside target (or U * a on the right).

    A box of U lands in an excluded box of the target exactly when it solves
    the corresponding box equation, so excluding the union of solution sets
    is both sound and exact.  Such a U always exists: the union is finite.
    """
    if is_zero(a):
        raise ValueError("the multiplier must be a nonzero element")
    trace = {}
    excl = set()
    for w in sorted(target.excluded):
        sols = box_solve(box(a), w, side)
        trace[w] = sols
        excl |= sols
    cert = ContinuityCertificate(
        a=a, side=side, target=target, found=BasicZeroNbhd(frozenset(excl)), trace=trace
    )
    cert.violations = verify_certificate(B, cert, mul=mul)
    return cert


def verify_certificate(B: BRSystem, cert: ContinuityCertificate, margin: int = 2, mul=None) -> list[str]:
    """Re-verify a certificate element-wise on a window around its boxes.

    Checks both directions: elements of U multiply into the target, and
    every excluded box was necessary.  Zero needs no check; it multiplies
    to zero, which every zero neighborhood contains.  `mul` lets callers
    share a memoized product map across many verifications.
    """
    if mul is None:
        mul = lambda x, y: brmul(B, x, y)  # noqa: E731
    relevant = {cert.a.i, cert.a.j}
    for bx in cert.found.excluded | cert.target.excluded:
        relevant.update(bx)
    hi = max(relevant, default=0) + margin
    bad = []
    for i in range(hi + 1):
        for j in range(hi + 1):
            for s in B.sys.elements():
                x = BRElem(i, s, j)
                prod = mul(cert.a, x) if cert.side == "left" else mul(x, cert.a)
                inside = cert.target.contains(prod)
                if cert.found.contains(x) and not inside:
                    bad.append(f"{x} is in U but its product leaves the target")
                if not cert.found.contains(x) and inside:
                    bad.append(f"{x} was excluded but its product stays in the target")
    return bad


@dataclass(frozen=True)
class BoundedCheck:
    """Outcome of a probe-bounded finiteness check.

    A False result means refuted within the probe bound, never an
    unconditional falsehood; `note` spells the qualification out and
    `witnesses` lists offending boxes or indices from the outer probe
    region.
    """

    ok: bool
    probe_bound: int
    witnesses: tuple
    note: str

    def __bool__(self) -> bool:
        return self.ok


def meets_almost_all_boxes(u, probe_bound: int = 64) -> BoundedCheck:
    """Does the neighborhood intersect all but finitely many boxes?

    Structurally true for any BasicZeroNbhd.  For predicate-backed families
    the probe window is scanned and the family is refuted when it misses a
    box in the outer half of the window, the region where the misses of a
    genuinely cofinite family probed with any sensible bound have run out.
    """
    if isinstance(u, BasicZeroNbhd):
        return BoundedCheck(True, probe_bound, (), "cofinite by construction")
    half = probe_bound // 2
    outer = [
        Box(i, j)
        for i in range(probe_bound)
        for j in range(probe_bound)
        if max(i, j) >= half and not u.contains_box(i, j)
    ]
    if outer:
        return BoundedCheck(
            False,
            probe_bound,
            tuple(outer[:8]),
            f"refuted within probe bound {probe_bound}: misses reach the outer region",
        )
    return BoundedCheck(True, probe_bound, (), f"no misses beyond {half} within probe bound {probe_bound}")


def row_exceptions_finite(u, i0: int, probe_bound: int = 64) -> BoundedCheck:
    """Are there only finitely many j with box (i0, j) outside u?"""
    if isinstance(u, BasicZeroNbhd):
        ex = tuple(sorted(b.j for b in u.excluded if b.i == i0))
        return BoundedCheck(True, probe_bound, ex, "cofinite by construction")
    half = probe_bound // 2
    outer = tuple(j for j in range(half, probe_bound) if not u.contains_box(i0, j))
    if outer:
        return BoundedCheck(
            False,
            probe_bound,
            outer[:8],
            f"refuted within probe bound {probe_bound}: row {i0} misses keep appearing",
        )
    return BoundedCheck(True, probe_bound, (), f"row {i0} misses stop before {half}")


def column_exceptions_finite(u, j0: int, probe_bound: int = 64) -> BoundedCheck:
    """Mirror of row_exceptions_finite for a fixed second index."""
    if isinstance(u, BasicZeroNbhd):
        ex = tuple(sorted(b.i for b in u.excluded if b.j == j0))
        return BoundedCheck(True, probe_bound, ex, "cofinite by construction")
    half = probe_bound // 2
    outer = tuple(i for i in range(half, probe_bound) if not u.contains_box(i, j0))
    if outer:
        return BoundedCheck(
            False,
            probe_bound,
            outer[:8],
            f"refuted within probe bound {probe_bound}: column {j0} misses keep appearing",
        )
    return BoundedCheck(True, probe_bound, (), f"column {j0} misses stop before {half}")


@dataclass(frozen=True)
class Classification:
    verdict: str  # "compact" or "isolated_zero"
    certificate: dict


def classify_descriptor(d: ZeroNbhdDescriptor) -> Classification:
    """Compactness dichotomy: box-complement bases give a compact space,
    an isolated zero gives a non-compact one."""
    d = descriptor_from_obj(d)
    if d.kind == ISOLATED:
        return Classification(
            verdict="isolated_zero",
            certificate={
                "scheme": "isolated_point",
                "statement": "the singleton of zero is itself a basic neighborhood, "
                "so the nonzero part is closed, discrete and infinite",
            },
        )
    return Classification(
        verdict="compact",
        certificate={
            "scheme": "finite_remainder",
            "statement": "every basic neighborhood of zero excludes finitely many "
            "boxes and each box is a finite set, so any basic cover of zero "
            "leaves a finite remainder of points",
        },
    )


def compactness_remainder(B: BRSystem, u: BasicZeroNbhd) -> list[BRElem]:
    """The finite remainder a basic neighborhood leaves: its excluded fibers."""
    return [
        BRElem(bx.i, s, bx.j) for bx in sorted(u.excluded) for s in B.sys.elements()
    ]


@dataclass(frozen=True)
class CzeroDescriptor:
    """Shape of the image structure on the bicyclic monoid with zero."""

    kind: str  # "cofinite" or "discrete"


def pushforward_descriptor(d: ZeroNbhdDescriptor) -> CzeroDescriptor:
    """What the index map does to each descriptor kind.

    Box-complement bases map to the cofinite-at-zero base (boxes become
    single points), and an isolated zero stays isolated, giving the
    discrete structure.
    """
    d = descriptor_from_obj(d)
    return CzeroDescriptor("cofinite" if d.kind == EXCLUDED_BOXES else "discrete")


def pushforward_basic(u: BasicZeroNbhd) -> frozenset[bicyclic.BicyclicElem]:
    """Excluded boxes become excluded points of the image basic."""
    return frozenset(bicyclic.BicyclicElem(bx.i, bx.j) for bx in u.excluded)


def pullback_points(points) -> BasicZeroNbhd:
    """Preimage of a cofinite basic: each point pulls back to its box."""
    return BasicZeroNbhd(frozenset(Box(p.k, p.l) for p in points))
