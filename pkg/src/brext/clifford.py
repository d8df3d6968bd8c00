"""Finite chains of groups glued by bonding homomorphisms.

Levels are indexed 0..size-1 with level 0 the greatest element of the chain;
the semilattice meet of two levels is therefore max of their indices.  An
element is a (level, elem) pair and the product of two elements lands in the
group at the meet level after pushing both factors down along the bonds.
Every idempotent is a level identity, so the idempotents form a chain and
commute with everything, which makes these exactly the inverse monoids whose
idempotent chain is finite.

The structure also carries a family theta of homomorphisms into the top
group, one per level, which together must form a monoid endomorphism of the
whole semigroup into its unit group.  theta_pow iterates it; iterates beyond
the first all happen inside the top group.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, NamedTuple

from .errors import MissingBond, NotIdempotent
from .groups import GroupHom, GroupTable, ValidationReport, compose_homs, ginv, gmul, identity_hom, validate_group, validate_hom


class CliffordElement(NamedTuple):
    level: int
    elem: int


@dataclass(frozen=True)
class ChainSemilattice:
    """The chain 0 > 1 > ... > size-1 under the dominance order."""

    size: int

    def __post_init__(self):
        if self.size < 1:
            raise ValueError("chain needs at least one level")
        # meet laws are forced by max; assert them once anyway for small chains
        rng = range(min(self.size, 16))
        for a in rng:
            assert self.meet(a, a) == a
            for b in rng:
                assert self.meet(a, b) == self.meet(b, a)
                for c in rng:
                    assert self.meet(self.meet(a, b), c) == self.meet(a, self.meet(b, c))

    def meet(self, a: int, b: int) -> int:
        if not (0 <= a < self.size and 0 <= b < self.size):
            raise ValueError(f"levels ({a},{b}) outside chain of size {self.size}")
        return max(a, b)

    def below(self, a: int, b: int) -> bool:
        """True iff level a is dominated by level b (a lower or equal)."""
        return a >= b


@dataclass(frozen=True)
class CliffordSystem:
    """Groups on a chain plus bonds and the theta family into the top group."""

    chain: ChainSemilattice
    groups: tuple[GroupTable, ...]
    bonds: dict = field(compare=False)  # (upper, lower) -> GroupHom, upper < lower
    theta: tuple[GroupHom, ...] = ()

    def group(self, level: int) -> GroupTable:
        if not 0 <= level < self.chain.size:
            raise ValueError(f"level {level} outside chain of size {self.chain.size}")
        return self.groups[level]

    def bond(self, upper: int, lower: int) -> GroupHom:
        """The bonding map from the group at `upper` down to `lower`."""
        if upper == lower:
            return identity_hom(self.group(upper))
        if not self.chain.below(lower, upper):
            raise MissingBond(f"no bond upward from level {upper} to {lower}")
        try:
            return self.bonds[(upper, lower)]
        except KeyError:
            raise MissingBond(f"missing bonding map for levels ({upper},{lower})") from None

    def unit(self) -> CliffordElement:
        return CliffordElement(0, self.groups[0].identity)

    def elements(self) -> Iterator[CliffordElement]:
        for level, g in enumerate(self.groups):
            for x in range(g.order):
                yield CliffordElement(level, x)

    def order(self) -> int:
        return sum(g.order for g in self.groups)

    def label(self, a: CliffordElement) -> str:
        g = self.group(a.level)
        if g.labels is not None:
            return g.labels[a.elem]
        return str(a.elem)


def cmul(sys: CliffordSystem, a: CliffordElement, b: CliffordElement) -> CliffordElement:
    """Product: push both factors to the meet level, multiply there."""
    lvl = sys.chain.meet(a.level, b.level)
    x = sys.bond(a.level, lvl)(a.elem)
    y = sys.bond(b.level, lvl)(b.elem)
    return CliffordElement(lvl, gmul(sys.group(lvl), x, y))


def cinv(sys: CliffordSystem, a: CliffordElement) -> CliffordElement:
    """Inverse stays on the same level."""
    return CliffordElement(a.level, ginv(sys.group(a.level), a.elem))


def theta_pow(sys: CliffordSystem, a: CliffordElement, n: int) -> CliffordElement:
    """Apply theta n times; one application already lands in the top group."""
    if n < 0:
        raise ValueError("negative theta power")
    if n == 0:
        return a
    v = sys.theta[a.level](a.elem)
    for _ in range(n - 1):
        v = sys.theta[0](v)
    return CliffordElement(0, v)


def idempotents(sys: CliffordSystem) -> list[CliffordElement]:
    """Level identities, top level first; verifies nothing else is idempotent."""
    out = []
    for level, g in enumerate(sys.groups):
        for x in range(g.order):
            e = CliffordElement(level, x)
            if cmul(sys, e, e) == e:
                assert x == g.identity, f"non-identity idempotent {e} in a group"
                out.append(e)
    return out


def nat_order_idem(sys: CliffordSystem, e: CliffordElement, f: CliffordElement) -> bool:
    """e below f in the idempotent order: both products collapse to e."""
    for x in (e, f):
        if cmul(sys, x, x) != x:
            raise NotIdempotent(f"{x} is not idempotent")
    return cmul(sys, e, f) == e and cmul(sys, f, e) == e


def validate_system(sys: CliffordSystem) -> ValidationReport:
    """Check groups, bonds, bond coherence and the theta law exhaustively."""
    rep = ValidationReport()
    k = sys.chain.size
    if len(sys.groups) != k:
        rep.add(f"{len(sys.groups)} groups for chain of size {k}")
        return rep
    for level, g in enumerate(sys.groups):
        rep.merge(validate_group(g), prefix=f"group {level}: ")

    # bond presence, endpoints, hom law, and the identity convention on (a,a)
    for upper in range(k):
        for lower in range(upper, k):
            if upper == lower:
                explicit = sys.bonds.get((upper, lower))
                if explicit is not None and tuple(explicit.map) != tuple(range(sys.groups[upper].order)):
                    rep.add(f"bond ({upper},{lower}) must be the identity map")
                continue
            try:
                b = sys.bond(upper, lower)
            except MissingBond as exc:
                rep.add(str(exc))
                continue
            if b.domain != sys.groups[upper] or b.codomain != sys.groups[lower]:
                rep.add(f"bond ({upper},{lower}) endpoints disagree with chain groups")
                continue
            sub = validate_hom(b)
            rep.merge(sub, prefix=f"bond ({upper},{lower}): ")

    # composition coherence along every descending triple
    for a in range(k):
        for b in range(a + 1, k):
            for c in range(b + 1, k):
                try:
                    ab, bc, ac = sys.bond(a, b), sys.bond(b, c), sys.bond(a, c)
                except MissingBond:
                    continue  # already reported above
                comp = compose_homs(ab, bc)
                if comp.map != ac.map:
                    for x in range(sys.groups[a].order):
                        if comp.map[x] != ac.map[x]:
                            rep.add(
                                f"bond composition violated for levels ({a},{b},{c}) at element {x}"
                            )

    if len(sys.theta) != k:
        rep.add(f"{len(sys.theta)} theta maps for chain of size {k}")
        return rep
    for level, th in enumerate(sys.theta):
        if th.domain != sys.groups[level] or th.codomain != sys.groups[0]:
            rep.add(f"theta[{level}] endpoints must be group {level} -> group 0")
            continue
        rep.merge(validate_hom(th), prefix=f"theta[{level}]: ")
    if not rep.ok:
        return rep

    # theta must be a single homomorphism of the whole monoid, so the law
    # has to hold across levels, not just inside each group
    top = sys.groups[0]
    for a in sys.elements():
        for b in sys.elements():
            lhs = theta_pow(sys, cmul(sys, a, b), 1)
            rhs = gmul(top, sys.theta[a.level](a.elem), sys.theta[b.level](b.elem))
            if lhs.elem != rhs:
                rep.add(f"theta law violated for a={tuple(a)}, b={tuple(b)}")
    return rep
