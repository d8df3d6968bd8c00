"""The bicyclic monoid, optionally with an adjoined zero.

Elements are normal forms q^k p^l stored as index pairs (k, l) with
arbitrary-precision non-negative integers.  The adjoined zero is a separate
sentinel, never a reserved pair.  bmul implements the closed-form index
arithmetic; oracle_mul recomputes the product by composing the partial
shifts of omega that the generators act by, so the two routes are
independent and are checked against each other in the test suite.
"""

from __future__ import annotations

import re
from typing import NamedTuple, Union


class BicyclicElem(NamedTuple):
    k: int  # power of q
    l: int  # power of p


class _AdjoinedZero:
    __slots__ = ()

    def __repr__(self):
        return "0"


ZERO = _AdjoinedZero()

Element = Union[BicyclicElem, _AdjoinedZero]

IDENTITY = BicyclicElem(0, 0)


def is_zero(x: Element) -> bool:
    return x is ZERO


def _check(x: Element) -> None:
    if x is ZERO:
        return
    if not isinstance(x, BicyclicElem) or x.k < 0 or x.l < 0:
        raise ValueError(f"not a bicyclic element: {x!r}")


def bmul(x: Element, y: Element) -> Element:
    """q^k p^l . q^m p^n = q^(k+m-min(l,m)) p^(l+n-min(l,m)); zero absorbs."""
    _check(x)
    _check(y)
    if x is ZERO or y is ZERO:
        return ZERO
    d = min(x.l, y.k)
    return BicyclicElem(x.k + y.k - d, x.l + y.l - d)


def binv(x: Element) -> Element:
    """Swap the indices; zero is its own inverse once adjoined."""
    _check(x)
    if x is ZERO:
        return ZERO
    return BicyclicElem(x.l, x.k)


def idempotent(k: int) -> BicyclicElem:
    return BicyclicElem(k, k)


def is_idempotent(x: Element) -> bool:
    return x is not ZERO and x.k == x.l


def oracle_mul(x: Element, y: Element, pad: int = 4) -> Element:
    """Recompute bmul by composing the partial injections of omega.

    q^k p^l acts as the shift t -> t - l + k defined on t >= l.  The product
    corresponds to applying the right factor first.  Both maps are laid out
    as explicit finite dictionaries on a window of omega large enough to
    expose the composite's domain threshold, the pair is read back off the
    composite, and the composite is checked to be a uniform shift on the
    window.  No index formula from bmul is reused here.
    """
    _check(x)
    _check(y)
    if x is ZERO or y is ZERO:
        return ZERO
    hi = x.k + x.l + y.k + y.l + pad
    f = {t: t - x.l + x.k for t in range(x.l, hi)}
    g = {t: t - y.l + y.k for t in range(y.l, hi)}
    comp = {t: f[g[t]] for t in g if g[t] in f}
    assert comp, "window too small for composite"
    lo = min(comp)
    k, l = comp[lo], lo
    for t, v in comp.items():
        assert v - t == k - l, "composite is not a uniform shift"
    return BicyclicElem(k, l)


_PAIR_RE = re.compile(r"^\(\s*(\d+)\s*,\s*(\d+)\s*\)$")


def parse_elem(text: str) -> Element:
    """Accepts '(k,l)' or '0'."""
    s = text.strip()
    if s == "0":
        return ZERO
    m = _PAIR_RE.match(s)
    if not m:
        raise ValueError(f"cannot parse bicyclic element {text!r}")
    return BicyclicElem(int(m.group(1)), int(m.group(2)))


def format_elem(x: Element) -> str:
    _check(x)
    if x is ZERO:
        return "0"
    return f"({x.k},{x.l})"
