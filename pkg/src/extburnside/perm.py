"""Permutations as tuples of 0-based images.

A permutation of degree n is a tuple p of length n with p[i] = image of i.
Tuples keep everything hashable and let sorted() provide the canonical
ordering used across the package (identity sorts first).
"""

from __future__ import annotations

import re

from .errors import ParseError


def identity(degree: int) -> tuple:
    return tuple(range(degree))


def pmul(a: tuple, b: tuple) -> tuple:
    """Compose: apply b first, then a."""
    return tuple(a[b[i]] for i in range(len(a)))


def pinv(a: tuple) -> tuple:
    out = [0] * len(a)
    for i, ai in enumerate(a):
        out[ai] = i
    return tuple(out)


def conj(x: tuple, g: tuple) -> tuple:
    """x^g = g^-1 x g (right action: conj(conj(x,g),h) = conj(x, pmul(g,h)))."""
    gi = pinv(g)
    return pmul(gi, pmul(x, g))


def porder(a: tuple) -> int:
    n = len(a)
    e = identity(n)
    k = 1
    b = a
    while b != e:
        b = pmul(b, a)
        k += 1
    return k


def cycle_type(a: tuple) -> tuple:
    """Sorted cycle lengths including fixed points: (12)(34) at degree 5 gives (1, 2, 2)."""
    n = len(a)
    seen = [False] * n
    lens = []
    for i in range(n):
        if seen[i]:
            continue
        j, c = i, 0
        while not seen[j]:
            seen[j] = True
            j = a[j]
            c += 1
        lens.append(c)
    return tuple(sorted(lens))


def is_transposition(a: tuple) -> bool:
    ct = cycle_type(a)
    return ct.count(2) == 1 and ct.count(1) == len(ct) - 1


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text: str, degree: int) -> tuple:
    """Parse disjoint cycle notation with 1-based points, e.g. "(1 2)(3 4)".

    Whitespace-insensitive; commas are tolerated as point separators.
    "()" or an empty string is the identity.
    """
    s = text.strip()
    if s in ("", "()"):
        return identity(degree)
    stripped = _CYCLE_RE.sub("", s)
    if stripped.strip():
        raise ParseError(f"malformed cycle notation: {text!r}")
    images = list(range(degree))
    for body in _CYCLE_RE.findall(s):
        pts = [p for p in re.split(r"[,\s]+", body.strip()) if p]
        if not pts:
            continue
        try:
            cyc = [int(p) - 1 for p in pts]
        except ValueError:
            raise ParseError(f"bad point in cycle: {body!r}") from None
        if len(set(cyc)) != len(cyc):
            raise ParseError(f"repeated point in cycle: ({body})")
        for p in cyc:
            if not 0 <= p < degree:
                raise ParseError(f"point {p + 1} out of range for degree {degree}")
        for i, p in enumerate(cyc):
            q = cyc[(i + 1) % len(cyc)]
            if images[p] != p:
                raise ParseError(f"point {p + 1} appears in two cycles")
            images[p] = q
    return tuple(images)


def format_cycles(a: tuple) -> str:
    """Disjoint cycle notation with 1-based points; identity is "()"."""
    n = len(a)
    seen = [False] * n
    parts = []
    for i in range(n):
        if seen[i] or a[i] == i:
            seen[i] = True
            continue
        cyc = []
        j = i
        while not seen[j]:
            seen[j] = True
            cyc.append(j + 1)
            j = a[j]
        parts.append("(" + " ".join(str(p) for p in cyc) + ")")
    return "".join(parts) if parts else "()"
