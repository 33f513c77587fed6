"""Finite permutation groups by full element enumeration.

Everything at desk scale (order <= 120 targets, hard cap configurable)
lives as a sorted tuple of image-tuples. No stabilizer chains; closure is
plain BFS over generators.
"""

from __future__ import annotations

import re

from .errors import CapacityError, EbrError, NotASubgroupError, ParseError
from .perm import conj, identity, parse_cycles, pinv, pmul, porder

DEFAULT_MAX_ORDER = 1000


def closure(degree: int, gens, max_order: int = DEFAULT_MAX_ORDER) -> tuple:
    """BFS closure of the generators; returns the sorted element tuple."""
    e = identity(degree)
    seen = {e}
    frontier = [e]
    gens = [g for g in gens if g != e]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = pmul(x, g)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
                    if len(seen) > max_order:
                        raise CapacityError(
                            f"group order exceeds cap {max_order}"
                        )
        frontier = nxt
    return tuple(sorted(seen))


class Group:
    """Immutable permutation group with a canonically sorted element list."""

    __slots__ = ("degree", "generators", "elements", "order", "_eset", "name")

    def __init__(self, degree, generators, elements, name=None):
        self.degree = degree
        self.generators = tuple(generators)
        self.elements = tuple(elements)
        self.order = len(self.elements)
        self._eset = frozenset(self.elements)
        self.name = name

    @classmethod
    def generate(cls, degree, gens, name=None, max_order=DEFAULT_MAX_ORDER):
        gens = tuple(tuple(g) for g in gens)
        for g in gens:
            if sorted(g) != list(range(degree)):
                raise EbrError(f"not a permutation of degree {degree}: {g}")
        return cls(degree, gens, closure(degree, gens, max_order), name=name)

    @classmethod
    def from_elements(cls, degree, elements, name=None):
        """Wrap an element list already known to be a subgroup (no closure)."""
        elements = tuple(sorted(elements))
        gens = tuple(x for x in elements if x != identity(degree))
        return cls(degree, gens or (identity(degree),), elements, name=name)

    @property
    def identity(self):
        return identity(self.degree)

    def __contains__(self, p):
        return p in self._eset

    def __eq__(self, other):
        return (
            isinstance(other, Group)
            and self.degree == other.degree
            and self.elements == other.elements
        )

    def __hash__(self):
        return hash((self.degree, self.elements))

    def __repr__(self):
        nm = self.name or f"group of order {self.order}"
        return f"<Group {nm}, degree {self.degree}>"

    def element_set(self):
        return self._eset

    def is_subgroup_of(self, other: "Group") -> bool:
        return self.degree == other.degree and self._eset <= other._eset


def conjugacy_classes(G: Group):
    """Conjugacy classes of G as (representative, size) pairs.

    Representatives are the minimal element of each class; classes sorted
    by representative.
    """
    seen = set()
    out = []
    for x in G.elements:
        if x in seen:
            continue
        orbit = {conj(x, g) for g in G.elements}
        seen |= orbit
        out.append((min(orbit), len(orbit)))
    return out


def centralizer(G: Group, h: tuple) -> Group:
    if h not in G:
        raise EbrError("element not in group")
    elems = [g for g in G.elements if pmul(g, h) == pmul(h, g)]
    return Group.from_elements(G.degree, elems)


def conjugate_subgroup(H: Group, g: tuple) -> Group:
    return Group.from_elements(H.degree, [conj(x, g) for x in H.elements])


def normalizer(G: Group, H: Group) -> Group:
    if not H.is_subgroup_of(G):
        raise NotASubgroupError("H is not a subgroup of G")
    hset = H.element_set()
    elems = [g for g in G.elements if all(conj(x, g) in hset for x in H.generators)]
    return Group.from_elements(G.degree, elems)


def intersection(A: Group, B: Group) -> Group:
    return Group.from_elements(A.degree, A.element_set() & B.element_set())


_NAMED_RE = re.compile(r"^([SACD])(\d+)$")


def group_from_spec(spec: str, max_order: int = DEFAULT_MAX_ORDER) -> Group:
    """Build a group from a spec string.

    Grammar: S<n> | A<n> | C<n> | D<2n> (dihedral of order 2n) |
    perm:<degree>:<cycles>[,<cycles>]* with 1-based cycle notation.
    """
    spec = spec.strip()
    m = _NAMED_RE.match(spec)
    if m:
        kind, n = m.group(1), int(m.group(2))
        if kind == "S":
            if n < 1:
                raise ParseError("S<n> needs n >= 1")
            gens = []
            if n >= 2:
                gens.append(parse_cycles("(1 2)", n))
            if n >= 3:
                gens.append(tuple(list(range(1, n)) + [0]))
            return Group.generate(n, gens, name=spec, max_order=max_order)
        if kind == "A":
            if n < 3:
                # A1, A2 are trivial; keep degree n anyway for n >= 1
                if n < 1:
                    raise ParseError("A<n> needs n >= 1")
                return Group.generate(max(n, 1), [], name=spec, max_order=max_order)
            gens = [parse_cycles("(1 2 3)", n)]
            if n >= 4:
                # standard second generator: the n-cycle when n is odd,
                # the (n-1)-cycle fixing point 1 when n is even
                if n % 2:
                    gens.append(tuple(list(range(1, n)) + [0]))
                else:
                    gens.append(tuple([0] + list(range(2, n)) + [1]))
            return Group.generate(n, gens, name=spec, max_order=max_order)
        if kind == "C":
            if n < 1:
                raise ParseError("C<n> needs n >= 1")
            gens = [tuple(list(range(1, n)) + [0])] if n > 1 else []
            return Group.generate(max(n, 1), gens, name=spec, max_order=max_order)
        if kind == "D":
            if n % 2 or n < 6:
                raise ParseError("D<m> needs even m >= 6 (dihedral of order m)")
            k = n // 2
            rot = tuple(list(range(1, k)) + [0])
            refl = tuple((k - i) % k for i in range(k))
            return Group.generate(k, [rot, refl], name=spec, max_order=max_order)
    if spec.startswith("perm:"):
        parts = spec.split(":", 2)
        if len(parts) != 3:
            raise ParseError(f"malformed perm spec: {spec!r}")
        try:
            degree = int(parts[1])
        except ValueError:
            raise ParseError(f"bad degree in {spec!r}") from None
        if degree < 1:
            raise ParseError("degree must be positive")
        gens = [parse_cycles(t, degree) for t in _split_gens(parts[2])]
        return Group.generate(degree, gens, name=spec, max_order=max_order)
    raise ParseError(f"unrecognized group spec: {spec!r}")


def _split_gens(text: str):
    """Split generator list on commas outside parentheses."""
    out, depth, cur = [], 0, []
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise ParseError(f"unbalanced parentheses: {text!r}")
        if ch == "," and depth == 0:
            out.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    if depth != 0:
        raise ParseError(f"unbalanced parentheses: {text!r}")
    out.append("".join(cur))
    return [t for t in (s.strip() for s in out) if t]


def element_orders_multiset(G: Group) -> tuple:
    return tuple(sorted(porder(x) for x in G.elements))
