"""Normalized 2-cochains on a finite group with values in Z/n.

A cochain stores one residue per ordered pair of group elements. Cocycles
satisfy c(x,y) + c(xy,z) = c(y,z) + c(x,yz); normalized means c(1,x) =
c(x,1) = 0. Everything here is exact integer arithmetic.
"""

from __future__ import annotations

from .errors import NotACocycleError
from .groups import Group
from .perm import pinv, pmul


class Cochain2:
    __slots__ = ("host", "n", "values")

    def __init__(self, host: Group, n: int, values: dict):
        self.host = host
        self.n = n
        self.values = values

    def value(self, x, y) -> int:
        return self.values.get((x, y), 0)

    def is_normalized(self) -> bool:
        e = self.host.identity
        return all(self.value(e, x) == 0 and self.value(x, e) == 0 for x in self.host.elements)

    def __add__(self, other: "Cochain2") -> "Cochain2":
        if self.host is not other.host and self.host != other.host:
            raise ValueError("cochains live on different groups")
        if self.n != other.n:
            raise ValueError("cochains have different moduli")
        vals = {}
        for pair in set(self.values) | set(other.values):
            v = (self.values.get(pair, 0) + other.values.get(pair, 0)) % self.n
            if v:
                vals[pair] = v
        return Cochain2(self.host, self.n, vals)

    def __neg__(self) -> "Cochain2":
        return Cochain2(self.host, self.n, {k: (self.n - v) % self.n for k, v in self.values.items() if v % self.n})

    def __sub__(self, other: "Cochain2") -> "Cochain2":
        return self + (-other)

    def scale(self, a: int) -> "Cochain2":
        vals = {k: v * a % self.n for k, v in self.values.items()}
        return Cochain2(self.host, self.n, {k: v for k, v in vals.items() if v})

    def to_modulus(self, m: int) -> "Cochain2":
        """Push values along Z/n -> Z/m, x -> x * (m/n). Requires n | m."""
        if m % self.n:
            raise ValueError(f"{self.n} does not divide {m}")
        f = m // self.n
        return Cochain2(self.host, m, {k: v * f for k, v in self.values.items() if v})

    def component(self, p: int) -> "Cochain2":
        """The p-primary component: values reduced mod the p-part of n."""
        b = 1
        n = self.n
        while n % p == 0:
            b *= p
            n //= p
        vals = {k: v % b for k, v in self.values.items()}
        return Cochain2(self.host, b, {k: v for k, v in vals.items() if v})


def validate_cocycle(c: Cochain2) -> bool:
    """Full check of the cocycle identity over all triples. Cubic in |H|."""
    elems = c.host.elements
    val = c.value
    n = c.n
    for x in elems:
        for y in elems:
            xy = pmul(x, y)
            vxy = val(x, y)
            for z in elems:
                if (vxy + val(xy, z) - val(y, z) - val(x, pmul(y, z))) % n:
                    return False
    return True


def require_cocycle(c: Cochain2) -> None:
    if not validate_cocycle(c):
        raise NotACocycleError(f"cochain mod {c.n} fails the cocycle identity")


def coboundary(host: Group, n: int, alpha: dict) -> Cochain2:
    """(d alpha)(x,y) = alpha(x) + alpha(y) - alpha(xy), for alpha(1) = 0."""
    e = host.identity
    if alpha.get(e, 0) % n:
        raise ValueError("alpha must vanish at the identity")
    vals = {}
    for x in host.elements:
        ax = alpha.get(x, 0)
        for y in host.elements:
            v = (ax + alpha.get(y, 0) - alpha.get(pmul(x, y), 0)) % n
            if v:
                vals[(x, y)] = v
    return Cochain2(host, n, vals)


def bockstein(host: Group, q: int, chi: dict) -> Cochain2:
    """Carry cocycle of a character chi: H -> Z/q, valued in Z/q again.

    Lift chi to integers in [0, q); the failure of additivity of the lift,
    divided by q, is a 2-cocycle with values in {0, 1}.
    """
    vals = {}
    for x in host.elements:
        cx = chi.get(x, 0) % q
        for y in host.elements:
            s = cx + chi.get(y, 0) % q - chi.get(pmul(x, y), 0) % q
            if s % q:
                raise NotACocycleError("chi is not a homomorphism into Z/q")
            w = s // q
            if w:
                vals[(x, y)] = w % q
    return Cochain2(host, q, vals)


def restrict_cocycle(c: Cochain2, H: Group) -> Cochain2:
    if not H.is_subgroup_of(c.host):
        raise ValueError("restriction target is not a subgroup of the host")
    vals = {}
    for x in H.elements:
        for y in H.elements:
            v = c.value(x, y)
            if v:
                vals[(x, y)] = v
    return Cochain2(H, c.n, vals)


def conjugate_cocycle(c: Cochain2, g) -> Cochain2:
    """Transport c along conjugation: the result lives on host^g and sends
    (u, v) to c(g u g^-1, g v g^-1)."""
    gi = pinv(g)
    host_g = Group.from_elements(c.host.degree,
                                 [pmul(pmul(gi, x), g) for x in c.host.elements])
    vals = {}
    for u in host_g.elements:
        gu = pmul(pmul(g, u), gi)
        for v in host_g.elements:
            w = c.value(gu, pmul(pmul(g, v), gi))
            if w:
                vals[(u, v)] = w
    return Cochain2(host_g, c.n, vals)
