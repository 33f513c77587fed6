"""Abelianization of a permutation group, with a primary basis per prime.

Used to enumerate Hom(H, Z/q): homomorphisms factor through H/[H,H], and a
basis of each primary part gives independent characters.
"""

from __future__ import annotations

from .groups import Group, closure
from .perm import pinv, pmul, porder


def derived_subgroup(H: Group) -> Group:
    comms = set()
    for a in H.elements:
        ia = pinv(a)
        for b in H.elements:
            comms.add(pmul(pmul(ia, pinv(b)), pmul(a, b)))
    return Group.from_elements(H.degree, closure(H.degree, sorted(comms), max_order=H.order))


class Abelianization:
    """H/[H,H] with cosets named by their minimal element."""

    def __init__(self, H: Group):
        self.host = H
        D = derived_subgroup(H)
        self.derived = D.element_set()
        rep_of = {}
        reps = []
        for x in H.elements:
            if x in rep_of:
                continue
            coset = sorted(pmul(x, d) for d in self.derived)
            r = coset[0]
            reps.append(r)
            for y in coset:
                rep_of[y] = r
        self.reps = tuple(sorted(reps))
        self.rep_of = rep_of
        self.order = len(self.reps)
        self.identity = rep_of[H.identity]
        self._basis_cache = {}

    def project(self, x):
        return self.rep_of[x]

    def mul(self, a, b):
        return self.rep_of[pmul(a, b)]

    def power(self, a, e: int):
        out = self.identity
        cur = a
        e %= self.elt_order(a)
        while e:
            if e & 1:
                out = self.mul(out, cur)
            cur = self.mul(cur, cur)
            e >>= 1
        return out

    def elt_order(self, a) -> int:
        o = 1
        cur = a
        while cur != self.identity:
            cur = self.mul(cur, a)
            o += 1
        return o

    def primary_part(self, x, p: int):
        """Component of x in the p-primary summand."""
        o = self.elt_order(x)
        op = 1
        while o % p == 0:
            op *= p
            o //= p
        if op == 1:
            return self.identity
        op2 = self.elt_order(x) // op
        # exponent that is 1 mod op and 0 mod op2
        e = op2 * pow(op2, -1, op)
        return self.power(x, e)

    def primary_basis(self, p: int):
        """Basis (b_i, p^{e_i}) of the p-part, plus a coordinate map.

        Greedy: scan elements of the p-part by descending order, keep b when
        the span size grows by a full factor of ord(b), so the partial spans
        stay direct sums. Returns (basis, orders, coords) with coords mapping
        every p-part element to its coefficient tuple.
        """
        if p in self._basis_cache:
            return self._basis_cache[p]
        part = [x for x in self.reps if self._is_p_element(x, p)]
        part.sort(key=lambda x: (-self.elt_order(x), x))
        basis = []
        orders = []
        span = {self.identity}
        for c in part:
            oc = self.elt_order(c)
            if oc == 1:
                continue
            grown = self._grow_span(span, c)
            if len(grown) == len(span) * oc:
                basis.append(c)
                orders.append(oc)
                span = grown
            if len(span) == len(part):
                break
        if len(span) != len(part):
            raise AssertionError("primary basis search failed")
        coords = {self.identity: tuple([0] * len(basis))}
        stack = [(self.identity, tuple([0] * len(basis)))]
        while stack:
            x, cx = stack.pop()
            for i, b in enumerate(basis):
                y = self.mul(x, b)
                if y not in coords:
                    cy = list(cx)
                    cy[i] = (cy[i] + 1) % orders[i]
                    coords[y] = tuple(cy)
                    stack.append((y, tuple(cy)))
        self._basis_cache[p] = (basis, orders, coords)
        return basis, orders, coords

    def _is_p_element(self, x, p: int) -> bool:
        o = self.elt_order(x)
        while o % p == 0:
            o //= p
        return o == 1

    def _grow_span(self, span, c):
        out = set(span)
        frontier = set(span)
        while frontier:
            nxt = set()
            for x in frontier:
                y = self.mul(x, c)
                if y not in out:
                    out.add(y)
                    nxt.add(y)
            frontier = nxt
        return out


def hom_generators(H: Group, p: int, q: int):
    """Generators of Hom(H, Z/q), q a power of p, as dicts element -> value.

    One per basis vector of the p-part of the abelianization: the character
    sending that vector to q/gcd(ord, q) and the rest to zero.
    """
    ab = Abelianization(H)
    basis, orders, coords = ab.primary_basis(p)
    out = []
    for i, o in enumerate(orders):
        g = min(o, q)  # both are powers of p
        step = q // g
        chi = {}
        for x in H.elements:
            xp = ab.primary_part(ab.project(x), p)
            chi[x] = coords[xp][i] * step % q
        out.append(chi)
    return out
