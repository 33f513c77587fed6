"""Slow, obviously-correct reference computations used by the test suite.

Nothing here is called from the production code paths. Each function
recomputes a quantity with the most direct method available so the fast
implementations have something independent to agree with.
"""

from __future__ import annotations

from .errors import CapacityError
from .groups import Group, closure, conjugate_subgroup
from .perm import pinv, pmul

ORACLE_ORDER_CAP = 24


def all_subgroups(G: Group, cap: int = ORACLE_ORDER_CAP):
    """Every subgroup of G, as Group objects, by join closure of cyclic ones.

    Complete because any subgroup is the join of the cyclic subgroups of its
    elements. Quadratic in the subgroup count, hence the order cap.
    """
    if G.order > cap:
        raise CapacityError(f"brute subgroup scan capped at order {cap}")
    subs = {frozenset((G.identity,))}
    for x in G.elements:
        subs.add(frozenset(closure(G.degree, [x], max_order=G.order)))
    while True:
        fresh = set()
        pool = sorted(subs, key=lambda s: (len(s), tuple(sorted(s))))
        for i, a in enumerate(pool):
            for b in pool[i + 1:]:
                if a <= b or b <= a:
                    continue
                j = frozenset(closure(G.degree, sorted(a | b), max_order=G.order))
                if j not in subs:
                    fresh.add(j)
        if not fresh:
            break
        subs |= fresh
    return [Group.from_elements(G.degree, s)
            for s in sorted(subs, key=lambda s: (len(s), tuple(sorted(s))))]


def partition_into_classes(G: Group, subs):
    """Group a list of subgroups into G-conjugacy classes of element sets."""
    remaining = {S.element_set() for S in subs}
    classes = []
    while remaining:
        seed = min(remaining, key=lambda s: tuple(sorted(s)))
        orbit = set()
        for g in G.elements:
            orbit.add(frozenset(conjugate_subgroup(Group.from_elements(G.degree, seed), g).elements))
        classes.append(sorted(orbit, key=lambda s: tuple(sorted(s))))
        remaining -= orbit
    return classes


def left_cosets(G: Group, K: Group):
    seen = set()
    cosets = []
    for g in G.elements:
        if g in seen:
            continue
        cs = frozenset(pmul(g, k) for k in K.elements)
        cosets.append(cs)
        seen |= cs
    return cosets


def fixed_point_mark(G: Group, K: Group, H: Group) -> int:
    """Number of cosets in G/K fixed by every element of H, counted directly."""
    count = 0
    for cs in left_cosets(G, K):
        anchor = next(iter(cs))
        if all(pmul(h, anchor) in cs for h in H.elements):
            count += 1
    return count


def double_coset_partition(G: Group, K: Group, H: Group):
    """All double cosets K g H as sorted element lists."""
    seen = set()
    out = []
    for g in G.elements:
        if g in seen:
            continue
        block = set()
        for k in K.elements:
            kg = pmul(k, g)
            for h in H.elements:
                block.add(pmul(kg, h))
        out.append(sorted(block))
        seen |= block
    return out


def check_cocycle_all_triples(elements, value_fn, n: int) -> bool:
    """Full cubic check of the 2-cocycle identity modulo n."""
    for x in elements:
        for y in elements:
            xy = pmul(x, y)
            for z in elements:
                lhs = value_fn(x, y) + value_fn(xy, z)
                rhs = value_fn(y, z) + value_fn(x, pmul(y, z))
                if (lhs - rhs) % n:
                    return False
    return True


def twisted_center_dimension(elements, value_fn, n: int) -> int:
    """Dimension over Q(zeta_n) of the center of the twisted group algebra.

    Basis u_h with u_g u_h = zeta^mu(g,h) u_{gh}. Writing a central element
    as sum a_h u_h, comparing coefficients of u_k in u_g x = x u_g gives,
    for every pair (g, k),

        zeta^mu(g, g^-1 k) * a_{g^-1 k} = zeta^mu(k g^-1, g) * a_{k g^-1}.

    Every equation ties two unknowns with root-of-unity coefficients, so the
    solution space is resolved exactly by union-find carrying the exponent of
    the ratio a_u / a_root: a merge either stays consistent or forces the
    whole component to zero (distinct powers of zeta_n are distinct).
    """
    idx = {h: i for i, h in enumerate(elements)}
    parent = list(range(len(elements)))
    ratio = [0] * len(elements)  # a_i = zeta^ratio[i] * a_parent[i]
    dead = [False] * len(elements)

    def root_and_exp(i):
        e = 0
        while parent[i] != i:
            e = (e + ratio[i]) % n
            i = parent[i]
        return i, e

    for g in elements:
        ginv = pinv(g)
        for k in elements:
            u = pmul(ginv, k)
            v = pmul(k, ginv)
            a = value_fn(g, u) % n
            b = value_fn(v, g) % n
            ru, eu = root_and_exp(idx[u])
            rv, ev = root_and_exp(idx[v])
            # zeta^a a_u = zeta^b a_v with a_u = zeta^eu a_ru, a_v = zeta^ev a_rv
            if ru != rv:
                parent[ru] = rv
                ratio[ru] = (b + ev - a - eu) % n
                dead[rv] = dead[rv] or dead[ru]
            elif (a + eu - b - ev) % n:
                dead[ru] = True
    roots = {root_and_exp(i)[0] for i in range(len(elements))}
    return sum(1 for r in roots if not dead[r])
