"""Subgroup classification up to conjugacy, labels, double cosets, transporters.

Enumeration walks the join lattice: starting from the trivial subgroup,
adjoin generators of cyclic subgroups of prime power order. Every finite
group is generated by its prime-power-order elements (primary decomposition
of each cyclic subgroup), so the walk reaches every subgroup class.
"""

from __future__ import annotations

from collections import Counter

from .errors import CapacityError, NotASubgroupError
from .groups import Group, closure, conjugacy_classes, conjugate_subgroup, normalizer
from .perm import conj, format_cycles, identity, is_transposition, pinv, pmul, porder


def _prime_power_seeds(G: Group):
    """One generator per cyclic subgroup of prime power order, deduplicated."""
    seeds = {}
    for x in G.elements:
        if x == G.identity:
            continue
        o = porder(x)
        for p in _prime_factors(o):
            q = p
            while o % (q * p) == 0:
                q *= p
            c = _pow(x, o // q)
            sub = frozenset(_cyclic_elements(c))
            if sub not in seeds or c < seeds[sub]:
                seeds[sub] = c
    return sorted(seeds.values())


def _pow(x: tuple, k: int) -> tuple:
    out = identity(len(x))
    b = x
    while k:
        if k & 1:
            out = pmul(out, b)
        b = pmul(b, b)
        k >>= 1
    return out


def _cyclic_elements(x: tuple):
    e = identity(len(x))
    out = [e]
    y = x
    while y != e:
        out.append(y)
        y = pmul(y, x)
    return out


def _prime_factors(n: int):
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


class SubgroupClassTable:
    """Conjugacy classes of subgroups of an ambient group.

    reps are canonical (lexicographically minimal element tuple within the
    class), ordered by (order, element-order multiset, element tuple).
    _lookup maps every subgroup's frozenset to (class index, t) where
    conjugating the subgroup by t gives the class representative.
    """

    def __init__(self, ambient, reps, normalizers, labels, lookup, class_sizes):
        self.ambient = ambient
        self.reps = tuple(reps)
        self.normalizers = tuple(normalizers)
        self.labels = tuple(labels)
        self.class_sizes = tuple(class_sizes)
        self._lookup = lookup
        self._by_label = {lab: i for i, lab in enumerate(labels)}
        self._conj_maps = {}

    def __len__(self):
        return len(self.reps)

    def class_of(self, H: Group):
        """(class index, t) with conjugate_subgroup(H, t) == reps[index]."""
        key = H.element_set()
        if key not in self._lookup:
            raise NotASubgroupError("not a subgroup of the ambient group")
        return self._lookup[key]

    def index_of_label(self, label: str):
        return self._by_label.get(label)

    def conjugates_map(self, idx: int):
        """dict g -> element frozenset of reps[idx]^g, for every g in ambient."""
        if idx not in self._conj_maps:
            rep = self.reps[idx]
            out = {}
            for g in self.ambient.elements:
                out[g] = frozenset(conj(x, g) for x in rep.elements)
            self._conj_maps[idx] = out
        return self._conj_maps[idx]


def _canonical_key(elements):
    return (
        len(elements),
        tuple(sorted(porder(x) for x in elements)),
        tuple(sorted(elements)),
    )


def subgroup_classes(G: Group, max_order: int | None = None) -> SubgroupClassTable:
    if max_order is not None and G.order > max_order:
        raise CapacityError(f"group order {G.order} exceeds cap {max_order}")
    seeds = _prime_power_seeds(G)
    e = G.identity

    lookup = {}
    class_reps = []
    class_sizes = []
    class_gens = []

    def register(elems_sorted):
        """Record the G-class of a new subgroup; returns its index."""
        orbit = {}
        for g in G.elements:
            cset = frozenset(conj(x, g) for x in elems_sorted)
            if cset not in orbit:
                orbit[cset] = g
        rep_set = min(orbit, key=lambda s: tuple(sorted(s)))
        idx = len(class_reps)
        rep = Group.from_elements(G.degree, rep_set)
        class_reps.append(rep)
        class_sizes.append(len(orbit))
        class_gens.append(_small_generating_set(rep))
        g_rep = orbit[rep_set]
        for cset, g in orbit.items():
            # rep = base^{g_rep} and cset = base^{g}, so t = g^{-1} g_rep
            # conjugates cset onto rep.
            lookup[cset] = (idx, pmul(pinv(g), g_rep))
        return idx

    register((e,))
    work = [0]
    while work:
        i = work.pop()
        hset = class_reps[i].element_set()
        gens = class_gens[i]
        for c in seeds:
            if c in hset:
                continue
            J = closure(G.degree, gens + [c], max_order=G.order)
            if frozenset(J) not in lookup:
                work.append(register(J))

    order = sorted(range(len(class_reps)), key=lambda i: _canonical_key(class_reps[i].elements))
    reps = [class_reps[i] for i in order]
    sizes = [class_sizes[i] for i in order]
    renum = {old: new for new, old in enumerate(order)}
    lookup = {k: (renum[i], t) for k, (i, t) in lookup.items()}
    normalizers = [normalizer(G, H) for H in reps]
    labels = _assign_labels(reps)
    return SubgroupClassTable(G, reps, normalizers, labels, lookup, sizes)


# Signature table: (order, element-order multiset) -> base name. Entries
# whose signature is shared by non-isomorphic groups get refined below.
_NAMED_SIGNATURES = {
    (6, (1, 2, 2, 2, 3, 3)): "S3like",
    (8, (1, 2, 2, 2, 2, 2, 4, 4)): "D8",
    (8, (1, 2, 4, 4, 4, 4, 4, 4)): "Q8",
    (10, (1, 2, 2, 2, 2, 2, 5, 5, 5, 5)): "H10",
    (12, (1, 2, 2, 2, 3, 3, 3, 3, 3, 3, 3, 3)): "A4",
    (12, (1, 2, 2, 2, 2, 2, 2, 2, 3, 3, 6, 6)): "S3xS2",
    (20, (1, 2, 2, 2, 2, 2, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 5, 5, 5, 5)): "H20",
}


def _base_name(H: Group) -> str | None:
    o = H.order
    if o == 1:
        return "1"
    orders = tuple(sorted(porder(x) for x in H.elements))
    if max(orders) == o:
        return f"C{o}"
    if o == 4:
        return "V"
    sig = _NAMED_SIGNATURES.get((o, orders))
    if sig == "S3like":
        return "S3" if any(is_transposition(x) for x in H.elements) else "H6"
    if sig is not None:
        return sig
    c = Counter(orders)
    if o == 24 and c == Counter({1: 1, 2: 9, 3: 8, 4: 6}):
        return "S4"
    if o == 60 and c == Counter({1: 1, 2: 15, 3: 20, 5: 24}):
        return "A5"
    if o == 120 and c == Counter({1: 1, 2: 25, 3: 20, 4: 30, 5: 24, 6: 20}):
        return "S5"
    return None


def _assign_labels(reps):
    names = [_base_name(H) for H in reps]
    unnamed_seen = {}
    for i, nm in enumerate(names):
        if nm is None:
            o = reps[i].order
            unnamed_seen[o] = unnamed_seen.get(o, 0) + 1
            names[i] = f"o{o}n{unnamed_seen[o]}"
    counts = Counter(names)
    labels = []
    occur = Counter()
    for nm in names:
        if nm == "V":
            occur[nm] += 1
            labels.append(f"V{occur[nm]}")
        elif counts[nm] > 1:
            occur[nm] += 1
            labels.append(nm + "abcdefghijklmnopqrstuvwxyz"[occur[nm] - 1])
        else:
            labels.append(nm)
    return labels


def double_coset_reps(G: Group, K: Group, H: Group):
    """Minimal representatives of the double cosets K g H, in order."""
    for S in (K, H):
        if not S.is_subgroup_of(G):
            raise NotASubgroupError("double cosets need subgroups of G")
    seen = set()
    reps = []
    for g in G.elements:
        if g in seen:
            continue
        reps.append(g)
        for k in K.elements:
            kg = pmul(k, g)
            for h in H.elements:
                seen.add(pmul(kg, h))
    return reps


def transporter_set(G: Group, H: Group, K: Group, table: SubgroupClassTable | None = None):
    """S = {g in G : H <= K^g}, as a sorted list."""
    for S in (H, K):
        if not S.is_subgroup_of(G):
            raise NotASubgroupError("transporter needs subgroups of G")
    if table is not None:
        kidx, _ = table.class_of(K)
        conj_map = table.conjugates_map(kidx)
        # conjugates_map is for the class rep; K itself may differ from it.
        if table.reps[kidx].element_set() == K.element_set():
            gens = H.generators
            return [g for g in G.elements if all(x in conj_map[g] for x in gens)]
    gens = H.generators
    out = []
    for g in G.elements:
        kg = frozenset(conj(x, g) for x in K.elements)
        if all(x in kg for x in gens):
            out.append(g)
    return out


def transporter_coset_reps(G: Group, H: Group, K: Group, table=None):
    """One minimal representative per right coset K g inside the transporter."""
    S = transporter_set(G, H, K, table)
    kset = K.element_set()
    seen = set()
    reps = []
    for g in S:
        if g in seen:
            continue
        reps.append(g)
        for k in kset:
            seen.add(pmul(k, g))
    return reps


def describe_class(table: SubgroupClassTable, idx: int) -> dict:
    H = table.reps[idx]
    return {
        "label": table.labels[idx],
        "order": H.order,
        "class_size": table.class_sizes[idx],
        "normalizer_order": table.normalizers[idx].order,
        "generators": [format_cycles(g) for g in _small_generating_set(H)],
    }


def _small_generating_set(H: Group):
    """Greedy minimal-ish generating set, deterministic."""
    if H.order == 1:
        return []
    for x in H.elements:
        if porder(x) == H.order:
            return [x]
    best = None
    for i, a in enumerate(H.elements):
        if a == H.identity:
            continue
        for b in H.elements[i + 1:]:
            if len(closure(H.degree, [a, b], max_order=H.order)) == H.order:
                return [a, b]
    # fall back to three generators; enough for everything at this scale
    for i, a in enumerate(H.elements):
        if a == H.identity:
            continue
        for j, b in enumerate(H.elements[i + 1:], i + 1):
            for c in H.elements[j + 1:]:
                if len(closure(H.degree, [a, b, c], max_order=H.order)) == H.order:
                    return [a, b, c]
    return list(H.generators)


def generating_set(H: Group):
    return _small_generating_set(H)
