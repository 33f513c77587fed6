"""The extended Burnside ring of a finite permutation group.

Basis classes pair a subgroup class H with an orbit of multiplier classes
mu under the normalizer; the product distributes over double cosets K g H,
each contributing the intersection H meet K^g carrying the sum of the two
restricted cocycles. Marks average a character of M(H) over transporter
cosets and land in a cyclotomic field; with all multipliers of order at
most 2 the values are plain integers.
"""

from __future__ import annotations

from .cyclotomic import CycloValue, cyclo_normalize
from .errors import UnknownLabelError
from .groups import Group, conjugate_subgroup, intersection
from .multiplier import MultiplierOrbits, SubgroupMultiplier, orbit_suffix
from .perm import pinv, pmul
from .subgroups import (SubgroupClassTable, double_coset_reps, generating_set,
                        subgroup_classes, transporter_coset_reps)


class ExtBasisClass:
    """One basis class: a subgroup class plus a multiplier orbit."""

    __slots__ = ("index", "class_index", "label", "coords")

    def __init__(self, index, class_index, label, coords):
        self.index = index
        self.class_index = class_index
        self.label = label
        self.coords = coords

    def __repr__(self):
        return f"<basis {self.label}>"


class MarkHom:
    """One mark homomorphism: a subgroup class plus a character orbit."""

    __slots__ = ("index", "class_index", "label", "exponents")

    def __init__(self, index, class_index, label, exponents):
        self.index = index
        self.class_index = class_index
        self.label = label
        self.exponents = exponents

    def __repr__(self):
        return f"<mark {self.label}>"


class ExtElement:
    """Integer combination of basis classes."""

    __slots__ = ("ring", "coeffs")

    def __init__(self, ring, coeffs):
        self.ring = ring
        self.coeffs = {i: c for i, c in coeffs.items() if c}

    def __add__(self, other):
        self._check(other)
        out = dict(self.coeffs)
        for i, c in other.coeffs.items():
            out[i] = out.get(i, 0) + c
        return ExtElement(self.ring, out)

    def __sub__(self, other):
        self._check(other)
        out = dict(self.coeffs)
        for i, c in other.coeffs.items():
            out[i] = out.get(i, 0) - c
        return ExtElement(self.ring, out)

    def __neg__(self):
        return ExtElement(self.ring, {i: -c for i, c in self.coeffs.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return ExtElement(self.ring, {i: c * other for i, c in self.coeffs.items()})
        self._check(other)
        out = {}
        for i, a in self.coeffs.items():
            for j, b in other.coeffs.items():
                for t, n in self.ring.product_basis(i, j).items():
                    out[t] = out.get(t, 0) + a * b * n
        return ExtElement(self.ring, out)

    def __rmul__(self, other):
        if isinstance(other, int):
            return self.__mul__(other)
        return NotImplemented

    def __eq__(self, other):
        return (isinstance(other, ExtElement) and self.ring is other.ring
                and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __bool__(self):
        return bool(self.coeffs)

    def _check(self, other):
        if not isinstance(other, ExtElement) or other.ring is not self.ring:
            raise ValueError("elements live in different rings")

    def m(self) -> int:
        return self.ring.m_of(self)

    def __repr__(self):
        return self.ring.format_element(self)


class ExtRing:
    """b~(G) with its basis, products, marks and simple-object counts."""

    def __init__(self, group: Group, table: SubgroupClassTable | None = None):
        self.group = group
        self.table = table if table is not None else subgroup_classes(group)
        self.mults = [SubgroupMultiplier(rep) for rep in self.table.reps]
        self.orbits = [
            MultiplierOrbits(mult, generating_set(self.table.normalizers[i]))
            for i, mult in enumerate(self.mults)
        ]
        self.basis = []
        self.basis_index = {}
        self.homs = []
        for ci in range(len(self.table)):
            label = self.table.labels[ci]
            for oi, rep in enumerate(self.orbits[ci].orbit_reps):
                b = ExtBasisClass(len(self.basis), ci, label + orbit_suffix(oi), rep)
                self.basis.append(b)
                self.basis_index[(ci, rep)] = b.index
            for xi, exps in enumerate(self.orbits[ci].char_reps):
                h = MarkHom(len(self.homs), ci, label + orbit_suffix(xi), exps)
                self.homs.append(h)
        if len(self.homs) != len(self.basis):
            raise AssertionError("basis and mark counts differ")
        self._by_label = {b.label: b for b in self.basis}
        self._hom_by_label = {h.label: h for h in self.homs}
        self._products = {}
        self._transporters = {}
        self._marks = {}
        self._mvals = {}

    # -- elements ------------------------------------------------------------

    def __len__(self):
        return len(self.basis)

    def basis_element(self, label: str) -> ExtElement:
        b = self._by_label.get(label)
        if b is None:
            raise UnknownLabelError(f"no basis class labelled {label!r}")
        return ExtElement(self, {b.index: 1})

    def element(self, coeffs) -> ExtElement:
        return ExtElement(self, dict(coeffs))

    @property
    def one(self) -> ExtElement:
        ci = len(self.table) - 1  # the ambient group is the last class
        return ExtElement(self, {self.basis_index[(ci, self.orbits[ci].orbit_reps[0])]: 1})

    def format_element(self, x: ExtElement) -> str:
        if not x.coeffs:
            return "0"
        parts = []
        for i in sorted(x.coeffs, reverse=True):
            c = x.coeffs[i]
            lab = f"[{self.basis[i].label}]"
            if c == 1:
                term = lab
            elif c == -1:
                term = f"-{lab}"
            else:
                term = f"{c}*{lab}"
            parts.append(term)
        out = parts[0]
        for term in parts[1:]:
            out += f" - {term[1:]}" if term.startswith("-") else f" + {term}"
        return out

    # -- products --------------------------------------------------------------

    def product_basis(self, i: int, j: int) -> dict:
        """Product of two basis classes as {basis index: multiplicity}."""
        key = (i, j)
        got = self._products.get(key)
        if got is not None:
            return got
        a, b = self.basis[i], self.basis[j]
        H = self.table.reps[a.class_index]
        K = self.table.reps[b.class_index]
        mh = self.mults[a.class_index]
        mk = self.mults[b.class_index]
        mu = {}
        for part, block in zip(mh.parts, mh.blocks(a.coords)):
            if any(block):
                mu[part.p] = (part, mh.combine(part, block))
        nu = {}
        for part, block in zip(mk.parts, mk.blocks(b.coords)):
            if any(block):
                nu[part.p] = (part, mk.combine(part, block))
        out = {}
        for g in double_coset_reps(self.group, K, H):
            gi = pinv(g)
            I = intersection(H, conjugate_subgroup(K, g))
            idx, t = self.table.class_of(I)
            mr = self.mults[idx]
            if mr.moduli:
                ti = pinv(t)
                xof = {u: pmul(pmul(t, u), ti) for u in mr.elements}
                coords = []
                for part in mr.parts:
                    ph = mu.get(part.p)
                    pk = nu.get(part.p)
                    if ph is None and pk is None:
                        coords.extend([0] * len(part.factors))
                        continue
                    Q = part.q
                    if ph is not None:
                        Q = max(Q, ph[0].q)
                    if pk is not None:
                        Q = max(Q, pk[0].q)

                    def fn(u, v, ph=ph, pk=pk, Q=Q):
                        x, y = xof[u], xof[v]
                        tot = 0
                        if ph is not None:
                            hp, z = ph
                            tot += (Q // hp.q) * mh.value_at(
                                hp, z, mh.eindex[x], mh.eindex[y])
                        if pk is not None:
                            kp, z = pk
                            xk = pmul(pmul(g, x), gi)
                            yk = pmul(pmul(g, y), gi)
                            tot += (Q // kp.q) * mk.value_at(
                                kp, z, mk.eindex[xk], mk.eindex[yk])
                        return tot % Q

                    coords.extend(mr.reduce_pair_fn(part.p, Q, fn))
                rep = self.orbits[idx].canonical(tuple(coords))
            else:
                rep = ()
            bi = self.basis_index[(idx, rep)]
            out[bi] = out.get(bi, 0) + 1
        self._products[key] = out
        return out

    def multiply(self, x: ExtElement, y: ExtElement) -> ExtElement:
        return x * y

    # -- marks -----------------------------------------------------------------

    def _transporter_data(self, hidx: int, kidx: int):
        """Coset reps of the transporter and one restriction matrix per coset.

        The matrix sends flat M(K)-coordinates to flat M(H)-coordinates;
        column j is the class of the j-th generator cocycle conjugated by
        the coset rep and restricted to H.
        """
        key = (hidx, kidx)
        got = self._transporters.get(key)
        if got is not None:
            return got
        H = self.table.reps[hidx]
        K = self.table.reps[kidx]
        mh = self.mults[hidx]
        mk = self.mults[kidx]
        cosets = transporter_coset_reps(self.group, H, K, self.table)
        offsets = {}
        off = 0
        for part in mh.parts:
            offsets[part.p] = off
            off += len(part.factors)
        width = len(mh.moduli)
        mats = []
        for g in cosets:
            gi = pinv(g)
            kof = {x: mk.eindex[pmul(pmul(g, x), gi)] for x in H.elements}
            cols = []
            for part in mk.parts:
                ph = mh.part_of(part.p)
                for gv in part.gen_vecs:
                    col = [0] * width
                    if ph is not None:
                        Q = max(part.q, ph.q)
                        scale = Q // part.q
                        base = []
                        for s in mh.gens:
                            si = kof[s]
                            for h in range(1, mh.m):
                                iv = kof[mh.elements[h]]
                                base.append(scale * mk.value_at(part, gv, si, iv))
                        coords = mh.reduce_base(part.p, Q, base)
                        o = offsets[part.p]
                        for n, c in enumerate(coords):
                            col[o + n] = c
                    cols.append(tuple(col))
            mats.append(cols)
        data = (cosets, mats)
        self._transporters[key] = data
        return data

    def mark(self, hom_index: int, basis_index: int) -> CycloValue:
        key = (hom_index, basis_index)
        got = self._marks.get(key)
        if got is not None:
            return got
        hom = self.homs[hom_index]
        b = self.basis[basis_index]
        _, mats = self._transporter_data(hom.class_index, b.class_index)
        mh = self.mults[hom.class_index]
        E = mh.conductor
        moduli = mh.moduli
        counts = {}
        for cols in mats:
            e = 0
            for j, x in enumerate(b.coords):
                if x:
                    col = cols[j]
                    for n, d in enumerate(moduli):
                        e += x * col[n] * hom.exponents[n] * (E // d)
            e %= E
            counts[e] = counts.get(e, 0) + 1
        val = CycloValue.rational(0)
        for e in sorted(counts):
            val = val + counts[e] * CycloValue.root_power(E, e)
        val = cyclo_normalize(val)
        self._marks[key] = val
        return val

    def mark_of(self, hom_index: int, x: ExtElement) -> CycloValue:
        val = CycloValue.rational(0)
        for i, c in sorted(x.coeffs.items()):
            val = val + c * self.mark(hom_index, i)
        return cyclo_normalize(val)

    def extended_table(self):
        """Rows over basis classes, columns over marks."""
        return [[self.mark(h.index, b.index) for h in self.homs] for b in self.basis]

    def table_of_marks(self):
        """The ordinary block: transporter coset counts per class pair."""
        n = len(self.table)
        out = []
        for kidx in range(n):
            row = []
            for hidx in range(n):
                cosets, _ = self._transporter_data(hidx, kidx)
                row.append(len(cosets))
            out.append(row)
        return out

    @property
    def conductor(self) -> int:
        e = 1
        for mult in self.mults:
            c = mult.conductor
            e = e * c // _gcd(e, c)
        return e

    # -- simple object counts ----------------------------------------------------

    def m_of_basis(self, i: int) -> int:
        got = self._mvals.get(i)
        if got is None:
            b = self.basis[i]
            got = self.mults[b.class_index].regular_class_count(b.coords)
            self._mvals[i] = got
        return got

    def m_of(self, x: ExtElement) -> int:
        return sum(c * self.m_of_basis(i) for i, c in x.coeffs.items())

    # -- verification ------------------------------------------------------------

    def det_extended(self) -> CycloValue:
        rows = [row[:] for row in self.extended_table()]
        n = len(rows)
        det = CycloValue.rational(1)
        for c in range(n):
            piv = None
            for r in range(c, n):
                if rows[r][c]:
                    piv = r
                    break
            if piv is None:
                return CycloValue.rational(0)
            if piv != c:
                rows[c], rows[piv] = rows[piv], rows[c]
                det = -det
            det = det * rows[c][c]
            for r in range(c + 1, n):
                if rows[r][c]:
                    f = rows[r][c] / rows[c][c]
                    rows[r] = [a - f * b for a, b in zip(rows[r], rows[c])]
        return cyclo_normalize(det)

    def rank_extended(self) -> int:
        rows = [row[:] for row in self.extended_table()]
        n = len(rows)
        rank = 0
        for c in range(n):
            piv = None
            for r in range(rank, n):
                if rows[r][c]:
                    piv = r
                    break
            if piv is None:
                continue
            rows[rank], rows[piv] = rows[piv], rows[rank]
            for r in range(rank + 1, n):
                if rows[r][c]:
                    f = rows[r][c] / rows[rank][c]
                    rows[r] = [a - f * b for a, b in zip(rows[r], rows[rank])]
            rank += 1
        return rank

    def check_homomorphisms(self):
        """Count (hom, i, j) triples where f(b_i b_j) != f(b_i) f(b_j)."""
        n = len(self.basis)
        bad = 0
        for i in range(n):
            for j in range(n):
                prod = self.product_basis(i, j)
                for h in range(n):
                    lhs = CycloValue.rational(0)
                    for t, c in sorted(prod.items()):
                        lhs = lhs + c * self.mark(h, t)
                    rhs = self.mark(h, i) * self.mark(h, j)
                    if cyclo_normalize(lhs) != cyclo_normalize(rhs):
                        bad += 1
        return bad, n * n * n

    def sign_lemma_pairs(self):
        """(hom label, basis label) pairs meeting the odd-index conditions."""
        out = []
        for hidx in range(len(self.table)):
            if self.mults[hidx].moduli != (2,):
                continue
            for kidx in range(len(self.table)):
                if self.mults[kidx].moduli != (2,):
                    continue
                cosets, _ = self._transporter_data(hidx, kidx)
                if not cosets:
                    continue
                index = self.table.reps[kidx].order // self.table.reps[hidx].order
                if index % 2 == 1:
                    out.append((hidx, kidx))
        return out

    def check_sign_lemma(self):
        """Verify f'_H(<K'>) = -f_H(<K>) over all qualifying pairs."""
        results = []
        for hidx, kidx in self.sign_lemma_pairs():
            f0 = self._hom_by_label[self.table.labels[hidx]]
            f1 = self._hom_by_label[self.table.labels[hidx] + "'"]
            b0 = self._by_label[self.table.labels[kidx]]
            b1 = self._by_label[self.table.labels[kidx] + "'"]
            plain = self.mark(f0.index, b0.index)
            primed = self.mark(f1.index, b1.index)
            results.append((f1.label, b1.label, primed == -plain))
        return results

    def bfo_sets(self, target: int = 5, cross: int = 3):
        """Basis classes M with m(M*M) = target, and the cross-pair outcomes.

        For each unordered pair M != N from the set with m(M*N) = cross,
        reports whether M*M or N*N is the class of the full group.
        """
        hits = []
        for b in self.basis:
            x = ExtElement(self, {b.index: 1})
            if self.m_of(x * x) == target:
                hits.append(b.label)
        top = self.one
        pairs = []
        for i2 in range(len(hits)):
            for j2 in range(i2 + 1, len(hits)):
                x = self.basis_element(hits[i2])
                y = self.basis_element(hits[j2])
                if self.m_of(x * y) != cross:
                    continue
                ok = (x * x == top) or (y * y == top)
                pairs.append((hits[i2], hits[j2], ok))
        return hits, pairs


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a
