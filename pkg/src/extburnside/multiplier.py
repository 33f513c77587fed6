"""Schur multipliers presented by explicit 2-cocycles, one prime at a time.

For a subgroup H and a prime p with p-part q of |H|, a normalized cocycle
mod q is determined by its values at (generator, element) pairs; the cocycle
identity becomes a linear system over Z/q in those base values. The p-part
of the multiplier is the quotient of the solution space by coboundaries and
by carry cocycles of characters H -> Z/q. Quotient generators are kept as
explicit base-value vectors so restriction, conjugation and reduction of
later cocycles stay cheap.

Coordinates of a class are a flat tuple, one entry per cyclic factor, primes
in ascending order and factor moduli ascending within each prime.
"""

from __future__ import annotations

import itertools
from array import array

from .abelian import hom_generators
from .cocycles import Cochain2, validate_cocycle
from .errors import NotACocycleError
from .groups import Group, centralizer, conjugacy_classes
from .kernels import (Elim, dot_mod, kernel_of_rows, mat_vec_rows, rel_howell,
                      smith_zq, vec_build)
from .perm import pinv, pmul
from .subgroups import generating_set


def _primes_of(n: int):
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            k = 0
            q = 1
            while n % d == 0:
                n //= d
                k += 1
                q *= d
            out.append((d, k, q))
        d += 1
    if n > 1:
        out.append((n, 1, n))
    return out


class _PrimePart:
    __slots__ = ("p", "k", "q", "vec", "kernel", "factors", "gen_vecs")

    def __init__(self, p, k, q):
        self.p = p
        self.k = k
        self.q = q


class SubgroupMultiplier:
    """M(H) for one subgroup, with reduction of cocycles to coordinates."""

    def __init__(self, host: Group):
        self.host = host
        self.elements = host.elements
        self.m = len(self.elements)
        self.eindex = {x: i for i, x in enumerate(self.elements)}
        self.gens = tuple(generating_set(host))
        m = self.m
        mul = array("i", bytes(4 * m * m))
        for i, a in enumerate(self.elements):
            base = i * m
            for j, b in enumerate(self.elements):
                mul[base + j] = self.eindex[pmul(a, b)]
        self.mul = mul
        self.gen_idx = array("i", [self.eindex[g] for g in self.gens])
        self.B = len(self.gens) * (m - 1)
        self.order, self.parent_s, self.parent_y = self._bfs()
        self._reducers = {}
        self.parts = [self._build_part(p, k, q) for p, k, q in _primes_of(host.order)]
        self.moduli = tuple(d for part in self.parts for d in part.factors)
        self.zero = tuple([0] * len(self.moduli))
        self.conductor = 1
        for d in self.moduli:
            self.conductor = self.conductor * d // _gcd(self.conductor, d)

    # -- construction ------------------------------------------------------

    def _bfs(self):
        m = self.m
        order = array("i", [0] * m)
        parent_s = array("i", [0] * m)
        parent_y = array("i", [0] * m)
        seen = bytearray(m)
        seen[0] = 1
        head, count = 0, 1
        while head < count:
            y = order[head]
            head += 1
            for si, ge in enumerate(self.gen_idx):
                x = self.mul[ge * m + y]
                if not seen[x]:
                    seen[x] = 1
                    parent_s[x] = si
                    parent_y[x] = y
                    order[count] = x
                    count += 1
        if count != m:
            raise AssertionError("generating set does not generate")
        return order, parent_s, parent_y

    def _build_part(self, p, k, q):
        part = _PrimePart(p, k, q)
        m, B = self.m, self.B
        if B == 0:
            part.vec = array("i")
            part.kernel = []
            part.factors = ()
            part.gen_vecs = []
            return part
        part.vec = vec_build(m, B, q, self.mul, self.order,
                             self.parent_s, self.parent_y, self.gen_idx)
        rel_rows, _ = rel_howell(part.vec, m, B, q, p, k, self.mul,
                                 self.gen_idx, self.parent_s, self.parent_y)
        W = kernel_of_rows(rel_rows, B, q, p, k)
        part.kernel = W
        r = len(W)
        if r == 0:
            part.factors = ()
            part.gen_vecs = []
            return part
        coord = Elim(B + r, q, p, k, pivot_width=B)
        for i, w in enumerate(W):
            row = array("i", bytes(4 * (B + r)))
            row[:B] = w
            row[B + i] = 1
            coord.add(row)
        rows_r = []
        for u in self._span_rows(p, q):
            tags = coord.solve(u)
            if tags is None:
                raise AssertionError("coboundary row escaped the cocycle space")
            rows_r.append(tags)
        cols = [array("i", [W[i][c] for i in range(r)]) for c in range(B)]
        rows_r.extend(kernel_of_rows(cols, r, q, p, k))
        cvals, _, cinv = smith_zq(rows_r, r, q, p, k)
        factors = []
        gen_vecs = []
        for j, c in enumerate(cvals):
            if c <= 0:
                continue
            y = mat_vec_rows(cinv, r, j)
            gv = array("i", bytes(4 * B))
            for i in range(r):
                yi = y[i] % q
                if yi:
                    wi = W[i]
                    for t in range(B):
                        gv[t] = (gv[t] + yi * wi[t]) % q
            factors.append(p ** c)
            gen_vecs.append(gv)
        part.factors = tuple(factors)
        part.gen_vecs = gen_vecs
        return part

    def _span_rows(self, p, q):
        """Coboundary and carry rows at modulus q, as base-value vectors."""
        m, B = self.m, self.B
        mul = self.mul
        rows = []
        for tau in range(1, m):
            row = array("i", bytes(4 * B))
            for si, ge in enumerate(self.gen_idx):
                base = si * (m - 1)
                for h in range(1, m):
                    v = ((1 if ge == tau else 0) + (1 if h == tau else 0)
                         - (1 if mul[ge * m + h] == tau else 0)) % q
                    row[base + h - 1] = v
            rows.append(row)
        for chi in hom_generators(self.host, p, q):
            row = array("i", bytes(4 * B))
            for si, g in enumerate(self.gens):
                cg = chi[g] % q
                ge = self.gen_idx[si]
                base = si * (m - 1)
                for h in range(1, m):
                    s = cg + chi[self.elements[h]] % q - chi[self.elements[mul[ge * m + h]]] % q
                    row[base + h - 1] = (s // q) % q
            rows.append(row)
        return rows

    # -- reduction ---------------------------------------------------------

    def part_of(self, p: int):
        for part in self.parts:
            if part.p == p:
                return part
        return None

    def reducer(self, p: int, Q: int):
        """Eliminator whose tags read off class coordinates at prime p.

        Valid for any p-power Q divisible by the p-part of |H|; foreign
        primes get a coboundary-only eliminator with no tags.
        """
        key = (p, Q)
        got = self._reducers.get(key)
        if got is not None:
            return got
        part = self.part_of(p)
        t = len(part.factors) if part is not None else 0
        kq = 0
        qq = Q
        while qq % p == 0:
            qq //= p
            kq += 1
        if qq != 1 or kq == 0:
            raise ValueError(f"{Q} is not a positive power of {p}")
        elim = Elim(self.B + t, Q, p, kq, pivot_width=self.B)
        if part is not None and part.factors:
            if Q % part.q:
                raise ValueError(f"reducer modulus {Q} not divisible by {part.q}")
            f = Q // part.q
            for tj, gv in enumerate(part.gen_vecs):
                elim.add_tagged([x * f % Q for x in gv], tj, t)
        for row in self._span_rows(p, Q):
            elim.add_tagged(row, None, t)
        elim.finalize()
        self._reducers[key] = (elim, part)
        return elim, part

    def reduce_base(self, p: int, Q: int, base):
        """Coordinates at prime p of a cocycle mod Q given by base values."""
        elim, part = self.reducer(p, Q)
        tags = elim.solve(base)
        if tags is None:
            raise NotACocycleError(
                f"base values mod {Q} do not extend to a cocycle on the host")
        if part is None:
            return ()
        return tuple(tags[j] % d for j, d in enumerate(part.factors))

    def reduce_pair_fn(self, p: int, Q: int, fn):
        """Same, with values supplied as fn(x, y) on pairs of elements."""
        base = []
        for g in self.gens:
            for h in range(1, self.m):
                base.append(fn(g, self.elements[h]) % Q)
        return self.reduce_base(p, Q, base)

    def reduce_cochain(self, c: Cochain2, validate: bool = True):
        """Full coordinate tuple of a cocycle given as a Cochain2 on host."""
        if c.host != self.host:
            raise ValueError("cochain lives on a different group")
        if validate and not validate_cocycle(c):
            raise NotACocycleError(f"cochain mod {c.n} fails the cocycle identity")
        e = self.host.identity
        shift = c.value(e, e) % c.n
        out = []
        seen = set()
        for part in self.parts:
            b, pb = 0, 1
            n = c.n
            while n % part.p == 0:
                n //= part.p
                b += 1
                pb *= part.p
            seen.add(part.p)
            if b == 0:
                out.extend([0] * len(part.factors))
                continue
            unit = pow(c.n // pb, -1, pb) if pb < c.n else 1
            Q = max(pb, part.q)
            f = Q // pb
            base = []
            for g in self.gens:
                for h in range(1, self.m):
                    v = (c.value(g, self.elements[h]) - shift) * unit % pb
                    base.append(v * f)
            out.extend(self.reduce_base(part.p, Q, base))
        for p, _, pb in _primes_of(c.n):
            if p in seen:
                continue
            # foreign prime: the component must reduce to nothing
            unit = pow(c.n // pb, -1, pb) if pb < c.n else 1
            base = []
            for g in self.gens:
                for h in range(1, self.m):
                    base.append((c.value(g, self.elements[h]) - shift) * unit % pb)
            self.reduce_base(p, pb, base)
        return tuple(out)

    # -- evaluation --------------------------------------------------------

    def blocks(self, coords):
        """Split a flat coordinate tuple into per-prime blocks."""
        out = []
        off = 0
        for part in self.parts:
            t = len(part.factors)
            out.append(tuple(coords[off:off + t]))
            off += t
        if off != len(coords):
            raise ValueError("coordinate tuple has the wrong length")
        return out

    def combine(self, part: _PrimePart, block):
        """Base-value vector of the cocycle sum_j block[j] * gen_j mod q."""
        z = array("i", bytes(4 * self.B))
        for x, gv in zip(block, part.gen_vecs):
            x %= part.q
            if x:
                for t in range(self.B):
                    z[t] = (z[t] + x * gv[t]) % part.q
        return z

    def value_at(self, part: _PrimePart, z, xi: int, yi: int) -> int:
        return dot_mod(part.vec, (xi * self.m + yi) * self.B, z, self.B, part.q)

    def cochain_of(self, coords) -> Cochain2:
        """A representative cocycle mod the product of the prime parts."""
        n = 1
        for part in self.parts:
            n *= part.q
        vals = {}
        for part, block in zip(self.parts, self.blocks(coords)):
            if not any(block):
                continue
            z = self.combine(part, block)
            scale = n // part.q
            for xi in range(1, self.m):
                xe = self.elements[xi]
                for yi in range(1, self.m):
                    v = self.value_at(part, z, xi, yi)
                    if v:
                        key = (xe, self.elements[yi])
                        vals[key] = (vals.get(key, 0) + v * scale) % n
        return Cochain2(self.host, n, {k: v for k, v in vals.items() if v})

    # -- regular classes ---------------------------------------------------

    def regular_class_count(self, coords) -> int:
        """Number of conjugacy classes of H made of mu-regular elements."""
        live = []
        for part, block in zip(self.parts, self.blocks(coords)):
            if any(x % part.q for x in block):
                live.append((part, self.combine(part, block)))
        classes = conjugacy_classes(self.host)
        if not live:
            return len(classes)
        count = 0
        for cls in classes:
            h = cls[0]
            hi = self.eindex[h]
            cent = centralizer(self.host, h)
            ok = True
            for part, z in live:
                for g in cent.elements:
                    gi = self.eindex[g]
                    if (self.value_at(part, z, hi, gi)
                            != self.value_at(part, z, gi, hi)):
                        ok = False
                        break
                if not ok:
                    break
            if ok:
                count += 1
        return count


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


class MultiplierOrbits:
    """Coordinate tuples and characters of M(H) up to conjugation.

    The acting elements normalize H; conjugation permutes cohomology classes
    linearly, so the action is stored as one matrix per prime per actor.
    """

    def __init__(self, mult: SubgroupMultiplier, actors):
        self.mult = mult
        gens = []
        seen = set()
        for n in actors:
            for g in (n, pinv(n)):
                if g not in seen and g != mult.host.identity:
                    seen.add(g)
                    gens.append(g)
        self.actor_gens = tuple(gens)
        self._inv = {g: pinv(g) for g in gens}
        self.maps = {g: self._matrix(g) for g in gens}
        space = list(itertools.product(*[range(d) for d in mult.moduli]))
        self.orbit_reps, self.orbit_of = self._orbits(space, self.act)
        self.char_reps, self.char_orbit_of = self._orbits(space, self.act_char)
        if len(self.char_reps) != len(self.orbit_reps):
            raise AssertionError("class and character orbit counts differ")

    def _matrix(self, n):
        mult = self.mult
        ni = pinv(n)
        idx = {}
        for x in mult.host.elements:
            idx[x] = mult.eindex[pmul(pmul(n, x), ni)]
        mats = []
        for part in mult.parts:
            rows = []
            for gv in part.gen_vecs:
                base = []
                for si, g in enumerate(mult.gens):
                    gi = idx[g]
                    for h in range(1, mult.m):
                        hi = idx[mult.elements[h]]
                        base.append(dot_mod(part.vec, (gi * mult.m + hi) * mult.B,
                                            gv, mult.B, part.q))
                rows.append(mult.reduce_base(part.p, part.q, base))
            mats.append(rows)
        return mats

    def act(self, n, tup):
        """Coordinates of the class conjugated by n."""
        mult = self.mult
        mats = self.maps[n]
        out = []
        off = 0
        for part, rows in zip(mult.parts, mats):
            t = len(part.factors)
            img = [0] * t
            for j in range(t):
                x = tup[off + j]
                if x:
                    row = rows[j]
                    for i in range(t):
                        img[i] = (img[i] + x * row[i]) % part.factors[i]
            out.extend(img)
            off += t
        return tuple(out)

    def act_char(self, n, c):
        """Exponent tuple of the character twisted by n."""
        mult = self.mult
        E = mult.conductor
        mats = self.maps[self._inv[n]]
        out = []
        off = 0
        for part, rows in zip(mult.parts, mats):
            t = len(part.factors)
            for j in range(t):
                d = part.factors[j]
                s = 0
                row = rows[j]
                for i in range(t):
                    di = part.factors[i]
                    s += row[i] * c[off + i] * (E // di)
                step = E // d
                s %= E
                if s % step:
                    raise AssertionError("character image left the lattice")
                out.append((s // step) % d)
            off += t
        return tuple(out)

    def _orbits(self, space, action):
        orbit_of = {}
        reps = []
        for start in space:
            if start in orbit_of:
                continue
            seen = {start}
            queue = [start]
            while queue:
                x = queue.pop()
                for n in self.actor_gens:
                    y = action(n, x)
                    if y not in seen:
                        seen.add(y)
                        queue.append(y)
            rep = min(seen)
            reps.append(rep)
            for x in seen:
                orbit_of[x] = rep
        reps.sort()
        return reps, orbit_of

    def canonical(self, tup):
        return self.orbit_of[tup]


def orbit_suffix(i: int) -> str:
    if i == 0:
        return ""
    if i == 1:
        return "'"
    return f"'{i}"


class MultiplierPresentation:
    """User-facing view of M(H): invariant factors with explicit cocycles."""

    def __init__(self, mult: SubgroupMultiplier):
        self._mult = mult
        per_prime = [part.factors for part in mult.parts if part.factors]
        width = max((len(f) for f in per_prime), default=0)
        inv = []
        slots = []
        for i in range(width):
            d = 1
            used = []
            for part in mult.parts:
                t = len(part.factors)
                j = i - (width - t)
                if j >= 0:
                    d *= part.factors[j]
                    used.append((part, j))
            inv.append(d)
            slots.append(used)
        self.invariant_factors = tuple(inv)
        self._slots = slots

    @property
    def host(self) -> Group:
        return self._mult.host

    @property
    def order(self) -> int:
        n = 1
        for d in self.invariant_factors:
            n *= d
        return n

    def generator_cocycles(self):
        out = []
        for used in self._slots:
            coords = [0] * len(self._mult.moduli)
            for part, j in used:
                coords[self._offset(part) + j] = 1
            out.append(self._mult.cochain_of(tuple(coords)))
        return out

    def reduce(self, c: Cochain2, validate: bool = True):
        """Coordinates of [c] aligned with invariant_factors."""
        flat = self._mult.reduce_cochain(c, validate=validate)
        out = []
        for d, used in zip(self.invariant_factors, self._slots):
            residues = [(flat[self._offset(part) + j], part.factors[j])
                        for part, j in used]
            out.append(_crt(residues) % d)
        return tuple(out)

    def _offset(self, part) -> int:
        off = 0
        for q in self._mult.parts:
            if q is part:
                return off
            off += len(q.factors)
        raise AssertionError("foreign prime part")


def _crt(residues) -> int:
    x, n = 0, 1
    for r, d in residues:
        g = _gcd(n, d)
        if (r - x) % g:
            raise AssertionError("inconsistent residues")
        lcm = n * d // g
        if n == 1:
            x, n = r % d, d
            continue
        t = ((r - x) // g * pow(n // g, -1, d // g)) % (d // g)
        x = (x + n * t) % lcm
        n = lcm
    return x


def schur_multiplier(H: Group) -> MultiplierPresentation:
    return MultiplierPresentation(SubgroupMultiplier(H))
