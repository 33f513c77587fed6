"""Exact arithmetic in cyclotomic fields Q(zeta_e).

Values are polynomials in zeta_e over Q, reduced modulo the e-th cyclotomic
polynomial, so every number has a unique coefficient tuple on the power basis
1, zeta, ..., zeta^(phi(e)-1). Everything is Fraction based; no floats.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

_PHI_CACHE: dict[int, tuple[int, ...]] = {}


def cyclotomic_poly(e: int) -> tuple[int, ...]:
    """Coefficients of Phi_e, little endian, computed by exact division."""
    if e < 1:
        raise ValueError("conductor must be positive")
    if e in _PHI_CACHE:
        return _PHI_CACHE[e]
    # x^e - 1 = product of Phi_d over divisors d of e
    num = [0] * (e + 1)
    num[0] = -1
    num[e] = 1
    for d in range(1, e):
        if e % d == 0:
            num = _exact_div(num, cyclotomic_poly(d))
    out = tuple(num)
    _PHI_CACHE[e] = out
    return out


def _exact_div(num, den):
    """Quotient of integer polynomials known to divide exactly."""
    num = list(num)
    dn = len(den) - 1
    while den[dn] == 0:
        dn -= 1
    q = [0] * (len(num) - dn)
    for i in range(len(num) - 1, dn - 1, -1):
        c = num[i]
        if c == 0:
            continue
        if c % den[dn]:
            raise ArithmeticError("division is not exact")
        f = c // den[dn]
        q[i - dn] = f
        for j in range(dn + 1):
            num[i - dn + j] -= f * den[j]
    if any(num):
        raise ArithmeticError("division is not exact")
    return q


def _euler_phi(e: int) -> int:
    return len(cyclotomic_poly(e)) - 1


def _reduce(coeffs, phi):
    """Reduce a Fraction polynomial modulo the monic integer polynomial phi."""
    deg = len(phi) - 1
    out = list(coeffs)
    for i in range(len(out) - 1, deg - 1, -1):
        c = out[i]
        if c:
            for j in range(deg):
                out[i - deg + j] -= c * phi[j]
        out[i] = 0
    out = out[:deg]
    while len(out) < deg:
        out.append(Fraction(0))
    return tuple(Fraction(c) for c in out)


def _poly_mul(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return out


def _poly_divmod(a, b):
    """divmod in Q[x]; b need not be monic."""
    a = list(a)
    db = len(b) - 1
    while db >= 0 and b[db] == 0:
        db -= 1
    if db < 0:
        raise ZeroDivisionError("polynomial division by zero")
    q = [Fraction(0)] * max(1, len(a) - db)
    for i in range(len(a) - 1, db - 1, -1):
        if a[i]:
            f = a[i] / b[db]
            q[i - db] = f
            for j in range(db + 1):
                a[i - db + j] -= f * b[j]
    return q, a


class CycloValue:
    """An element of Q(zeta_e) with exact rational coefficients."""

    __slots__ = ("e", "coeffs")

    def __init__(self, e: int, coeffs):
        phi = cyclotomic_poly(e)
        object.__setattr__(self, "e", e)
        object.__setattr__(self, "coeffs", _reduce([Fraction(c) for c in coeffs], phi))

    def __setattr__(self, *a):
        raise AttributeError("CycloValue is immutable")

    @staticmethod
    def rational(r, e: int = 1) -> "CycloValue":
        c = [Fraction(r)] + [Fraction(0)] * (_euler_phi(e) - 1)
        return CycloValue(e, c)

    @staticmethod
    def root_power(e: int, k: int) -> "CycloValue":
        """zeta_e ** k."""
        k %= e
        c = [Fraction(0)] * (k + 1)
        c[k] = Fraction(1)
        return CycloValue(e, c)

    def to_conductor(self, e2: int) -> "CycloValue":
        if e2 == self.e:
            return self
        if e2 % self.e:
            raise ValueError("target conductor must be a multiple")
        step = e2 // self.e
        out = [Fraction(0)] * (len(self.coeffs) * step)
        for i, c in enumerate(self.coeffs):
            out[i * step] = c
        return CycloValue(e2, out)

    def _pair(self, other):
        if isinstance(other, CycloValue):
            if self.e == other.e:
                return self, other
            m = self.e * other.e // gcd(self.e, other.e)
            return self.to_conductor(m), other.to_conductor(m)
        if isinstance(other, (int, Fraction)):
            return self, CycloValue.rational(other, self.e)
        return self, NotImplemented

    def __add__(self, other):
        a, b = self._pair(other)
        if b is NotImplemented:
            return NotImplemented
        return CycloValue(a.e, [x + y for x, y in zip(a.coeffs, b.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return CycloValue(self.e, [-c for c in self.coeffs])

    def __sub__(self, other):
        a, b = self._pair(other)
        if b is NotImplemented:
            return NotImplemented
        return CycloValue(a.e, [x - y for x, y in zip(a.coeffs, b.coeffs)])

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return CycloValue(self.e, [c * other for c in self.coeffs])
        a, b = self._pair(other)
        if b is NotImplemented:
            return NotImplemented
        return CycloValue(a.e, _poly_mul(a.coeffs, b.coeffs))

    __rmul__ = __mul__

    def inverse(self) -> "CycloValue":
        if not self:
            raise ZeroDivisionError("inverse of zero")
        phi = [Fraction(c) for c in cyclotomic_poly(self.e)]
        # extended euclid in Q[x]: s*f + t*phi = g with g a nonzero constant,
        # as phi is irreducible over Q and f is nonzero of smaller degree
        r0, r1 = phi, list(self.coeffs)
        s0, s1 = [Fraction(0)], [Fraction(1)]
        t0, t1 = [Fraction(1)], [Fraction(0)]
        while any(r1):
            q, r = _poly_divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1))
            t0, t1 = t1, _poly_sub(t0, _poly_mul(q, t1))
        deg = _poly_deg(r0)
        if deg != 0:
            raise ArithmeticError("element is a zero divisor, conductor corrupt")
        g = r0[0]
        return CycloValue(self.e, [c / g for c in s0])

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError
            return CycloValue(self.e, [c / other for c in self.coeffs])
        if isinstance(other, CycloValue):
            a, b = self._pair(other)
            return a * b.inverse()
        return NotImplemented

    def __bool__(self):
        return any(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = CycloValue.rational(other, 1)
        if not isinstance(other, CycloValue):
            return NotImplemented
        a, b = self._pair(other)
        return a.coeffs == b.coeffs

    def __hash__(self):
        m = self.minimal()
        return hash((m.e, m.coeffs))

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def as_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError("value is not rational")
        return self.coeffs[0]

    def is_integer(self) -> bool:
        return self.is_rational() and self.coeffs[0].denominator == 1

    def as_int(self) -> int:
        f = self.as_fraction()
        if f.denominator != 1:
            raise ValueError("value is not an integer")
        return f.numerator

    def has_integer_coeffs(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def minimal(self) -> "CycloValue":
        """Equal value at the smallest conductor dividing e that contains it."""
        if self.is_rational():
            return CycloValue(1, [self.coeffs[0]]) if self.e != 1 else self
        for d in range(2, self.e):
            if self.e % d:
                continue
            w = self._descend(d)
            if w is not None:
                return w
        return self

    def _descend(self, d: int):
        """Rewrite over Q(zeta_d) if possible, else None."""
        step = self.e // d
        k = _euler_phi(d)
        basis = [CycloValue.root_power(self.e, i * step).coeffs for i in range(k)]
        n = len(self.coeffs)
        # solve sum a_i basis_i = self by Gaussian elimination over Q
        rows = [[basis[i][r] for i in range(k)] + [self.coeffs[r]] for r in range(n)]
        sol = _solve_exact(rows, k)
        if sol is None:
            return None
        return CycloValue(d, sol)

    def __repr__(self):
        return f"CycloValue({self.e}, {[str(c) for c in self.coeffs]})"


def _poly_sub(a, b):
    n = max(len(a), len(b))
    out = [Fraction(0)] * n
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i] -= c
    return out


def _poly_deg(a):
    for i in range(len(a) - 1, -1, -1):
        if a[i]:
            return i
    return -1


def _solve_exact(rows, k):
    """Solve an overdetermined augmented system; None when inconsistent."""
    rows = [row[:] for row in rows]
    piv = []
    r = 0
    for c in range(k):
        sel = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if sel is None:
            piv.append(None)
            continue
        rows[r], rows[sel] = rows[sel], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        piv.append(r)
        r += 1
    for i in range(r, len(rows)):
        if rows[i][k]:
            return None
    out = []
    for c in range(k):
        out.append(rows[piv[c]][k] if piv[c] is not None else Fraction(0))
    return out


def cyclo_normalize(value: CycloValue) -> CycloValue:
    """Canonical form: reduced coefficients at the minimal conductor."""
    return value.minimal()


def format_value(value: CycloValue, e: int) -> str:
    """Render for tables: plain integers when e <= 2, else [c0,...]@e."""
    if e <= 2:
        f = value.as_fraction()
        return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"
    v = value.to_conductor(e) if value.e != e else value
    parts = []
    for c in v.coeffs:
        parts.append(str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}")
    return "[" + ",".join(parts) + "]@" + str(e)


def parse_value(text: str) -> CycloValue:
    """Inverse of format_value."""
    text = text.strip()
    if "@" in text:
        body, e_txt = text.rsplit("@", 1)
        e = int(e_txt)
        body = body.strip()
        if not (body.startswith("[") and body.endswith("]")):
            raise ValueError(f"bad cyclotomic literal: {text!r}")
        coeffs = [Fraction(p.strip()) for p in body[1:-1].split(",")]
        if len(coeffs) != _euler_phi(e):
            raise ValueError(f"wrong coefficient count for conductor {e}")
        return CycloValue(e, coeffs)
    return CycloValue.rational(Fraction(text))
