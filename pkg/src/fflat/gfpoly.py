"""Univariate polynomials over GFq fields.

Coefficients are stored as tuples of log indices (see gf.py); the zero
polynomial is the empty tuple.  Includes Euclidean arithmetic, squarefree
decomposition, distinct-degree / Cantor-Zassenhaus factorization, and the
enumeration of monic irreducibles by Frobenius orbits, which is how places
of F_q(t) are listed.

Factorization randomness is drawn from a PRNG seeded by the polynomial's
canonical form, so factorizations (and everything downstream, including CLI
output) are deterministic across runs.
"""

from __future__ import annotations

import random

import numpy as np

from .gf import FieldError, FqElement, embed_log_map, make_field


class FqPoly:
    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs, normalized=False):
        self.field = field
        if normalized:
            self.coeffs = tuple(coeffs)
        else:
            cs = [int(c) for c in coeffs]
            while cs and cs[-1] == field.q - 1:
                cs.pop()
            self.coeffs = tuple(cs)

    # -- constructors --------------------------------------------------------

    @classmethod
    def from_elements(cls, field, elements):
        return cls(field, [e.log for e in elements])

    @classmethod
    def from_ints(cls, field, ints):
        return cls(field, [field.from_int(c).log for c in ints])

    @classmethod
    def constant(cls, field, element):
        return cls(field, [element.log])

    @classmethod
    def x(cls, field):
        return cls(field, [field.q - 1, 0], normalized=True)

    @classmethod
    def zero(cls, field):
        return cls(field, (), normalized=True)

    @classmethod
    def one(cls, field):
        return cls(field, (0,), normalized=True)

    # -- basics ---------------------------------------------------------------

    def degree(self):
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def leading(self):
        if not self.coeffs:
            return self.field.zero
        return FqElement(self.field, self.coeffs[-1])

    def __getitem__(self, i):
        if 0 <= i < len(self.coeffs):
            return FqElement(self.field, self.coeffs[i])
        return self.field.zero

    def elements(self):
        return [FqElement(self.field, c) for c in self.coeffs]

    def is_monic(self):
        return bool(self.coeffs) and self.coeffs[-1] == 0

    def __eq__(self, other):
        return (isinstance(other, FqPoly) and other.field is self.field
                and other.coeffs == self.coeffs)

    def __hash__(self):
        return hash((id(self.field), self.coeffs))

    # -- ring operations ------------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        f = self.field
        n = max(len(self.coeffs), len(other.coeffs))
        out = []
        for i in range(n):
            a = self.coeffs[i] if i < len(self.coeffs) else f.q - 1
            b = other.coeffs[i] if i < len(other.coeffs) else f.q - 1
            out.append(f.add(a, b))
        return FqPoly(f, out)

    def __neg__(self):
        f = self.field
        return FqPoly(f, [f.neg(c) for c in self.coeffs], normalized=True)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __mul__(self, other):
        other = self._coerce(other)
        f = self.field
        if not self.coeffs or not other.coeffs:
            return FqPoly.zero(f)
        M = f.q - 1
        out = [M] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == M:
                continue
            for j, b in enumerate(other.coeffs):
                if b == M:
                    continue
                out[i + j] = f.add(out[i + j], (a + b) % M)
        return FqPoly(f, out)

    def scale(self, element):
        f = self.field
        if element.is_zero():
            return FqPoly.zero(f)
        return FqPoly(f, [f.mul(c, element.log) for c in self.coeffs],
                      normalized=True)

    def __divmod__(self, other):
        other = self._coerce(other)
        f = self.field
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        d = other.degree()
        inv_lead = f.inv(other.coeffs[-1])
        quo = [f.q - 1] * max(0, len(rem) - d)
        while len(rem) - 1 >= d and rem:
            c = f.mul(rem[-1], inv_lead)
            shift = len(rem) - 1 - d
            quo[shift] = c
            for i, b in enumerate(other.coeffs):
                rem[shift + i] = f.add(rem[shift + i], f.neg(f.mul(c, b)))
            while rem and rem[-1] == f.q - 1:
                rem.pop()
        return FqPoly(f, quo), FqPoly(f, rem)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __pow__(self, n):
        result = FqPoly.one(self.field)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def _coerce(self, other):
        if isinstance(other, FqPoly):
            if other.field is not self.field:
                raise FieldError("polynomials over different fields")
            return other
        if isinstance(other, FqElement):
            return FqPoly.constant(self.field, other)
        if isinstance(other, int):
            return FqPoly.constant(self.field, self.field.from_int(other))
        raise TypeError(f"cannot coerce {other!r} to FqPoly")

    # -- structure ------------------------------------------------------------

    def monic(self):
        if self.is_zero() or self.is_monic():
            return self
        return self.scale(FqElement(self.field, self.field.inv(self.coeffs[-1])))

    def derivative(self):
        f = self.field
        out = []
        for i in range(1, len(self.coeffs)):
            c = self.coeffs[i]
            k = i % f.p
            if k == 0 or c == f.q - 1:
                out.append(f.q - 1)
            else:
                out.append(f.mul(c, int(f.logt[k])))
        return FqPoly(f, out)

    def gcd(self, other):
        a, b = self, self._coerce(other)
        while not b.is_zero():
            a, b = b, a % b
        return a.monic() if not a.is_zero() else a

    def eval(self, x):
        """Evaluate at an FqElement of this field or an extension of it."""
        f = self.field
        if x.field is f:
            acc = f.q - 1
            for c in reversed(self.coeffs):
                acc = f.add(f.mul(acc, x.log), c)
            return FqElement(f, acc)
        table = embed_log_map(f, x.field)
        g = x.field
        acc = g.q - 1
        for c in reversed(self.coeffs):
            acc = g.add(g.mul(acc, x.log), int(table[c]))
        return FqElement(g, acc)

    def inflate(self, d):
        """Substitute t -> t^d."""
        if d == 1 or self.is_zero():
            return self
        f = self.field
        out = [f.q - 1] * (self.degree() * d + 1)
        for i, c in enumerate(self.coeffs):
            out[i * d] = c
        return FqPoly(f, out, normalized=True)

    def map_field(self, target):
        """Coefficientwise embedding into a larger constant field."""
        if target is self.field:
            return self
        table = embed_log_map(self.field, target)
        return FqPoly(target, [int(table[c]) for c in self.coeffs],
                      normalized=True)

    def valuation(self, other):
        """Multiplicity of a monic polynomial in self (self nonzero)."""
        if self.is_zero():
            raise ZeroDivisionError("valuation of zero polynomial")
        n = 0
        cur = self
        while True:
            q, r = divmod(cur, other)
            if not r.is_zero():
                return n
            n += 1
            cur = q

    def canonical_string(self, var="t"):
        if self.is_zero():
            return "0"
        parts = []
        for i in reversed(range(len(self.coeffs))):
            c = self.coeffs[i]
            if c == self.field.q - 1:
                continue
            cs = _coeff_string(FqElement(self.field, c))
            if i == 0:
                parts.append(cs)
            else:
                t = var if i == 1 else f"{var}^{i}"
                parts.append(t if cs == "1" else f"{cs}*{t}")
        return "+".join(parts)

    def __repr__(self):
        return self.canonical_string()

    # -- factorization --------------------------------------------------------

    def powmod(self, n, modulus):
        result = FqPoly.one(self.field)
        base = self % modulus
        while n:
            if n & 1:
                result = (result * base) % modulus
            base = (base * base) % modulus
            n >>= 1
        return result

    def pth_root(self):
        """p-th root of a polynomial all of whose exponents are multiples of p."""
        f = self.field
        out = []
        root_pow = f.q // f.p  # c -> c^(q/p) is the inverse of Frobenius
        for i in range(0, len(self.coeffs), f.p):
            c = self.coeffs[i]
            out.append(f.pow(c, root_pow))
        return FqPoly(f, out)

    def squarefree_decomposition(self):
        """List of (factor, multiplicity) with factors squarefree and coprime."""
        f = self
        if f.degree() < 1:
            return []
        out = []
        p = self.field.p
        e = 1
        while f.degree() > 0:
            d = f.derivative()
            if d.is_zero():
                f = f.pth_root()
                e *= p
                continue
            g = f.gcd(d)
            w = (f // g).monic()
            i = 1
            while w.degree() > 0:
                y = w.gcd(g)
                z = (w // y).monic()
                if z.degree() > 0:
                    out.append((z, e * i))
                w = y
                g = g // y
                i += 1
            f = g
        # identical factors can surface from separate p-power passes
        merged = {}
        for poly, mult in out:
            if poly.coeffs in merged:
                merged[poly.coeffs] = (poly, merged[poly.coeffs][1] + mult)
            else:
                merged[poly.coeffs] = (poly, mult)
        return list(merged.values())

    def factor(self):
        """Full factorization into monic irreducibles: list of (poly, mult)."""
        if self.degree() < 1:
            return []
        out = {}
        for sq, mult in self.squarefree_decomposition():
            for irred in _factor_squarefree(sq):
                key = irred.coeffs
                if key in out:
                    out[key] = (irred, out[key][1] + mult)
                else:
                    out[key] = (irred, mult)
        items = sorted(out.values(), key=lambda t: (t[0].degree(), t[0].coeffs))
        return items

    def is_irreducible(self):
        if self.degree() < 1:
            return False
        fac = self.factor()
        return len(fac) == 1 and fac[0][1] == 1 and fac[0][0] == self.monic()

    def roots(self):
        """Roots in the coefficient field, with multiplicity collapsed."""
        out = []
        for irred, _ in self.factor():
            if irred.degree() == 1:
                f = self.field
                out.append(FqElement(f, f.neg(irred.coeffs[0])))
        return out


def _coeff_string(e):
    f = e.field
    if f.m == 1:
        return str(e.packed)
    return f"g{e.log}" if not e.is_zero() else "0"


def _factor_squarefree(f):
    """Factor a squarefree monic polynomial (distinct degree + CZ)."""
    f = f.monic()
    field = f.field
    q = field.q
    out = []
    x = FqPoly.x(field)
    h = x
    v = f
    d = 0
    while v.degree() >= 1:
        d += 1
        if 2 * d > v.degree():
            out.append(v)
            break
        h = h.powmod(q, v)
        g = v.gcd(h - x)
        if g.degree() > 0:
            out.extend(_equal_degree_split(g, d))
            v = (v // g).monic()
            h = h % v
    return out


def _equal_degree_split(f, d):
    """Cantor-Zassenhaus on a product of distinct irreducibles of degree d."""
    field = f.field
    if f.degree() == d:
        return [f]
    rng = random.Random(("cz", field.p, field.m, f.coeffs))
    q = field.q
    work = [f]
    done = []
    while work:
        g = work.pop()
        if g.degree() == d:
            done.append(g)
            continue
        while True:
            a = _random_poly(field, g.degree() - 1, rng)
            if field.p == 2:
                t = a
                acc = a
                n = field.m * d
                for _ in range(n - 1):
                    t = t.powmod(2, g)
                    acc = (acc + t) % g
                h = g.gcd(acc)
            else:
                e = (q ** d - 1) // 2
                h = g.gcd(a.powmod(e, g) - 1)
            if 0 < h.degree() < g.degree():
                work.append(h.monic())
                work.append((g // h).monic())
                break
    return done


def _random_poly(field, max_degree, rng):
    coeffs = [rng.randrange(field.q) for _ in range(max_degree)] + [1]
    return FqPoly(field, [int(field.logt[c]) for c in coeffs])


def frobenius_orbit_reps(field, degree):
    """Log indices in F_{q^degree} of one representative per place of degree.

    A finite place of F_q(t) of exact degree k corresponds to a Frobenius
    orbit of size k in F_{q^k}; the representative is the orbit element with
    the least log index.  Returns (ext_field, list of log indices).
    """
    ext = make_field(field.p, field.m * degree)
    if degree == 1:
        return ext, list(range(ext.q - 1)) + [ext.q - 1]
    Mext = ext.q - 1
    qq = field.q
    seen = np.zeros(ext.q, dtype=bool)
    reps = []
    for e in range(ext.q):
        if seen[e]:
            continue
        seen[e] = True
        size = 1
        cur = e if e == Mext else (e * qq) % Mext
        while cur != e:
            seen[cur] = True
            size += 1
            cur = cur if cur == Mext else (cur * qq) % Mext
        if size == degree:
            reps.append(e)
    return ext, reps


def minimal_poly_over(field, ext, tau_log):
    """Minimal polynomial over F_q of the ext element with the given log."""
    Mext = ext.q - 1
    qq = field.q
    orbit = [tau_log]
    cur = tau_log if tau_log == Mext else (tau_log * qq) % Mext
    while cur != tau_log:
        orbit.append(cur)
        cur = cur if cur == Mext else (cur * qq) % Mext
    poly = FqPoly.one(ext)
    xe = FqPoly.x(ext)
    for c in orbit:
        poly = poly * (xe - FqElement(ext, c))
    if ext is field:
        return poly
    table = embed_log_map(field, ext)
    inv = {int(table[e]): e for e in range(field.q)}
    coeffs = []
    for c in poly.coeffs:
        assert int(c) in inv, "minimal polynomial not over base field"
        coeffs.append(inv[int(c)])
    return FqPoly(field, coeffs, normalized=True)


def monic_irreducibles(field, degree):
    """All monic irreducibles of the given degree, canonically ordered.

    Enumerated as minimal polynomials of Frobenius orbit representatives in
    F_{q^degree}; each polynomial appears exactly once.
    """
    ext, reps = frobenius_orbit_reps(field, degree)
    out = [minimal_poly_over(field, ext, e) for e in reps]
    out.sort(key=lambda g: tuple(
        FqElement(field, c).packed for c in reversed(g.coeffs)))
    return out


def count_irreducibles(q, n):
    """Number of monic irreducibles of degree n over F_q (Mobius formula)."""
    total = 0
    for d in range(1, n + 1):
        if n % d == 0:
            total += _moebius(d) * q ** (n // d)
    return total // n


def _moebius(n):
    result = 1
    d = 2
    while d * d <= n:
        if n % d == 0:
            n //= d
            if n % d == 0:
                return 0
            result = -result
        d += 1
    if n > 1:
        result = -result
    return result
