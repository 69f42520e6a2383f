"""Exact arithmetic in finite fields F_{p^m}.

Elements are stored as discrete logs with respect to a fixed multiplicative
generator: an element is an index ``e`` in ``[0, q-1)`` meaning ``g^e``, and
the index ``q-1`` is a sentinel for zero.  Multiplication is integer addition
mod ``q-1``; addition goes through a precomputed Zech logarithm table.  The
same tables back the vectorized point-counting kernels.

The modulus of F_{p^m} is the lexicographically least monic irreducible of
degree m over F_p (coefficient tuples ordered as base-p integers, constant
term in the lowest digit), so field construction is deterministic across runs.
"""

from __future__ import annotations

import threading

import numpy as np

_FIELD_REGISTRY = {}
_EMBED_CACHE = {}
_EMBED_LOCK = threading.Lock()


class FieldError(ValueError):
    pass


# ---------------------------------------------------------------------------
# dense polynomial helpers over Z/p (lists of ints, index = degree)

def _ptrim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _ptrim(out)


def _pmod(a, f, p):
    a = list(a)
    df = len(f) - 1
    inv_lead = pow(f[-1], p - 2, p)
    while len(a) - 1 >= df and a:
        c = (a[-1] * inv_lead) % p
        shift = len(a) - 1 - df
        for i, fi in enumerate(f):
            a[shift + i] = (a[shift + i] - c * fi) % p
        _ptrim(a)
    return a


def _ppowmod(a, n, f, p):
    result = [1]
    base = _pmod(a, f, p)
    while n:
        if n & 1:
            result = _pmod(_pmul(result, base, p), f, p)
        base = _pmod(_pmul(base, base, p), f, p)
        n >>= 1
    return result


def _pgcd(a, b, p):
    a, b = list(a), list(b)
    while b:
        a, b = b, _pmod(a, b, p)
    return a


def _psub(a, b, p):
    n = max(len(a), len(b))
    return _ptrim([((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % p
                   for i in range(n)])


def _is_irreducible(f, p):
    """Rabin test: x^(p^m) = x mod f and gcd(x^(p^(m/l)) - x, f) = 1."""
    m = len(f) - 1
    if m <= 0:
        return False
    if m == 1:
        return True
    x = [0, 1]
    if _psub(_ppowmod(x, p ** m, f, p), x, p):
        return False
    for l in _prime_factors(m):
        diff = _psub(_ppowmod(x, p ** (m // l), f, p), x, p)
        if len(_pgcd(f, diff, p)) - 1 != 0:
            return False
    return True


def _prime_factors(n):
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def _least_irreducible(p, m):
    if m == 1:
        return [0, 1]  # x itself; arithmetic is plain Z/p
    for c in range(p ** m):
        coeffs = []
        cc = c
        for _ in range(m):
            coeffs.append(cc % p)
            cc //= p
        f = coeffs + [1]
        if _is_irreducible(f, p):
            return f
    raise FieldError(f"no irreducible of degree {m} over F_{p}")  # unreachable


def _is_prime(n):
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


# ---------------------------------------------------------------------------

class GFq:
    """A finite field F_{p^m} with log/exp/Zech tables.

    Attributes:
      p, m, q: characteristic, extension degree, size.
      modulus: coefficient tuple of the defining monic irreducible.
      exp:  int64[q-1], exp[e] = packed representation of g^e.
      logt: int64[q],   logt[packed] = e, logt[0] = q-1 (zero sentinel).
      zech: int64[q-1], zech[e] = log(1 + g^e), q-1 when 1 + g^e = 0.
    """

    __slots__ = ("p", "m", "q", "modulus", "exp", "logt", "zech",
                 "lm1", "_gen_packed", "_trbit", "_frob_mult")

    def __init__(self, p, m):
        if not _is_prime(p):
            raise FieldError(f"characteristic {p} is not prime")
        if m < 1:
            raise FieldError("extension degree must be >= 1")
        q = p ** m
        if q > 1 << 24:
            raise FieldError(f"field size {q} exceeds supported limit 2^24")
        self.p, self.m, self.q = p, m, q
        self.modulus = tuple(_least_irreducible(p, m))
        self._build_tables()
        self._trbit = None

    # -- construction -------------------------------------------------------

    def _build_tables(self):
        p, m, q = self.p, self.m, self.q
        M = q - 1
        f = list(self.modulus)
        # find the least primitive element (packed order)
        factors = _prime_factors(M) if M > 1 else []
        gen = None
        for cand in range(1, q):
            a = _packed_to_coeffs(cand, p, m)
            if all(_ppowmod(a, M // l, f, p) != [1] for l in factors):
                gen = cand
                break
        if gen is None:
            raise FieldError("no generator found")  # unreachable for fields
        self._gen_packed = gen

        # exp table by repeated multiplication by g, digits carried in radix 256
        gpoly = _packed_to_coeffs(gen, p, m)
        gtab = []  # gtab[i][d] = radix256 packing of d * (x^i * g mod f)
        for i in range(m):
            xi_g = _pmod(_pmul([0] * i + [1], gpoly, p), f, p)
            row = []
            for d in range(p):
                row.append(_coeffs_to_radix256([(d * c) % p for c in xi_g]))
            gtab.append(row)
        exp = np.empty(max(M, 1), dtype=np.int64)
        acc = 1  # radix256 packing of the constant 1
        for e in range(M):
            exp[e] = acc
            nxt = 0
            a = acc
            for i in range(m):
                nxt += gtab[i][a & 0xFF]
                a >>= 8
            # renormalize digits mod p
            acc = 0
            for i in range(m):
                acc |= ((nxt >> (8 * i)) & 0xFF) % p << (8 * i)
        if M >= 1:
            assert acc == 1, "generator order mismatch"
        # convert radix-256 digit packing to base-p packing
        digits = (exp[:, None] >> (8 * np.arange(m))) & 0xFF
        self.exp = (digits * (p ** np.arange(m, dtype=np.int64))).sum(axis=1)
        logt = np.full(q, M, dtype=np.int64)
        logt[self.exp] = np.arange(M, dtype=np.int64)
        self.logt = logt

        # Zech logarithms: zech[e] = log(1 + g^e)
        low = self.exp % p
        plus1 = np.where(low == p - 1, self.exp - (p - 1), self.exp + 1)
        self.zech = logt[plus1]
        self.lm1 = 0 if p == 2 else int((M // 2))  # log(-1)
        if p != 2:
            assert self.exp[self.lm1] == p - 1, "log(-1) mismatch"
        self._frob_mult = None

    # -- scalar log-space arithmetic ----------------------------------------

    def mul(self, a, b):
        M = self.q - 1
        if a == M or b == M:
            return M
        return (a + b) % M

    def add(self, a, b):
        M = self.q - 1
        if a == M:
            return b
        if b == M:
            return a
        z = self.zech[(b - a) % M]
        if z == M:
            return M
        return (a + int(z)) % M

    def neg(self, a):
        if a == self.q - 1:
            return a
        return (a + self.lm1) % (self.q - 1)

    def inv(self, a):
        M = self.q - 1
        if a == M:
            raise ZeroDivisionError("inverse of zero in GF(q)")
        return (-a) % M

    def pow(self, a, n):
        M = self.q - 1
        if a == M:
            if n == 0:
                return 0
            if n < 0:
                raise ZeroDivisionError
            return M
        return (a * n) % M

    # -- element interface ---------------------------------------------------

    @property
    def zero(self):
        return FqElement(self, self.q - 1)

    @property
    def one(self):
        return FqElement(self, 0)

    @property
    def gen(self):
        return FqElement(self, 1 if self.q > 2 else 0)

    def element(self, packed):
        """Element from its packed base-p digit representation."""
        packed = int(packed)
        if not 0 <= packed < self.q:
            raise FieldError(f"packed value {packed} out of range for {self}")
        return FqElement(self, int(self.logt[packed]))

    def from_int(self, n):
        """Element of the prime field F_p <= F_q from an integer."""
        return self.element(n % self.p)

    def from_log(self, e):
        return FqElement(self, e)

    def elements(self):
        for packed in range(self.q):
            yield self.element(packed)

    def zeta(self, d):
        """A fixed primitive d-th root of unity g^((q-1)/d); requires d | q-1."""
        if d < 1 or (self.q - 1) % d != 0:
            raise FieldError(f"no primitive {d}-th root of unity in F_{self.q}")
        if d == 1:
            return self.one
        return FqElement(self, (self.q - 1) // d)

    def frobenius_log(self, e):
        """log of x^p given log of x."""
        if e == self.q - 1:
            return e
        return (e * self.p) % (self.q - 1)

    def trace_bits(self):
        """For p = 2: uint8 table over log indices of the absolute trace."""
        if self.p != 2:
            raise FieldError("trace_bits is only for characteristic 2")
        if self._trbit is None:
            M = self.q - 1
            e = np.arange(M, dtype=np.int64)
            acc = self.exp.copy()
            cur = e
            for _ in range(self.m - 1):
                cur = (cur * 2) % M
                acc ^= self.exp[cur]
            tr = np.zeros(self.q, dtype=np.uint8)  # indexed by log, last = zero
            tr[:M] = acc.astype(np.uint8)
            self._trbit = tr
        return self._trbit

    def __repr__(self):
        return f"GF({self.q})"

    def __reduce__(self):
        return (make_field, (self.p, self.m))


def _packed_to_coeffs(packed, p, m):
    out = []
    for _ in range(m):
        out.append(packed % p)
        packed //= p
    return _ptrim(out)


def _coeffs_to_radix256(coeffs):
    out = 0
    for i, c in enumerate(coeffs):
        out |= c << (8 * i)
    return out


class FqElement:
    """Immutable element of a GFq, stored as a discrete log index."""

    __slots__ = ("field", "log")

    def __init__(self, field, log):
        self.field = field
        self.log = log

    def _check(self, other):
        if isinstance(other, FqElement):
            if other.field is not self.field:
                raise FieldError("elements of different fields; embed explicitly")
            return other
        if isinstance(other, int):
            return self.field.from_int(other)
        return NotImplemented

    @property
    def packed(self):
        if self.log == self.field.q - 1:
            return 0
        return int(self.field.exp[self.log])

    def is_zero(self):
        return self.log == self.field.q - 1

    def __bool__(self):
        return not self.is_zero()

    def __add__(self, other):
        o = self._check(other)
        if o is NotImplemented:
            return o
        return FqElement(self.field, self.field.add(self.log, o.log))

    __radd__ = __add__

    def __neg__(self):
        return FqElement(self.field, self.field.neg(self.log))

    def __sub__(self, other):
        o = self._check(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        o = self._check(other)
        if o is NotImplemented:
            return o
        return FqElement(self.field, self.field.mul(self.log, o.log))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._check(other)
        if o is NotImplemented:
            return o
        return self * FqElement(self.field, self.field.inv(o.log))

    def __rtruediv__(self, other):
        o = self._check(other)
        return o / self

    def __pow__(self, n):
        return FqElement(self.field, self.field.pow(self.log, n))

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.field.from_int(other)
        return (isinstance(other, FqElement) and other.field is self.field
                and other.log == self.log)

    def __hash__(self):
        return hash((id(self.field), self.log))

    def is_square(self):
        if self.field.p == 2 or self.is_zero():
            return True
        return self.log % 2 == 0

    def sqrt(self):
        f = self.field
        if self.is_zero():
            return self
        if f.p == 2:
            return FqElement(f, (self.log * (f.q // 2)) % (f.q - 1))
        if self.log % 2 != 0:
            raise FieldError("element is not a square")
        r = FqElement(f, self.log // 2)
        return r if r.log <= f.neg(r.log) else -r

    def minimal_degree(self):
        """Degree of the subfield F_p(self) over F_p."""
        f = self.field
        e = self.log
        d = 1
        cur = f.frobenius_log(e)
        while cur != e:
            cur = f.frobenius_log(cur)
            d += 1
        return d

    def __repr__(self):
        f = self.field
        if f.m == 1:
            return f"{self.packed}"
        if self.is_zero():
            return "0"
        return f"g^{self.log}"


def make_field(p, m=1):
    """The finite field F_{p^m} with a fixed deterministic modulus (cached)."""
    key = (p, m)
    fld = _FIELD_REGISTRY.get(key)
    if fld is None:
        fld = GFq(p, m)
        _FIELD_REGISTRY[key] = fld
    return fld


def embed_log_map(src, dst):
    """int64[q_src] mapping log indices of src into log indices of dst.

    Requires src.m | dst.m and equal characteristic.  The embedding sends the
    class of x in src to the least packed root of src.modulus in dst; maps for
    a given (src, dst) pair are cached and the choice is deterministic.
    """
    if src.p != dst.p or dst.m % src.m != 0:
        raise FieldError(f"no embedding {src} -> {dst}")
    key = (src.p, src.m, dst.m)
    with _EMBED_LOCK:
        cached = _EMBED_CACHE.get(key)
    if cached is not None:
        return cached
    if src.m == dst.m:
        table = np.arange(src.q, dtype=np.int64)
    else:
        root = _least_root_log(src.modulus, dst)
        # map each src element sum c_i x^i -> sum c_i root^i by vectorized Horner
        packed = np.arange(src.q, dtype=np.int64)
        digs = []
        tmp = packed.copy()
        for _ in range(src.m):
            digs.append(tmp % src.p)
            tmp //= src.p
        acc = np.full(src.q, dst.q - 1, dtype=np.int64)
        for d in reversed(range(src.m)):
            acc = _vec_mul_log(acc, root, dst)
            acc = _vec_add_logs(acc, _prime_logs(digs[d], dst), dst)
        table = np.full(src.q, dst.q - 1, dtype=np.int64)
        table[src.logt[packed]] = acc  # acc is indexed by packed value
    with _EMBED_LOCK:
        _EMBED_CACHE[key] = table
    return table


def embed(x, dst):
    """Embed an FqElement into the larger field dst."""
    if x.field is dst:
        return x
    table = embed_log_map(x.field, dst)
    return FqElement(dst, int(table[x.log]))


def _prime_logs(digits, dst):
    """log indices in dst of an array of prime-field integers."""
    return dst.logt[np.asarray(digits, dtype=np.int64) % dst.p]


def _vec_mul_log(acc, scalar_log, fld):
    M = fld.q - 1
    out = np.where((acc == M) | (scalar_log == M), M, (acc + scalar_log) % M)
    return out


def _vec_add_logs(a, b, fld):
    M = fld.q - 1
    res = np.empty_like(a)
    az = a == M
    bz = b == M
    res[az] = b[az]
    res[bz & ~az] = a[bz & ~az]
    both = ~az & ~bz
    d = (b[both] - a[both]) % M
    z = fld.zech[d]
    r = (a[both] + z) % M
    r[z == M] = M
    res[both] = r
    return res


def _least_root_log(modulus, dst):
    packed = np.arange(dst.q, dtype=np.int64)
    xlogs = dst.logt[packed]
    M = dst.q - 1
    acc = np.full(dst.q, M, dtype=np.int64)
    for c in reversed(list(modulus)):
        prod = np.where((acc == M) | (xlogs == M), M, (acc + xlogs) % M)
        acc = _vec_add_logs(prod, np.full(dst.q, int(dst.logt[c % dst.p]),
                                          dtype=np.int64), dst)
    roots = np.nonzero(acc == M)[0]
    if len(roots) == 0:
        raise FieldError("modulus has no root in target field")
    return int(dst.logt[int(roots.min())])
