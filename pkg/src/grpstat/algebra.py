"""GF(p^f) arithmetic, matrices over GF(q), and canonical subspaces.

Field elements are integers in [0, q) packing polynomial coefficients base p
(little-endian). Vectors are row tuples acted on the right by matrices.
"""

from dataclasses import dataclass
from math import prod


class AlgebraError(ValueError):
    """Raised for invalid field or matrix operations."""


def _is_prime(n):
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def _factor(n):
    """Prime factors with multiplicity, ascending."""
    out = []
    d = 2
    while d * d <= n:
        while n % d == 0:
            out.append(d)
            n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


# polynomial helpers over GF(p); a polynomial is a coefficient tuple,
# little-endian, with no trailing zeros

def _ptrim(c):
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def _padd(a, b, p):
    n = max(len(a), len(b))
    return _ptrim(
        ((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)) % p
        for i in range(n)
    )


def _pmul(a, b, p):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _ptrim(out)


def _pmod(a, m, p):
    a = list(a)
    dm = len(m) - 1
    inv_lead = pow(m[-1], p - 2, p)
    while len(a) - 1 >= dm and a:
        if a[-1] == 0:
            a.pop()
            continue
        c = (a[-1] * inv_lead) % p
        shift = len(a) - 1 - dm
        for i, y in enumerate(m):
            a[shift + i] = (a[shift + i] - c * y) % p
        a.pop()
    return _ptrim(a)


def _ppowmod(a, e, m, p):
    result = (1,)
    base = _pmod(a, m, p)
    while e:
        if e & 1:
            result = _pmod(_pmul(result, base, p), m, p)
        base = _pmod(_pmul(base, base, p), m, p)
        e >>= 1
    return result


def _pgcd(a, b, p):
    while b:
        a, b = b, _pmod(a, b, p)
    return a


def _poly_irreducible(m, p):
    """Rabin test: m monic of degree f is irreducible over GF(p)."""
    f = len(m) - 1
    x = (0, 1)
    xq = _ppowmod(x, p**f, m, p)
    if _padd(xq, _pmul((-1 % p,), x, p), p) != ():
        return False
    for d in sorted(set(_factor(f))):
        xe = _ppowmod(x, p ** (f // d), m, p)
        g = _pgcd(_padd(xe, _pmul((-1 % p,), x, p), p), m, p)
        if len(g) - 1 > 0:
            return False
    return True


def _int_to_poly(v, p):
    out = []
    while v:
        out.append(v % p)
        v //= p
    return tuple(out)


def _poly_to_int(c, p):
    v = 0
    for x in reversed(c):
        v = v * p + x
    return v


def _smallest_irreducible(p, f):
    """Lexicographically smallest monic irreducible of degree f over GF(p).

    Lexicographic on the coefficient vector (c_0, ..., c_{f-1}), i.e. on the
    packed integer of the non-leading coefficients.
    """
    if f == 1:
        return (0, 1)
    for low in range(p**f):
        m = _int_to_poly(low, p) + (0,) * (f - len(_int_to_poly(low, p))) + (1,)
        if _poly_irreducible(m, p):
            return m
    raise AlgebraError("no irreducible polynomial found (p=%d, f=%d)" % (p, f))


_FIELD_CACHE = {}


class Field:
    """GF(p^f) with exp/log tables; immutable once constructed."""

    def __init__(self, p, f, modulus=None):
        if not _is_prime(p):
            raise AlgebraError("characteristic %r is not prime" % (p,))
        if f < 1:
            raise AlgebraError("extension degree must be >= 1")
        q = p**f
        if q > 2**16:
            raise AlgebraError("field size %d exceeds 2^16" % q)
        self.p = p
        self.f = f
        self.q = q
        if modulus is None:
            modulus = _smallest_irreducible(p, f)
        else:
            modulus = _ptrim(modulus)
            if len(modulus) - 1 != f or modulus[-1] != 1:
                raise AlgebraError("modulus must be monic of degree f")
            if f > 1 and not _poly_irreducible(modulus, p):
                raise AlgebraError("modulus is reducible")
        self.modulus = modulus
        self._build_tables()

    @classmethod
    def get(cls, p, f):
        key = (p, f)
        if key not in _FIELD_CACHE:
            _FIELD_CACHE[key] = cls(p, f)
        return _FIELD_CACHE[key]

    def _raw_mul(self, a, b):
        c = _pmod(
            _pmul(_int_to_poly(a, self.p), _int_to_poly(b, self.p), self.p),
            self.modulus,
            self.p,
        )
        return _poly_to_int(c, self.p)

    def _element_order(self, a, factors):
        n = self.q - 1
        for pr in factors:
            while n % pr == 0 and self._raw_pow(a, n // pr) == 1:
                n //= pr
        return n

    def _raw_pow(self, a, e):
        r = 1
        while e:
            if e & 1:
                r = self._raw_mul(r, a)
            a = self._raw_mul(a, a)
            e >>= 1
        return r

    def _build_tables(self):
        q = self.q
        factors = sorted(set(_factor(q - 1))) if q > 2 else []
        gen = None
        for cand in range(2, q):
            if q == 2:
                break
            if self._element_order(cand, factors) == q - 1:
                gen = cand
                break
        if q == 2:
            gen = 1
        if gen is None:
            raise AlgebraError("no multiplicative generator found")
        self.generator = gen
        exp = [1] * (q - 1)
        log = [0] * q
        acc = 1
        for i in range(q - 1):
            exp[i] = acc
            log[acc] = i
            acc = self._raw_mul(acc, gen)
        if acc != 1:
            raise AlgebraError("generator order mismatch")
        self._exp = exp
        self._log = log

    def check(self, a):
        if not isinstance(a, int) or not 0 <= a < self.q:
            raise AlgebraError("%r is not an element of GF(%d)" % (a, self.q))
        return a

    def add(self, a, b):
        if self.p == 2:
            return a ^ b
        s = 0
        mult = 1
        while a or b:
            s += ((a + b) % self.p) * mult
            a //= self.p
            b //= self.p
            mult *= self.p
        return s

    def neg(self, a):
        if self.p == 2:
            return a
        s = 0
        mult = 1
        while a:
            s += (-a % self.p) * mult
            a //= self.p
            mult *= self.p
        return s

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        if a == 0 or b == 0:
            return 0
        return self._exp[(self._log[a] + self._log[b]) % (self.q - 1)]

    def inv(self, a):
        if a == 0:
            raise AlgebraError("inversion of zero")
        return self._exp[(-self._log[a]) % (self.q - 1)]

    def pow(self, a, e):
        if a == 0:
            if e == 0:
                return 1
            if e < 0:
                raise AlgebraError("negative power of zero")
            return 0
        return self._exp[(self._log[a] * e) % (self.q - 1)]

    def frobenius(self, a):
        return self.pow(a, self.p)

    def trace2(self, a):
        """Absolute trace GF(2^e) -> GF(2), returned as 0 or 1."""
        if self.p != 2:
            raise AlgebraError("trace2 requires characteristic 2")
        t = 0
        x = a
        for _ in range(self.f):
            t ^= x
            x = self.mul(x, x)
        if t not in (0, 1):
            raise AlgebraError("trace fell outside GF(2)")
        return t

    def sqrt2(self, a):
        """The unique square root in characteristic 2: a^(2^(e-1))."""
        if self.p != 2:
            raise AlgebraError("sqrt2 requires characteristic 2")
        return self.pow(a, 2 ** (self.f - 1))

    def elements(self):
        return range(self.q)

    def __repr__(self):
        return "GF(%d^%d)" % (self.p, self.f) if self.f > 1 else "GF(%d)" % self.p


# vectors are tuples of field elements

def vec_add(F, u, v):
    return tuple(F.add(a, b) for a, b in zip(u, v))

def vec_scale(F, c, u):
    return tuple(F.mul(c, a) for a in u)

def vec_dot(F, u, v):
    s = 0
    for a, b in zip(u, v):
        s = F.add(s, F.mul(a, b))
    return s


class MatrixGF:
    """Immutable matrix over a Field, row-major entries."""

    __slots__ = ("F", "rows", "cols", "entries")

    def __init__(self, F, rows, cols, entries):
        entries = tuple(entries)
        if len(entries) != rows * cols:
            raise AlgebraError("entry count mismatch")
        for a in entries:
            F.check(a)
        self.F = F
        self.rows = rows
        self.cols = cols
        self.entries = entries

    @classmethod
    def from_rows(cls, F, rows):
        rows = [tuple(r) for r in rows]
        n = len(rows[0])
        if any(len(r) != n for r in rows):
            raise AlgebraError("ragged rows")
        return cls(F, len(rows), n, [a for r in rows for a in r])

    @classmethod
    def identity(cls, F, n):
        return cls(F, n, n, [1 if i == j else 0 for i in range(n) for j in range(n)])

    def row(self, i):
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def row_list(self):
        return [self.row(i) for i in range(self.rows)]

    def __mul__(self, other):
        if not isinstance(other, MatrixGF):
            return NotImplemented
        if self.cols != other.rows or self.F is not other.F:
            raise AlgebraError("shape or field mismatch in product")
        F = self.F
        out = []
        for i in range(self.rows):
            r = self.row(i)
            for j in range(other.cols):
                s = 0
                for k in range(self.cols):
                    s = F.add(s, F.mul(r[k], other.entries[k * other.cols + j]))
                out.append(s)
        return MatrixGF(F, self.rows, other.cols, out)

    def transpose(self):
        return MatrixGF(
            self.F,
            self.cols,
            self.rows,
            [self.entries[j * self.cols + i] for i in range(self.cols) for j in range(self.rows)],
        )

    def inverse(self):
        if self.rows != self.cols:
            raise AlgebraError("inverse of non-square matrix")
        F = self.F
        n = self.rows
        aug = [list(self.row(i)) + [1 if i == j else 0 for j in range(n)] for i in range(n)]
        for col in range(n):
            piv = next((r for r in range(col, n) if aug[r][col] != 0), None)
            if piv is None:
                raise AlgebraError("matrix is singular")
            aug[col], aug[piv] = aug[piv], aug[col]
            c = F.inv(aug[col][col])
            aug[col] = [F.mul(c, a) for a in aug[col]]
            for r in range(n):
                if r != col and aug[r][col] != 0:
                    factor = aug[r][col]
                    aug[r] = [F.sub(a, F.mul(factor, b)) for a, b in zip(aug[r], aug[col])]
        return MatrixGF(F, n, n, [aug[i][n + j] for i in range(n) for j in range(n)])

    def map_entries(self, fn):
        return MatrixGF(self.F, self.rows, self.cols, [fn(a) for a in self.entries])

    def __eq__(self, other):
        return (
            isinstance(other, MatrixGF)
            and self.F is other.F
            and self.rows == other.rows
            and self.cols == other.cols
            and self.entries == other.entries
        )

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self):
        return "MatrixGF(%dx%d over %r)" % (self.rows, self.cols, self.F)


def vec_mat(F, v, M):
    """Row vector times matrix."""
    if len(v) != M.rows:
        raise AlgebraError("vector length mismatch")
    out = []
    for j in range(M.cols):
        s = 0
        for k in range(M.rows):
            s = F.add(s, F.mul(v[k], M.entries[k * M.cols + j]))
        out.append(s)
    return tuple(out)


def rref(F, rows):
    """Reduced row echelon form; returns (nonzero rows, pivot columns)."""
    rows = [list(r) for r in rows]
    if not rows:
        return [], []
    ncols = len(rows[0])
    pivots = []
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][col] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        c = F.inv(rows[r][col])
        rows[r] = [F.mul(c, a) for a in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][col] != 0:
                factor = rows[i][col]
                rows[i] = [F.sub(a, F.mul(factor, b)) for a, b in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
        if r == len(rows):
            break
    return [tuple(row) for row in rows[:r]], pivots


@dataclass(frozen=True)
class SubspaceIndex:
    """A subspace keyed by its unique RREF basis."""

    n: int
    rows: tuple

    @property
    def dim(self):
        return len(self.rows)


def subspace_canonical(F, basis_rows):
    """Canonical form of the row space; errors if the rows are dependent."""
    basis_rows = [tuple(r) for r in basis_rows]
    reduced, _ = rref(F, basis_rows)
    if len(reduced) != len(basis_rows):
        raise AlgebraError("basis rows are linearly dependent")
    return SubspaceIndex(len(basis_rows[0]), tuple(reduced))


def gaussian_binomial(n, m, q):
    if not 0 <= m <= n:
        return 0
    num = prod(q**i - 1 for i in range(n - m + 1, n + 1))
    den = prod(q**i - 1 for i in range(1, m + 1))
    return num // den


def enumerate_subspaces(n, q, m):
    """All m-dimensional subspaces of GF(q)^n as canonical RREF indices.

    Enumerates RREF shapes directly: pivot column sets in lexicographic
    order, then free entries in mixed-radix order.
    """
    from itertools import combinations

    if not 0 < m <= n:
        raise AlgebraError("need 0 < m <= n")
    factors = _factor(q)
    F = Field.get(factors[0], len(factors))
    if F.q != q:
        raise AlgebraError("q must be a prime power")
    out = []
    for pivots in combinations(range(n), m):
        free = []
        for i in range(m):
            for col in range(pivots[i] + 1, n):
                if col not in pivots:
                    free.append((i, col))
        total = q ** len(free)
        for code in range(total):
            rows = [[0] * n for _ in range(m)]
            for i, col in enumerate(pivots):
                rows[i][col] = 1
            v = code
            for i, col in free:
                rows[i][col] = v % q
                v //= q
            out.append(SubspaceIndex(n, tuple(tuple(r) for r in rows)))
    if len(out) != gaussian_binomial(n, m, q):
        raise AlgebraError("subspace enumeration count mismatch")
    return out
