"""Finite fields F_p < F_q < F_{q^n} with integer-encoded elements.

Every field element is carried as a plain int in [0, size).  For a prime
field the encoding is the residue itself; for an extension field built as
base[x]/(modulus) the encoding is the radix-``base.size`` expansion of the
coefficient vector (constant term = least significant digit).  Chasing that
rule down a tower, the base-p digits of an encoding are exactly the F_p
coordinates of the element in the nested polynomial basis, which is what the
file formats and the scan kernels rely on.

Moduli are deterministic: the lexicographically smallest monic irreducible
of the required degree, coefficient tuples (c_0, c_1, ...) compared as
integers with the constant term most significant.  Fields are cached, so two
towers over the same parameters share element encodings.

Fields of at most ``TABLE_LIMIT`` elements get exp/log tables (built from a
multiplicative generator); larger fields fall back to polynomial arithmetic.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

import numpy as np

TABLE_LIMIT = 1 << 20  # exp/log tables up to this field size
DEFAULT_SIZE_LIMIT = 1 << 24  # hard cap on constructible field size
_NP_TABLE_LIMIT = 1 << 11  # dense q x q numpy add/mul tables up to this size


class SizeLimitError(ValueError):
    """Requested field exceeds the configured size limit."""


# ---------------------------------------------------------------------------
# small integer number theory
# ---------------------------------------------------------------------------


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def factorize(n: int) -> dict[int, int]:
    """Prime factorization by trial division (desk-scale inputs)."""
    out: dict[int, int] = {}
    for p in itertools.chain([2], itertools.count(3, 2)):
        if p * p > n:
            break
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def factor_prime_power(q: int) -> tuple[int, int]:
    """Write q = p^e with p prime, or raise ValueError."""
    if q < 2:
        raise ValueError(f"not a prime power: {q}")
    fac = factorize(q)
    if len(fac) != 1:
        raise ValueError(f"not a prime power: {q}")
    [(p, e)] = fac.items()
    return p, e


# ---------------------------------------------------------------------------
# polynomial helpers (coefficient lists over a field, constant term first)
# ---------------------------------------------------------------------------


def poly_trim(cs: list[int]) -> list[int]:
    while cs and cs[-1] == 0:
        cs.pop()
    return cs


def poly_add(F: "FiniteField", a: Sequence[int], b: Sequence[int]) -> list[int]:
    n = max(len(a), len(b))
    out = [0] * n
    for i in range(n):
        x = a[i] if i < len(a) else 0
        y = b[i] if i < len(b) else 0
        out[i] = F.add(x, y)
    return poly_trim(out)

def poly_sub(F: "FiniteField", a: Sequence[int], b: Sequence[int]) -> list[int]:
    return poly_add(F, a, [F.neg(x) for x in b])


def poly_mul(F: "FiniteField", a: Sequence[int], b: Sequence[int]) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            if y:
                out[i + j] = F.add(out[i + j], F.mul(x, y))
    return poly_trim(out)


def poly_divmod(F: "FiniteField", a: Sequence[int], b: Sequence[int]) -> tuple[list[int], list[int]]:
    b = poly_trim(list(b))
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    rem = poly_trim(list(a))
    quo = [0] * max(0, len(rem) - len(b) + 1)
    binv = F.inv(b[-1])
    while len(rem) >= len(b):
        shift = len(rem) - len(b)
        c = F.mul(rem[-1], binv)
        quo[shift] = c
        for i, y in enumerate(b):
            if y:
                rem[shift + i] = F.sub(rem[shift + i], F.mul(c, y))
        poly_trim(rem)
    return poly_trim(quo), rem


def poly_eval(F: "FiniteField", cs: Sequence[int], x: int) -> int:
    acc = 0
    for c in reversed(list(cs)):
        acc = F.add(F.mul(acc, x), c)
    return acc


# ---------------------------------------------------------------------------
# fields
# ---------------------------------------------------------------------------


class FiniteField:
    """Common interface; elements are ints in [0, size)."""

    p: int  # characteristic
    size: int
    degree: int  # degree over the prime field
    base: Optional["FiniteField"]  # None for the prime field
    ext_degree: int  # degree over base (1 for the prime field)
    modulus: tuple[int, ...]  # monic modulus coeffs over base, constant first, WITHOUT leading 1

    _exp: Optional[list[int]] = None
    _log: Optional[list[int]] = None

    # -- arithmetic ---------------------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        p, out, mul = self.p, 0, 1
        while a or b:
            out += ((a % p) + (b % p)) % p * mul
            a //= p
            b //= p
            mul *= p
        return out

    def neg(self, a: int) -> int:
        if self.p == 2:
            return a
        p, out, mul = self.p, 0, 1
        while a:
            d = a % p
            if d:
                out += (p - d) * mul
            a //= p
            mul *= p
        return out

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        raise NotImplementedError

    def inv(self, a: int) -> int:
        raise NotImplementedError

    def pow(self, a: int, k: int) -> int:
        if a == 0:
            if k == 0:
                return 1
            if k < 0:
                raise ZeroDivisionError("0 has no negative powers")
            return 0
        k %= self.size - 1 if self.size > 2 else 1
        if self.size == 2:
            return a  # a == 1
        if self._log is not None:
            return self._exp[(self._log[a] * k) % (self.size - 1)]
        out, sq = 1, a
        while k:
            if k & 1:
                out = self.mul(out, sq)
            sq = self.mul(sq, sq)
            k >>= 1
        return out

    # -- element iteration / display ----------------------------------------

    def elements(self) -> Iterable[int]:
        return range(self.size)

    def elem(self, v: int) -> "Felem":
        if not 0 <= v < self.size:
            raise ValueError(f"encoding {v} out of range for field of size {self.size}")
        return Felem(self, v)

    def __repr__(self) -> str:
        return f"GF({self.size})"

    # -- cached numpy tables for vectorized linear algebra -------------------

    def np_tables(self) -> "NpTables":
        t = getattr(self, "_np_tables", None)
        if t is None:
            if self.size > _NP_TABLE_LIMIT:
                raise SizeLimitError(
                    f"dense tables unavailable for field of size {self.size}"
                )
            t = _build_np_tables(self)
            self._np_tables = t
        return t


class PrimeField(FiniteField):
    def __init__(self, p: int):
        if not is_prime(p):
            raise ValueError(f"characteristic must be prime, got {p}")
        self.p = p
        self.size = p
        self.degree = 1
        self.base = None
        self.ext_degree = 1
        self.modulus = ()
        if p <= TABLE_LIMIT and p > 2:
            g = self._find_generator()
            exp = [1] * (p - 1)
            for i in range(1, p - 1):
                exp[i] = (exp[i - 1] * g) % p
            log = [0] * p
            for i, v in enumerate(exp):
                log[v] = i
            self._exp, self._log = exp, log

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.p

    def neg(self, a: int) -> int:
        return (-a) % self.p

    def mul(self, a: int, b: int) -> int:
        return (a * b) % self.p

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, self.p - 2, self.p)

    def pow(self, a: int, k: int) -> int:
        if a == 0:
            if k == 0:
                return 1
            if k < 0:
                raise ZeroDivisionError("0 has no negative powers")
            return 0
        if self.p == 2:
            return a  # the only nonzero element is 1
        return pow(a, k % (self.p - 1), self.p)

    def _find_generator(self) -> int:
        order = self.p - 1
        primes = list(factorize(order))
        for g in range(2, self.p):
            if all(pow(g, order // r, self.p) != 1 for r in primes):
                return g
        raise AssertionError("no generator found")  # unreachable for prime p


class ExtField(FiniteField):
    """base[x]/(modulus), elements encoded radix base.size, constant digit first."""

    def __init__(self, base: FiniteField, deg: int, modulus: tuple[int, ...]):
        assert deg >= 2 and len(modulus) == deg
        self.p = base.p
        self.base = base
        self.ext_degree = deg
        self.degree = base.degree * deg
        self.size = base.size**deg
        self.modulus = modulus
        if self.size <= TABLE_LIMIT:
            self._build_tables()

    # -- digit conversions ----------------------------------------------------

    def decompose(self, a: int) -> list[int]:
        s, out = self.base.size, []
        for _ in range(self.ext_degree):
            out.append(a % s)
            a //= s
        return out

    def compose(self, digits: Sequence[int]) -> int:
        s, out = self.base.size, 0
        for d in reversed(list(digits)):
            out = out * s + d
        return out

    # -- arithmetic -----------------------------------------------------------

    def _mul_poly(self, a: int, b: int) -> int:
        prod = poly_mul(self.base, self.decompose(a), self.decompose(b))
        _, rem = poly_divmod(self.base, prod, list(self.modulus) + [1])
        return self.compose(rem + [0] * (self.ext_degree - len(rem)))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        if self._log is not None:
            return self._exp[(self._log[a] + self._log[b]) % (self.size - 1)]
        return self._mul_poly(a, b)

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        if self._log is not None:
            return self._exp[(self.size - 1 - self._log[a]) % (self.size - 1)]
        # extended Euclid over the base field
        F = self.base
        r0, r1 = list(self.modulus) + [1], self.decompose(a)
        s0, s1 = [], [1]
        while poly_trim(r1):
            q, r = poly_divmod(F, r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, poly_sub(F, s0, poly_mul(F, q, s1))
        c = F.inv(r0[0])  # r0 is a nonzero constant gcd
        u = [F.mul(c, x) for x in s0]
        return self.compose(u + [0] * (self.ext_degree - len(u)))

    def _build_tables(self) -> None:
        g = self._find_generator()
        exp = [1] * (self.size - 1)
        for i in range(1, self.size - 1):
            exp[i] = self._mul_poly(exp[i - 1], g)
        log = [0] * self.size
        for i, v in enumerate(exp):
            log[v] = i
        self._exp, self._log = exp, log

    def _pow_poly(self, a: int, k: int) -> int:
        out, sq = 1, a
        while k:
            if k & 1:
                out = self._mul_poly(out, sq)
            sq = self._mul_poly(sq, sq)
            k >>= 1
        return out

    def _find_generator(self) -> int:
        order = self.size - 1
        primes = list(factorize(order))
        for g in range(2, self.size):
            if all(self._pow_poly(g, order // r) != 1 for r in primes):
                return g
        raise AssertionError("no multiplicative generator found")


# ---------------------------------------------------------------------------
# modulus search and field construction (cached)
# ---------------------------------------------------------------------------


def _is_irreducible(F: FiniteField, coeffs: list[int]) -> bool:
    """Trial division of the monic poly (coeffs + leading 1) by all lower-degree monics."""
    d = len(coeffs)
    if d == 1:
        return True
    if coeffs[0] == 0:  # divisible by x
        return False
    f = coeffs + [1]
    for dd in range(1, d // 2 + 1):
        for tail in itertools.product(range(F.size), repeat=dd):
            g = list(tail) + [1]
            _, rem = poly_divmod(F, f, g)
            if not rem:
                return False
    return True


def lex_smallest_irreducible(F: FiniteField, d: int) -> tuple[int, ...]:
    """Non-leading coefficients of the lex-smallest monic irreducible of degree d over F.

    Coefficient tuples (c_0, ..., c_{d-1}) are compared as integer sequences,
    constant term first.
    """
    for coeffs in itertools.product(range(F.size), repeat=d):
        if _is_irreducible(F, list(coeffs)):
            return tuple(coeffs)
    raise AssertionError("no irreducible polynomial found")  # unreachable


_FIELD_CACHE: dict[tuple, FiniteField] = {}


def prime_field(p: int) -> PrimeField:
    key = ("prime", p)
    f = _FIELD_CACHE.get(key)
    if f is None:
        f = PrimeField(p)
        _FIELD_CACHE[key] = f
    return f


def extend_field(base: FiniteField, deg: int, size_limit: int = DEFAULT_SIZE_LIMIT) -> FiniteField:
    """Degree-`deg` extension of `base` with the deterministic lex-smallest modulus."""
    if deg < 1:
        raise ValueError("extension degree must be >= 1")
    if deg == 1:
        return base
    if base.size**deg > size_limit:
        raise SizeLimitError(
            f"field of size {base.size}^{deg} exceeds size limit {size_limit}"
        )
    key = ("ext", id(base), deg)
    f = _FIELD_CACHE.get(key)
    if f is None:
        f = ExtField(base, deg, lex_smallest_irreducible(base, deg))
        _FIELD_CACHE[key] = f
    return f


@dataclass(frozen=True)
class FieldTower:
    """F_p < F_q = F_{p^e} < F_{q^n}: ground field for matrix entries, top field for symbols."""

    p: int
    e: int
    n: int
    prime: FiniteField
    ground: FiniteField  # F_q
    top: FiniteField  # F_{q^n}

    @property
    def q(self) -> int:
        return self.ground.size

    def basis(self) -> list[int]:
        """Polynomial basis of the top field over the ground field (encodings)."""
        return [self.q**j for j in range(self.n)]

    def as_vector(self, a: int) -> list[int]:
        """Ground-field coordinates of a top-field element in the polynomial basis."""
        if self.n == 1:
            return [a]
        return self.top.decompose(a)

    def from_vector(self, v: Sequence[int]) -> int:
        if len(v) != self.n:
            raise ValueError(f"expected {self.n} coordinates, got {len(v)}")
        if self.n == 1:
            return v[0]
        return self.top.compose(v)

    def frobenius(self, a: int, i: int = 1) -> int:
        """a^(q^i) in the top field."""
        return self.top.pow(a, self.q ** (i % self.n if self.n > 0 else 1))

    def relative_extension(self, deg: int, size_limit: int = DEFAULT_SIZE_LIMIT) -> FiniteField:
        """F_{q^{n*deg}} realized as a degree-`deg` extension of the top field."""
        return extend_field(self.top, deg, size_limit)


def make_tower(p: int, e: int, n: int, size_limit: int = DEFAULT_SIZE_LIMIT) -> FieldTower:
    if e < 1 or n < 1:
        raise ValueError("extension degrees must be >= 1")
    if not is_prime(p):
        raise ValueError(f"characteristic must be prime, got {p}")
    if p ** (e * n) > size_limit:
        raise SizeLimitError(f"field of size {p}^{e * n} exceeds size limit {size_limit}")
    pf = prime_field(p)
    ground = extend_field(pf, e, size_limit)
    top = extend_field(ground, n, size_limit)
    return FieldTower(p=p, e=e, n=n, prime=pf, ground=ground, top=top)


# ---------------------------------------------------------------------------
# element wrapper (value-semantic sugar over the int encodings)
# ---------------------------------------------------------------------------


class Felem:
    __slots__ = ("field", "val")

    def __init__(self, field: FiniteField, val: int):
        self.field = field
        self.val = val

    def _coerce(self, other) -> int:
        if isinstance(other, Felem):
            if other.field is not self.field:
                raise ValueError("elements from different fields")
            return other.val
        if isinstance(other, int):
            # plain ints are taken as encodings, same as everywhere else
            if not 0 <= other < self.field.size:
                raise ValueError(f"encoding {other} out of range")
            return other
        return NotImplemented

    def __add__(self, other):
        v = self._coerce(other)
        return Felem(self.field, self.field.add(self.val, v))

    __radd__ = __add__

    def __neg__(self):
        return Felem(self.field, self.field.neg(self.val))

    def __sub__(self, other):
        v = self._coerce(other)
        return Felem(self.field, self.field.sub(self.val, v))

    def __rsub__(self, other):
        v = self._coerce(other)
        return Felem(self.field, self.field.sub(v, self.val))

    def __mul__(self, other):
        v = self._coerce(other)
        return Felem(self.field, self.field.mul(self.val, v))

    __rmul__ = __mul__

    def __truediv__(self, other):
        v = self._coerce(other)
        return Felem(self.field, self.field.mul(self.val, self.field.inv(v)))

    def __pow__(self, k: int):
        return Felem(self.field, self.field.pow(self.val, k))

    def inverse(self) -> "Felem":
        return Felem(self.field, self.field.inv(self.val))

    def __eq__(self, other):
        if isinstance(other, Felem):
            return self.field is other.field and self.val == other.val
        if isinstance(other, int):
            return self.val == other
        return NotImplemented

    def __hash__(self):
        return hash((id(self.field), self.val))

    def __bool__(self):
        return self.val != 0

    def __repr__(self):
        return f"Felem({self.field!r}, {self.val})"


# ---------------------------------------------------------------------------
# dense numpy arithmetic tables
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class NpTables:
    q: int
    add: np.ndarray  # (q, q) int32
    mul: np.ndarray  # (q, q) int32
    neg: np.ndarray  # (q,) int32
    inv: np.ndarray  # (q,) int32, inv[0] = 0 sentinel


def _digitwise_outer_add(p: int, size: int) -> np.ndarray:
    idx = np.arange(size, dtype=np.int64)
    a = idx[:, None]
    b = idx[None, :]
    out = np.zeros((size, size), dtype=np.int64)
    mul = 1
    while mul < size:
        out += ((a // mul % p) + (b // mul % p)) % p * mul
        mul *= p
    return out.astype(np.int32)


def _build_np_tables(F: FiniteField) -> NpTables:
    q = F.size
    if isinstance(F, PrimeField):
        idx = np.arange(q, dtype=np.int64)
        add = ((idx[:, None] + idx[None, :]) % q).astype(np.int32)
        mul = ((idx[:, None] * idx[None, :]) % q).astype(np.int32)
        neg = ((-idx) % q).astype(np.int32)
        inv = np.zeros(q, dtype=np.int32)
        for a in range(1, q):
            inv[a] = F.inv(a)
        return NpTables(q, add, mul, neg, inv)
    if F._log is None:
        raise SizeLimitError("field too large for exp/log tables")
    if F.p == 2:
        idx = np.arange(q, dtype=np.int32)
        add = np.bitwise_xor.outer(idx, idx).astype(np.int32)
        neg = idx.copy()
    else:
        add = _digitwise_outer_add(F.p, q)
        neg = np.array([F.neg(a) for a in range(q)], dtype=np.int32)
    exp = np.array(F._exp, dtype=np.int64)
    log = np.array(F._log, dtype=np.int64)
    s = q - 1
    mul = np.zeros((q, q), dtype=np.int32)
    lg = np.add.outer(log[1:], log[1:]) % s
    mul[1:, 1:] = exp[lg]
    inv = np.zeros(q, dtype=np.int32)
    inv[1:] = exp[(s - log[1:]) % s]
    return NpTables(q, add, mul, neg, inv)


# ---------------------------------------------------------------------------
# linear algebra over a field (matrices = 2-D numpy int arrays of encodings)
# ---------------------------------------------------------------------------


def as_matrix(rows) -> np.ndarray:
    M = np.asarray(rows, dtype=np.int32)
    if M.ndim != 2:
        raise ValueError("matrix must be 2-dimensional")
    return M


def row_reduce(F: FiniteField, M: np.ndarray) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form (copy) and pivot column list."""
    R = as_matrix(M).copy()
    rows, cols = R.shape
    try:
        T = F.np_tables()
    except SizeLimitError:
        T = None
    r = 0
    pivots: list[int] = []
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(R[r:, c])[0]
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            R[[r, i]] = R[[i, r]]
        pv = int(R[r, c])
        if T is not None:
            if pv != 1:
                R[r] = T.mul[T.inv[pv], R[r]]
            others = np.nonzero(R[:, c])[0]
            others = others[others != r]
            if others.size:
                f = R[others, c]
                R[others] = T.add[R[others], T.neg[T.mul[f[:, None], R[r][None, :]]]]
        else:
            if pv != 1:
                pinv = F.inv(pv)
                R[r] = [F.mul(pinv, int(x)) for x in R[r]]
            for i2 in range(rows):
                f = int(R[i2, c])
                if i2 != r and f:
                    R[i2] = [F.sub(int(x), F.mul(f, int(y))) for x, y in zip(R[i2], R[r])]
        pivots.append(c)
        r += 1
    return R, pivots


def rank(F: FiniteField, M: np.ndarray) -> int:
    M = as_matrix(M)
    if M.size == 0:
        return 0
    _, pivots = row_reduce(F, M)
    return len(pivots)


def kernel_basis(F: FiniteField, M: np.ndarray) -> np.ndarray:
    """Basis (as rows) of the right null space {v : M v = 0}."""
    M = as_matrix(M)
    rows, cols = M.shape
    R, pivots = row_reduce(F, M)
    free = [c for c in range(cols) if c not in pivots]
    out = np.zeros((len(free), cols), dtype=np.int32)
    for k, fc in enumerate(free):
        out[k, fc] = 1
        for i, pc in enumerate(pivots):
            out[k, pc] = F.neg(int(R[i, fc]))
    return out


def mat_mul(F: FiniteField, A: np.ndarray, B: np.ndarray) -> np.ndarray:
    A, B = as_matrix(A), as_matrix(B)
    if A.shape[1] != B.shape[0]:
        raise ValueError("inner dimensions do not match")
    try:
        T = F.np_tables()
    except SizeLimitError:
        T = None
    out = np.zeros((A.shape[0], B.shape[1]), dtype=np.int32)
    if T is not None:
        for k in range(A.shape[1]):
            out = T.add[out, T.mul[A[:, k][:, None], B[k][None, :]]]
    else:
        for i in range(A.shape[0]):
            for j in range(B.shape[1]):
                acc = 0
                for k in range(A.shape[1]):
                    acc = F.add(acc, F.mul(int(A[i, k]), int(B[k, j])))
                out[i, j] = acc
    return out


def mat_vec(F: FiniteField, A: np.ndarray, v: np.ndarray) -> np.ndarray:
    return mat_mul(F, A, np.asarray(v, dtype=np.int32).reshape(-1, 1)).reshape(-1)


class Matrix:
    """Thin convenience wrapper: a field tag plus a 2-D array of encodings."""

    def __init__(self, field: FiniteField, rows):
        self.field = field
        self.array = as_matrix(rows)

    @property
    def shape(self) -> tuple[int, int]:
        return self.array.shape

    def rank(self) -> int:
        return rank(self.field, self.array)

    def rref(self) -> "Matrix":
        R, _ = row_reduce(self.field, self.array)
        return Matrix(self.field, R)

    def kernel(self) -> "Matrix":
        return Matrix(self.field, kernel_basis(self.field, self.array))

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if other.field is not self.field:
            raise ValueError("matrices over different fields")
        return Matrix(self.field, mat_mul(self.field, self.array, other.array))

    def __eq__(self, other):
        return (
            isinstance(other, Matrix)
            and other.field is self.field
            and other.array.shape == self.array.shape
            and bool(np.all(other.array == self.array))
        )

    def __repr__(self):
        return f"Matrix({self.field!r}, {self.array.tolist()})"
