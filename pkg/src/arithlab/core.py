"""Exact integer arithmetic: primality, factorization, CRT, prime search,
and Smith normal form over the integers.

Everything here is exact -- Python ints throughout, no floating point.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

__all__ = [
    "IntegerMatrix",
    "SnfResult",
    "Factorization",
    "is_prime",
    "factor",
    "crt_solve",
    "next_prime_in_progression",
    "smith_normal_form",
    "integer_kernel",
    "determinant",
]

_TWO64 = 1 << 64

# Deterministic Miller-Rabin witnesses covering all n < 2^64.
_MR_WITNESSES_64 = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47)


def _miller_rabin(n: int, bases: Iterable[int]) -> bool:
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in bases:
        a %= n
        if a == 0:
            continue
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _lucas_strong_probable_prime(n: int) -> bool:
    """Strong Lucas test with Selfridge's parameter choice (n odd, > 2)."""
    if _is_square_int(n):
        return False
    # First D in 5, -7, 9, -11, ... with jacobi(D, n) == -1.
    d = 5
    while True:
        j = _jacobi_int(d, n)
        if j == -1:
            break
        if j == 0 and abs(d) != n:
            return False
        d = -(d + 2) if d > 0 else -(d - 2)
    p, q = 1, (1 - d) // 4
    # n + 1 = s * 2^r with s odd
    s = n + 1
    r = 0
    while s % 2 == 0:
        s //= 2
        r += 1
    # Lucas sequences U_s, V_s by binary ladder.
    u, v, qk = 1, p, q % n
    for bit in bin(s)[3:]:
        u = u * v % n
        v = (v * v - 2 * qk) % n
        qk = qk * qk % n
        if bit == "1":
            u, v = (p * u + v) % n, (d * u + p * v) % n
            if u % 2:
                u += n
            if v % 2:
                v += n
            u, v = u // 2 % n, v // 2 % n
            qk = qk * q % n
    if u == 0 or v == 0:
        return True
    for _ in range(r - 1):
        v = (v * v - 2 * qk) % n
        if v == 0:
            return True
        qk = qk * qk % n
    return False


def _is_square_int(n: int) -> bool:
    if n < 0:
        return False
    r = math.isqrt(n)
    return r * r == n


def _jacobi_int(a: int, n: int) -> int:
    # Plain Jacobi symbol on ints; n odd positive. Kept private so the
    # public symbols module can own validation and error reporting.
    a %= n
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def is_prime(n: int) -> bool:
    """Deterministic primality test for n >= 1.

    Uses the fixed Miller-Rabin witness set that is exact below 2^64 and
    a Baillie-PSW test (Miller-Rabin base 2 plus a strong Lucas test)
    above it.
    """
    if n < 1:
        raise ValueError(f"is_prime requires n >= 1, got {n}")
    if n == 1:
        return False
    for p in _SMALL_PRIMES:
        if n == p:
            return True
        if n % p == 0:
            return False
    if n < _TWO64:
        return _miller_rabin(n, _MR_WITNESSES_64)
    return _miller_rabin(n, (2,)) and _lucas_strong_probable_prime(n)


@dataclass(frozen=True)
class Factorization:
    """Complete prime factorization of a positive integer."""

    base: int
    factors: tuple[tuple[int, int], ...]

    def __post_init__(self):
        prod = 1
        prev = 1
        for p, e in self.factors:
            if p <= prev or e < 1 or not is_prime(p):
                raise ValueError(f"malformed factor list for {self.base}")
            prev = p
            prod *= p**e
        if prod != self.base:
            raise ValueError(f"factors do not multiply back to {self.base}")

    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)


def _pollard_rho(n: int) -> int:
    """One nontrivial factor of composite odd n (Brent's cycle variant)."""
    if n % 2 == 0:
        return 2
    seed = 1
    while True:
        seed += 1
        y, c, m = seed, seed, 128
        g = r = q = 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g


def factor(n: int) -> Factorization:
    """Factor n completely; desk-scale input range 1 <= n <= 2^64."""
    if not 1 <= n <= _TWO64:
        raise ValueError(f"factor requires 1 <= n <= 2**64, got {n}")
    remaining = n
    found: dict[int, int] = {}
    for p in _SMALL_PRIMES:
        while remaining % p == 0:
            found[p] = found.get(p, 0) + 1
            remaining //= p
    stack = [remaining] if remaining > 1 else []
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_prime(m):
            found[m] = found.get(m, 0) + 1
            continue
        d = _pollard_rho(m)
        stack.append(d)
        stack.append(m // d)
    return Factorization(n, tuple(sorted(found.items())))


def crt_solve(congruences: Sequence[tuple[int, int]]) -> tuple[int, int]:
    """Solve a simultaneous system x = r_i (mod m_i).

    Returns (c, M) with 0 <= c < M and M the lcm of the moduli.  Raises
    ValueError when two congruences are incompatible (only possible with
    non-coprime moduli).
    """
    if not congruences:
        raise ValueError("crt_solve needs at least one congruence")
    c, m = 0, 1
    for r, mod in congruences:
        if mod < 1:
            raise ValueError(f"modulus must be >= 1, got {mod}")
        g = math.gcd(m, mod)
        if (r - c) % g != 0:
            raise ValueError(
                f"inconsistent congruences: x = {c} (mod {m}) and x = {r} (mod {mod})"
            )
        lcm = m // g * mod
        t = (r - c) // g * pow(m // g, -1, mod // g) % (mod // g)
        c = (c + m * t) % lcm
        m = lcm
    return c, m


def next_prime_in_progression(a: int, m: int, lower: int) -> int:
    """Smallest prime p > lower with p = a (mod m); requires gcd(a, m) = 1."""
    if m < 1:
        raise ValueError(f"modulus must be >= 1, got {m}")
    if math.gcd(a, m) != 1:
        raise ValueError(f"progression {a} mod {m} is not coprime")
    if lower < 0:
        raise ValueError(f"lower bound must be >= 0, got {lower}")
    a %= m
    p = lower + 1 + (a - lower - 1) % m
    while True:
        if p > 1 and is_prime(p):
            return p
        p += m


# ---------------------------------------------------------------------------
# Exact integer matrices and Smith normal form.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class IntegerMatrix:
    """Immutable integer matrix, entries stored row-major."""

    rows: int
    cols: int
    entries: tuple[int, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("matrix dimensions must be nonnegative")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError("entry count does not match dimensions")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "IntegerMatrix":
        r = len(rows)
        c = len(rows[0]) if r else 0
        flat = []
        for row in rows:
            if len(row) != c:
                raise ValueError("ragged rows")
            flat.extend(int(x) for x in row)
        return cls(r, c, tuple(flat))

    @classmethod
    def identity(cls, n: int) -> "IntegerMatrix":
        return cls(n, n, tuple(1 if i == j else 0 for i in range(n) for j in range(n)))

    @classmethod
    def zero(cls, rows: int, cols: int) -> "IntegerMatrix":
        return cls(rows, cols, (0,) * (rows * cols))

    def __getitem__(self, key: tuple[int, int]) -> int:
        i, j = key
        return self.entries[i * self.cols + j]

    def to_rows(self) -> list[list[int]]:
        return [
            list(self.entries[i * self.cols : (i + 1) * self.cols])
            for i in range(self.rows)
        ]

    def mul(self, other: "IntegerMatrix") -> "IntegerMatrix":
        if self.cols != other.rows:
            raise ValueError("dimension mismatch in matrix product")
        a, b = self.to_rows(), other.to_rows()
        out = [
            [sum(a[i][k] * b[k][j] for k in range(self.cols)) for j in range(other.cols)]
            for i in range(self.rows)
        ]
        return IntegerMatrix.from_rows(out) if out else IntegerMatrix.zero(0, other.cols)

    def transpose(self) -> "IntegerMatrix":
        return IntegerMatrix(
            self.cols,
            self.rows,
            tuple(self[i, j] for j in range(self.cols) for i in range(self.rows)),
        )

    def is_identity(self) -> bool:
        return self.rows == self.cols and all(
            self[i, j] == (1 if i == j else 0)
            for i in range(self.rows)
            for j in range(self.cols)
        )


def determinant(m: IntegerMatrix) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    if m.rows != m.cols:
        raise ValueError("determinant of a non-square matrix")
    n = m.rows
    if n == 0:
        return 1
    a = m.to_rows()
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


@dataclass(frozen=True)
class SnfResult:
    """Smith normal form data: left * M * right is diag(diagonal)."""

    diagonal: tuple[int, ...]
    left_transform: IntegerMatrix
    right_transform: IntegerMatrix

    def diagonal_matrix(self) -> IntegerMatrix:
        r = self.left_transform.rows
        c = self.right_transform.cols
        out = [[0] * c for _ in range(r)]
        for i, d in enumerate(self.diagonal):
            out[i][i] = d
        return IntegerMatrix.from_rows(out) if r else IntegerMatrix.zero(0, c)


def _pivot_search(a: list[list[int]], t: int) -> tuple[int, int] | None:
    """Smallest |entry| != 0 in the trailing submatrix, row-major ties."""
    best = None
    best_val = None
    for i in range(t, len(a)):
        row = a[i]
        for j in range(t, len(row)):
            v = abs(row[j])
            if v and (best_val is None or v < best_val):
                best, best_val = (i, j), v
                if v == 1:
                    return best
    return best


def smith_normal_form(m: IntegerMatrix) -> SnfResult:
    """Smith normal form with unimodular transforms.

    Classical elimination: the pivot is always the entry of smallest
    nonzero absolute value (ties broken row-major), which keeps the
    transforms deterministic.  The returned diagonal d_1 | d_2 | ... is
    the full divisor chain, padded with zeros up to min(rows, cols).
    """
    nrows, ncols = m.rows, m.cols
    a = m.to_rows()
    left = IntegerMatrix.identity(nrows).to_rows()
    right = IntegerMatrix.identity(ncols).to_rows()
    t = 0
    while True:
        pos = _pivot_search(a, t)
        if pos is None:
            break
        i, j = pos
        if i != t:
            a[t], a[i] = a[i], a[t]
            left[t], left[i] = left[i], left[t]
        if j != t:
            for row in a:
                row[t], row[j] = row[j], row[t]
            for row in right:
                row[t], row[j] = row[j], row[t]
        while True:
            # Clear column t with the current pivot.
            for i in range(nrows):
                if i != t and a[i][t]:
                    q = a[i][t] // a[t][t]
                    if q:
                        for k in range(ncols):
                            a[i][k] -= q * a[t][k]
                        for k in range(nrows):
                            left[i][k] -= q * left[t][k]
            # Clear row t.
            for j in range(ncols):
                if j != t and a[t][j]:
                    q = a[t][j] // a[t][t]
                    if q:
                        for row in a:
                            row[j] -= q * row[t]
                        for row in right:
                            row[j] -= q * row[t]
            residue = [
                (i, t) for i in range(nrows) if i != t and a[i][t]
            ] + [(t, j) for j in range(ncols) if j != t and a[t][j]]
            if not residue:
                # Pivot must divide the rest of the submatrix.
                offender = None
                for i in range(t + 1, nrows):
                    for j in range(t + 1, ncols):
                        if a[i][j] % a[t][t]:
                            offender = i
                            break
                    if offender is not None:
                        break
                if offender is None:
                    break
                for k in range(ncols):
                    a[t][k] += a[offender][k]
                for k in range(nrows):
                    left[t][k] += left[offender][k]
            # Re-pick the smallest pivot in row/column t.
            pos = _pivot_search(a, t)
            i, j = pos
            if i != t:
                a[t], a[i] = a[i], a[t]
                left[t], left[i] = left[i], left[t]
            if j != t:
                for row in a:
                    row[t], row[j] = row[j], row[t]
                for row in right:
                    row[t], row[j] = row[j], row[t]
        if a[t][t] < 0:
            for k in range(ncols):
                a[t][k] = -a[t][k]
            for k in range(nrows):
                left[t][k] = -left[t][k]
        t += 1
        if t >= min(nrows, ncols):
            break
    diag = tuple(a[i][i] for i in range(min(nrows, ncols)))
    return SnfResult(
        diag,
        IntegerMatrix.from_rows(left) if nrows else IntegerMatrix.zero(0, 0),
        IntegerMatrix.from_rows(right) if ncols else IntegerMatrix.zero(0, 0),
    )


def integer_kernel(m: IntegerMatrix) -> IntegerMatrix:
    """Basis of {x : m x = 0} over the integers, as matrix columns.

    The basis spans the kernel saturately (the quotient by its span is
    torsion-free), which follows from the unimodularity of the SNF
    column transform.
    """
    snf = smith_normal_form(m)
    diag = snf.diagonal
    r = snf.right_transform
    kernel_cols = [
        j for j in range(m.cols) if j >= len(diag) or diag[j] == 0
    ]
    entries = tuple(
        r[i, j] for i in range(m.cols) for j in kernel_cols
    )
    return IntegerMatrix(m.cols, len(kernel_cols), entries)
