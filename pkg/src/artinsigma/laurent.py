"""Exact Laurent polynomials over Q or F_p, and Smith normal form.

The ring F[t, t^-1] is Euclidean once units t^k are factored out: measure a
nonzero element by the exponent span of its support.  Division with
remainder shifts both operands to honest polynomials, divides there, and
shifts back, so remainders have strictly smaller span.  Smith reduction then
follows the classical recipe (minimal-span pivot, row/column clearing,
divisibility sweep) and invariant factors are canonicalized to lowest
exponent 0 with leading coefficient 1.

Coefficients are exact: Fraction for characteristic 0, integers mod p for a
prime p.  No floating point anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .homology import _is_prime


class Field:
    """Coefficient field: the rationals (characteristic 0) or F_p."""

    def __init__(self, char: int = 0):
        if char != 0 and not _is_prime(char):
            raise ValueError(f"field characteristic must be 0 or a prime, got {char}")
        self.char = char

    def coerce(self, x):
        if self.char == 0:
            return Fraction(x)
        return int(x) % self.char

    @property
    def zero(self):
        return Fraction(0) if self.char == 0 else 0

    @property
    def one(self):
        return Fraction(1) if self.char == 0 else 1

    def add(self, a, b):
        return a + b if self.char == 0 else (a + b) % self.char

    def sub(self, a, b):
        return a - b if self.char == 0 else (a - b) % self.char

    def mul(self, a, b):
        return a * b if self.char == 0 else (a * b) % self.char

    def neg(self, a):
        return -a if self.char == 0 else (-a) % self.char

    def inv(self, a):
        if not a:
            raise ZeroDivisionError("field inverse of zero")
        return Fraction(1) / a if self.char == 0 else pow(a, -1, self.char)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Field) and self.char == other.char

    def __hash__(self) -> int:
        return hash(("Field", self.char))

    def __repr__(self) -> str:
        return "Q" if self.char == 0 else f"F{self.char}"


class LaurentPoly:
    """Normalized Laurent polynomial: lowest exponent + dense coefficients.

    The first and last stored coefficients are nonzero; the zero polynomial
    is the empty coefficient tuple at offset 0.  Units are exactly the
    single-term elements c * t^k.
    """

    __slots__ = ("field", "offset", "coeffs")

    def __init__(self, field: Field, offset: int, coeffs: Iterable):
        cs = [field.coerce(c) for c in coeffs]
        lo = 0
        while lo < len(cs) and not cs[lo]:
            lo += 1
        hi = len(cs)
        while hi > lo and not cs[hi - 1]:
            hi -= 1
        if lo == hi:
            offset, cs = 0, []
        else:
            offset, cs = offset + lo, cs[lo:hi]
        self.field = field
        self.offset = offset
        self.coeffs = tuple(cs)

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, field: Field) -> "LaurentPoly":
        return cls(field, 0, [])

    @classmethod
    def one(cls, field: Field) -> "LaurentPoly":
        return cls(field, 0, [1])

    @classmethod
    def constant(cls, field: Field, c) -> "LaurentPoly":
        return cls(field, 0, [c])

    @classmethod
    def term(cls, field: Field, c, k: int) -> "LaurentPoly":
        return cls(field, k, [c])

    @classmethod
    def from_terms(cls, field: Field, terms: dict[int, object]) -> "LaurentPoly":
        if not terms:
            return cls.zero(field)
        lo, hi = min(terms), max(terms)
        cs = [terms.get(k, 0) for k in range(lo, hi + 1)]
        return cls(field, lo, cs)

    # -- structure ----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_unit(self) -> bool:
        return len(self.coeffs) == 1

    @property
    def span(self) -> int:
        """Euclidean size: top exponent minus bottom exponent (0 for units)."""
        return len(self.coeffs) - 1

    @property
    def degree(self) -> int:
        if self.is_zero():
            raise ValueError("zero polynomial has no degree")
        return self.offset + len(self.coeffs) - 1

    def coefficient(self, k: int):
        if self.offset <= k < self.offset + len(self.coeffs):
            return self.coeffs[k - self.offset]
        return self.field.zero

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        f = self.field
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        lo = min(self.offset, other.offset)
        hi = max(self.offset + len(self.coeffs), other.offset + len(other.coeffs))
        cs = [f.zero] * (hi - lo)
        for i, c in enumerate(self.coeffs):
            cs[self.offset - lo + i] = c
        for i, c in enumerate(other.coeffs):
            j = other.offset - lo + i
            cs[j] = f.add(cs[j], c)
        return LaurentPoly(f, lo, cs)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly(self.field, self.offset, [self.field.neg(c) for c in self.coeffs])

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        f = self.field
        if self.is_zero() or other.is_zero():
            return LaurentPoly.zero(f)
        cs = [f.zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    cs[i + j] = f.add(cs[i + j], f.mul(a, b))
        return LaurentPoly(f, self.offset + other.offset, cs)

    def shifted(self, k: int) -> "LaurentPoly":
        """Multiply by the unit t^k."""
        if self.is_zero():
            return self
        return LaurentPoly(self.field, self.offset + k, self.coeffs)

    def scaled(self, c) -> "LaurentPoly":
        return LaurentPoly(self.field, self.offset, [self.field.mul(x, self.field.coerce(c))
                                                     for x in self.coeffs])

    def monic_offset0(self) -> "LaurentPoly":
        """Canonical associate: lowest exponent 0, top coefficient 1."""
        if self.is_zero():
            return self
        lead_inv = self.field.inv(self.coeffs[-1])
        return LaurentPoly(self.field, 0, [self.field.mul(c, lead_inv) for c in self.coeffs])

    def evaluate(self, x):
        """Value at a nonzero point of the coefficient field."""
        f = self.field
        x = f.coerce(x)
        if not x:
            raise ZeroDivisionError("Laurent polynomials are evaluated at nonzero points")
        acc = f.zero
        for c in reversed(self.coeffs):
            acc = f.add(f.mul(acc, x), c)
        if self.offset >= 0:
            for _ in range(self.offset):
                acc = f.mul(acc, x)
        else:
            xinv = f.inv(x)
            for _ in range(-self.offset):
                acc = f.mul(acc, xinv)
        return acc

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return (self.field == other.field and self.offset == other.offset
                and self.coeffs == other.coeffs)

    def __hash__(self) -> int:
        return hash((self.field, self.offset, self.coeffs))

    def to_dict(self) -> dict:
        """Wire format: {"offset": k, "coeffs": [...]}, rationals as strings."""
        if self.field.char == 0:
            return {"offset": self.offset, "coeffs": [str(c) for c in self.coeffs]}
        return {"offset": self.offset, "coeffs": [int(c) for c in self.coeffs]}

    def __repr__(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            k = self.offset + i
            if k == 0:
                parts.append(str(c))
            elif c == self.field.one:
                parts.append("t" if k == 1 else f"t^{k}")
            else:
                parts.append(f"{c}*t" if k == 1 else f"{c}*t^{k}")
        return " + ".join(parts)


def q_poly(k: int, m: int, field: Field) -> LaurentPoly:
    """The truncated geometric sum 1 + t^m + ... + t^(m(k-1)).

    This is (x^k - 1)/(x - 1) evaluated at x = t^m; for m = 0 it degenerates
    to the constant k, which vanishes exactly in characteristic p | k.
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    if m == 0:
        return LaurentPoly.constant(field, k)
    return LaurentPoly.from_terms(field, {m * i: 1 for i in range(k)})


def t_power_minus_one(field: Field, m: int) -> LaurentPoly:
    """t^m - 1 (zero when m = 0)."""
    if m == 0:
        return LaurentPoly.zero(field)
    return LaurentPoly.from_terms(field, {m: 1, 0: -1})


def laurent_divmod(a: LaurentPoly, b: LaurentPoly) -> tuple[LaurentPoly, LaurentPoly]:
    """a = q*b + r with r zero or span(r) < span(b)."""
    if b.is_zero():
        raise ZeroDivisionError("Laurent division by zero")
    f = a.field
    if a.is_zero():
        return LaurentPoly.zero(f), a
    # shift both to offset 0 and run ordinary polynomial division
    rem = list(a.coeffs)
    div = b.coeffs
    if len(rem) < len(div):
        return LaurentPoly.zero(f), a
    q = [f.zero] * (len(rem) - len(div) + 1)
    lead_inv = f.inv(div[-1])
    for i in range(len(rem) - len(div), -1, -1):
        c = f.mul(rem[i + len(div) - 1], lead_inv)
        if not c:
            continue
        q[i] = c
        for j, d in enumerate(div):
            rem[i + j] = f.sub(rem[i + j], f.mul(c, d))
    quot = LaurentPoly(f, a.offset - b.offset, q)
    remainder = LaurentPoly(f, a.offset, rem)
    return quot, remainder


def laurent_gcd(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """Canonical greatest common divisor (monic, lowest exponent 0)."""
    while not b.is_zero():
        _, r = laurent_divmod(a, b)
        a, b = b, r
    return a.monic_offset0()


class LaurentMatrix:
    """Dense matrix over F[t, t^-1]; immutable by convention."""

    def __init__(self, field: Field, nrows: int, ncols: int,
                 entries: Sequence[Sequence[LaurentPoly]]):
        entries = tuple(tuple(row) for row in entries)
        if len(entries) != nrows or any(len(row) != ncols for row in entries):
            raise ValueError("entry grid does not match the stated dimensions")
        self.field = field
        self.nrows = nrows
        self.ncols = ncols
        self.entries = entries

    @classmethod
    def zeros(cls, field: Field, nrows: int, ncols: int) -> "LaurentMatrix":
        z = LaurentPoly.zero(field)
        return cls(field, nrows, ncols, [[z] * ncols for _ in range(nrows)])

    def entry(self, i: int, j: int) -> LaurentPoly:
        return self.entries[i][j]

    def is_zero(self) -> bool:
        return all(e.is_zero() for row in self.entries for e in row)

    def __mul__(self, other: "LaurentMatrix") -> "LaurentMatrix":
        if self.ncols != other.nrows:
            raise ValueError("dimension mismatch in matrix product")
        z = LaurentPoly.zero(self.field)
        rows = []
        for i in range(self.nrows):
            row = []
            for j in range(other.ncols):
                acc = z
                for k in range(self.ncols):
                    a = self.entries[i][k]
                    b = other.entries[k][j]
                    if not a.is_zero() and not b.is_zero():
                        acc = acc + a * b
                row.append(acc)
            rows.append(row)
        return LaurentMatrix(self.field, self.nrows, other.ncols, rows)

    def permuted(self, row_order: Sequence[int], col_order: Sequence[int]) -> "LaurentMatrix":
        rows = [[self.entries[i][j] for j in col_order] for i in row_order]
        return LaurentMatrix(self.field, self.nrows, self.ncols, rows)

    def to_dict(self) -> dict:
        return {
            "rows": self.nrows,
            "cols": self.ncols,
            "entries": [[e.to_dict() for e in row] for row in self.entries],
        }


def smith_normal_form(matrix: LaurentMatrix) -> tuple[tuple[LaurentPoly, ...], int]:
    """Invariant factors d_1 | d_2 | ... and the rank of a Laurent matrix.

    Factors are canonical associates (lowest exponent 0, leading coefficient
    1); the rank is their count.  Unit factors are reported as 1.
    """
    m = [list(row) for row in matrix.entries]
    nrows, ncols = matrix.nrows, matrix.ncols
    factors: list[LaurentPoly] = []
    k = 0
    while k < nrows and k < ncols:
        piv = None
        best = -1
        for i in range(k, nrows):
            for j in range(k, ncols):
                e = m[i][j]
                if not e.is_zero() and (piv is None or e.span < best):
                    piv, best = (i, j), e.span
                    if best == 0:
                        break
            if best == 0:
                break
        if piv is None:
            break
        i0, j0 = piv
        m[k], m[i0] = m[i0], m[k]
        for row in m:
            row[k], row[j0] = row[j0], row[k]
        while True:
            pivot = m[k][k]
            for i in range(k + 1, nrows):
                if not m[i][k].is_zero():
                    q, _ = laurent_divmod(m[i][k], pivot)
                    if not q.is_zero():
                        m[i] = [a - q * b for a, b in zip(m[i], m[k])]
            for j in range(k + 1, ncols):
                if not m[k][j].is_zero():
                    q, _ = laurent_divmod(m[k][j], pivot)
                    if not q.is_zero():
                        for row in m:
                            row[j] = row[j] - q * row[k]
            residue = None
            for i in range(k + 1, nrows):
                if not m[i][k].is_zero():
                    residue = ("row", i)
                    break
            if residue is None:
                for j in range(k + 1, ncols):
                    if not m[k][j].is_zero():
                        residue = ("col", j)
                        break
            if residue is None:
                pivot = m[k][k]
                bad = None
                for i in range(k + 1, nrows):
                    for j in range(k + 1, ncols):
                        if not laurent_divmod(m[i][j], pivot)[1].is_zero():
                            bad = i
                            break
                    if bad is not None:
                        break
                if bad is None:
                    break
                m[k] = [a + b for a, b in zip(m[k], m[bad])]
                continue
            kind, idx = residue
            if kind == "row":
                m[k], m[idx] = m[idx], m[k]
            else:
                for row in m:
                    row[k], row[idx] = row[idx], row[k]
        factors.append(m[k][k].monic_offset0())
        k += 1
    return tuple(factors), len(factors)
