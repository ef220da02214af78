"""Exact multivector arithmetic in real Clifford algebras Cl(p,q).

A basis blade is a bitmask over the n = p + q generators: bit (i - 1) is set
when the generator e_i is a factor, and factors always appear in increasing
index order.  A multivector is a sparse map from blade masks to exact
rational coefficients; nothing in this module touches floating point.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Union

MAX_DIMENSION = 12

# Reorder-sign tables take 4^n entries, so they are only precomputed for
# algebras up to this many generators; larger ones compute signs per pair.
_TABLE_MAX_N = 9

# Generator index i is printed as the single character _INDEX_CHARS[i - 1],
# which keeps the text grammar unambiguous up to n = 12.
_INDEX_CHARS = "123456789abc"

Rational = Union[int, Fraction]

_ZERO = Fraction(0)


class SignatureMismatchError(ValueError):
    """Raised when two operands live in different Clifford algebras."""


@dataclass(frozen=True, order=True)
class Signature:
    """Counts of generators squaring to +1 (p) and to -1 (q)."""

    p: int
    q: int

    def __post_init__(self) -> None:
        if self.p < 0 or self.q < 0:
            raise ValueError("signature counts must be nonnegative integers")
        if self.p + self.q > MAX_DIMENSION:
            raise ValueError(
                f"p + q = {self.p + self.q} exceeds the supported cap of {MAX_DIMENSION}"
            )

    @property
    def n(self) -> int:
        return self.p + self.q

    @property
    def dim(self) -> int:
        """Number of basis blades, 2**n."""
        return 1 << self.n

    def generator_square(self, i: int) -> int:
        """Square of e_i for a 1-based index i: +1 for i <= p, else -1."""
        if not 1 <= i <= self.n:
            raise ValueError(f"generator index {i} out of range for {self}")
        return 1 if i <= self.p else -1

    def scalar(self, value: Rational) -> "Multivector":
        return Multivector.from_terms(self, {0: value})

    def blade(self, mask: int, coeff: Rational = 1) -> "Multivector":
        return Multivector.from_terms(self, {mask: coeff})

    def e(self, *indices: int) -> "Multivector":
        """Product of generators in the given order, e.g. e(2, 1) == -e(1, 2)."""
        out = self.scalar(1)
        for i in indices:
            if not 1 <= i <= self.n:
                raise ValueError(f"generator index {i} out of range for {self}")
            out = out * self.blade(1 << (i - 1))
        return out

    def basis_blades(self) -> range:
        return range(self.dim)

    def __str__(self) -> str:
        return f"Cl({self.p},{self.q})"


def grade(mask: int) -> int:
    """Number of generator factors in a blade."""
    return mask.bit_count()


def _reorder_sign(a: int, b: int) -> int:
    # Adjacent transpositions needed to merge the factor lists of a and b,
    # counted through prefix popcounts.
    a >>= 1
    swaps = 0
    while a:
        swaps += (a & b).bit_count()
        a >>= 1
    return -1 if swaps & 1 else 1


@lru_cache(maxsize=None)
def _reorder_table(n: int) -> list[int]:
    # Signature-independent: the metric contribution is applied per pair.
    dim = 1 << n
    table = [1] * (dim * dim)
    for a in range(dim):
        base = a << n
        for b in range(dim):
            table[base | b] = _reorder_sign(a, b)
    return table


def blade_mul(a: int, b: int, sig: Signature) -> tuple[int, int]:
    """Product of two basis blades as ``(sign, mask)`` with ``mask = a ^ b``.

    The sign combines the transposition count needed to sort the concatenated
    factor list with one metric sign per repeated generator; the metric sign
    is -1 exactly for repeated generators of index above p.
    """
    dim = sig.dim
    if not (0 <= a < dim and 0 <= b < dim):
        raise ValueError(f"blade mask out of range for {sig}")
    sign = _reorder_sign(a, b)
    if ((a & b) >> sig.p).bit_count() & 1:
        sign = -sign
    return sign, a ^ b


def blade_square_sign(mask: int, sig: Signature) -> int:
    """Sign s with (e_mask)**2 == s * 1."""
    return blade_mul(mask, mask, sig)[0]


def blades_commute(a: int, b: int) -> bool:
    """Whether e_a e_b == e_b e_a; blades always either commute or anticommute.

    The answer does not depend on the metric: the repeated-generator signs are
    the same on both sides, so only the transposition counts matter.
    """
    return _reorder_sign(a, b) == _reorder_sign(b, a)


@dataclass(frozen=True)
class Multivector:
    """Sparse element of Cl(p,q): sorted, zero-free (mask, coefficient) pairs."""

    signature: Signature
    terms: tuple[tuple[int, Fraction], ...]

    @staticmethod
    def from_terms(
        sig: Signature,
        terms: Mapping[int, Rational] | Iterable[tuple[int, Rational]],
    ) -> "Multivector":
        acc: dict[int, Fraction] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for mask, coeff in items:
            if not 0 <= mask < sig.dim:
                raise ValueError(f"blade mask {mask} out of range for {sig}")
            c = Fraction(coeff)
            if c:
                acc[mask] = acc.get(mask, _ZERO) + c
        return Multivector(sig, tuple(sorted((m, c) for m, c in acc.items() if c)))

    def _check_same(self, other: "Multivector") -> None:
        if self.signature != other.signature:
            raise SignatureMismatchError(
                f"operands in {self.signature} and {other.signature}"
            )

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def coefficient(self, mask: int) -> Fraction:
        for m, c in self.terms:
            if m == mask:
                return c
            if m > mask:
                break
        return _ZERO

    def scalar_part(self) -> Fraction:
        if self.terms and self.terms[0][0] == 0:
            return self.terms[0][1]
        return _ZERO

    def __neg__(self) -> "Multivector":
        return Multivector(self.signature, tuple((m, -c) for m, c in self.terms))

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.signature.scalar(other)
        if not isinstance(other, Multivector):
            return NotImplemented
        self._check_same(other)
        acc = dict(self.terms)
        for m, c in other.terms:
            acc[m] = acc.get(m, _ZERO) + c
        return Multivector(self.signature, tuple(sorted((m, c) for m, c in acc.items() if c)))

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.signature.scalar(other)
        if not isinstance(other, Multivector):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            if not c:
                return Multivector(self.signature, ())
            return Multivector(self.signature, tuple((m, cc * c) for m, cc in self.terms))
        if not isinstance(other, Multivector):
            return NotImplemented
        self._check_same(other)
        sig = self.signature
        n = sig.n
        p = sig.p
        acc: dict[int, Fraction] = {}
        if n <= _TABLE_MAX_N:
            table = _reorder_table(n)
            for a, ca in self.terms:
                base = a << n
                for b, cb in other.terms:
                    s = table[base | b]
                    if ((a & b) >> p).bit_count() & 1:
                        s = -s
                    prod = ca * cb
                    if s < 0:
                        prod = -prod
                    m = a ^ b
                    cur = acc.get(m)
                    acc[m] = prod if cur is None else cur + prod
        else:
            for a, ca in self.terms:
                for b, cb in other.terms:
                    s = _reorder_sign(a, b)
                    if ((a & b) >> p).bit_count() & 1:
                        s = -s
                    prod = ca * cb
                    if s < 0:
                        prod = -prod
                    m = a ^ b
                    cur = acc.get(m)
                    acc[m] = prod if cur is None else cur + prod
        return Multivector(sig, tuple(sorted((m, c) for m, c in acc.items() if c)))

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (Fraction(1) / Fraction(other))
        return NotImplemented

    def square(self) -> "Multivector":
        return self * self

    def commutes_with(self, other: "Multivector") -> bool:
        return self * other == other * self

    def involute(self) -> "Multivector":
        """Grade involution: each grade-g term is scaled by (-1)**g."""
        return Multivector(
            self.signature,
            tuple((m, -c if grade(m) & 1 else c) for m, c in self.terms),
        )

    def masks(self) -> tuple[int, ...]:
        return tuple(m for m, _ in self.terms)

    def __str__(self) -> str:
        return format_multivector(self)


def grade_involution(u: Multivector) -> Multivector:
    return u.involute()


# ---------------------------------------------------------------------------
# text grammar


def blade_name(mask: int) -> str:
    """Index string of a blade: 'e0' is the scalar, 'e13' is e_1 e_3, and
    indices 10..12 print as a, b, c."""
    if mask == 0:
        return "0"
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(_INDEX_CHARS[i])
        mask >>= 1
        i += 1
    return "".join(out)


def format_multivector(u: Multivector) -> str:
    """Render as a signed sum of ``coeff*e{indices}`` terms, scalars bare."""
    if not u.terms:
        return "0"
    chunks = []
    for pos, (mask, c) in enumerate(u.terms):
        neg = c < 0
        mag = -c if neg else c
        body = str(mag) if mask == 0 else f"{mag}*e{blade_name(mask)}"
        if pos == 0:
            chunks.append(f"-{body}" if neg else body)
        else:
            chunks.append(f" - {body}" if neg else f" + {body}")
    return "".join(chunks)


_TERM_RE = re.compile(
    r"""\s*(?P<sign>[+-])?\s*
        (?:
            (?P<coeff>\d+(?:/\d+)?)\s*(?:\*\s*e(?P<idx1>0|[1-9a-c]+))?
          | e(?P<idx2>0|[1-9a-c]+)
        )""",
    re.VERBOSE,
)


def _mask_from_indices(text: str) -> int:
    if text == "0":
        return 0
    mask = 0
    prev = -1
    for ch in text:
        i = _INDEX_CHARS.index(ch)
        if i <= prev:
            raise ValueError(f"blade indices must strictly increase: e{text}")
        prev = i
        mask |= 1 << i
    return mask


def parse_multivector(sig: Signature, text: str) -> Multivector:
    """Parse the grammar produced by :func:`format_multivector`.

    Accepts ``1/2 + 1/2*e3``, bare blades like ``e12``, and ``e0`` or a bare
    rational for the scalar blade.  Round-trips exactly with the formatter.
    """
    stripped = text.strip()
    if stripped == "0":
        return Multivector(sig, ())
    terms: list[tuple[int, Fraction]] = []
    pos = 0
    first = True
    while pos < len(stripped):
        m = _TERM_RE.match(stripped, pos)
        if m is None or m.end() == pos:
            raise ValueError(f"cannot parse multivector at: {stripped[pos:]!r}")
        if not first and m.group("sign") is None:
            raise ValueError(f"missing sign between terms at: {stripped[pos:]!r}")
        sign = -1 if m.group("sign") == "-" else 1
        coeff = Fraction(m.group("coeff")) if m.group("coeff") else Fraction(1)
        idx = m.group("idx1") or m.group("idx2")
        mask = _mask_from_indices(idx) if idx is not None else 0
        if mask >= sig.dim:
            raise ValueError(f"blade e{idx} out of range for {sig}")
        terms.append((mask, sign * coeff))
        pos = m.end()
        first = False
    return Multivector.from_terms(sig, terms)


# ---------------------------------------------------------------------------
# JSON form


def multivector_to_json_dict(u: Multivector) -> dict:
    return {
        "p": u.signature.p,
        "q": u.signature.q,
        "terms": [
            {"mask": m, "num": str(c.numerator), "den": str(c.denominator)}
            for m, c in u.terms
        ],
    }


def multivector_from_json_dict(data: Mapping) -> Multivector:
    sig = Signature(int(data["p"]), int(data["q"]))
    terms = [
        (int(t["mask"]), Fraction(int(t["num"]), int(t["den"])))
        for t in data["terms"]
    ]
    return Multivector.from_terms(sig, terms)
