"""The commutant ring K = f Cl(p,q) f of an idempotent, with canonical units.

For a primitive idempotent f the commutant is a division ring isomorphic to
R, C, or H.  The construction is fully exact: imaginary units are found among
blade projections f e_A f and normalized only by rational factors, so unit
relations such as i**2 == -f hold on the nose.  When the commutant fails to
be a division ring of real dimension 1, 2, or 4, the search produces an exact
witness and f is reported as not primitive.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .core import Multivector, blade_square_sign, blades_commute
from .linalg import ExactSpan

KTYPE_BY_DIM = {1: "R", 2: "C", 4: "H"}

# A K-element is a coordinate tuple against DivisionRingBasis.units.
KElement = tuple

_ZERO = Fraction(0)
_ONE = Fraction(1)
_HALF = Fraction(1, 2)


class NotPrimitiveError(ValueError):
    """The commutant f Cl f is not a division ring of dimension 1, 2, or 4."""


class UnitConstructionError(RuntimeError):
    """No unit with square exactly -f is reachable by rational scaling."""


@dataclass(frozen=True)
class DivisionRingBasis:
    """Canonical units of K = f Cl f and their exact multiplication table.

    ``units[0]`` is always f itself (the unit of K); the remaining units
    square to -f and pairwise anticommute.  ``table[a][b]`` holds the
    coordinates of ``units[a] * units[b]`` over the units.
    """

    idempotent: Multivector
    units: tuple[Multivector, ...]
    ktype: str
    table: tuple[tuple[KElement, ...], ...]

    @property
    def dim(self) -> int:
        return len(self.units)

    def kzero(self) -> KElement:
        return (_ZERO,) * self.dim

    def kone(self) -> KElement:
        return (_ONE,) + (_ZERO,) * (self.dim - 1)

    def kadd(self, x: KElement, y: KElement) -> KElement:
        return tuple(a + b for a, b in zip(x, y))

    def kneg(self, x: KElement) -> KElement:
        return tuple(-a for a in x)

    def kscale(self, c: Fraction, x: KElement) -> KElement:
        return tuple(c * a for a in x)

    def kmul(self, x: KElement, y: KElement) -> KElement:
        out = [_ZERO] * self.dim
        for a, xa in enumerate(x):
            if not xa:
                continue
            row = self.table[a]
            for b, yb in enumerate(y):
                if not yb:
                    continue
                c = xa * yb
                for idx, t in enumerate(row[b]):
                    if t:
                        out[idx] += c * t
        return tuple(out)

    def element_coordinates(self, u: Multivector) -> KElement | None:
        """Coordinates of u over the units, or None when u is outside K."""
        span = ExactSpan()
        for idx, unit in enumerate(self.units):
            span.add(dict(unit.terms), idx)
        coords = span.coordinates(dict(u.terms))
        if coords is None:
            return None
        return tuple(coords.get(i, _ZERO) for i in range(self.dim))

    def element_from_coordinates(self, coords: KElement) -> Multivector:
        out = self.idempotent.signature.scalar(0)
        for c, unit in zip(coords, self.units):
            if c:
                out = out + unit * c
        return out


def _half_product_form(f: Multivector):
    """Recognize f as an expanded product of commuting factors (1 + s*e_m)/2.

    Such an f has 2^j terms with coefficients +-1/2^j whose masks form a
    GF(2)-closed set.  Returns (generator_masks, signs) or None; the
    recovered generators are checked to commute, square to +1, and reproduce
    f exactly, so a non-None result is trustworthy.
    """
    terms = f.terms
    count = len(terms)
    if count == 0 or count & (count - 1):
        return None
    j = count.bit_length() - 1
    if terms[0][0] != 0:
        return None
    unit_coeff = Fraction(1, 1 << j)
    masks = []
    for mask, coeff in terms:
        if coeff != unit_coeff and coeff != -unit_coeff:
            return None
        masks.append(mask)
    mask_set = set(masks)
    for x in masks:
        for y in masks:
            if x ^ y not in mask_set:
                return None
    basis: list[int] = []
    echelon: dict[int, int] = {}
    for m in masks:
        r = m
        while r:
            top = r.bit_length() - 1
            if top not in echelon:
                break
            r ^= echelon[top]
        if r:
            echelon[r.bit_length() - 1] = r
            basis.append(m)
    if len(basis) != j:
        return None
    sig = f.signature
    for pos, a in enumerate(basis):
        if blade_square_sign(a, sig) != 1:
            return None
        for b in basis[pos + 1 :]:
            if not blades_commute(a, b):
                return None
    coeffs = dict(terms)
    signs = tuple(1 if coeffs[m] > 0 else -1 for m in basis)
    rebuilt = sig.scalar(1)
    for m, s in zip(basis, signs):
        rebuilt = rebuilt * ((sig.scalar(1) + sig.blade(m, s)) * _HALF)
    if rebuilt != f:
        return None
    return tuple(basis), signs


def _projections_general(f: Multivector) -> list[tuple[int, Multivector]]:
    sig = f.signature
    out = []
    for mask in range(sig.dim):
        v = (f * sig.blade(mask)) * f
        if not v.is_zero():
            out.append((mask, v))
    return out


def sandwich_projections(f: Multivector) -> list[tuple[int, Multivector]]:
    """Nonzero values of f e_A f for every blade A, in ascending mask order.

    When f is an expanded half-sum product, f e_A f equals e_A f for blades
    commuting with every product generator and vanishes otherwise, which
    avoids the full quadratic sweep.
    """
    form = _half_product_form(f)
    if form is None:
        return _projections_general(f)
    gens, _ = form
    sig = f.signature
    out = []
    for mask in range(sig.dim):
        if all(blades_commute(mask, g) for g in gens):
            out.append((mask, sig.blade(mask) * f))
    return out


def _rational_sqrt(x: Fraction) -> Fraction | None:
    if x <= 0:
        return None
    num = math.isqrt(x.numerator)
    den = math.isqrt(x.denominator)
    if num * num == x.numerator and den * den == x.denominator:
        return Fraction(num, den)
    return None


def _scalar_multiple_of(f: Multivector, u: Multivector) -> Fraction | None:
    """c with u == c * f, or None when u is not a rational multiple of f."""
    if u.is_zero():
        return _ZERO
    lead_mask, lead_coeff = f.terms[0]
    c = u.coefficient(lead_mask) / lead_coeff
    if c and f * c == u:
        return c
    return None


def _orthogonalized(
    f: Multivector, imaginary: list[Multivector], v: Multivector
) -> Multivector | None:
    """Trace-free part of v made anticommuting with the chosen imaginary units.

    Solves v**2 = alpha*f + beta*v to strip the trace, then corrects against
    each existing unit u via the symmetric product u*w + w*u = tau*f.  Returns
    None when v does not behave quadratically over f (impossible inside a
    division ring, so the caller just skips such candidates).
    """
    span = ExactSpan()
    span.add(dict(f.terms), "f")
    span.add(dict(v.terms), "v")
    coords = span.coordinates(dict((v * v).terms))
    if coords is None:
        return None
    beta = coords.get("v", _ZERO)
    w = v - f * (beta / 2)
    for u in imaginary:
        tau = _scalar_multiple_of(f, u * w + w * u)
        if tau is None:
            return None
        if tau:
            w = w + u * (tau / 2)
    return w


def _classify_square(f: Multivector, w: Multivector) -> Fraction | None:
    """c with w**2 == c * f; raises NotPrimitiveError for c >= 0 witnesses."""
    c = _scalar_multiple_of(f, w * w)
    if c is None:
        return None
    if c == 0:
        raise NotPrimitiveError(
            f"nilpotent element in f Cl f: ({w})**2 == 0 with w != 0"
        )
    if c > 0:
        raise NotPrimitiveError(
            f"zero divisors in f Cl f: ({w})**2 == {c} * f with positive square"
        )
    return c


def _search_unit(
    f: Multivector,
    candidates: list[tuple[int, Multivector]],
    imaginary: list[Multivector],
) -> Multivector:
    """First projection candidate normalizable to a unit with square -f.

    Candidates already spanned by f and the existing units are skipped.  A
    candidate whose trace-free part squares to a nonnegative multiple of f is
    an exact witness against primitivity.  Trace-free parts whose square is a
    negative non-square rational are kept and retried in small integer
    combinations before giving up.
    """
    base = ExactSpan()
    base.add(dict(f.terms), "f")
    for idx, u in enumerate(imaginary):
        base.add(dict(u.terms), idx)
    leftovers: list[Multivector] = []
    for _, v in candidates:
        if base.contains(dict(v.terms)):
            continue
        w = _orthogonalized(f, imaginary, v)
        if w is None:
            continue
        c = _classify_square(f, w)
        if c is None:
            continue
        root = _rational_sqrt(-c)
        if root is not None:
            return w * (_ONE / root)
        leftovers.append(w)
    for ia in range(len(leftovers)):
        for ib in range(ia + 1, len(leftovers)):
            for x in (1, 2, 3):
                for y in (-3, -2, -1, 1, 2, 3):
                    w = leftovers[ia] * x + leftovers[ib] * y
                    if w.is_zero():
                        continue
                    c = _classify_square(f, w)
                    if c is None:
                        continue
                    root = _rational_sqrt(-c)
                    if root is not None:
                        return w * (_ONE / root)
    raise UnitConstructionError(
        "no element with square exactly -f is reachable by rational scaling"
    )


def _unit_table(units: list[Multivector]) -> tuple:
    span = ExactSpan()
    for idx, u in enumerate(units):
        if not span.add(dict(u.terms), idx):
            raise UnitConstructionError("constructed units are not independent")
    d = len(units)
    rows = []
    for a in units:
        row = []
        for b in units:
            coords = span.coordinates(dict((a * b).terms))
            if coords is None:
                raise UnitConstructionError("unit products leave the unit span")
            row.append(tuple(coords.get(i, _ZERO) for i in range(d)))
        rows.append(tuple(row))
    return tuple(rows)


def _validate_units(basis: DivisionRingBasis) -> None:
    f = basis.idempotent
    for u in basis.units:
        if f * u != u or u * f != u:
            raise UnitConstructionError("unit is not reproduced by f on both sides")
    if basis.dim >= 2:
        i = basis.units[1]
        if i * i != -f:
            raise UnitConstructionError("i**2 != -f")
    if basis.dim == 4:
        i, j, k = basis.units[1], basis.units[2], basis.units[3]
        relations = (
            j * j == -f,
            k * k == -f,
            i * j == k,
            j * i == -k,
            j * k == i,
            k * j == -i,
            k * i == j,
            i * k == -j,
        )
        if not all(relations):
            raise UnitConstructionError("quaternion unit relations failed")


def division_ring_basis(f: Multivector) -> DivisionRingBasis:
    """Canonical R-basis of K = f Cl f with exact unit relations.

    Raises NotPrimitiveError when K fails to be a division ring of real
    dimension 1, 2, or 4, which is exactly the primitivity criterion for f.
    """
    if f.is_zero():
        raise ValueError("f must be a nonzero idempotent")
    if f * f != f:
        raise ValueError("f is not idempotent")
    candidates = sandwich_projections(f)
    span = ExactSpan()
    for mask, v in candidates:
        span.add(dict(v.terms), mask)
        if span.rank > 4:
            raise NotPrimitiveError("f Cl f has dimension greater than 4")
    d = span.rank
    if d not in KTYPE_BY_DIM:
        raise NotPrimitiveError(f"f Cl f has dimension {d}, not 1, 2, or 4")
    units = [f]
    if d >= 2:
        units.append(_search_unit(f, candidates, []))
    if d == 4:
        j = _search_unit(f, candidates, [units[1]])
        units.append(j)
        units.append(units[1] * j)
    basis = DivisionRingBasis(f, tuple(units), KTYPE_BY_DIM[d], _unit_table(units))
    _validate_units(basis)
    return basis
