"""Spinor bases of minimal left ideals and exact matrices over K.

The left ideal S = Cl(p,q) f of a primitive idempotent f is a right module
over K = f Cl f, and the action u s_t = sum_i s_i lambda_it defines the
matrix of u with entries lambda_it in K.  Keeping the K-scalars on the right
of the basis spinors is what makes u -> gamma(u) a homomorphism when K is
noncommutative.  Semisimple algebras get a pair of matrices, one for S and
one for its grade-involution image.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Mapping

from .classify import AlgebraClass, classify
from .core import (
    Multivector,
    Signature,
    SignatureMismatchError,
    grade,
    multivector_from_json_dict,
    multivector_to_json_dict,
)
from .division import KTYPE_BY_DIM, DivisionRingBasis, KElement, division_ring_basis
from .idempotents import MonomialFrame, find_frame, primitive_idempotent
from .linalg import ExactSpan

_ZERO = Fraction(0)
_ONE = Fraction(1)


class RepresentationError(RuntimeError):
    """A structural defect while building or applying a representation."""


@dataclass(frozen=True)
class SpinorBasis:
    """Right-K basis s_1..s_N of Cl(p,q) f with s_t = blade_signs[t] * e_A f."""

    idempotent: Multivector
    blades: tuple[int, ...]
    blade_signs: tuple[int, ...]
    elements: tuple[Multivector, ...]

    @property
    def size(self) -> int:
        return len(self.elements)


@dataclass(frozen=True)
class KMatrix:
    """Matrix with entries in K, stored as coordinate tuples over the units.

    Entries multiply in order (left factor's entries stay on the left), which
    matters for quaternionic K.
    """

    basis: DivisionRingBasis
    entries: tuple[tuple[KElement, ...], ...]

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0]) if self.entries else 0

    @staticmethod
    def identity(kb: DivisionRingBasis, size: int) -> "KMatrix":
        return KMatrix.scalar_matrix(kb, size, _ONE)

    @staticmethod
    def scalar_matrix(kb: DivisionRingBasis, size: int, value: Fraction) -> "KMatrix":
        diag = (Fraction(value),) + (_ZERO,) * (kb.dim - 1)
        zero = kb.kzero()
        return KMatrix(
            kb,
            tuple(
                tuple(diag if i == t else zero for t in range(size))
                for i in range(size)
            ),
        )

    def _check_compatible(self, other: "KMatrix", need_square: bool = False) -> None:
        if self.basis != other.basis:
            raise ValueError("matrices are over different unit bases")
        if need_square and self.cols != other.rows:
            raise ValueError(f"shape mismatch: {self.cols} columns vs {other.rows} rows")

    def __matmul__(self, other):
        if not isinstance(other, KMatrix):
            return NotImplemented
        self._check_compatible(other, need_square=True)
        kb = self.basis
        d = kb.dim
        zero = kb.kzero()
        # Generator images are monomial-like, so skipping zero entries turns
        # the cubic dense loop into a near-linear sparse one.
        sparse_b = [
            [(t, y) for t, y in enumerate(row) if any(y)] for row in other.entries
        ]
        out = []
        for row_a in self.entries:
            accs: list[list | None] = [None] * other.cols
            for m, x in enumerate(row_a):
                if not any(x):
                    continue
                for t, y in sparse_b[m]:
                    prod = kb.kmul(x, y)
                    acc = accs[t]
                    if acc is None:
                        accs[t] = list(prod)
                    else:
                        for idx in range(d):
                            if prod[idx]:
                                acc[idx] += prod[idx]
            out.append(
                tuple(zero if acc is None else tuple(acc) for acc in accs)
            )
        return KMatrix(kb, tuple(out))

    def __add__(self, other):
        if not isinstance(other, KMatrix):
            return NotImplemented
        self._check_compatible(other)
        if self.rows != other.rows or self.cols != other.cols:
            raise ValueError("shape mismatch in matrix addition")
        kb = self.basis
        return KMatrix(
            kb,
            tuple(
                tuple(kb.kadd(a, b) for a, b in zip(ra, rb))
                for ra, rb in zip(self.entries, other.entries)
            ),
        )

    def __neg__(self):
        kb = self.basis
        return KMatrix(
            kb, tuple(tuple(kb.kneg(e) for e in row) for row in self.entries)
        )

    def scale_right(self, mu: KElement) -> "KMatrix":
        """Entrywise right multiplication by mu (the right K-action)."""
        kb = self.basis
        return KMatrix(
            kb, tuple(tuple(kb.kmul(e, mu) for e in row) for row in self.entries)
        )


def kmatrix_mul(a: KMatrix, b: KMatrix) -> KMatrix:
    return a @ b


def kmatrix_add(a: KMatrix, b: KMatrix) -> KMatrix:
    return a + b


def kmatrix_eq(a: KMatrix, b: KMatrix) -> bool:
    a._check_compatible(b)
    if a.rows != b.rows or a.cols != b.cols:
        raise ValueError("shape mismatch in matrix comparison")
    return a.entries == b.entries


@dataclass(frozen=True)
class Component:
    """One simple block: division ring, spinor basis, generator matrices."""

    kbasis: DivisionRingBasis
    basis: SpinorBasis
    gammas: tuple[KMatrix, ...]


@dataclass(frozen=True)
class Representation:
    signature: Signature
    algebra_class: AlgebraClass
    frame: MonomialFrame
    components: tuple[Component, ...]

    @property
    def simple(self) -> bool:
        return self.algebra_class.simple


def spinor_basis(f: Multivector, kb: DivisionRingBasis) -> SpinorBasis:
    """Greedy blade scan for a right-K basis of the left ideal Cl(p,q) f.

    e_A f is appended whenever it is R-independent of the right-K span of the
    elements already chosen; scanning every blade guarantees the final span
    is the whole ideal, and each chosen element must contribute dim(K) fresh
    R-dimensions for S to be a free right K-module.
    """
    sig = f.signature
    span = ExactSpan()
    blades: list[int] = []
    elements: list[Multivector] = []
    for mask in range(sig.dim):
        v = sig.blade(mask) * f
        if span.contains(dict(v.terms)):
            continue
        t = len(elements)
        blades.append(mask)
        elements.append(v)
        added = 0
        for j, unit in enumerate(kb.units):
            if span.add(dict((v * unit).terms), (t, j)):
                added += 1
        if added != kb.dim:
            raise RepresentationError(
                f"spinor span deficiency at blade {mask}: {added} < {kb.dim}"
            )
    return SpinorBasis(
        f, tuple(blades), (1,) * len(blades), tuple(elements)
    )


@lru_cache(maxsize=128)
def _solver(kb: DivisionRingBasis, sb: SpinorBasis) -> ExactSpan:
    span = ExactSpan()
    for t, s in enumerate(sb.elements):
        for j, unit in enumerate(kb.units):
            span.add(dict((s * unit).terms), (t, j))
    return span


def spinor_coordinates(
    kb: DivisionRingBasis, sb: SpinorBasis, psi: Multivector
) -> tuple[KElement, ...] | None:
    """K-coordinates of psi over the spinor basis, or None if psi is not in S."""
    coords = _solver(kb, sb).coordinates(dict(psi.terms))
    if coords is None:
        return None
    return tuple(
        tuple(coords.get((t, j), _ZERO) for j in range(kb.dim))
        for t in range(sb.size)
    )


def _matrix_of(u: Multivector, kb: DivisionRingBasis, sb: SpinorBasis) -> KMatrix:
    span = _solver(kb, sb)
    d = kb.dim
    size = sb.size
    columns = []
    for s in sb.elements:
        coords = span.coordinates(dict((u * s).terms))
        if coords is None:
            raise RepresentationError("product left the spinor ideal")
        columns.append(
            [tuple(coords.get((i, j), _ZERO) for j in range(d)) for i in range(size)]
        )
    entries = tuple(
        tuple(columns[t][i] for t in range(size)) for i in range(size)
    )
    return KMatrix(kb, entries)


def represent(u: Multivector, rep: Representation) -> KMatrix:
    """Matrix of u on the spinor basis: u s_t = sum_i s_i * entry[i][t]."""
    if u.signature != rep.signature:
        raise SignatureMismatchError(f"{u.signature} vs {rep.signature}")
    if not rep.simple:
        raise ValueError("semisimple algebras are handled by represent_semisimple")
    comp = rep.components[0]
    return _matrix_of(u, comp.kbasis, comp.basis)


def represent_semisimple(
    u: Multivector, rep: Representation
) -> tuple[KMatrix, KMatrix]:
    """Pair of matrices of u on S and on its grade-involution image."""
    if u.signature != rep.signature:
        raise SignatureMismatchError(f"{u.signature} vs {rep.signature}")
    if rep.simple:
        raise ValueError("simple algebras are handled by represent")
    return tuple(
        _matrix_of(u, comp.kbasis, comp.basis) for comp in rep.components
    )


def _component(sig: Signature, kb: DivisionRingBasis, sb: SpinorBasis) -> Component:
    gammas = tuple(
        _matrix_of(sig.blade(1 << i), kb, sb) for i in range(sig.n)
    )
    return Component(kb, sb, gammas)


def build_representation(sig: Signature) -> Representation:
    """Full pipeline: frame, idempotent, division ring, basis, matrices."""
    cls = classify(sig)
    frame = find_frame(sig)
    f = primitive_idempotent(frame, (1,) * frame.k)
    kb = division_ring_basis(f)
    sb = spinor_basis(f, kb)
    components = [_component(sig, kb, sb)]
    if not cls.simple:
        # The second half-spinor space is the grade-involution image of the
        # first, so gamma_2(u) equals gamma_1(involute(u)) by construction.
        fh = f.involute()
        kb2 = DivisionRingBasis(
            fh,
            tuple(u.involute() for u in kb.units),
            kb.ktype,
            kb.table,
        )
        sb2 = SpinorBasis(
            fh,
            sb.blades,
            tuple(-1 if grade(m) & 1 else 1 for m in sb.blades),
            tuple(s.involute() for s in sb.elements),
        )
        components.append(_component(sig, kb2, sb2))
    if (
        len(components) != cls.components
        or sb.size != cls.matrix_size
        or kb.ktype != cls.ktype
    ):
        raise RepresentationError(
            f"constructed representation disagrees with the classification of {sig}"
        )
    return Representation(sig, cls, frame, tuple(components))


# ---------------------------------------------------------------------------
# JSON interchange


def _fraction_str(c: Fraction) -> str:
    return str(c)


def _kelement_json(x: KElement) -> list[str]:
    return [_fraction_str(c) for c in x]


def _kelement_from_json(data) -> KElement:
    return tuple(Fraction(s) for s in data)


def representation_to_json_dict(rep: Representation) -> dict:
    return {
        "p": rep.signature.p,
        "q": rep.signature.q,
        "class": rep.algebra_class.to_json_dict(),
        "frame": list(rep.frame.monomials),
        "components": [
            {
                "idempotent": multivector_to_json_dict(comp.basis.idempotent),
                "units": [multivector_to_json_dict(u) for u in comp.kbasis.units],
                "unit_table": [
                    [_kelement_json(entry) for entry in row]
                    for row in comp.kbasis.table
                ],
                "spinor_blades": list(comp.basis.blades),
                "spinor_blade_signs": list(comp.basis.blade_signs),
                "gammas": [
                    [[_kelement_json(entry) for entry in row] for row in g.entries]
                    for g in comp.gammas
                ],
            }
            for comp in rep.components
        ],
    }


def representation_from_json_dict(data: Mapping) -> Representation:
    """Rebuild a representation from its dump without recomputing anything
    that the dump pins down, so re-verification sees exactly the dumped data."""
    sig = Signature(int(data["p"]), int(data["q"]))
    cls = classify(sig)
    frame = MonomialFrame(sig, tuple(int(m) for m in data["frame"]))
    components = []
    for comp in data["components"]:
        f = multivector_from_json_dict(comp["idempotent"])
        units = tuple(multivector_from_json_dict(u) for u in comp["units"])
        table = tuple(
            tuple(_kelement_from_json(entry) for entry in row)
            for row in comp["unit_table"]
        )
        kb = DivisionRingBasis(f, units, KTYPE_BY_DIM[len(units)], table)
        blades = tuple(int(m) for m in comp["spinor_blades"])
        signs = tuple(int(s) for s in comp["spinor_blade_signs"])
        elements = tuple(
            sig.blade(mask, s) * f for mask, s in zip(blades, signs)
        )
        sb = SpinorBasis(f, blades, signs, elements)
        gammas = tuple(
            KMatrix(
                kb,
                tuple(
                    tuple(_kelement_from_json(entry) for entry in row)
                    for row in g
                ),
            )
            for g in comp["gammas"]
        )
        components.append(Component(kb, sb, gammas))
    return Representation(sig, cls, frame, tuple(components))


# ---------------------------------------------------------------------------
# text rendering

_UNIT_NAMES = {1: ("1",), 2: ("1", "i"), 4: ("1", "i", "j", "k")}


def format_kelement(kb: DivisionRingBasis, x: KElement) -> str:
    names = _UNIT_NAMES[kb.dim]
    chunks = []
    for c, name in zip(x, names):
        if not c:
            continue
        neg = c < 0
        mag = -c if neg else c
        if name == "1":
            body = str(mag)
        elif mag == 1:
            body = name
        else:
            body = f"{mag}*{name}"
        if not chunks:
            chunks.append(f"-{body}" if neg else body)
        else:
            chunks.append(f" - {body}" if neg else f" + {body}")
    return "".join(chunks) if chunks else "0"


def format_kmatrix(mat: KMatrix) -> str:
    cells = [
        [format_kelement(mat.basis, entry) for entry in row] for row in mat.entries
    ]
    widths = [
        max(len(cells[i][t]) for i in range(mat.rows)) for t in range(mat.cols)
    ]
    lines = []
    for row in cells:
        padded = [cell.rjust(w) for cell, w in zip(row, widths)]
        lines.append("[ " + "  ".join(padded) + " ]")
    return "\n".join(lines)
