from fractions import Fraction

import pytest

from cliffstruct import (
    Signature,
    center_basis,
    central_idempotents,
    classify,
    complete_set,
    find_frame,
    is_idempotent,
    is_primitive,
    primitive_idempotent,
)
from cliffstruct.idempotents import MonomialFrame, sign_vectors

HALF = Fraction(1, 2)


def all_signatures(max_n):
    for n in range(max_n + 1):
        for p in range(n + 1):
            yield Signature(p, n - p)


def test_find_frame_trivial_cases():
    assert find_frame(Signature(0, 0)).monomials == ()
    assert find_frame(Signature(0, 2)).monomials == ()


def test_find_frame_spot_cases():
    assert find_frame(Signature(1, 1)).monomials == (0b01,)
    assert find_frame(Signature(3, 0)).monomials == (0b001,)
    assert find_frame(Signature(0, 3)).monomials == (0b111,)


def test_find_frame_invariants_sweep():
    from cliffstruct import blade_square_sign, blades_commute

    for sig in all_signatures(6):
        frame = find_frame(sig)
        cls = classify(sig)
        assert frame.k == cls.k
        masks = frame.monomials
        assert list(masks) == sorted(masks)
        for i, a in enumerate(masks):
            assert blade_square_sign(a, sig) == 1
            for b in masks[i + 1 :]:
                assert blades_commute(a, b)
        # all 2^k subset products are distinct blades
        seen = set()
        for bits in range(1 << frame.k):
            x = 0
            for i in range(frame.k):
                if bits >> i & 1:
                    x ^= masks[i]
            assert x not in seen
            seen.add(x)
        # subset products all square to +1 (the generated group avoids -1)
        for x in seen:
            assert blade_square_sign(x, sig) == 1


def test_semisimple_frames_admit_the_split():
    for sig in all_signatures(7):
        if classify(sig).simple:
            continue
        frame = find_frame(sig)
        f = primitive_idempotent(frame, (1,) * frame.k)
        assert (f.involute() * f).is_zero()


def test_primitive_idempotent_examples():
    sig = Signature(1, 1)
    frame = find_frame(sig)
    f = primitive_idempotent(frame, (1,))
    assert f == (sig.scalar(1) + sig.e(1)) * HALF
    empty = find_frame(Signature(0, 2))
    assert primitive_idempotent(empty, ()) == Signature(0, 2).scalar(1)


def test_primitive_idempotent_expansion_shape():
    sig = Signature(3, 1)
    frame = find_frame(sig)
    assert frame.k == 2
    f = primitive_idempotent(frame, (1, 1))
    assert len(f.terms) == 4
    assert all(abs(c) == Fraction(1, 4) for _, c in f.terms)
    assert f * f == f


def test_primitive_idempotent_sign_validation():
    frame = find_frame(Signature(1, 1))
    with pytest.raises(ValueError):
        primitive_idempotent(frame, (1, 1))
    with pytest.raises(ValueError):
        primitive_idempotent(frame, (2,))


def test_complete_set_examples():
    sig = Signature(1, 0)
    result = complete_set(find_frame(sig))
    one = sig.scalar(1)
    e1 = sig.e(1)
    assert result.idempotents == ((one + e1) * HALF, (one - e1) * HALF)
    assert result.signs == ((1,), (-1,))

    trivial = complete_set(find_frame(Signature(0, 2)))
    assert trivial.idempotents == (Signature(0, 2).scalar(1),)


def test_complete_set_invariants_sweep():
    for sig in all_signatures(5):
        result = complete_set(find_frame(sig))
        k = result.frame.k
        assert len(result.idempotents) == 1 << k
        total = sig.scalar(0)
        for f in result.idempotents:
            assert f * f == f
            total = total + f
        assert total == sig.scalar(1)
        for a in range(len(result.idempotents)):
            for b in range(a + 1, len(result.idempotents)):
                assert (result.idempotents[a] * result.idempotents[b]).is_zero()


def test_sign_vector_order():
    assert sign_vectors(2) == ((1, 1), (1, -1), (-1, 1), (-1, -1))


def test_is_idempotent():
    sig = Signature(1, 0)
    assert is_idempotent(sig.scalar(1))
    assert is_idempotent((sig.scalar(1) + sig.e(1)) * HALF)
    assert not is_idempotent(sig.e(1) * 3)


def test_is_primitive_spec_examples():
    assert is_primitive(Signature(0, 2).scalar(1))
    assert not is_primitive(Signature(1, 0).scalar(1))
    sig = Signature(1, 1)
    assert is_primitive((sig.scalar(1) + sig.e(1)) * HALF)
    with pytest.raises(ValueError):
        is_primitive(sig.scalar(0))
    assert not is_primitive(sig.e(1))  # not even idempotent


def test_unity_not_primitive_once_k_positive():
    for sig in all_signatures(4):
        one = sig.scalar(1)
        if classify(sig).k == 0:
            assert is_primitive(one)
        else:
            assert not is_primitive(one)


def test_dropping_any_factor_breaks_primitivity():
    sig = Signature(3, 1)
    frame = find_frame(sig)
    for drop in range(frame.k):
        kept = tuple(m for i, m in enumerate(frame.monomials) if i != drop)
        shorter = MonomialFrame(sig, kept)
        g = primitive_idempotent(shorter, (1,) * (frame.k - 1))
        assert g * g == g
        assert not is_primitive(g)


def test_dropping_last_factor_sweep():
    for sig in all_signatures(5):
        frame = find_frame(sig)
        if frame.k == 0:
            continue
        shorter = MonomialFrame(sig, frame.monomials[:-1])
        g = primitive_idempotent(shorter, (1,) * (frame.k - 1))
        assert not is_primitive(g)


def test_involution_maps_idempotent_set_to_idempotent_set():
    for sig in all_signatures(4):
        result = complete_set(find_frame(sig))
        for f in result.idempotents:
            fh = f.involute()
            assert fh * fh == fh
            assert is_primitive(fh)


def test_central_idempotents_examples():
    sig = Signature(1, 0)
    c1, c2 = central_idempotents(sig)
    assert c1 == (sig.scalar(1) + sig.e(1)) * HALF
    assert c2 == (sig.scalar(1) - sig.e(1)) * HALF

    sig = Signature(0, 3)
    c1, c2 = central_idempotents(sig)
    assert c1 == (sig.scalar(1) + sig.e(1, 2, 3)) * HALF
    assert c1 + c2 == sig.scalar(1)
    assert (c1 * c2).is_zero() and (c2 * c1).is_zero()
    for c in (c1, c2):
        assert c * c == c
        for i in range(1, 4):
            assert c.commutes_with(sig.e(i))


def test_central_idempotents_rejects_simple():
    with pytest.raises(ValueError):
        central_idempotents(Signature(3, 0))


def test_center_basis_examples():
    sig = Signature(2, 0)
    assert center_basis(sig) == [sig.scalar(1)]
    sig = Signature(1, 0)
    assert center_basis(sig) == [sig.scalar(1), sig.e(1)]
    sig = Signature(0, 0)
    assert center_basis(sig) == [sig.scalar(1)]


def test_center_dimension_follows_parity():
    # dimension 2 exactly when the pseudoscalar is central (n odd); this
    # includes simple algebras with K = C such as Cl(3,0).
    for sig in all_signatures(6):
        basis = center_basis(sig)
        expected = 2 if sig.n % 2 else 1
        assert len(basis) == expected
        assert basis[0] == sig.scalar(1)
        if expected == 2:
            assert basis[1] == sig.blade(sig.dim - 1)
        for z in basis:
            for i in range(1, sig.n + 1):
                assert z.commutes_with(sig.e(i))
