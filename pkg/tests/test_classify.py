import pytest

from cliffstruct import (
    K_DIMENSION,
    Signature,
    classification_table,
    classify,
    radon_hurwitz,
    render_table_text,
    table_json,
)


def test_radon_hurwitz_base_values():
    assert [radon_hurwitz(i) for i in range(8)] == [0, 1, 2, 2, 3, 3, 3, 3]


def test_radon_hurwitz_extension():
    assert radon_hurwitz(9) == 5
    assert radon_hurwitz(-3) == -1
    for i in range(-40, 40):
        assert radon_hurwitz(i + 8) == radon_hurwitz(i) + 4


@pytest.mark.parametrize(
    "p,q,simple,ktype,k,size,components",
    [
        (0, 0, True, "R", 0, 1, 1),
        (3, 0, True, "C", 1, 2, 1),
        (1, 0, False, "R", 1, 1, 2),
        (1, 3, True, "H", 1, 2, 1),
        (0, 2, True, "H", 0, 1, 1),
        (3, 1, True, "R", 2, 4, 1),
        (0, 1, True, "C", 0, 1, 1),
        (1, 1, True, "R", 1, 2, 1),
        (2, 0, True, "R", 1, 2, 1),
        (0, 3, False, "H", 1, 1, 2),
    ],
)
def test_classify_spot_values(p, q, simple, ktype, k, size, components):
    cls = classify(Signature(p, q))
    assert (cls.simple, cls.ktype, cls.k, cls.matrix_size, cls.components) == (
        simple,
        ktype,
        k,
        size,
        components,
    )


def test_dimension_identity_full_range():
    for n in range(13):
        for p in range(n + 1):
            sig = Signature(p, n - p)
            cls = classify(sig)
            assert (
                sig.dim
                == cls.components * cls.matrix_size**2 * K_DIMENSION[cls.ktype]
            )


def test_simplicity_rule():
    for n in range(13):
        for p in range(n + 1):
            sig = Signature(p, n - p)
            assert classify(sig).simple == ((p - (n - p)) % 4 != 1)


def test_mod8_periodicity():
    for n in range(5):
        for p in range(n + 1):
            base = classify(Signature(p, n - p))
            shifted = classify(Signature(p + 8, n - p))
            assert shifted.ktype == base.ktype
            assert shifted.components == base.components
            assert shifted.matrix_size == base.matrix_size * 16
            if n + 8 <= 12 - p:
                shifted_q = classify(Signature(p, n - p + 8))
                assert shifted_q.ktype == base.ktype
                assert shifted_q.matrix_size == base.matrix_size * 16


def test_table_contents_and_order():
    t0 = classification_table(0)
    assert len(t0) == 1 and t0[0].matrix_algebra() == "Mat(1,R)"
    t1 = classification_table(1)
    assert [(e.signature.p, e.signature.q) for e in t1] == [(0, 0), (0, 1), (1, 0)]
    assert t1[1].matrix_algebra() == "Mat(1,C)"
    assert t1[2].matrix_algebra() == "Mat(1,R) ⊕ Mat(1,R)"
    t2 = classification_table(2)
    assert len(t2) == 6
    by_sig = {(e.signature.p, e.signature.q): e for e in t2}
    assert by_sig[(1, 1)].matrix_algebra() == "Mat(2,R)"
    assert by_sig[(2, 0)].matrix_algebra() == "Mat(2,R)"


def test_table_cap():
    with pytest.raises(ValueError):
        classification_table(13)
    with pytest.raises(ValueError):
        classification_table(-1)


def test_table_renderers():
    entries = classification_table(2)
    text = render_table_text(entries)
    assert len(text.splitlines()) == 7  # header + 6 rows
    data = table_json(entries)
    assert data[0] == {
        "p": 0,
        "q": 0,
        "simple": True,
        "K": "R",
        "k": 0,
        "N": 1,
        "components": 1,
    }


def test_describe():
    assert classify(Signature(3, 0)).describe() == "Cl(3,0) ≅ Mat(2,C), simple, k=1"
