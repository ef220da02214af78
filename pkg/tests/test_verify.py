import json
from fractions import Fraction

import pytest

from cliffstruct import (
    Signature,
    SignatureMismatchError,
    brute_force_minimal_ideal_dim,
    build_representation,
    find_frame,
    primitive_idempotent,
    representation_from_json_dict,
    representation_to_json_dict,
    verify_range,
    verify_representation,
    verify_signature,
)

HALF = Fraction(1, 2)


def test_brute_force_ideal_dims():
    sig = Signature(1, 0)
    f = (sig.scalar(1) + sig.e(1)) * HALF
    assert brute_force_minimal_ideal_dim(sig, f) == 1

    sig = Signature(0, 2)
    assert brute_force_minimal_ideal_dim(sig, sig.scalar(1)) == 4

    sig = Signature(3, 0)
    f = (sig.scalar(1) + sig.e(1)) * HALF
    assert brute_force_minimal_ideal_dim(sig, f) == 4


def test_brute_force_signature_check():
    with pytest.raises(SignatureMismatchError):
        brute_force_minimal_ideal_dim(Signature(1, 0), Signature(0, 1).scalar(1))


def test_ideal_dim_matches_formula():
    for n in range(5):
        for p in range(n + 1):
            sig = Signature(p, n - p)
            frame = find_frame(sig)
            f = primitive_idempotent(frame, (1,) * frame.k)
            assert brute_force_minimal_ideal_dim(sig, f) == sig.dim >> frame.k


def test_verify_signature_trivial():
    report = verify_signature(Signature(0, 0))
    assert report.passed
    assert {c.check_id for c in report.checks} >= {
        "class.dimension_identity",
        "idem.primitive",
        "repr.faithful_rank",
        "center.dimension",
    }


def test_verify_signature_pauli_case():
    report = verify_signature(Signature(3, 0))
    assert report.passed
    ids = [c.check_id for c in report.checks]
    assert "semi.split" not in ids


def test_verify_signature_semisimple_case():
    report = verify_signature(Signature(1, 0))
    assert report.passed
    ids = [c.check_id for c in report.checks]
    assert "semi.split" in ids


def test_verify_range_small():
    summary = verify_range(3)
    assert summary.signatures == 10
    assert summary.failure_count == 0
    assert summary.passed
    sigs = [(r.signature.p, r.signature.q) for r in summary.reports]
    assert sigs == sorted(sigs, key=lambda pq: (pq[0] + pq[1], pq[0]))


def test_report_json_shape():
    report = verify_signature(Signature(1, 1))
    data = report.to_json_dict()
    assert data["p"] == 1 and data["q"] == 1
    for entry in data["checks"]:
        assert set(entry) <= {"id", "pass", "witness"}
        assert isinstance(entry["pass"], bool)
    json.dumps(data)  # witnesses must be serializable


def test_witnesses_serializable_on_failure():
    rep = build_representation(Signature(1, 1))
    data = representation_to_json_dict(rep)
    # corrupt one gamma entry: gamma(e1)[0][0] becomes 7
    data["components"][0]["gammas"][0][0][0] = ["7"]
    broken = representation_from_json_dict(data)
    results = verify_representation(broken)
    by_id = {c.check_id: c for c in results}
    assert not by_id["repr.generator_relations"].passed
    assert not by_id["repr.homomorphism"].passed
    json.dumps([c.witness for c in results if c.witness is not None])


def test_reingested_dump_verifies_identically():
    for pq in [(2, 0), (1, 0), (0, 3), (1, 2)]:
        rep = build_representation(Signature(*pq))
        blob = json.dumps(representation_to_json_dict(rep), sort_keys=True)
        again = representation_from_json_dict(json.loads(blob))
        assert verify_representation(again) == verify_representation(rep)


def test_seed_changes_keep_passing():
    for seed in (0, 1, 99991):
        assert verify_signature(Signature(2, 1), seed=seed).passed
