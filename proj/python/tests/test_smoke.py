import math
import os
from pathlib import Path

import pytest

import extmax as em

SCENARIOS = Path(os.environ.get("EXTMAX_SCENARIOS", Path(__file__).resolve().parents[2] / "scenarios"))


def test_wedge_and_interior():
    sig = em.Signature(1, 3)
    e0 = em.Multivector.basis(sig, [0])
    e1 = em.Multivector.basis(sig, [1])
    e01 = em.wedge(e0, e1)
    assert e01.terms() == {(0, 1): 1.0}
    assert em.wedge(e1, e0) == -1.0 * e01
    assert em.left_interior(e0, e01).terms() == {(1,): 1.0}
    assert em.left_interior(e1, em.wedge(e1, em.Multivector.basis(sig, [2]))).terms() == {(2,): -1.0}
    assert em.dot(e0, e0) == -1.0


def test_hodge_round_trip():
    sig = em.Signature(2, 2)
    v = em.Multivector(sig, 2, {(0, 1): 0.5, (1, 3): -2.0})
    assert em.inv_hodge(em.hodge(v)) == v


def test_sort_with_sign():
    assert em.sort_with_sign([2, 0, 1], 3) == ([0, 1, 2], 1)
    assert em.sort_with_sign([1, 0], 2) == ([0, 1], -1)
    assert em.sort_with_sign([1, 1], 2)[1] == 0


def test_identities():
    worst, results = em.verify_identities(em.Signature(1, 3))
    assert worst == 0.0
    assert results
    flipped, _ = em.verify_identities(em.Signature(1, 3), inject_sign_flip=True)
    assert flipped > 0.0


def test_stress_tensor():
    sig = em.Signature(1, 3)
    f = em.classical_pack([1.0, 0.0, 0.0], [0.0, 1.0, 0.0])
    t = em.stress_tensor(f)
    t_def = em.stress_tensor_def(f)
    assert all(math.isclose(a, b, abs_tol=1e-14) for ra, rb in zip(t, t_def) for a, b in zip(ra, rb))
    assert t[0][0] == pytest.approx(1.0)
    assert em.trace(f) == pytest.approx(em.trace_formula(f))
    e, b = em.classical_unpack(f)
    assert e == [1.0, 0.0, 0.0] and b == [0.0, 1.0, 0.0]
    assert f.signature == sig


def test_counting():
    assert em.dof_count(2, 1, 3) == 2
    xi = em.null_frequency(em.Signature(1, 3), [0.0, 0.0, 0.0, 1.0], 0)
    assert xi == pytest.approx([1.0, 0.0, 0.0, 1.0])


def test_run_commands():
    report, code, _ = em.run("verify-identities", cap=3)
    assert code == 0
    assert report["max_residual"] == 0.0

    report, code, _ = em.run("maxwell-check", str(SCENARIOS / "vacuum_plane_wave.json"))
    assert code == 0

    report, code, summary = em.run("maxwell-check", str(SCENARIOS / "nonconserved_source.json"))
    assert code == 1

    report, code, summary = em.run("maxwell-check", str(SCENARIOS / "missing.json"))
    assert code == 2
    assert report is None
    assert summary.startswith("error")
