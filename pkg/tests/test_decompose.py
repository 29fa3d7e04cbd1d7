import pytest

from qschur.decompose import (
    BoundExceeded,
    TheoremViolation,
    add_a_box,
    decompose,
    exact_rank,
    highest_weight_vector,
    in_span,
    project_module,
    verify_annihilation_mechanics,
    verify_branching,
    verify_centralizer,
)
from qschur.hecke import e_minus, e_plus, generator, y_T
from qschur.scalars import Q
from qschur.superspace import RootData, TensorVector, hecke_act
from qschur.tableaux import (
    Partition,
    enumerate_hooks,
    enumerate_standard,
    hook_schur_dimension,
    s_plus,
)

D11 = RootData(1, 1)


def vec(*tup):
    return TensorVector.basis(tup)


def test_exact_rank_basics():
    v = vec(1, 2) + vec(2, 1).scale(Q)
    assert exact_rank([v, v.scale(Q)])[0] == 1
    assert exact_rank([]) == (0, [])
    r, b = exact_rank([v, vec(1, 2), vec(2, 1)])
    assert r == 2
    assert all(min(x.terms) in x.terms and x.terms[min(x.terms)] == 1 for x in b)


def test_joint_images_span_everything():
    rows = []
    for lam in ([2], [1, 1]):
        y = y_T(s_plus(lam))
        rows += [hecke_act(D11, y, vec(a, b)) for a in (1, 2) for b in (1, 2)]
    assert exact_rank(rows)[0] == 4


def test_project_module_examples():
    assert project_module(s_plus([2]), 1, 1)[1] == 2
    assert project_module(s_plus([1, 1]), 1, 1)[1] == 2


def test_projection_dimension_does_not_depend_on_the_tableau():
    for m, n in [(1, 1), (2, 1), (1, 2)]:
        for k in range(1, 4):
            for lam in enumerate_hooks(m, n, k):
                dims = {project_module(t, m, n)[1] for t in enumerate_standard(lam)}
                assert dims == {hook_schur_dimension(lam, m, n)}


def test_bound():
    with pytest.raises(BoundExceeded, match="bound"):
        project_module(s_plus([3]), 2, 2, bound=10)
    with pytest.raises(BoundExceeded):
        decompose(1, 1, 3, bound=4)


def test_bound_from_environment(monkeypatch):
    monkeypatch.setenv("QSCHUR_BOUND", "4")
    with pytest.raises(BoundExceeded):
        decompose(1, 1, 3)


def test_decompose_examples():
    r = decompose(1, 1, 2)
    assert [(e.shape, e.mult, e.dim) for e in r.entries] == [(Partition([2]), 1, 2), (Partition([1, 1]), 1, 2)]
    assert r.total == 4
    r = decompose(1, 1, 3)
    assert [(tuple(e.shape), e.mult, e.dim) for e in r.entries] == [((3,), 1, 2), ((2, 1), 2, 2), ((1, 1, 1), 1, 2)]
    assert r.total == 8
    r = decompose(2, 1, 1)
    assert r.to_json() == {"m": 2, "n": 1, "k": 1, "entries": [{"lambda": [1], "mult": 1, "dim": 3}], "total": 3}


def test_highest_weight_examples():
    cert = highest_weight_vector(s_plus([2]), 1, 1)
    v = cert.vector
    assert set(v.terms) == {(1, 1)}
    cert = highest_weight_vector(s_plus([1, 1]), 1, 1)
    v = cert.vector
    c = v.terms[(1, 2)]
    assert v == (vec(1, 2) - vec(2, 1).scale(Q)).scale(c)
    assert cert.checks == {"nonzero": True, "annihilated": True, "weight": True}
    assert cert.to_json()["weight"] == [1, 1]


def test_highest_weight_vector_lies_in_the_module():
    for t in enumerate_standard([2, 1]):
        cert = highest_weight_vector(t, 2, 1)
        b, _ = project_module(t, 2, 1)
        assert in_span(cert.vector, b)


def test_non_hook_rejected():
    with pytest.raises(ValueError):
        highest_weight_vector(s_plus([2, 2]), 1, 1)


def test_failed_certificate_is_fatal(monkeypatch):
    import importlib

    mod = importlib.import_module("qschur.decompose")

    monkeypatch.setattr(mod, "highest_weight_candidate", lambda t, m, n: vec(2, 2))
    with pytest.raises(TheoremViolation):
        highest_weight_vector(s_plus([2]), 1, 1)


def test_centralizer_reports():
    assert verify_centralizer(1, 1, 2).passed
    assert verify_centralizer(2, 1, 3).passed
    report = verify_centralizer(2, 1, 1)
    assert report.passed and len(report.checks) == 1


def test_branching():
    assert set(add_a_box([2])) == {Partition([3]), Partition([2, 1])}
    for m, n in [(1, 1), (2, 1)]:
        for k in (2, 3, 4):
            assert verify_branching(m, n, k).passed
    r = decompose(1, 1, 4)
    assert Partition([2, 2]) not in {e.shape for e in r.entries}


def test_annihilation_examples():
    h = generator(1, 2)
    q2 = Q * Q
    theta = vec(1, 1)
    assert hecke_act(D11, h, theta) == theta.scale(q2)
    assert not hecke_act(D11, e_minus([1, 1]), theta)
    theta = vec(2, 2)
    assert hecke_act(D11, h, theta) == -theta
    assert not hecke_act(D11, e_plus([2]), theta)


def test_annihilation_mechanics_reports():
    for m, n in [(1, 1), (2, 1), (1, 2)]:
        for k in range(1, 4):
            assert verify_annihilation_mechanics(m, n, k).passed
    vacuous = verify_annihilation_mechanics(3, 1, 3)
    row = [c for c in vacuous.checks if c.name.startswith("3:") and "even" in c.name]
    assert row[0].detail == "0 cases"
