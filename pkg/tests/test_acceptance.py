"""The ten acceptance criteria, each an exact identity with a runtime limit.

Every test prints one PASS/FAIL line (visible with ``pytest -s`` or in the
terminal summary) before asserting.
"""

import time

import pytest

from qschur import hecke, permutations, superspace, tableaux
from qschur.decompose import (
    TheoremViolation,
    highest_weight_vector,
    project_module,
    verify_branching,
    verify_centralizer,
)
from qschur.hecke import xi_of
from qschur.scalars import Q
from qschur.superspace import TensorVector
from qschur.tableaux import enumerate_hooks, enumerate_standard, hook_schur_dimension, s_plus
from qschur.verify import (
    braid_relations,
    defining_relations,
    gyoja_properties,
    q_one_specialization,
    quadratic_relation,
)

MN_ALL = [(1, 1), (1, 2), (2, 1), (2, 2)]


@pytest.fixture(autouse=True)
def cold_caches():
    """Drop memoized Hecke elements so that timings measure real work."""
    for mod in (hecke, permutations, superspace, tableaux):
        for obj in vars(mod).values():
            if callable(getattr(obj, "cache_clear", None)):
                obj.cache_clear()
    yield


class Criterion:
    def __init__(self, capsys, number: int, name: str, limit: float):
        self.capsys, self.number, self.name, self.limit = capsys, number, name, limit

    def __enter__(self):
        self.start = time.perf_counter()
        self.failures = []
        return self

    def check(self, ok: bool, what: str) -> None:
        if not ok:
            self.failures.append(what)

    def __exit__(self, exc_type, exc, tb):
        elapsed = time.perf_counter() - self.start
        if exc is not None:
            self.failures.append(f"{exc_type.__name__}: {exc}")
        slow = elapsed >= self.limit
        ok = not self.failures and not slow
        line = f"[{'PASS' if ok else 'FAIL'}] criterion {self.number}: {self.name} ({elapsed:.2f} s, limit {self.limit:g} s)"
        with self.capsys.disabled():
            print("\n" + line)
        assert not self.failures, self.failures[:5]
        assert not slow, f"took {elapsed:.2f} s"
        return False


def test_quadratic_relation(capsys):
    with Criterion(capsys, 1, "R-check quadratic relation", 1) as c:
        for m, n in MN_ALL:
            c.check(quadratic_relation(m, n).passed, f"gl({m}|{n})")


def test_braid_relations(capsys):
    with Criterion(capsys, 2, "braid relations on V^3 and V^4", 5) as c:
        for m, n in MN_ALL:
            for k in (3, 4):
                r = braid_relations(m, n, k)
                c.check(r.passed, f"gl({m}|{n}) k={k}: {[x.name for x in r.failures()]}")


def test_centralizer_commutation(capsys):
    with Criterion(capsys, 3, "r_j commutes with E_i, F_i, q^E_ll for k <= 4", 60) as c:
        for m, n in [(1, 1), (2, 1), (2, 2)]:
            for k in range(1, 5):
                r = verify_centralizer(m, n, k)
                c.check(r.passed, f"gl({m}|{n}) k={k}: {[x.name for x in r.failures()]}")


def test_defining_relations(capsys):
    with Criterion(capsys, 4, "defining relations of U_q(gl(2|2)) on V^k, k <= 3", 60) as c:
        for k in range(1, 4):
            r = defining_relations(2, 2, k)
            c.check(r.passed, f"k={k}: {[x.name for x in r.failures()]}")
            c.check(any("quartic" in x.name for x in r.checks), "quartic relation tested")


def test_gyoja_properties(capsys):
    with Criterion(capsys, 5, "q-Young symmetrizers are orthogonal idempotents, k <= 4", 30) as c:
        for k in range(1, 5):
            r = gyoja_properties(k)
            c.check(r.passed, f"k={k}: {[x.name for x in r.failures()]}")


def test_highest_weight_vectors(capsys):
    with Criterion(capsys, 6, "v+ is a maximal vector of the right weight, k <= 4", 120) as c:
        count = 0
        for m, n in [(1, 1), (2, 1), (1, 2)]:
            for k in range(1, 5):
                for lam in enumerate_hooks(m, n, k):
                    for t in enumerate_standard(lam):
                        try:
                            cert = highest_weight_vector(t, m, n)
                        except TheoremViolation as exc:
                            c.check(False, str(exc))
                            continue
                        c.check(all(cert.checks.values()), f"{t} gl({m}|{n})")
                        count += 1
        c.check(count > 0, "no tableaux checked")


def test_dimension_identity(capsys):
    with Criterion(capsys, 7, "sum over tableaux of dim y_T V^k equals (m+n)^k", 120) as c:
        for m, n in [(1, 1), (2, 1)]:
            for k in range(1, 5):
                total = 0
                for lam in enumerate_hooks(m, n, k):
                    oracle = hook_schur_dimension(lam, m, n)
                    for t in enumerate_standard(lam):
                        _, dim = project_module(t, m, n)
                        c.check(dim == oracle, f"{t} gl({m}|{n}): rank {dim}, fillings {oracle}")
                        total += dim
                c.check(total == (m + n) ** k, f"gl({m}|{n}) k={k}: {total}")


def test_branching(capsys):
    with Criterion(capsys, 8, "branching by adding a box, k = 2, 3, 4", 10) as c:
        for m, n in [(1, 1), (2, 1)]:
            for k in (2, 3, 4):
                r = verify_branching(m, n, k)
                c.check(r.passed, f"gl({m}|{n}) k={k}: {[x.name for x in r.failures()]}")


def test_q_equals_one(capsys):
    with Criterion(capsys, 9, "q = 1 specialization matches the classical constructions", 30) as c:
        for m, n in [(1, 1), (2, 1), (1, 2)]:
            for k in range(1, 5):
                r = q_one_specialization(m, n, k)
                c.check(r.passed, f"gl({m}|{n}) k={k}: {[x.name for x in r.failures()]}")


def test_worked_closed_forms(capsys):
    with Criterion(capsys, 10, "closed forms for xi and the gl(1|1) highest weight vector", 1) as c:
        c.check(xi_of(s_plus([2])) == 1 + Q * Q, "xi for (2)")
        c.check(xi_of(s_plus([1, 1])) == 1 + Q ** -2, "xi for (1,1)")
        v = highest_weight_vector(s_plus([1, 1]), 1, 1).vector
        target = TensorVector.basis((1, 2)) - TensorVector.basis((2, 1)).scale(Q)
        c.check(v == target.scale(v.terms.get((1, 2), Q)), "v+ proportional to t1 u1 - q u1 t1")
