"""Verification suites: exact operator identities checked on every basis
vector, plus the q = 1 comparisons against the classical (group algebra and
graded place permutation) constructions.

Each suite returns a :class:`Report`; nothing here raises on a failed
identity.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Iterable

from .decompose import (
    Report,
    check_bound,
    highest_weight_candidate,
    highest_weight_word,
    verify_annihilation_mechanics,
    verify_branching,
    verify_centralizer,
)
from .hecke import (
    HeckeElement,
    HeckeInconsistency,
    basis,
    generator,
    lemma_gamma,
    multiply,
    x_T,
    xi_of,
    y_T,
)
from .permutations import all_permutations, compose, length
from .scalars import ONE, Q, ZERO, RationalFunction
from .superspace import (
    CartanElement,
    RootData,
    TensorVector,
    act_E,
    act_F,
    act_qh,
    basis_tuples,
    hecke_act,
    place_permutation,
    r_j_apply,
    rcheck_matrix,
)
from .tableaux import (
    column_group,
    enumerate_hooks,
    enumerate_standard,
    partitions,
    row_group,
    s_minus,
    s_plus,
    sigma_minus,
    sigma_plus,
)

Op = Callable[[TensorVector], TensorVector]


def _chain(*ops: Op) -> Op:
    """The composite ops[0] o ops[1] o ... (rightmost applied first)."""
    def run(v):
        for op in reversed(ops):
            v = op(v)
        return v
    return run


def _combo(*pairs: tuple) -> Op:
    """sum of c * op(v) over (c, op) pairs."""
    def run(v):
        out = TensorVector(v.k)
        for c, op in pairs:
            out = out + op(v).scale(c)
        return out
    return run


def _vanishes(op: Op, vectors: Iterable[TensorVector]) -> int:
    """Number of vectors not sent to zero."""
    return sum(1 for v in vectors if op(v))


def _basis_vectors(data: RootData, k: int) -> list[TensorVector]:
    return [TensorVector.basis(t) for t in basis_tuples(data, k)]


# ---------------------------------------------------------------------------
# R-check and the r_j


def _matmul(a, b):
    size = len(a)
    out = [[ZERO] * size for _ in range(size)]
    for i in range(size):
        for l in range(size):
            x = a[i][l]
            if not x:
                continue
            row_b = b[l]
            for j in range(size):
                if row_b[j]:
                    out[i][j] = out[i][j] + x * row_b[j]
    return out


def quadratic_relation(m: int, n: int) -> Report:
    """R^2 + (1 - q^2) R - q^2 I == 0 as a matrix identity."""
    data = RootData(m, n)
    report = Report(f"quadratic relation gl({m}|{n})")
    r = rcheck_matrix(data)
    r2 = _matmul(r, r)
    q2 = Q * Q
    size = len(r)
    bad = 0
    for i in range(size):
        for j in range(size):
            val = r2[i][j] + (ONE - q2) * r[i][j] - (q2 if i == j else ZERO)
            bad += bool(val)
    report.add("R^2 + (1-q^2)R - q^2 = 0", bad == 0, f"{bad} nonzero entries" if bad else "")
    return report


def braid_relations(m: int, n: int, k: int) -> Report:
    data = RootData(m, n)
    report = Report(f"braid relations gl({m}|{n}) k={k}")
    vectors = _basis_vectors(data, k)
    r = {j: (lambda v, j=j: r_j_apply(data, v, j)) for j in range(1, k)}
    for i in range(1, k - 1):
        lhs = _chain(r[i], r[i + 1], r[i])
        rhs = _chain(r[i + 1], r[i], r[i + 1])
        bad = sum(1 for v in vectors if lhs(v) != rhs(v))
        report.add(f"r{i} r{i + 1} r{i} = r{i + 1} r{i} r{i + 1}", bad == 0)
    for i in range(1, k):
        for j in range(i + 2, k):
            bad = sum(1 for v in vectors if r[i](r[j](v)) != r[j](r[i](v)))
            report.add(f"r{i} r{j} = r{j} r{i}", bad == 0)
        quad = _combo((ONE, _chain(r[i], r[i])), (ONE - Q * Q, r[i]), (-Q * Q, lambda v: v))
        report.add(f"(r{i} + 1)(r{i} - q^2) = 0", _vanishes(quad, vectors) == 0)
    return report


# ---------------------------------------------------------------------------
# defining relations of U_q(gl(m|n))


def defining_relations(m: int, n: int, k: int) -> Report:
    data = RootData(m, n)
    report = Report(f"defining relations gl({m}|{n}) k={k}")
    vectors = _basis_vectors(data, k)
    rank = data.rank
    E = {i: (lambda v, i=i: act_E(data, i, v)) for i in range(1, rank + 1)}
    F = {i: (lambda v, i=i: act_F(data, i, v)) for i in range(1, rank + 1)}

    def qh(h: CartanElement) -> Op:
        return lambda v: act_qh(data, h, v)

    def check(name: str, op: Op) -> None:
        bad = _vanishes(op, vectors)
        report.add(name, bad == 0, f"nonzero on {bad} basis vectors" if bad else "")

    def equal(name: str, a: Op, b: Op) -> None:
        check(name, _combo((ONE, a), (-ONE, b)))

    zero = CartanElement((0,) * data.dim)
    equal("q^0 = 1", qh(zero), lambda v: v)
    diag = [data.E_diag(l) for l in range(1, data.dim + 1)]
    for a, ha in enumerate(diag, 1):
        for b, hb in enumerate(diag, 1):
            if a <= b:
                equal(f"q^(E{a}{a}+E{b}{b}) = q^E{a}{a} q^E{b}{b}", qh(ha + hb), _chain(qh(ha), qh(hb)))
    for i in range(1, rank + 1):
        alpha = data.simple_root(i)
        for l, h in enumerate(diag, 1):
            e = h.pair(alpha)
            equal(f"q^E{l}{l} E{i} = q^{e} E{i} q^E{l}{l}",
                  _chain(qh(h), E[i]), _combo((RationalFunction.q(e), _chain(E[i], qh(h)))))
            equal(f"q^E{l}{l} F{i} = q^{-e} F{i} q^E{l}{l}",
                  _chain(qh(h), F[i]), _combo((RationalFunction.q(-e), _chain(F[i], qh(h)))))
    for i in range(1, rank + 1):
        for j in range(1, rank + 1):
            sign = -1 if data.op_parity(i) * data.op_parity(j) else 1
            lhs = _combo((ONE, _chain(E[i], F[j])), (-sign * ONE, _chain(F[j], E[i])))
            if i != j:
                check(f"[E{i}, F{j}] = 0", lhs)
                continue
            ki = data.k_element(i)
            qi = data.q_i(i)
            scale = (qi - qi.inverse()).inverse()
            rhs = _combo((scale, qh(ki)), (-scale, qh(ki.scaled(-1))))
            equal(f"[E{i}, F{i}] = (k{i} - k{i}^-1)/(q{i} - q{i}^-1)", lhs, rhs)
    for i in range(1, rank + 1):
        for j in range(i + 2, rank + 1):
            sign = -1 if data.op_parity(i) * data.op_parity(j) else 1
            check(f"[E{i}, E{j}] = 0", _combo((ONE, _chain(E[i], E[j])), (-sign * ONE, _chain(E[j], E[i]))))
            check(f"[F{i}, F{j}] = 0", _combo((ONE, _chain(F[i], F[j])), (-sign * ONE, _chain(F[j], F[i]))))
    for i in range(1, rank + 1):
        if i == m:
            continue
        qi = data.q_i(i)
        for j in (i - 1, i + 1):
            if not 1 <= j <= rank:
                continue
            for name, X in (("E", E), ("F", F)):
                check(
                    f"Serre {name}{i}^2 {name}{j}",
                    _combo(
                        (ONE, _chain(X[i], X[i], X[j])),
                        (-(qi + qi.inverse()), _chain(X[i], X[j], X[i])),
                        (ONE, _chain(X[j], X[i], X[i])),
                    ),
                )
    check(f"E{m}^2 = 0", _chain(E[m], E[m]))
    check(f"F{m}^2 = 0", _chain(F[m], F[m]))
    if m >= 2 and n >= 2:
        a, b = m - 1, m + 1
        for name, X in (("E", E), ("F", F)):
            check(
                f"quartic relation in {name}{a}, {name}{m}, {name}{b}",
                _combo(
                    (ONE, _chain(X[m], X[a], X[m], X[b])),
                    (ONE, _chain(X[m], X[b], X[m], X[a])),
                    (ONE, _chain(X[a], X[m], X[b], X[m])),
                    (ONE, _chain(X[b], X[m], X[a], X[m])),
                    (-(Q + Q.inverse()), _chain(X[m], X[a], X[b], X[m])),
                ),
            )
    return report


# ---------------------------------------------------------------------------
# Hecke algebra


def hecke_relations(k: int) -> Report:
    report = Report(f"Hecke relations k={k}")
    h = {i: generator(i, k) for i in range(1, k)}
    one = HeckeElement.one(k)
    q2 = Q * Q
    for i in range(1, k):
        report.add(f"h{i}^2 = (q^2-1) h{i} + q^2",
                   multiply(h[i], h[i]) == h[i].scale(q2 - 1) + one.scale(q2))
        if i + 1 < k:
            report.add(f"h{i} h{i + 1} h{i} = h{i + 1} h{i} h{i + 1}",
                       multiply(multiply(h[i], h[i + 1]), h[i]) == multiply(multiply(h[i + 1], h[i]), h[i + 1]))
        for j in range(i + 2, k):
            report.add(f"h{i} h{j} = h{j} h{i}", multiply(h[i], h[j]) == multiply(h[j], h[i]))
    return report


def gyoja_properties(k: int) -> Report:
    report = Report(f"q-Young symmetrizers k={k}")
    tabs = [t for lam in partitions(k) for t in enumerate_standard(lam)]
    ys = {}
    for t in tabs:
        try:
            ys[t] = y_T(t)
        except HeckeInconsistency as exc:
            report.add(f"xi exists for {t}", False, str(exc))
    for t, y in ys.items():
        report.add(f"y^2 = y for {t}", multiply(y, y) == y)
    for t1, y1 in ys.items():
        for t2, y2 in ys.items():
            if t1.shape != t2.shape or t1 < t2:
                report.add(f"y({t1}) y({t2}) = 0", not multiply(y1, y2))
    return report


def lemma_gamma_suite(k: int) -> Report:
    report = Report(f"e- h(sm)^-1 h(sp) e+ proportionality k={k}")
    for lam in partitions(k):
        for t in enumerate_standard(lam):
            g = lemma_gamma(t)
            report.add(f"gamma exists for {t}", g is not None, "" if g is None else f"gamma = {g.to_text()}")
    return report


# ---------------------------------------------------------------------------
# q = 1: classical oracles


GroupElement = dict  # Permutation -> Fraction


def group_multiply(a: GroupElement, b: GroupElement) -> GroupElement:
    out: dict = {}
    for u, x in a.items():
        for v, y in b.items():
            w = compose(u, v)
            s = out.get(w, 0) + x * y
            if s:
                out[w] = s
            else:
                out.pop(w, None)
    return out


def classical_symmetrizer(t) -> GroupElement:
    """sm b sm^-1 sp a sp^-1 in Q S_k, a the row sum of S_+, b the signed
    column sum of S_-."""
    lam = t.shape
    a = {s: Fraction(1) for s in row_group(s_plus(lam))}
    b = {s: Fraction((-1) ** length(s)) for s in column_group(s_minus(lam))}
    sm, sp = sigma_minus(t), sigma_plus(t)
    out = {sm: Fraction(1)}
    for factor in (b, {sm.inverse(): 1}, {sp: 1}, a, {sp.inverse(): 1}):
        out = group_multiply(out, factor)
    return out


def classical_act(data: RootData, g: GroupElement, v: TensorVector) -> TensorVector:
    out = TensorVector(v.k)
    for s, c in g.items():
        out = out + place_permutation(data, s, v).scale(c)
    return out


def _constant(vec: dict, k: int) -> TensorVector:
    return TensorVector(k, vec)


def q_one_specialization(m: int, n: int, k: int) -> Report:
    data = RootData(m, n)
    report = Report(f"q = 1 specialization gl({m}|{n}) k={k}")
    vectors = _basis_vectors(data, k)
    bad = 0
    for s in all_permutations(k):
        tw = basis(s)
        for v in vectors:
            if hecke_act(data, tw, v).specialize(1) != place_permutation(data, s, v).specialize(1):
                bad += 1
    report.add("T_w at q=1 is the graded place permutation", bad == 0, f"{bad} mismatches" if bad else "")
    for lam in partitions(k):
        for t in enumerate_standard(lam):
            report.add(f"x_T at q=1 is the classical symmetrizer for {t}",
                       x_T(t).specialize(1) == classical_symmetrizer(t))
    for lam in enumerate_hooks(m, n, k):
        w = highest_weight_word(lam, m, n)
        for t in enumerate_standard(lam):
            name = f"v+ at q=1 for {t}"
            try:
                v1 = highest_weight_candidate(t, m, n).specialize(1)
                xi1 = xi_of(t).evaluate(1)
            except ZeroDivisionError:
                report.add(name, False, "pole at q=1")
                continue
            classical = classical_act(data, classical_symmetrizer(t), place_permutation(data, sigma_plus(t), w))
            classical = {tup: c / xi1 for tup, c in classical.specialize(1).items()}
            vec = _constant(v1, k)
            raised = [act_E(data, i, vec, classical=True) for i in range(1, data.rank + 1)]
            report.add(name, bool(v1) and v1 == classical and not any(raised))
    return report


def highest_weight_suite(m: int, n: int, k: int) -> Report:
    data = RootData(m, n)
    report = Report(f"highest weight vectors gl({m}|{n}) k={k}")
    from .superspace import weight_of
    from .tableaux import weight_of_partition

    for lam in enumerate_hooks(m, n, k):
        expected = weight_of_partition(lam, m, n).coords
        for t in enumerate_standard(lam):
            v = highest_weight_candidate(t, m, n)
            ok = bool(v) and all(not act_E(data, i, v) for i in range(1, data.rank + 1))
            ok = ok and weight_of(data, v).coords == expected
            report.add(f"maximal vector for {t}", ok)
    return report


def run_all(m: int, n: int, k: int, bound: int | None = None) -> list[Report]:
    check_bound(m, n, k, bound)
    reports = [
        verify_centralizer(m, n, k, bound),
        quadratic_relation(m, n),
        braid_relations(m, n, k),
        defining_relations(m, n, k),
        hecke_relations(k),
        gyoja_properties(k),
        lemma_gamma_suite(k),
        verify_annihilation_mechanics(m, n, k, bound),
        highest_weight_suite(m, n, k),
        q_one_specialization(m, n, k),
    ]
    if k >= 2:
        reports.append(verify_branching(m, n, k, bound))
    return reports
