"""Highest weight vectors, module projections and the bimodule decomposition
of V^{(x)k}, plus the report-style consistency checks built on them."""

from __future__ import annotations

import os
from collections import Counter, defaultdict
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .hecke import e_minus, e_plus, generator, h_of, y_T
from .scalars import Q, ZERO
from .superspace import (
    RootData,
    TensorVector,
    act_E,
    act_F,
    act_qh,
    basis_tuples,
    hecke_act,
    r_j_apply,
    weight_of,
)
from .tableaux import (
    Partition,
    StandardTableau,
    Weight,
    _require_hook,
    enumerate_hooks,
    enumerate_standard,
    hook_schur_dimension,
    is_hook,
    s_minus,
    s_plus,
    sigma_plus,
    tableau_word,
    weight_of_partition,
)

DEFAULT_BOUND = 4096


class BoundExceeded(ValueError):
    pass


class TheoremViolation(AssertionError):
    """An identity that must hold failed; this signals an implementation bug."""


def resolve_bound(bound: int | None = None) -> int:
    if bound is not None:
        return bound
    env = os.environ.get("QSCHUR_BOUND")
    return int(env) if env else DEFAULT_BOUND


def check_bound(m: int, n: int, k: int, bound: int | None = None) -> None:
    bound = resolve_bound(bound)
    size = (m + n) ** k
    if size > bound:
        raise BoundExceeded(
            f"dim V^(x){k} = {size} exceeds the bound {bound}; raise it with --bound or QSCHUR_BOUND"
        )


@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""


@dataclass
class Report:
    title: str
    checks: list[Check] = field(default_factory=list)

    def add(self, name: str, passed: bool, detail: str = "") -> None:
        self.checks.append(Check(name, bool(passed), detail))

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def to_json(self) -> dict:
        return {
            "title": self.title,
            "passed": self.passed,
            "checks": [{"name": c.name, "passed": c.passed, "detail": c.detail} for c in self.checks],
        }


# ---------------------------------------------------------------------------
# exact linear algebra over Q(q)


def exact_rank(rows: Iterable[TensorVector]) -> tuple[int, list[TensorVector]]:
    """Rank of the span of ``rows`` and a reduced echelon basis of it.

    Basis vectors have leading coefficient 1 (leading = smallest basis tuple).
    """
    pivots: dict[tuple, dict] = {}
    k = None
    for v in rows:
        if k is None:
            k = v.k
        elif v.k != k:
            raise ValueError("rows of different tensor rank")
        row = dict(v.terms)
        for p in sorted(pivots):
            c = row.get(p)
            if c is None:
                continue
            for t, x in pivots[p].items():
                s = row.get(t, ZERO) - c * x
                if s:
                    row[t] = s
                else:
                    row.pop(t, None)
        if not row:
            continue
        lead = min(row)
        inv = row[lead].inverse()
        row = {t: x * inv for t, x in row.items()}
        # keep the echelon form reduced
        for p, other in pivots.items():
            c = other.get(lead)
            if c is not None:
                for t, x in row.items():
                    s = other.get(t, ZERO) - c * x
                    if s:
                        other[t] = s
                    else:
                        other.pop(t, None)
        pivots[lead] = row
    basis = [TensorVector._raw(k, dict(sorted(pivots[p].items()))) for p in sorted(pivots)]
    return len(basis), basis


def in_span(v: TensorVector, basis: Sequence[TensorVector]) -> bool:
    r, _ = exact_rank(list(basis))
    r2, _ = exact_rank(list(basis) + [v])
    return r == r2


# ---------------------------------------------------------------------------
# highest weight vectors


@dataclass
class HighestWeightCertificate:
    tableau: StandardTableau
    m: int
    n: int
    vector: TensorVector
    weight: Weight
    checks: dict[str, bool]

    def to_json(self) -> dict:
        return {
            "tableau": self.tableau.to_text(),
            "shape": list(self.tableau.shape),
            "m": self.m,
            "n": self.n,
            "vector": self.vector.to_json(),
            "weight": list(self.weight.coords),
            "checks": dict(self.checks),
        }


def highest_weight_word(lam: Sequence[int], m: int, n: int) -> TensorVector:
    """w_lambda^+, the tensor word of the row-filled tableau S_+."""
    return TensorVector.basis(tableau_word(s_plus(lam), m, n))


def highest_weight_candidate(t: StandardTableau, m: int, n: int) -> TensorVector:
    """v_+ = y_T h(sigma_T^+) w_lambda^+, without any checks."""
    data = RootData(m, n)
    _require_hook(t.shape, m, n)
    w = highest_weight_word(t.shape, m, n)
    return hecke_act(data, y_T(t), hecke_act(data, h_of(sigma_plus(t)), w))


def highest_weight_vector(t: StandardTableau, m: int, n: int) -> HighestWeightCertificate:
    data = RootData(m, n)
    v = highest_weight_candidate(t, m, n)
    expected = weight_of_partition(t.shape, m, n)
    checks = {
        "nonzero": bool(v),
        "annihilated": bool(v) and all(not act_E(data, i, v) for i in range(1, data.rank + 1)),
        "weight": bool(v) and weight_of(data, v).coords == expected.coords,
    }
    if not all(checks.values()):
        failed = ", ".join(name for name, ok in checks.items() if not ok)
        raise TheoremViolation(f"highest weight certificate failed for T = {t} ({failed})")
    return HighestWeightCertificate(t, m, n, v, expected, checks)


# ---------------------------------------------------------------------------
# module projections and the decomposition


def project_module(t: StandardTableau, m: int, n: int, bound: int | None = None) -> tuple[list[TensorVector], int]:
    """A basis of y_T(q) V^{(x)k} and its dimension.

    The Hecke action preserves letter content, so the image is computed one
    content block at a time.
    """
    _require_hook(t.shape, m, n)
    check_bound(m, n, t.k, bound)
    data = RootData(m, n)
    y = y_T(t)
    blocks: dict[tuple, list] = defaultdict(list)
    for tup in basis_tuples(data, t.k):
        blocks[tuple(sorted(tup))].append(tup)
    basis: list[TensorVector] = []
    for key in sorted(blocks):
        images = [hecke_act(data, y, TensorVector.basis(tup)) for tup in blocks[key]]
        _, b = exact_rank(v for v in images if v)
        basis.extend(b)
    return basis, len(basis)


@dataclass
class DecompositionEntry:
    shape: Partition
    mult: int
    dim: int


@dataclass
class DecompositionReport:
    m: int
    n: int
    k: int
    entries: list[DecompositionEntry]
    total: int

    def to_json(self) -> dict:
        return {
            "m": self.m,
            "n": self.n,
            "k": self.k,
            "entries": [{"lambda": list(e.shape), "mult": e.mult, "dim": e.dim} for e in self.entries],
            "total": self.total,
        }

    def to_text(self) -> str:
        lines = [f"V^(x){self.k} for gl({self.m}|{self.n}):"]
        for e in self.entries:
            lines.append(f"  lambda={e.shape.to_text():<12} mult={e.mult:<4} dim={e.dim}")
        lines.append(f"  total = {self.total} = {self.m + self.n}^{self.k}")
        return "\n".join(lines)


def decompose(m: int, n: int, k: int, bound: int | None = None) -> DecompositionReport:
    check_bound(m, n, k, bound)
    entries = []
    for lam in enumerate_hooks(m, n, k):
        tableaux = enumerate_standard(lam)
        _, dim = project_module(tableaux[0], m, n, bound)
        oracle = hook_schur_dimension(lam, m, n)
        if dim != oracle:
            raise TheoremViolation(
                f"rank {dim} of the projection for {lam.to_text()} disagrees with {oracle} semistandard fillings"
            )
        entries.append(DecompositionEntry(Partition(lam), len(tableaux), dim))
    total = sum(e.mult * e.dim for e in entries)
    if total != (m + n) ** k:
        raise TheoremViolation(f"multiplicities times dimensions sum to {total}, not {(m + n) ** k}")
    return DecompositionReport(m, n, k, entries, total)


# ---------------------------------------------------------------------------
# report-style checks


def generator_actions(data: RootData):
    """(name, operator) for every E_i, F_i and q^{E_ll}."""
    out = []
    for i in range(1, data.rank + 1):
        out.append((f"E{i}", lambda v, i=i: act_E(data, i, v)))
        out.append((f"F{i}", lambda v, i=i: act_F(data, i, v)))
    for l in range(1, data.dim + 1):
        out.append((f"q^E{l}{l}", lambda v, l=l: act_qh(data, data.E_diag(l), v)))
    return out


def verify_centralizer(m: int, n: int, k: int, bound: int | None = None) -> Report:
    check_bound(m, n, k, bound)
    data = RootData(m, n)
    report = Report(f"centralizer gl({m}|{n}) k={k}")
    vectors = [TensorVector.basis(t) for t in basis_tuples(data, k)]
    for j in range(1, k):
        for name, op in generator_actions(data):
            bad = [v for v in vectors if r_j_apply(data, op(v), j) != op(r_j_apply(data, v, j))]
            detail = f"fails on {len(bad)} basis vectors" if bad else ""
            report.add(f"r{j} commutes with {name}", not bad, detail)
    total = sum(
        len(enumerate_standard(lam)) * hook_schur_dimension(lam, m, n) for lam in enumerate_hooks(m, n, k)
    )
    report.add("sum of d_lambda * dim V(lambda)", total == (m + n) ** k, f"{total} vs {(m + n) ** k}")
    return report


def add_a_box(lam: Sequence[int]) -> list[Partition]:
    lam = list(lam)
    out = []
    for i in range(len(lam) + 1):
        prev = lam[i - 1] if i > 0 else None
        cur = lam[i] if i < len(lam) else 0
        if prev is None or cur < prev:
            new = lam[:i] + [cur + 1] + lam[i + 1:]
            out.append(Partition(new))
    return out


def verify_branching(m: int, n: int, k: int, bound: int | None = None) -> Report:
    if k < 2:
        raise ValueError("branching needs k >= 2")
    report = Report(f"branching gl({m}|{n}) k={k - 1}->{k}")
    lower = decompose(m, n, k - 1, bound)
    upper = decompose(m, n, k, bound)
    predicted: Counter = Counter()
    for e in lower.entries:
        for mu in add_a_box(e.shape):
            if is_hook(mu, m, n):
                predicted[mu] += e.mult
    actual = Counter({e.shape: e.mult for e in upper.entries})
    for mu in sorted(set(predicted) | set(actual), reverse=True):
        report.add(
            f"multiplicity of {mu.to_text()}",
            predicted[mu] == actual[mu],
            f"add-a-box {predicted[mu]}, decomposition {actual[mu]}",
        )
    return report


def _in_same_block(blocks, a: int, b: int) -> bool:
    return any(a in blk and b in blk for blk in blocks)


def verify_annihilation_mechanics(m: int, n: int, k: int, bound: int | None = None) -> Report:
    """The two local mechanisms behind the annihilation argument: a repeated
    even letter in consecutive slots of one column of S_- is killed by e_-,
    and a repeated odd letter in consecutive slots of one row of S_+ is
    killed by e_+."""
    check_bound(m, n, k, bound)
    data = RootData(m, n)
    report = Report(f"annihilation mechanics gl({m}|{n}) k={k}")
    q2 = Q * Q
    tuples = basis_tuples(data, k)
    for lam in enumerate_hooks(m, n, k):
        cols = s_minus(lam).columns
        rows = s_plus(lam).rows
        em, ep = e_minus(lam), e_plus(lam)
        n_even = n_odd = 0
        ok_even = ok_odd = True
        for tup in tuples:
            theta = TensorVector.basis(tup)
            for a in range(1, k):
                x, y = tup[a - 1], tup[a]
                if x != y:
                    continue
                if x <= m and _in_same_block(cols, a, a + 1):
                    n_even += 1
                    ok_even &= hecke_act(data, generator(a, k), theta) == theta.scale(q2)
                    ok_even &= not hecke_act(data, em, theta)
                if x > m and _in_same_block(rows, a, a + 1):
                    n_odd += 1
                    ok_odd &= hecke_act(data, generator(a, k), theta) == -theta
                    ok_odd &= not hecke_act(data, ep, theta)
        report.add(f"{lam.to_text()}: even repeat in a column", ok_even, f"{n_even} cases")
        report.add(f"{lam.to_text()}: odd repeat in a row", ok_odd, f"{n_odd} cases")
    return report
