"""Row-factorization matrices of pseudo-Frobenius numbers.

Row ``i`` of an RF-matrix for ``f`` has ``-1`` on the diagonal and a
factorization of ``f + g_i`` over the remaining generators elsewhere, so every
row sums (against the generators) to ``f``.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .configenum import ZeroConfig
from .core import NumericalSemigroup
from .errors import CapExceeded, NotAlmostSymmetric, NotPseudoFrobenius, OrderMismatch

DEFAULT_CAP = 10**6


def factorizations(
    S: NumericalSemigroup,
    v: int,
    excluded: Optional[int] = None,
    cap: int = DEFAULT_CAP,
) -> list[tuple[int, ...]]:
    """All coefficient vectors ``c`` with ``sum(c[j] * g[j]) == v``.

    ``excluded`` is a generator index whose coefficient is forced to zero.
    Coefficients are chosen for the largest generator first.  The result is
    sorted lexicographically.  Raises :class:`CapExceeded` rather than
    truncate.
    """
    if v < 0:
        raise ValueError(f"cannot factorize negative value {v}")
    gens = S.generators
    order = [j for j in reversed(range(len(gens))) if j != excluded]
    out: list[tuple[int, ...]] = []
    coeffs = [0] * len(gens)

    def dfs(pos: int, remaining: int) -> None:
        j = order[pos]
        g = gens[j]
        if pos == len(order) - 1:
            if remaining % g == 0:
                coeffs[j] = remaining // g
                out.append(tuple(coeffs))
                if len(out) > cap:
                    raise CapExceeded(f"more than cap={cap} factorizations of {v}")
                coeffs[j] = 0
            return
        for c in range(remaining // g, -1, -1):
            coeffs[j] = c
            dfs(pos + 1, remaining - c * g)
        coeffs[j] = 0

    if not order:
        return [tuple(coeffs)] if v == 0 else []
    dfs(0, v)
    out.sort()
    return out


@dataclass(frozen=True)
class RFMatrix:
    target: int
    entries: tuple[tuple[int, ...], ...]

    @classmethod
    def of(cls, target: int, rows: Sequence[Sequence[int]]) -> "RFMatrix":
        return cls(target, tuple(tuple(r) for r in rows))

    @property
    def order(self) -> int:
        return len(self.entries)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.entries[i][j]

    def violations(self, S: NumericalSemigroup) -> list[str]:
        """Invariant failures of this matrix against ``S`` (empty when valid)."""
        gens = S.generators
        if self.order != len(gens):
            return [f"order {self.order} != embedding dimension {len(gens)}"]
        problems = []
        # messages use 1-based row numbers
        for i, row in enumerate(self.entries):
            if len(row) != self.order:
                problems.append(f"row {i + 1} has length {len(row)}")
                continue
            if row[i] != -1:
                problems.append(f"diagonal entry ({i + 1},{i + 1}) = {row[i]}")
            if any(a < 0 for j, a in enumerate(row) if j != i):
                problems.append(f"negative off-diagonal entry in row {i + 1}")
            total = sum(a * g for a, g in zip(row, gens))
            if total != self.target:
                problems.append(f"row {i + 1} sums to {total}, not {self.target}")
        return problems

    def format(self) -> str:
        return "\n".join(" ".join(str(a) for a in row) for row in self.entries)


def rf_rows(S: NumericalSemigroup, f: int, cap: int = DEFAULT_CAP) -> list[list[tuple[int, ...]]]:
    """Per-row candidate lists: every row ``i`` of every RF-matrix for ``f``."""
    if f not in S.pseudo_frobenius():
        raise NotPseudoFrobenius(f"{f} is not a pseudo-Frobenius number of {S}")
    rows = []
    for i, g in enumerate(S.generators):
        facts = factorizations(S, f + g, excluded=i, cap=cap)
        rows.append([c[:i] + (-1,) + c[i + 1:] for c in facts])
    return rows


def rf_matrices(S: NumericalSemigroup, f: int, cap: int = DEFAULT_CAP) -> list[RFMatrix]:
    rows = rf_rows(S, f, cap)
    size = math.prod(len(r) for r in rows)
    if size > cap:
        raise CapExceeded(f"{size} RF-matrices for {f} exceed cap {cap}")
    return [RFMatrix(f, combo) for combo in itertools.product(*rows)]


def first_rf_matrix(S: NumericalSemigroup, f: int, cap: int = DEFAULT_CAP) -> RFMatrix:
    """The first matrix ``rf_matrices`` would return, without the product."""
    return RFMatrix(f, tuple(r[0] for r in rf_rows(S, f, cap)))


@dataclass(frozen=True)
class LambdaTable:
    """``lam[i][j]`` is the largest k with ``k*g_j - g_i`` not in S (0 on the diagonal)."""

    generators: tuple[int, ...]
    lam: tuple[tuple[int, ...], ...]

    @property
    def order(self) -> int:
        return len(self.generators)

    def big_lambda(self, i: int, j: int) -> int:
        return self.lam[i][j] * self.generators[j] - self.generators[i]

    def multiset(self) -> list[int]:
        n = self.order
        return sorted(self.big_lambda(i, j) for i in range(n) for j in range(n) if i != j)


def lambda_table(S: NumericalSemigroup) -> LambdaTable:
    gens = S.generators
    e = len(gens)
    if e < 2:
        raise ValueError("lambda table needs at least two generators")
    F = S.frobenius
    lam = [[0] * e for _ in range(e)]
    for i, gi in enumerate(gens):
        for j, gj in enumerate(gens):
            if i == j:
                continue
            # above this bound k*g_j - g_i > F, so it lies in S
            k = -(-(F + gi) // gj)
            while S.contains(k * gj - gi):
                k -= 1
            lam[i][j] = k
    return LambdaTable(gens, tuple(tuple(r) for r in lam))


@dataclass(frozen=True)
class GoodWitness:
    """``value = k * g[j] - g[i]`` where ``value`` is f or F - f."""

    i: int
    j: int
    k: int
    value: int

    def describe(self, gens: Sequence[int]) -> str:
        return f"{self.k}*{gens[self.j]}-{gens[self.i]}"


@dataclass(frozen=True)
class PFClassification:
    frobenius: int
    good: dict[int, GoodWitness] = field(default_factory=dict)
    bad: tuple[int, ...] = ()
    couples: tuple[tuple[int, int], ...] = ()

    def label(self, f: int) -> str:
        if f == self.frobenius:
            return "frobenius"
        if f in self.good:
            return "good"
        if f in self.bad:
            return "bad"
        raise KeyError(f)


def _witness_for(gens: Sequence[int], x: int) -> Optional[tuple[int, int, int]]:
    for i, gi in enumerate(gens):
        for j, gj in enumerate(gens):
            if i != j and (x + gi) % gj == 0 and (x + gi) // gj >= 1:
                return i, j, (x + gi) // gj
    return None


def classify_pf(S: NumericalSemigroup) -> PFClassification:
    """Split PF(S) \\ {F} into good and bad pseudo-Frobenius numbers."""
    if not S.is_almost_symmetric():
        raise NotAlmostSymmetric(f"{S} is not almost symmetric")
    F = S.frobenius
    gens = S.generators
    good: dict[int, GoodWitness] = {}
    bad = []
    couples = []
    for f in S.pseudo_frobenius():
        if f == F:
            continue
        if f <= F - f:
            couples.append((f, F - f))
        for x in (f, F - f):
            hit = _witness_for(gens, x)
            if hit is not None:
                good[f] = GoodWitness(*hit, value=x)
                break
        else:
            bad.append(f)
    return PFClassification(F, good, tuple(bad), tuple(couples))


@dataclass(frozen=True)
class PairPropertyReport:
    zeros_total: int
    prop1_ok: bool
    property_a_ok: bool
    property_b_ok: bool


def _has_two_positives(M: RFMatrix) -> bool:
    """Every row and column has exactly two positive and ``n - 3`` zero off-diagonal entries."""
    n = M.order
    for i in range(n):
        row = [M[i, j] for j in range(n) if j != i]
        col = [M[j, i] for j in range(n) if j != i]
        for line in (row, col):
            if sum(a > 0 for a in line) != 2 or sum(a == 0 for a in line) != n - 3:
                return False
    return True


def pair_report(A: RFMatrix, B: RFMatrix, frobenius: Optional[int] = None) -> PairPropertyReport:
    """Zero-pattern checks on RF-matrices A for f and B for F - f.

    Diagonal entries count neither as zero nor as positive.
    """
    if A.order != B.order:
        raise OrderMismatch(f"orders {A.order} and {B.order} differ")
    if frobenius is not None and A.target + B.target != frobenius:
        raise ValueError(f"targets {A.target} + {B.target} != F = {frobenius}")
    n = A.order
    off = [(i, j) for i in range(n) for j in range(n) if i != j]
    zeros = sum(A[i, j] == 0 for i, j in off) + sum(B[i, j] == 0 for i, j in off)
    prop1 = all(A[i, j] * B[j, i] == 0 for i, j in off)
    prop_a = all((A[i, j] == 0) != (B[j, i] == 0) for i, j in off)
    prop_b = _has_two_positives(A) and _has_two_positives(B)
    return PairPropertyReport(zeros, prop1, prop_a, prop_b)


def zero_configuration(A: RFMatrix) -> ZeroConfig:
    n = A.order
    mask = 0
    bit = 0
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            if A[i, j] == 0:
                mask |= 1 << bit
            bit += 1
    return ZeroConfig(n, mask)


def shared_positive_rows(A: RFMatrix) -> Optional[tuple[int, int, int]]:
    """Two rows whose positive entries overlap in exactly one column.

    Returns ``(r1, r2, j)`` (0-based), or None when ``A`` is not an order-5
    matrix with two positives and two zeros in every row and column.
    """
    if A.order != 5 or not _has_two_positives(A):
        return None
    n = A.order
    pos = [{j for j in range(n) if j != i and A[i, j] > 0} for i in range(n)]
    for r1, r2 in itertools.combinations(range(n), 2):
        common = pos[r1] & pos[r2]
        if len(common) == 1:
            return r1, r2, next(iter(common))
    return None
