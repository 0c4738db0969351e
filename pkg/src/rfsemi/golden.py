"""Golden checks replaying published facts about specific semigroups.

Each check returns ``(passed, detail)``.  ``verify-paper`` on the command
line runs :data:`CHECKS` in order and prints one PASS/FAIL line per check.
"""

from __future__ import annotations

from typing import Callable

from .census import CensusSummary, iter_census
from .configenum import count_configs
from .core import NumericalSemigroup
from .rfmatrix import (
    RFMatrix,
    classify_pf,
    lambda_table,
    pair_report,
    rf_matrices,
    zero_configuration,
)

S5 = (64, 67, 91, 138, 150)
PF5 = (209, 327, 445, 654)
PRINTED_327 = (
    (-1, 0, 1, 0, 2),
    (4, -1, 0, 1, 0),
    (0, 4, -1, 0, 2),
    (3, 0, 3, -1, 0),
    (0, 3, 0, 2, -1),
)

S3 = (5, 12, 13)
PRINTED_19 = ((-1, 2, 0), (1, -1, 2), (4, 1, -1))

S6 = (455, 497, 574, 589, 631, 708)
PF6 = (3079, 3289, 3521, 3655, 3674, 3789, 3923, 4057, 4172, 4191, 4325, 4557, 4767, 7846)
PROGRESSION_START, PROGRESSION_STEP = 3521, 134


def progression_matrix(lam: int) -> RFMatrix:
    """The printed RF-matrix of ``3521 + 134 * lam`` in the order-6 example."""
    rows = (
        (-1, 8 - lam, 0, 0, lam, 0),
        (0, -1, 7 - lam, 0, 0, lam),
        (9 - lam, 0, -1, lam, 0, 0),
        (0, 7 - lam, 0, -1, lam + 1, 0),
        (0, 0, 6 - lam, 0, -1, lam + 1),
        (8 - lam, 0, 0, lam + 1, 0, -1),
    )
    return RFMatrix(PROGRESSION_START + PROGRESSION_STEP * lam, rows)


def fgh_semigroup(n: int, r: int) -> NumericalSemigroup:
    s = r * (3 * n + 2) + 3
    return NumericalSemigroup.from_generators([s, s + 3, s + 3 * n + 1, s + 3 * n + 2])


Result = tuple[bool, str]


def check_pf_embdim5() -> Result:
    S = NumericalSemigroup.from_generators(S5)
    pf = S.pseudo_frobenius()
    ok = pf == PF5 and S.frobenius == 654 and S.is_almost_symmetric() and S.type() == 4
    return ok, f"PF={list(pf)} F={S.frobenius} type={S.type()}"


def check_classify_embdim5() -> Result:
    cls = classify_pf(NumericalSemigroup.from_generators(S5))
    ok = sorted(cls.good) == [209, 445] and cls.bad == (327,)
    return ok, f"good={sorted(cls.good)} bad={list(cls.bad)}"


def check_printed_327_is_rf_matrix() -> Result:
    S = NumericalSemigroup.from_generators(S5)
    printed = RFMatrix(327, PRINTED_327)
    found = rf_matrices(S, 327)
    detail = "; ".join(printed.violations(S)) or "valid"
    return printed in found, f"{len(found)} RF-matrices enumerated; printed matrix: {detail}"


def check_pair_properties_327() -> Result:
    report = pair_report(RFMatrix(327, PRINTED_327), RFMatrix(327, PRINTED_327), frobenius=654)
    S = NumericalSemigroup.from_generators(S5)
    enumerated = [pair_report(A, A, 654) for A in rf_matrices(S, 327)]
    ok = report.property_a_ok and report.property_b_ok and all(
        r.property_a_ok and r.property_b_ok for r in enumerated
    )
    return ok, f"zeros={report.zeros_total} (a)={report.property_a_ok} (b)={report.property_b_ok}"


def check_lambda_209() -> Result:
    S = NumericalSemigroup.from_generators(S5)
    table = lambda_table(S)
    i, j = S5.index(64), S5.index(91)
    ok = table.lam[i][j] == 3 and table.big_lambda(i, j) == 209
    return ok, f"lambda(64,91)={table.lam[i][j]} Lambda={table.big_lambda(i, j)}"


def check_rf_19() -> Result:
    S = NumericalSemigroup.from_generators(S3)
    found = rf_matrices(S, 19)
    return RFMatrix(19, PRINTED_19) in found, f"{len(found)} RF-matrices for 19"


def check_config_count() -> Result:
    n = count_configs(5)
    return n == 216 and 2 * n + 41 == 473, f"N={n}, 2N+41={2 * n + 41}"


def check_embdim6_pf() -> Result:
    S = NumericalSemigroup.from_generators(S6)
    pf = S.pseudo_frobenius()
    progression = {PROGRESSION_START + PROGRESSION_STEP * k for k in range(7)}
    ok = (
        pf == PF6
        and S.type() == 14 > 2 * S.embedding_dimension
        and S.is_almost_symmetric()
        and progression <= set(pf)
    )
    return ok, f"type={S.type()} e={S.embedding_dimension} progression in PF={progression <= set(pf)}"


def check_embdim6_matrices() -> Result:
    S = NumericalSemigroup.from_generators(S6)
    bad_rows = [lam for lam in range(7) if progression_matrix(lam).violations(S)]
    configs = {zero_configuration(progression_matrix(lam)) for lam in range(1, 6)}
    cls = classify_pf(S)
    labels = " ".join(f"{PROGRESSION_START + PROGRESSION_STEP * k}:{cls.label(PROGRESSION_START + PROGRESSION_STEP * k)}" for k in range(7))
    return not bad_rows and len(configs) == 1, f"invalid={bad_rows} shared configs={len(configs)} [{labels}]"


def check_fgh_family() -> Result:
    types = {(n, r): fgh_semigroup(n, r).type() for n, r in ((2, 8), (3, 11), (4, 14))}
    return all(t == 3 * n + 2 for (n, _), t in types.items()), str(types)


def _small_census(embdim: int, max_gen: int, filtered: bool) -> CensusSummary:
    total = CensusSummary()
    for _, part in iter_census(embdim, max_gen, filtered):
        total.merge(part)
    return total


def check_embdim3_type() -> Result:
    s = _small_census(3, 30, filtered=False)
    return s.max_type <= 2 and not s.violations, f"max type {s.max_type} over {s.semigroups_seen} semigroups"


def check_embdim4_type() -> Result:
    s = _small_census(4, 30, filtered=True)
    return s.max_type <= 3 and not s.violations, f"max type {s.max_type} over {s.records_emitted} AS semigroups"


def check_embdim5_census() -> Result:
    s = _small_census(5, 30, filtered=True)
    ok = s.max_type <= 5 and s.max_n_bad <= 1 and s.bad_not_half_frobenius == 0 and not s.violations
    return ok, f"max type {s.max_type}, max bad {s.max_n_bad} over {s.records_emitted} AS semigroups"


CHECKS: list[tuple[str, Callable[[], Result]]] = [
    ("pf <64,67,91,138,150>", check_pf_embdim5),
    ("good/bad <64,67,91,138,150>", check_classify_embdim5),
    ("printed RF-matrix of 327 enumerated", check_printed_327_is_rf_matrix),
    ("properties (a),(b) for 327", check_pair_properties_327),
    ("Lambda entry 209 = 3*91-64", check_lambda_209),
    ("RF-matrix of 19 in <5,12,13>", check_rf_19),
    ("216 zero-configurations, bound 473", check_config_count),
    ("type 14 at embedding dimension 6", check_embdim6_pf),
    ("progression matrices share a configuration", check_embdim6_matrices),
    ("FGH family type 3n+2", check_fgh_family),
    ("embdim 3 type <= 2 (max_gen 30)", check_embdim3_type),
    ("embdim 4 almost symmetric type <= 3 (max_gen 30)", check_embdim4_type),
    ("embdim 5 type <= 5, bad = F/2 (max_gen 30)", check_embdim5_census),
]


def run_all() -> list[tuple[str, bool, str]]:
    out = []
    for name, check in CHECKS:
        try:
            ok, detail = check()
        except Exception as exc:  # a crash is a failed check, not an abort
            ok, detail = False, f"{type(exc).__name__}: {exc}"
        out.append((name, ok, detail))
    return out
