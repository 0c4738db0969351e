"""Exhaustive census of numerical semigroups with bounded minimal generators.

Work is split by the ``(g1, g2)`` prefix of the generator tuple.  Each
partition is written to its own shard file; a checkpoint lists completed
prefixes so an interrupted run can resume.  The merged JSONL output is the
concatenation of the shards in prefix order, hence sorted by generator tuple
and independent of the number of workers.
"""

from __future__ import annotations

import hashlib
import json
import logging
import math
import multiprocessing
import os
import time
from collections import Counter
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Callable, Iterator, Optional, Sequence

from .core import UNREACHED, NumericalSemigroup, add_generator
from .errors import CapExceeded, CheckpointMismatch
from .rfmatrix import (
    DEFAULT_CAP,
    RFMatrix,
    classify_pf,
    lambda_table,
    pair_report,
    rf_rows,
    shared_positive_rows,
    zero_configuration,
)

log = logging.getLogger(__name__)

# Above this many candidate tuples a run needs an explicit opt-in.
LONG_RUN_TUPLES = 2 * 10**7

Visitor = Callable[[tuple[int, ...], list[float]], None]


def enumerate_minimal_tuples(
    embdim: int,
    max_gen: int,
    visitor: Visitor,
    prefix: Optional[Sequence[int]] = None,
) -> None:
    """Call ``visitor(gens, apery)`` for every minimal generating set.

    Visits each strictly increasing ``g1 < ... < g_embdim <= max_gen`` with
    ``g1 >= embdim``, gcd one, and no generator representable by the others,
    in lexicographic order.  ``apery`` is the Apéry table w.r.t. ``g1``.
    With ``prefix`` only tuples starting with it are visited.
    """

    def extend(gens: list[int], apery: list[float]) -> None:
        depth = len(gens)
        m = gens[0]
        if depth == embdim:
            if UNREACHED not in apery:
                visitor(tuple(gens), apery)
            return
        # leave room for the generators still to come
        for g in range(gens[-1] + 1, max_gen - (embdim - depth - 1) + 1):
            if apery[g % m] <= g:
                continue
            gens.append(g)
            extend(gens, add_generator(apery, m, g))
            gens.pop()

    def start(g1: int, rest: Sequence[int]) -> None:
        gens = [g1]
        apery: list[float] = [0] + [UNREACHED] * (g1 - 1)
        for g in rest:
            if g <= gens[-1] or apery[g % g1] <= g:
                return
            gens.append(g)
            apery = add_generator(apery, g1, g)
        extend(gens, apery)

    if prefix:
        if prefix[0] >= embdim and len(prefix) <= embdim and max(prefix) <= max_gen:
            start(prefix[0], prefix[1:])
        return
    for g1 in range(embdim, max_gen - embdim + 2):
        start(g1, ())


def partitions(embdim: int, max_gen: int) -> list[tuple[int, int]]:
    return [
        (g1, g2)
        for g1 in range(embdim, max_gen - embdim + 2)
        for g2 in range(g1 + 1, max_gen - embdim + 3)
        if g2 % g1
    ]


@dataclass(frozen=True)
class CensusParams:
    embdim: int
    max_gen: int
    require_almost_symmetric: bool = True
    workers: int = 1
    rf_cap: int = DEFAULT_CAP
    output_path: str = "census.jsonl"
    checkpoint_path: Optional[str] = None

    def __post_init__(self) -> None:
        if self.embdim not in (3, 4, 5, 6):
            raise ValueError(f"embdim must be one of 3..6, got {self.embdim}")
        if self.max_gen < self.embdim:
            raise ValueError("max_gen must be at least embdim")
        if self.workers < 1:
            raise ValueError("workers must be positive")
        if self.rf_cap < 1:
            raise ValueError("rf_cap must be positive")

    @property
    def checkpoint(self) -> Path:
        return Path(self.checkpoint_path or self.output_path + ".ckpt")

    @property
    def shard_dir(self) -> Path:
        return Path(self.output_path + ".shards")

    def digest(self) -> str:
        """Hash of everything that determines the output records."""
        key = [self.embdim, self.max_gen, self.require_almost_symmetric, self.rf_cap]
        return hashlib.sha256(json.dumps(key).encode()).hexdigest()[:16]

    def candidate_tuples(self) -> int:
        return math.comb(self.max_gen - self.embdim + 1, self.embdim)

    def to_dict(self) -> dict:
        return asdict(self)


@dataclass
class CensusRecord:
    gens: tuple[int, ...]
    frobenius: int
    genus: int
    type: int
    pf: tuple[int, ...]
    almost_symmetric: bool
    n_good: Optional[int] = None
    n_bad: Optional[int] = None
    bad_values: tuple[int, ...] = ()
    bad_is_half_frobenius: Optional[bool] = None
    bad_config_ids: tuple[str, ...] = ()

    def to_json(self) -> str:
        d = asdict(self)
        for key in ("gens", "pf", "bad_values", "bad_config_ids"):
            d[key] = list(d[key])
        return json.dumps(d, separators=(",", ":"))

    @classmethod
    def from_json(cls, line: str) -> "CensusRecord":
        d = json.loads(line)
        for key in ("gens", "pf", "bad_values", "bad_config_ids"):
            d[key] = tuple(d[key])
        return cls(**d)


@dataclass
class CensusSummary:
    semigroups_seen: int = 0
    almost_symmetric_seen: int = 0
    records_emitted: int = 0
    max_type: int = 0
    max_n_bad: int = 0
    bad_not_half_frobenius: int = 0
    lambda_one_records: int = 0
    type_histogram: dict[int, int] = field(default_factory=dict)
    violations: list[tuple[tuple[int, ...], str]] = field(default_factory=list)
    wall_time: float = 0.0

    def merge(self, other: "CensusSummary") -> None:
        self.semigroups_seen += other.semigroups_seen
        self.almost_symmetric_seen += other.almost_symmetric_seen
        self.records_emitted += other.records_emitted
        self.max_type = max(self.max_type, other.max_type)
        self.max_n_bad = max(self.max_n_bad, other.max_n_bad)
        self.bad_not_half_frobenius += other.bad_not_half_frobenius
        self.lambda_one_records += other.lambda_one_records
        hist = Counter(self.type_histogram)
        hist.update(other.type_histogram)
        self.type_histogram = dict(sorted(hist.items()))
        self.violations.extend(other.violations)

    def to_dict(self) -> dict:
        d = asdict(self)
        d["type_histogram"] = {str(k): v for k, v in self.type_histogram.items()}
        d["violations"] = [{"gens": list(g), "property": p} for g, p in self.violations]
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "CensusSummary":
        d = dict(d)
        d["type_histogram"] = {int(k): v for k, v in d["type_histogram"].items()}
        d["violations"] = [(tuple(v["gens"]), v["property"]) for v in d["violations"]]
        return cls(**d)


def _nari_almost_symmetric(S: NumericalSemigroup, t: int) -> bool:
    # S is almost symmetric iff 2 * genus = F + type
    return 2 * S.genus == S.frobenius + t


def _quick_almost_symmetric(gens: Sequence[int], apery: Sequence[float]) -> bool:
    """Genus criterion evaluated straight from the Apéry table."""
    m = gens[0]
    top = max(apery)
    genus = (sum(apery) - m * (m - 1) // 2) // m
    others = gens[1:]
    t = 0
    for x in apery:
        if x == 0:
            continue
        for g in others:
            if apery[(x + g) % m] == x + g:
                break
        else:
            t += 1
    return 2 * genus == top - m + t


def _rows_positive(rows: list[tuple[int, ...]], j: int) -> bool:
    return any(r[j] > 0 for r in rows)


def check_rf_properties(
    S: NumericalSemigroup,
    cls,
    cap: int,
) -> tuple[list[str], list[str]]:
    """Run the RF-matrix part of the property battery on one semigroup.

    Works on the per-row factorization lists: since the rows of an RF-matrix
    are chosen independently, a statement about every matrix (or every pair
    of matrices) reduces to a statement about every row.  Returns the
    violated property names and the zero-configuration id of each bad
    pseudo-Frobenius number.
    """
    problems: list[str] = []
    config_ids: list[str] = []
    e = S.embedding_dimension
    F = cls.frobenius
    rows = {f: rf_rows(S, f, cap) for f in S.pseudo_frobenius() if f != F}

    for f, h in cls.couples:
        A, B = rows[f], rows[h]
        if any(
            _rows_positive(A[i], j) and _rows_positive(B[j], i)
            for i in range(e)
            for j in range(e)
            if i != j
        ):
            problems.append("prop1_product_zero")

    if e != 5:
        return problems, config_ids

    configs: Counter[int] = Counter()
    for f in cls.bad:
        patterns = [{tuple(a == 0 for a in r) for r in row} for row in rows[f]]
        if any(len(p) != 1 for p in patterns):
            problems.append("bad_config_not_unique")
        A = RFMatrix(f, tuple(row[0] for row in rows[f]))
        B = RFMatrix(F - f, tuple(row[0] for row in rows[F - f]))
        report = pair_report(A, B)
        if not report.prop1_ok:
            problems.append("prop1_product_zero")
        if not report.property_a_ok:
            problems.append("property_a")
        if not report.property_b_ok:
            problems.append("property_b")
        if shared_positive_rows(A) is None:
            problems.append("lemma_rows_witness")
        config = zero_configuration(A)
        if not config.is_admissible():
            problems.append("config_not_admissible")
        configs[config.mask] += 1
        config_ids.append(config.hex_id)
    if any(c >= 3 for c in configs.values()):
        problems.append("config_shared_by_three")
    return sorted(set(problems)), config_ids


def analyze(
    S: NumericalSemigroup,
    cap: int = DEFAULT_CAP,
    almost_symmetric: Optional[bool] = None,
) -> tuple[CensusRecord, list[str], bool]:
    """Build the census record of ``S`` and run the property battery.

    Returns ``(record, violated property names, saw a lambda equal to 1)``.
    """
    e = S.embedding_dimension
    pf = S.pseudo_frobenius()
    t = len(pf)
    F = S.frobenius
    as_def = S.is_almost_symmetric()
    problems = []
    if almost_symmetric is not None and almost_symmetric != as_def:
        problems.append("almost_symmetric_filter")
    if _nari_almost_symmetric(S, t) != as_def:
        problems.append("genus_criterion")
    if (t == 1) != S.is_symmetric():
        problems.append("type_one_iff_symmetric")
    if e == 3 and t > 2:
        problems.append("embdim3_type_le_2")
    record = CensusRecord(S.generators, F, S.genus, t, pf, as_def)
    if not as_def:
        return record, problems, False

    cls = classify_pf(S)
    good, bad = cls.good, cls.bad
    record.n_good = len(good)
    record.n_bad = len(bad)
    record.bad_values = bad
    record.bad_is_half_frobenius = all(2 * f == F for f in bad)

    if len(good) + len(bad) + 1 != t:
        problems.append("type_equals_good_plus_bad_plus_one")
    if any(F - f not in good for f in good):
        problems.append("good_closed_under_complement")
    if e == 4 and t > 3:
        problems.append("embdim4_type_le_3")
    if e == 5 and t > 473:
        problems.append("type_le_473")
    if e == 5 and len(good) > 40:
        problems.append("good_le_40")

    lam = lambda_table(S)
    gens = S.generators
    for f in pf:
        for i, gi in enumerate(gens):
            for j, gj in enumerate(gens):
                if i != j and (f + gi) % gj == 0 and (f + gi) // gj != lam.lam[i][j]:
                    problems.append("lambda_uniqueness")
    for w in good.values():
        if w.k != lam.lam[w.i][w.j] or w.k * gens[w.j] - gens[w.i] != w.value:
            problems.append("good_witness_roundtrip")
    lambda_one = any(lam.lam[i][j] == 1 for i in range(e) for j in range(e) if i != j)

    try:
        rf_problems, config_ids = check_rf_properties(S, cls, cap)
    except CapExceeded:
        rf_problems, config_ids = ["cap_exceeded"], []
    problems.extend(rf_problems)
    record.bad_config_ids = tuple(config_ids)
    return record, sorted(set(problems)), lambda_one


def census_partition(
    embdim: int,
    max_gen: int,
    prefix: tuple[int, int],
    require_almost_symmetric: bool = True,
    cap: int = DEFAULT_CAP,
) -> tuple[list[CensusRecord], CensusSummary]:
    """Records and partial summary for every semigroup with the given prefix."""
    summary = CensusSummary()
    records: list[CensusRecord] = []
    hist: Counter[int] = Counter()

    def visit(gens: tuple[int, ...], apery: list[float]) -> None:
        summary.semigroups_seen += 1
        claimed = None
        if require_almost_symmetric:
            if not _quick_almost_symmetric(gens, apery):
                return
            claimed = True
        S = NumericalSemigroup(gens, tuple(int(w) for w in apery))
        record, problems, lambda_one = analyze(S, cap, claimed)
        if record.almost_symmetric:
            summary.almost_symmetric_seen += 1
            summary.max_n_bad = max(summary.max_n_bad, record.n_bad)
            if not record.bad_is_half_frobenius:
                summary.bad_not_half_frobenius += 1
        if lambda_one and embdim == 5:
            log.debug("lambda_ij = 1 in almost symmetric %s", gens)
            summary.lambda_one_records += 1
        records.append(record)
        summary.max_type = max(summary.max_type, record.type)
        hist[record.type] += 1
        summary.violations.extend((gens, p) for p in problems)

    enumerate_minimal_tuples(embdim, max_gen, visit, prefix)
    summary.records_emitted = len(records)
    summary.type_histogram = dict(sorted(hist.items()))
    return records, summary


def iter_census(
    embdim: int,
    max_gen: int,
    require_almost_symmetric: bool = True,
    cap: int = DEFAULT_CAP,
) -> Iterator[tuple[list[CensusRecord], CensusSummary]]:
    """In-memory census, one ``(records, summary)`` pair per partition."""
    for prefix in partitions(embdim, max_gen):
        yield census_partition(embdim, max_gen, prefix, require_almost_symmetric, cap)


# --- persistence -----------------------------------------------------------

def _atomic_write(path: Path, text: str) -> None:
    tmp = path.with_name(path.name + ".tmp")
    tmp.write_text(text)
    os.replace(tmp, path)


def _shard_name(prefix: tuple[int, int]) -> str:
    return f"{prefix[0]:05d}_{prefix[1]:05d}"


def _run_partition(args: tuple[dict, tuple[int, int]]) -> tuple[int, int]:
    params_dict, prefix = args
    params = CensusParams(**params_dict)
    records, summary = census_partition(
        params.embdim, params.max_gen, prefix, params.require_almost_symmetric, params.rf_cap
    )
    name = _shard_name(prefix)
    _atomic_write(params.shard_dir / f"{name}.jsonl", "".join(r.to_json() + "\n" for r in records))
    _atomic_write(params.shard_dir / f"{name}.summary.json", json.dumps(summary.to_dict()))
    return prefix


def _write_checkpoint(params: CensusParams, done: set[tuple[int, int]]) -> None:
    lines = [
        "# rfsemi census checkpoint",
        "params " + json.dumps(params.to_dict(), sort_keys=True),
        "hash " + params.digest(),
    ]
    lines += [f"done {a} {b}" for a, b in sorted(done)]
    _atomic_write(params.checkpoint, "\n".join(lines) + "\n")


def read_checkpoint(path: str | Path) -> tuple[CensusParams, str, set[tuple[int, int]]]:
    """Parse a checkpoint into ``(params, hash, completed prefixes)``."""
    path = Path(path)
    if not path.exists():
        raise CheckpointMismatch(f"no checkpoint at {path}")
    params = digest = None
    done: set[tuple[int, int]] = set()
    for line in path.read_text().splitlines():
        if line.startswith("params "):
            params = CensusParams(**json.loads(line[len("params "):]))
        elif line.startswith("hash "):
            digest = line.split()[1]
        elif line.startswith("done "):
            _, a, b = line.split()
            done.add((int(a), int(b)))
    if params is None or digest is None:
        raise CheckpointMismatch(f"malformed checkpoint {path}")
    return params, digest, done


def _execute(params: CensusParams, done: set[tuple[int, int]], stop_after: Optional[int]) -> CensusSummary:
    start = time.perf_counter()
    params.shard_dir.mkdir(parents=True, exist_ok=True)
    all_prefixes = partitions(params.embdim, params.max_gen)
    todo = [p for p in all_prefixes if p not in done]
    if stop_after is not None:
        todo = todo[:stop_after]
    _write_checkpoint(params, done)
    jobs = [(params.to_dict(), p) for p in todo]
    if params.workers == 1:
        completed = map(_run_partition, jobs)
        pool = None
    else:
        pool = multiprocessing.Pool(params.workers)
        completed = pool.imap_unordered(_run_partition, jobs)
    try:
        for prefix in completed:
            done.add(prefix)
            _write_checkpoint(params, done)
    finally:
        if pool is not None:
            pool.close()
            pool.join()

    summary = CensusSummary()
    finished = [p for p in all_prefixes if p in done]
    with open(params.output_path + ".tmp", "w") as out:
        for prefix in finished:
            name = _shard_name(prefix)
            out.write((params.shard_dir / f"{name}.jsonl").read_text())
            part = json.loads((params.shard_dir / f"{name}.summary.json").read_text())
            summary.merge(CensusSummary.from_dict(part))
    os.replace(params.output_path + ".tmp", params.output_path)
    summary.wall_time = time.perf_counter() - start
    return summary


def run_census(params: CensusParams, stop_after: Optional[int] = None) -> CensusSummary:
    """Fresh census run; ``stop_after`` processes only that many partitions."""
    params.checkpoint.unlink(missing_ok=True)
    if params.shard_dir.exists():
        for p in params.shard_dir.iterdir():
            p.unlink()
    return _execute(params, set(), stop_after)


def resume(params: CensusParams, stop_after: Optional[int] = None) -> CensusSummary:
    """Continue a run from its checkpoint."""
    saved, digest, done = read_checkpoint(params.checkpoint)
    if digest != params.digest() or saved.digest() != digest:
        raise CheckpointMismatch(f"checkpoint {params.checkpoint} was written for different parameters")
    return _execute(params, done, stop_after)
