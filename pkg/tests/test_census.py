import itertools
import json
import math

import pytest

from rfsemi.census import (
    CensusParams,
    CensusRecord,
    CensusSummary,
    analyze,
    census_partition,
    enumerate_minimal_tuples,
    partitions,
    read_checkpoint,
    resume,
    run_census,
)
from rfsemi.core import NumericalSemigroup
from rfsemi.errors import CheckpointMismatch

from oracles import minimal_by_sieve, sieve

RECORD_FIELDS = [
    "gens", "frobenius", "genus", "type", "pf", "almost_symmetric",
    "n_good", "n_bad", "bad_values", "bad_is_half_frobenius", "bad_config_ids",
]


def visited(embdim, max_gen, prefix=None):
    out = []
    enumerate_minimal_tuples(embdim, max_gen, lambda g, a: out.append(g), prefix)
    return out


def brute_tuples(embdim, max_gen):
    return [
        c
        for c in itertools.combinations(range(embdim, max_gen + 1), embdim)
        if math.gcd(*c) == 1 and minimal_by_sieve(c) == list(c)
    ]


def test_enumeration_examples():
    assert visited(2, 4) == [(2, 3), (3, 4)]
    assert visited(5, 9) == [(5, 6, 7, 8, 9)]
    assert visited(3, 3) == []


@pytest.mark.parametrize("embdim, max_gen", [(2, 15), (3, 18), (4, 16), (5, 15)])
def test_enumeration_matches_brute_force(embdim, max_gen):
    assert visited(embdim, max_gen) == brute_tuples(embdim, max_gen)


def test_enumeration_apery_is_exact():
    def check(gens, apery):
        reach = sieve(gens, 4 * max(gens) ** 2)
        m = gens[0]
        for r in range(m):
            assert apery[r] == next(x for x in range(r, len(reach), m) if reach[x])

    enumerate_minimal_tuples(4, 14, check)


def test_partitions_cover_enumeration():
    whole = visited(4, 20)
    split = [t for p in partitions(4, 20) for t in visited(4, 20, p)]
    assert split == whole


def test_single_record_census(tmp_path):
    params = CensusParams(5, 9, output_path=str(tmp_path / "c.jsonl"))
    summary = run_census(params)
    lines = (tmp_path / "c.jsonl").read_text().splitlines()
    assert len(lines) == 1
    rec = json.loads(lines[0])
    assert list(rec) == RECORD_FIELDS
    assert rec["gens"] == [5, 6, 7, 8, 9]
    assert (rec["frobenius"], rec["pf"], rec["type"], rec["n_bad"]) == (4, [1, 2, 3, 4], 4, 0)
    assert summary.records_emitted == 1 and summary.violations == []


def test_record_roundtrip():
    rec = CensusRecord((5, 6, 7, 8, 9), 4, 4, 4, (1, 2, 3, 4), True, 3, 0, (), True, ())
    assert CensusRecord.from_json(rec.to_json()) == rec


def test_analyze_bad_record():
    s = NumericalSemigroup.from_generators([64, 67, 91, 138, 150])
    rec, problems, _ = analyze(s)
    assert problems == []
    assert rec.bad_values == (327,) and rec.bad_is_half_frobenius
    # zero cells at bits 0,2,5,7,8,10,13,15,16,18 of the row-major off-diagonal order
    assert rec.bad_config_ids == ("5a5a5",)


def test_analyze_non_almost_symmetric():
    rec, problems, _ = analyze(NumericalSemigroup.from_generators([5, 12, 13]))
    assert not rec.almost_symmetric and rec.n_good is None and problems == []


def test_violations_are_collected():
    # claiming almost symmetry for a semigroup without it is recorded, not raised
    _, problems, _ = analyze(NumericalSemigroup.from_generators([5, 12, 13]), almost_symmetric=True)
    assert problems == ["almost_symmetric_filter"]


def test_cap_exceeded_is_a_violation():
    s = NumericalSemigroup.from_generators([64, 67, 91, 138, 150])
    rec, problems, _ = analyze(s, cap=1)
    assert "cap_exceeded" in problems
    assert rec.type == 4


def test_unfiltered_keeps_everything():
    records, summary = census_partition(3, 20, (5, 7), require_almost_symmetric=False)
    assert len(records) == summary.semigroups_seen == len(visited(3, 20, (5, 7)))
    assert any(not r.almost_symmetric for r in records)


def _params(tmp_path, **kw):
    base = dict(embdim=4, max_gen=22, output_path=str(tmp_path / "out.jsonl"))
    base.update(kw)
    return CensusParams(**base)


def test_worker_count_independent(tmp_path):
    a = _params(tmp_path / "a", workers=1)
    b = _params(tmp_path / "b", workers=2)
    for p in (a, b):
        (tmp_path / p.output_path).parent.mkdir(parents=True, exist_ok=True)
    sa, sb = run_census(a), run_census(b)
    text = open(a.output_path).read()
    assert text == open(b.output_path).read()
    gens = [tuple(json.loads(l)["gens"]) for l in text.splitlines()]
    assert gens == sorted(gens)
    assert sa.type_histogram == sb.type_histogram and sa.records_emitted == sb.records_emitted


def test_resume_matches_uninterrupted(tmp_path):
    (tmp_path / "full").mkdir()
    (tmp_path / "part").mkdir()
    full = _params(tmp_path / "full")
    part = _params(tmp_path / "part")
    run_census(full)
    total = len(partitions(4, 22))
    half = run_census(part, stop_after=total // 2)
    _, _, done = read_checkpoint(part.checkpoint)
    assert len(done) == total // 2
    assert half.records_emitted < run_census(full).records_emitted
    resumed = resume(part)
    assert open(part.output_path).read() == open(full.output_path).read()
    assert resumed.records_emitted == sum(1 for _ in open(full.output_path))


def test_resume_mismatch(tmp_path):
    p = _params(tmp_path)
    with pytest.raises(CheckpointMismatch):
        resume(p)
    run_census(p, stop_after=3)
    with pytest.raises(CheckpointMismatch):
        resume(_params(tmp_path, max_gen=23))


def test_params_validation():
    with pytest.raises(ValueError):
        CensusParams(embdim=7, max_gen=30)
    with pytest.raises(ValueError):
        CensusParams(embdim=5, max_gen=4)
    with pytest.raises(ValueError):
        CensusParams(embdim=5, max_gen=30, workers=0)


def test_summary_dict_roundtrip():
    s = CensusSummary(semigroups_seen=3, type_histogram={1: 2, 3: 1}, violations=[((5, 6), "x")])
    assert CensusSummary.from_dict(json.loads(json.dumps(s.to_dict()))) == s
