"""Structural properties over a random corpus and over the census stream."""

import math

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from rfsemi.census import iter_census
from rfsemi.core import NumericalSemigroup
from rfsemi.rfmatrix import classify_pf, first_rf_matrix, rf_rows

from corpus_checks import check_semigroup, run_corpus
from oracles import random_corpus

CORPUS_SIZE = 10_000


@pytest.fixture(scope="module")
def census_bad_stream():
    return [r.gens for recs, _ in iter_census(5, 40) for r in recs if r.n_bad]


def test_random_corpus_has_no_violations():
    violations, n_as = run_corpus(random_corpus(CORPUS_SIZE))
    assert violations == {}
    assert n_as > 1000


def test_census_bad_semigroups(census_bad_stream):
    assert len(census_bad_stream) == 40
    for gens in census_bad_stream:
        problems, is_as = check_semigroup(gens)
        assert is_as and problems == []


def test_bad_values_are_half_frobenius(census_bad_stream):
    for gens in census_bad_stream:
        s = NumericalSemigroup.from_generators(gens)
        assert [2 * f for f in classify_pf(s).bad] == [s.frobenius]


@settings(max_examples=300, deadline=None)
@given(st.lists(st.integers(5, 50), min_size=5, max_size=5, unique=True))
def test_embdim5_hypothesis(raw):
    assume(math.gcd(*raw) == 1)
    s = NumericalSemigroup.from_generators(raw)
    problems, _ = check_semigroup(raw)
    assert problems == []
    for f in s.pseudo_frobenius():
        rows = rf_rows(s, f)
        assert all(rows)
        for i, candidates in enumerate(rows):
            for row in candidates:
                assert row[i] == -1 and sum(a * g for a, g in zip(row, s.generators)) == f
        assert first_rf_matrix(s, f).violations(s) == []
