"""Numerical semigroups described by their minimal generators and Apéry table.

A semigroup is stored as its minimal generating set together with the Apéry
set with respect to the multiplicity ``m``: ``apery[r]`` is the least element
of S congruent to ``r`` modulo ``m``.  Every invariant below is derived from
that table.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import EmptyInput, IntegerOverflow, NotCofinite

INT64_MAX = 2**63 - 1
UNREACHED = math.inf


def parse_generators(text: str) -> list[int]:
    """Parse ``"5,12,13"`` (spaces tolerated) into a list of ints."""
    parts = [p.strip() for p in text.split(",")]
    if not any(parts):
        raise EmptyInput("no generators given")
    try:
        return [int(p) for p in parts if p]
    except ValueError as exc:
        raise ValueError(f"cannot parse generator list {text!r}") from exc


def add_generator(apery: Sequence[float], m: int, g: int) -> list[float]:
    """Return the Apéry table of ``S + <g>`` given the table of S w.r.t. ``m``.

    Relaxes ``apery[(r + g) % m] <= apery[r] + g`` along each cycle of the
    map ``r -> r + g (mod m)``; starting every cycle at its minimum makes one
    lap sufficient.  Unreached residues are ``math.inf``.
    """
    w = list(apery)
    step = g % m
    d = math.gcd(step, m)
    length = m // d
    for start in range(d):
        best, best_val = start, w[start]
        r = start
        for _ in range(length - 1):
            r = (r + step) % m
            if w[r] < best_val:
                best, best_val = r, w[r]
        if best_val == UNREACHED:
            continue
        r, cur = best, best_val
        for _ in range(length - 1):
            r = (r + step) % m
            cur += g
            if w[r] > cur:
                w[r] = cur
            else:
                cur = w[r]
    return w


def minimal_generators(raw: Iterable[int]) -> tuple[tuple[int, ...], list[float]]:
    """Reduce ``raw`` to its minimal generating set.

    Returns the minimal generators and the Apéry table (possibly with
    unreached residues when the gcd is not one).
    """
    values = sorted(set(raw))
    m = values[0]
    apery: list[float] = [0] + [UNREACHED] * (m - 1)
    kept = [m]
    for g in values[1:]:
        # sorted input: only smaller generators can represent g
        if apery[g % m] <= g:
            continue
        kept.append(g)
        apery = add_generator(apery, m, g)
    return tuple(kept), apery


@dataclass(frozen=True)
class GapProfile:
    gaps: tuple[int, ...]
    small_elements: tuple[int, ...]

    @property
    def genus(self) -> int:
        return len(self.gaps)

    @property
    def n_small(self) -> int:
        return len(self.small_elements)


@dataclass(frozen=True)
class NumericalSemigroup:
    """An immutable numerical semigroup.

    Build instances with :meth:`from_generators`; the direct constructor
    trusts its arguments.
    """

    generators: tuple[int, ...]
    apery: tuple[int, ...]

    @classmethod
    def from_generators(cls, raw: Iterable[int]) -> "NumericalSemigroup":
        raw = list(raw)
        if not raw:
            raise EmptyInput("generator list is empty")
        if any(not isinstance(g, int) or isinstance(g, bool) for g in raw):
            raise TypeError("generators must be integers")
        if any(g < 1 for g in raw):
            raise ValueError(f"generators must be positive, got {raw}")
        if math.gcd(*raw) != 1:
            raise NotCofinite(f"gcd{tuple(raw)} = {math.gcd(*raw)} != 1")
        lo, hi = min(raw), max(raw)
        # F < (lo - 1)(hi - 1) once the gcd is one
        if (lo - 1) * (hi - 1) + 2 * hi > INT64_MAX:
            raise IntegerOverflow(f"Frobenius number of {tuple(raw)} may exceed 64-bit range")
        gens, apery = minimal_generators(raw)
        return cls(gens, tuple(int(w) for w in apery))

    @property
    def multiplicity(self) -> int:
        return self.generators[0]

    @property
    def embedding_dimension(self) -> int:
        return len(self.generators)

    @property
    def frobenius(self) -> int:
        """Largest gap; -1 for the whole of N."""
        return max(self.apery) - self.multiplicity

    def __contains__(self, x: int) -> bool:
        return self.contains(x)

    def contains(self, x: int) -> bool:
        return x >= 0 and x >= self.apery[x % self.multiplicity]

    def gaps(self) -> GapProfile:
        gaps, small = [], []
        for x in range(self.frobenius + 1):
            (small if self.contains(x) else gaps).append(x)
        return GapProfile(tuple(gaps), tuple(small))

    @property
    def genus(self) -> int:
        m = self.multiplicity
        return sum(w // m for w in self.apery)

    def pseudo_frobenius(self) -> tuple[int, ...]:
        """PF(S), from the <=_S-maximal elements of the Apéry table."""
        m = self.multiplicity
        if m == 1:
            return ()
        w = self.apery
        out = []
        for r in range(1, m):
            x = w[r]
            if all(w[(x + g) % m] != x + g for g in self.generators[1:]):
                out.append(x - m)
        return tuple(sorted(out))

    def type(self) -> int:
        return len(self.pseudo_frobenius())

    def leq_s(self, x: int, y: int) -> bool:
        return self.contains(y - x)

    def is_symmetric(self) -> bool:
        F = self.frobenius
        return all(self.contains(F - x) for x in self.gaps().gaps)

    def is_almost_symmetric(self) -> bool:
        F = self.frobenius
        pf = set(self.pseudo_frobenius())
        return all(
            self.contains(F - x) or (x in pf and F - x in pf)
            for x in self.gaps().gaps
        )

    def __str__(self) -> str:
        return "<" + ",".join(map(str, self.generators)) + ">"


def from_generators(raw: Iterable[int]) -> NumericalSemigroup:
    return NumericalSemigroup.from_generators(raw)
