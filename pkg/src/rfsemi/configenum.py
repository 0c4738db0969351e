"""Zero/positive patterns of square matrices with a distinguished diagonal.

A configuration of order ``n`` is a bit mask over the ``n*(n-1)``
off-diagonal cells in row-major order (diagonal skipped, bit 0 first); a set
bit marks a zero entry, a clear bit a positive one.  A configuration is
admissible when every row and every column holds exactly two positive cells.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .errors import OrderOutOfRange

MIN_ORDER, MAX_ORDER = 3, 8


def cell_index(n: int, i: int, j: int) -> int:
    """Bit position of off-diagonal cell (i, j)."""
    return i * (n - 1) + (j if j < i else j - 1)


@dataclass(frozen=True, order=True)
class ZeroConfig:
    order: int
    mask: int

    def is_zero(self, i: int, j: int) -> bool:
        return bool(self.mask >> cell_index(self.order, i, j) & 1)

    def zero_cells(self) -> list[tuple[int, int]]:
        n = self.order
        return [(i, j) for i in range(n) for j in range(n) if i != j and self.is_zero(i, j)]

    @property
    def hex_id(self) -> str:
        width = -(-self.order * (self.order - 1) // 4)
        return f"{self.mask:0{width}x}"

    def is_admissible(self) -> bool:
        n = self.order
        for i in range(n):
            row_pos = sum(not self.is_zero(i, j) for j in range(n) if j != i)
            col_pos = sum(not self.is_zero(j, i) for j in range(n) if j != i)
            if row_pos != 2 or col_pos != 2:
                return False
        return True

    def grid(self) -> str:
        n = self.order
        lines = []
        for i in range(n):
            cells = ["-" if i == j else "0" if self.is_zero(i, j) else "+" for j in range(n)]
            lines.append(" ".join(cells))
        return "\n".join(lines)


def _check_order(n: int) -> None:
    if not MIN_ORDER <= n <= MAX_ORDER:
        raise OrderOutOfRange(f"order must be in [{MIN_ORDER}, {MAX_ORDER}], got {n}")


def enumerate_configs(n: int) -> list[ZeroConfig]:
    """All admissible configurations of order ``n``, ascending by mask."""
    _check_order(n)
    full = (1 << n * (n - 1)) - 1
    col_count = [0] * n
    found: list[int] = []

    def place(i: int, positive_bits: int) -> None:
        if i == n:
            if all(c == 2 for c in col_count):
                found.append(full & ~positive_bits)
            return
        rows_left = n - i - 1
        for a, b in itertools.combinations([j for j in range(n) if j != i], 2):
            if col_count[a] == 2 or col_count[b] == 2:
                continue
            col_count[a] += 1
            col_count[b] += 1
            # every column still needs 2 - count positives from later rows
            if all(2 - c <= rows_left - (j > i) for j, c in enumerate(col_count)):
                place(i + 1, positive_bits | 1 << cell_index(n, i, a) | 1 << cell_index(n, i, b))
            col_count[a] -= 1
            col_count[b] -= 1

    place(0, 0)
    return [ZeroConfig(n, m) for m in sorted(found)]


def count_configs(n: int) -> int:
    """Number of admissible configurations, by dynamic programming over rows."""
    _check_order(n)

    @lru_cache(maxsize=None)
    def count(i: int, need: tuple[int, ...]) -> int:
        if i == n:
            return int(not any(need))
        total = 0
        for a, b in itertools.combinations([j for j in range(n) if j != i], 2):
            if need[a] and need[b]:
                nxt = list(need)
                nxt[a] -= 1
                nxt[b] -= 1
                total += count(i + 1, tuple(nxt))
        return total

    return count(0, (2,) * n)
