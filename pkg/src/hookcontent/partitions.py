"""Strict partitions, shifted diagrams and shifted tableau counts."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from math import factorial
from typing import Iterator, Sequence

BRUTEFORCE_CAP = 12


def binom(a: int, b: int) -> int:
    """Binomial coefficient that is 0 whenever b < 0 or a < b (so binom(1, 2) == 0)."""
    if b < 0 or a < b:
        return 0
    result = 1
    for i in range(b):
        result = result * (a - i) // (i + 1)
    return result


@dataclass(frozen=True, order=True)
class StrictPartition:
    parts: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        parts = tuple(int(p) for p in self.parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        for i, p in enumerate(parts):
            if p <= 0:
                raise ValueError(f"parts must be positive: {parts}")
            if i + 1 < len(parts) and parts[i + 1] >= p:
                raise ValueError(f"parts must be strictly decreasing: {parts}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def parse(cls, text: str) -> StrictPartition:
        """Parse ``7,5,4,1``; the empty string, ``-`` and ``0`` denote the empty partition."""
        text = text.strip().strip("()")
        if text in ("", "-", "0"):
            return cls(())
        try:
            parts = tuple(int(tok) for tok in text.split(","))
        except ValueError:
            raise ValueError(f"cannot parse partition {text!r}") from None
        return cls(parts)

    def __str__(self) -> str:
        return ",".join(map(str, self.parts)) if self.parts else "-"

    def __repr__(self) -> str:
        return f"StrictPartition({self.parts})"

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __bool__(self) -> bool:
        return bool(self.parts)

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def part(self, i: int) -> int:
        """1-based part lookup, 0 beyond the length."""
        return self.parts[i - 1] if 1 <= i <= len(self.parts) else 0

    def contains(self, other: StrictPartition) -> bool:
        if other.length > self.length:
            return False
        return all(a >= b for a, b in zip(self.parts, other.parts))

    @cached_property
    def boxes(self) -> tuple[ShiftedBox, ...]:
        return tuple(boxes(self))

    @cached_property
    def hook_product(self) -> int:
        return hook_product(self)


@dataclass(frozen=True)
class ShiftedBox:
    row: int
    col: int
    hook: int

    @property
    def content(self) -> int:
        return self.col - self.row


@dataclass(frozen=True)
class SkewShape:
    outer: StrictPartition
    inner: StrictPartition = StrictPartition()

    def __post_init__(self) -> None:
        if not self.outer.contains(self.inner):
            raise ValueError(f"{self.outer} does not contain {self.inner}")

    @property
    def size(self) -> int:
        return self.outer.size - self.inner.size

    def cells(self) -> list[tuple[int, int]]:
        """Cells of outer not in inner, row-major."""
        out = []
        for i, (lam, mu) in enumerate(zip(self.outer.parts, self.inner.parts + (0,) * self.outer.length), 1):
            out.extend((i, j) for j in range(i + 1 + mu, i + 1 + lam))
        return out


def as_partition(value: StrictPartition | Sequence[int] | str) -> StrictPartition:
    if isinstance(value, StrictPartition):
        return value
    if isinstance(value, str):
        return StrictPartition.parse(value)
    return StrictPartition(tuple(value))


def boxes(lam: StrictPartition) -> list[ShiftedBox]:
    """All boxes of the shifted diagram, row-major, with hook lengths.

    The hook of (i, j) is arm + leg + 1 + lam_j, where lam_j is 0 past the length.
    """
    lam = as_partition(lam)
    parts = lam.parts
    ell = len(parts)
    result = []
    for i in range(1, ell + 1):
        last_col = i + parts[i - 1]
        for j in range(i + 1, last_col + 1):
            arm = last_col - j
            # row r covers columns r+1 .. r+lam_r
            leg = sum(1 for r in range(i + 1, ell + 1) if r + 1 <= j <= r + parts[r - 1])
            result.append(ShiftedBox(i, j, arm + leg + 1 + lam.part(j)))
    return result


def hook_product(lam: StrictPartition) -> int:
    product = 1
    for box in boxes(lam):
        product *= box.hook
    return product


def contents(lam: StrictPartition) -> list[int]:
    return [b.content for b in boxes(lam)]


def count_ssyt(lam: StrictPartition) -> int:
    """Number of standard shifted tableaux of straight shape, via |lam|!/H_lam."""
    lam = as_partition(lam)
    q, r = divmod(factorial(lam.size), hook_product(lam))
    if r:
        raise ArithmeticError(f"hook product of {lam} does not divide {lam.size}!")
    return q


def remove_box_transitions(lam: StrictPartition) -> list[StrictPartition]:
    """All strict partitions obtained by deleting one box of lam."""
    parts = lam.parts
    ell = len(parts)
    out = []
    for i in range(ell):
        if i == ell - 1 or parts[i] - 1 > parts[i + 1]:
            new = list(parts)
            new[i] -= 1
            out.append(StrictPartition(tuple(new)))
    return out


def _skew_count(outer: StrictPartition, inner: StrictPartition, cache: dict) -> int:
    if outer == inner:
        return 1
    key = (outer, inner)
    hit = cache.get(key)
    if hit is not None:
        return hit
    total = 0
    for smaller in remove_box_transitions(outer):
        if smaller.contains(inner):
            total += _skew_count(smaller, inner, cache)
    cache[key] = total
    return total


def count_ssyt_skew(shape: SkewShape, cache: dict | None = None) -> int:
    """Standard shifted skew tableaux counted by removing maximal entries recursively.

    Pass a dict as ``cache`` to share memoized values between calls.
    """
    if not shape.outer.contains(shape.inner):
        raise ValueError(f"invalid skew shape {shape.outer}/{shape.inner}")
    return _skew_count(shape.outer, shape.inner, {} if cache is None else cache)


def count_ssyt_bruteforce(shape: SkewShape, cap: int = BRUTEFORCE_CAP) -> int:
    """Count standard fillings of a skew shifted shape by explicit backtracking on a grid.

    Independent of the partition lattice: values 1..n are placed one at a time
    into cells whose left and upper neighbours inside the shape are already filled.
    """
    cells = shape.cells()
    n = len(cells)
    if n > cap:
        raise ValueError(f"shape has {n} boxes, brute force is capped at {cap}")
    cell_set = set(cells)
    preds = {
        c: [p for p in ((c[0], c[1] - 1), (c[0] - 1, c[1])) if p in cell_set]
        for c in cells
    }
    filled: set[tuple[int, int]] = set()

    def place(k: int) -> int:
        if k == n:
            return 1
        total = 0
        for c in cells:
            if c not in filled and all(p in filled for p in preds[c]):
                filled.add(c)
                total += place(k + 1)
                filled.remove(c)
        return total

    return place(0)


def scaled_count(shape: SkewShape, cache: dict | None = None) -> int:
    """f'_{lam/mu} = 2^(|lam| - |mu| - l(lam) + l(mu)) * f_{lam/mu}."""
    exponent = shape.size - shape.outer.length + shape.inner.length
    return 2**exponent * count_ssyt_skew(shape, cache)


def _strict_with_max(n: int, largest: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _strict_with_max(n - first, first - 1):
            yield (first,) + rest


def enumerate_strict(n: int) -> list[StrictPartition]:
    """Strict partitions of n in lexicographically descending order."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return [StrictPartition(p) for p in _strict_with_max(n, n)]


def add_one_box(lam: StrictPartition) -> list[StrictPartition]:
    """All strict partitions obtained by adding one box to lam, lexicographically descending."""
    parts = lam.parts
    ell = len(parts)
    out = []
    for i in range(ell):
        if i == 0 or parts[i - 1] > parts[i] + 1:
            new = list(parts)
            new[i] += 1
            out.append(StrictPartition(tuple(new)))
    if ell == 0 or parts[-1] > 1:
        out.append(StrictPartition(parts + (1,)))
    return out


def enumerate_extensions(mu: StrictPartition, n: int) -> list[StrictPartition]:
    """All strict lam containing mu with |lam/mu| = n, lexicographically descending."""
    mu = as_partition(mu)
    if n < 0:
        raise ValueError("n must be nonnegative")
    level = {mu}
    for _ in range(n):
        level = {bigger for lam in level for bigger in add_one_box(lam)}
    return sorted(level, reverse=True)
