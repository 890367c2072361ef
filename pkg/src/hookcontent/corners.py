"""Corner contents, q-statistics, box additions and the partial-fraction kernel."""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .partitions import StrictPartition, as_partition, binom


@dataclass(frozen=True)
class CornerProfile:
    """Outer corners (removable boxes) and inner corners of a strict partition.

    ``outer_coords`` are (row, col) sorted by decreasing row; ``xs`` and ``ys``
    are the inner and outer corner contents, x_0 = 1 always.
    """

    outer_coords: tuple[tuple[int, int], ...]
    inner_coords: tuple[tuple[int, int], ...]
    xs: tuple[int, ...]
    ys: tuple[int, ...]

    @property
    def m(self) -> int:
        return len(self.ys)


def corner_profile(lam: StrictPartition) -> CornerProfile:
    lam = as_partition(lam)
    parts = lam.parts
    ell = len(parts)
    outer = []
    for row in range(ell, 0, -1):
        if row == ell or parts[row - 1] - 1 > parts[row]:
            outer.append((row, row + parts[row - 1]))
    alphas = [a for a, _ in outer] + [0]
    betas = [ell + 1] + [b for _, b in outer]
    inner = tuple((alphas[i], betas[i]) for i in range(len(outer) + 1))
    xs = tuple(b - a for a, b in inner)
    ys = tuple(b - a for a, b in outer)
    return CornerProfile(tuple(outer), inner, xs, ys)


def q_k(lam: StrictPartition, k: int) -> int:
    """sum binom(x_i, 2)^k - sum binom(y_j, 2)^k over inner/outer corner contents."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    prof = corner_profile(lam)
    return sum(binom(x, 2) ** k for x in prof.xs) - sum(binom(y, 2) ** k for y in prof.ys)


def q_nu(lam: StrictPartition, nu: Sequence[int]) -> int:
    result = 1
    for k in nu:
        result *= q_k(lam, k)
    return result


@dataclass(frozen=True)
class Transition:
    index: int
    partition: StrictPartition
    multiplicity: int


def add_box_transitions(lam: StrictPartition) -> list[Transition]:
    """The one-box extensions lam^{i+} indexed by inner corner.

    i = 0 (a new row of length 1) is present only when y_1 > 1 or lam is empty,
    with multiplicity 1; every other transition has multiplicity 2.
    """
    lam = as_partition(lam)
    prof = corner_profile(lam)
    parts = lam.parts
    out = []
    if prof.m == 0 or prof.ys[0] > 1:
        out.append(Transition(0, StrictPartition(parts + (1,)), 1))
    for i in range(1, prof.m + 1):
        # the inner corner with content x_i sits at the end of the row whose part is x_i - 1
        row = parts.index(prof.xs[i] - 1)
        new = list(parts)
        new[row] += 1
        out.append(Transition(i, StrictPartition(tuple(new)), 2))
    return out


def _transition(lam: StrictPartition, i: int) -> Transition:
    for t in add_box_transitions(lam):
        if t.index == i:
            return t
    raise ValueError(f"no transition with index {i} for {lam}")


def hook_ratio(lam: StrictPartition, i: int) -> Fraction:
    """H_lam / H_{lam^{i+}} from corner contents alone."""
    lam = as_partition(lam)
    prof = corner_profile(lam)
    if not 0 <= i <= prof.m:
        raise ValueError(f"corner index {i} out of range for {lam}")
    if i == 0 and prof.m > 0 and prof.ys[0] == 1:
        raise ValueError(f"{lam} ends in a part 1; no box of content 1 can be added")
    a = [binom(x, 2) for x in prof.xs]
    b = [binom(y, 2) for y in prof.ys]
    num = 1
    for bj in b:
        num *= a[i] - bj
    den = 1
    for j, aj in enumerate(a):
        if j != i:
            den *= a[i] - aj
    ratio = Fraction(num, den)
    return ratio if i == 0 else ratio / 2


@dataclass(frozen=True)
class RationalPoint:
    a: tuple[Fraction, ...]
    b: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "a", tuple(Fraction(v) for v in self.a))
        object.__setattr__(self, "b", tuple(Fraction(v) for v in self.b))
        if len(self.a) != len(self.b) + 1:
            raise ValueError("need exactly one more a than b")
        if len(set(self.a)) != len(self.a):
            raise ValueError("the a values must be distinct")

    @property
    def m(self) -> int:
        return len(self.b)

    def q(self, k: int) -> Fraction:
        return sum(x**k for x in self.a) - sum(y**k for y in self.b)

    def q_nu(self, nu: Sequence[int]) -> Fraction:
        result = Fraction(1)
        for k in nu:
            result *= self.q(k)
        return result

    @classmethod
    def of_partition(cls, lam: StrictPartition) -> RationalPoint:
        prof = corner_profile(lam)
        return cls(tuple(binom(x, 2) for x in prof.xs), tuple(binom(y, 2) for y in prof.ys))


def pf_kernel(p: RationalPoint, i: int) -> Fraction:
    num = Fraction(1)
    for bj in p.b:
        num *= p.a[i] - bj
    den = Fraction(1)
    for j, aj in enumerate(p.a):
        if j != i:
            den *= p.a[i] - aj
    return num / den


def pf_moment(p: RationalPoint, k: int) -> Fraction:
    return sum((pf_kernel(p, i) * p.a[i] ** k for i in range(len(p.a))), Fraction(0))


Monomial = tuple[int, ...]  # a partition nu, parts descending, standing for q_nu


def _mul(f: dict[Monomial, Fraction], g: dict[Monomial, Fraction]) -> dict[Monomial, Fraction]:
    out: dict[Monomial, Fraction] = {}
    for mf, cf in f.items():
        for mg, cg in g.items():
            key = tuple(sorted(mf + mg, reverse=True))
            out[key] = out.get(key, Fraction(0)) + cf * cg
    return {k: v for k, v in out.items() if v}


@lru_cache(maxsize=None)
def _exp_coefficients(k: int) -> tuple[tuple[Monomial, Fraction], ...]:
    # E = exp(S) with S = sum q_j z^j / j satisfies E' = S' E, i.e.
    # k e_k = sum_{j=1}^k q_j e_{k-j}
    if k == 0:
        return (((), Fraction(1)),)
    acc: dict[Monomial, Fraction] = {}
    for j in range(1, k + 1):
        term = _mul({(j,): Fraction(1)}, dict(_exp_coefficients(k - j)))
        for mono, c in term.items():
            acc[mono] = acc.get(mono, Fraction(0)) + c / k
    return tuple(sorted(((m, c) for m, c in acc.items() if c), reverse=True))


def pf_expand(k: int) -> dict[Monomial, Fraction]:
    """Coefficients xi_nu with pf_moment(p, k) = sum_nu xi_nu q_nu(p) for every point p.

    Obtained as the z^k coefficient of exp(sum_{j>=1} q_j z^j / j) in formal q's.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    return dict(_exp_coefficients(k))


def evaluate_expansion(xi: dict[Monomial, Fraction], p: RationalPoint) -> Fraction:
    return sum((c * p.q_nu(nu) for nu, c in xi.items()), Fraction(0))


def expansion_to_json(xi: dict[Monomial, Fraction]) -> str:
    """``{"1,1": "1/2", "2": "1/2"}``; the empty partition is ``"-"``."""
    def key(nu: Monomial) -> str:
        return ",".join(map(str, nu)) or "-"

    def value(c: Fraction) -> str:
        return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"

    return json.dumps({key(nu): value(c) for nu, c in xi.items()})


def expansion_from_json(text: str) -> dict[Monomial, Fraction]:
    raw = json.loads(text)
    return {
        (() if k == "-" else tuple(int(t) for t in k.split(","))): Fraction(v)
        for k, v in raw.items()
    }


def q_shift(lam: StrictPartition, i: int, k: int) -> int:
    """q_k(lam^{i+}) - q_k(lam), written through the content x_i of the added box."""
    lam = as_partition(lam)
    _transition(lam, i)
    x = corner_profile(lam).xs[i]
    return binom(x + 1, 2) ** k + binom(x - 1, 2) ** k - 2 * binom(x, 2) ** k
