"""The difference operator D on functions of strict partitions."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Sequence

from .corners import add_box_transitions, q_nu
from .partitions import (
    SkewShape,
    StrictPartition,
    as_partition,
    binom,
    boxes,
    enumerate_extensions,
    hook_product,
    scaled_count,
)


class PartitionFunction:
    """A named, memoized map from strict partitions to exact rationals."""

    def __init__(self, func: Callable[[StrictPartition], Fraction | int], name: str):
        self.func = func
        self.name = name
        self._cache: dict[StrictPartition, Fraction] = {}

    def __call__(self, lam: StrictPartition) -> Fraction:
        value = self._cache.get(lam)
        if value is None:
            value = Fraction(self.func(lam))
            self._cache[lam] = value
        return value

    def __repr__(self) -> str:
        return f"PartitionFunction({self.name!r})"


def inverse_hook() -> PartitionFunction:
    return PartitionFunction(lambda lam: Fraction(1, hook_product(lam)), "1/H")


def constant(value: Fraction | int = 1) -> PartitionFunction:
    return PartitionFunction(lambda lam: Fraction(value), str(value))


def power_sum(lam: StrictPartition, r: int) -> int:
    """sum over boxes of binom(c, 2)^r."""
    return sum(binom(b.content, 2) ** r for b in boxes(lam))


@dataclass(frozen=True)
class PowerSumSpec:
    """g(lam) = q_nu(lam) / H_lam * sum_terms coeff * prod_t power_sum(lam, r_t).

    A term with empty exponents is the constant 1.
    """

    terms: tuple[tuple[Fraction, tuple[int, ...]], ...]
    nu: tuple[int, ...] = ()
    label: str = field(default="", compare=False)

    def __post_init__(self) -> None:
        terms = tuple((Fraction(c), tuple(int(r) for r in rs)) for c, rs in self.terms)
        for _, rs in terms:
            if any(r <= 0 for r in rs):
                raise ValueError("power-sum exponents must be positive")
        nu = tuple(sorted((int(v) for v in self.nu), reverse=True))
        if any(v < 0 for v in nu):
            raise ValueError("nu must have nonnegative parts")
        object.__setattr__(self, "terms", terms)
        object.__setattr__(self, "nu", nu)

    @classmethod
    def product(cls, exponents: Sequence[int], nu: Sequence[int] = ()) -> PowerSumSpec:
        return cls(((Fraction(1), tuple(exponents)),), tuple(nu))

    @property
    def name(self) -> str:
        if self.label:
            return self.label
        pieces = []
        for c, rs in self.terms:
            mono = "*".join(f"p{r}" for r in rs) or "1"
            pieces.append(mono if c == 1 else f"{c}*{mono}")
        body = " + ".join(pieces) or "0"
        qpart = f"*q{list(self.nu)}" if self.nu else ""
        return f"({body}){qpart}/H"

    def numerator(self, lam: StrictPartition) -> Fraction:
        total = Fraction(0)
        for c, rs in self.terms:
            term = c
            for r in rs:
                term *= power_sum(lam, r)
            total += term
        return total * q_nu(lam, self.nu)

    def __call__(self, lam: StrictPartition) -> Fraction:
        return self.numerator(lam) / hook_product(lam)

    def function(self) -> PartitionFunction:
        return PartitionFunction(self, self.name)


def apply_D(g: Callable[[StrictPartition], Fraction], lam: StrictPartition) -> Fraction:
    """Weighted sum of g over one-box extensions (weight 1 for a new row, 2 otherwise) minus g(lam)."""
    lam = as_partition(lam)
    total = -Fraction(g(lam))
    for t in add_box_transitions(lam):
        total += t.multiplicity * Fraction(g(t.partition))
    return total


class DPowers:
    """D^r g evaluated recursively with a per-instance memo over (lam, r)."""

    def __init__(self, g: Callable[[StrictPartition], Fraction]):
        self.g = g
        self._memo: dict[tuple[StrictPartition, int], Fraction] = {}

    def __call__(self, lam: StrictPartition, r: int) -> Fraction:
        if r < 0:
            raise ValueError("r must be nonnegative")
        key = (lam, r)
        hit = self._memo.get(key)
        if hit is not None:
            return hit
        if r == 0:
            value = Fraction(self.g(lam))
        else:
            value = apply_D(lambda nu: self(nu, r - 1), lam)
        self._memo[key] = value
        return value


def apply_D_power(g: Callable[[StrictPartition], Fraction], lam: StrictPartition, r: int) -> Fraction:
    return DPowers(g)(as_partition(lam), r)


def telescoped_sum(
    g: Callable[[StrictPartition], Fraction],
    mu: StrictPartition,
    n: int,
    cache: dict | None = None,
) -> Fraction:
    """A(n) = sum over |lam/mu| = n of f'_{lam/mu} g(lam), by enumeration."""
    mu = as_partition(mu)
    cache = {} if cache is None else cache
    total = Fraction(0)
    for lam in enumerate_extensions(mu, n):
        total += scaled_count(SkewShape(lam, mu), cache) * Fraction(g(lam))
    return total


@dataclass
class TelescopeReport:
    name: str
    mu: StrictPartition
    n_max: int
    sums: list[Fraction]
    d_powers: list[Fraction]
    failures: list[str]

    @property
    def passed(self) -> bool:
        return not self.failures

    @property
    def first_counterexample(self) -> str | None:
        return self.failures[0] if self.failures else None


def verify_telescope(g: Callable[[StrictPartition], Fraction], mu: StrictPartition, n_max: int) -> TelescopeReport:
    """Check the binomial expansion of A(n) in D^k g(mu), and its inversion, for n <= n_max."""
    mu = as_partition(mu)
    powers = DPowers(g)
    cache: dict = {}
    sums = [telescoped_sum(g, mu, n, cache) for n in range(n_max + 1)]
    dks = [powers(mu, k) for k in range(n_max + 1)]
    failures = []
    for n in range(n_max + 1):
        forward = sum((binom(n, k) * dks[k] for k in range(n + 1)), Fraction(0))
        if forward != sums[n]:
            failures.append(f"n={n}: A(n)={sums[n]} but sum binom(n,k) D^k g(mu)={forward}")
        backward = sum(((-1) ** (n + k) * binom(n, k) * sums[k] for k in range(n + 1)), Fraction(0))
        if backward != dks[n]:
            failures.append(f"n={n}: D^n g(mu)={dks[n]} but inversion gives {backward}")
    return TelescopeReport(getattr(g, "name", repr(g)), mu, n_max, sums, dks, failures)


class InconclusiveError(ValueError):
    """The sample is too short to certify or refute polynomiality."""


@dataclass
class PolynomialFit:
    is_polynomial: bool
    degree: int
    coefficients: list[Fraction]  # binomial basis: value(n) = sum_k c_k binom(n, k)
    vanishing_orders: int

    def __call__(self, n: int) -> Fraction:
        return sum((c * binom(n, k) for k, c in enumerate(self.coefficients)), Fraction(0))


def difference_table(values: Sequence[Fraction]) -> list[list[Fraction]]:
    table = [[Fraction(v) for v in values]]
    while len(table[-1]) > 1:
        row = table[-1]
        table.append([b - a for a, b in zip(row, row[1:])])
    return table


def detect_polynomial(values: Sequence[Fraction], min_vanishing: int = 3) -> PolynomialFit:
    """Finite-difference polynomiality test on values at n = 0..N.

    The candidate degree d is the least order with all higher differences zero.
    At least ``min_vanishing`` zero orders certify a polynomial; none at all
    refutes it; anything in between raises InconclusiveError.
    """
    if len(values) < 3:
        raise ValueError("need values for n = 0..N with N >= 2")
    table = difference_table(values)
    N = len(values) - 1
    degree = N
    while degree >= 0 and all(v == 0 for v in table[degree]):
        degree -= 1
    # degree == -1 means the zero sequence
    vanishing = N - max(degree, 0) if degree >= 0 else N
    coefficients = [table[k][0] for k in range(max(degree, 0) + 1)]
    if vanishing >= min_vanishing:
        return PolynomialFit(True, max(degree, 0), coefficients, vanishing)
    if vanishing == 0:
        return PolynomialFit(False, degree, coefficients, 0)
    raise InconclusiveError(
        f"only {vanishing} vanishing difference orders beyond degree {degree}; need {min_vanishing}"
    )
