"""Registered hook-content identities, suite configuration and report serialization."""

from __future__ import annotations

import csv
import io
import json
import time
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Callable, Iterable

from .corners import q_k
from .diffop import InconclusiveError, PolynomialFit, PowerSumSpec, detect_polynomial, telescoped_sum
from .partitions import StrictPartition, binom, boxes, count_ssyt, enumerate_strict, hook_product

IDENTITIES = ("normalization", "skew-hook", "content-binomial", "k1-skew", "k2-skew", "poly-detect")

# which optional parameters each identity understands
PARAMETERS = {
    "normalization": (),
    "skew-hook": ("mu",),
    "content-binomial": ("k",),
    "k1-skew": ("mu",),
    "k2-skew": ("mu",),
    "poly-detect": ("mu", "exponents", "nu", "fit_max"),
}

DEFAULT_FIT_MAX = 14


class IdentityError(ValueError):
    """Unknown identity or parameters it cannot take."""


class ConfigError(ValueError):
    pass


@dataclass(frozen=True)
class IdentityCheck:
    name: str
    n_min: int = 0
    n_max: int = 9
    mu: StrictPartition = StrictPartition()
    k: int = 0
    exponents: tuple[int, ...] = (1,)
    nu: tuple[int, ...] = ()
    fit_max: int = DEFAULT_FIT_MAX

    def __post_init__(self) -> None:
        if self.name not in IDENTITIES:
            raise IdentityError(f"unknown identity {self.name!r}; known: {', '.join(IDENTITIES)}")
        if self.n_min < 0 or self.n_max < self.n_min:
            raise IdentityError(f"empty or negative range {self.n_min}..{self.n_max}")
        if self.k < 0:
            raise IdentityError("k must be nonnegative")
        if self.name == "poly-detect":
            if not self.exponents or any(r <= 0 for r in self.exponents):
                raise IdentityError("poly-detect needs positive power-sum exponents")
            if self.fit_max < 2:
                raise IdentityError("poly-detect needs a fit window of at least n = 0..2")

    def params(self) -> dict[str, object]:
        out: dict[str, object] = {}
        for key in PARAMETERS[self.name]:
            value = getattr(self, key)
            if isinstance(value, StrictPartition):
                out[key] = str(value)
            elif isinstance(value, tuple):
                out[key] = ",".join(map(str, value)) or "-"
            else:
                out[key] = value
        return out


@dataclass
class Row:
    n: int
    lhs: Fraction
    rhs: Fraction

    @property
    def passed(self) -> bool:
        return self.lhs == self.rhs


@dataclass
class IdentityReport:
    check: IdentityCheck
    rows: list[Row]
    elapsed: float = 0.0
    detail: dict[str, object] = field(default_factory=dict)
    error: str | None = None

    @property
    def passed(self) -> bool:
        return self.error is None and all(r.passed for r in self.rows)


def format_rational(x: Fraction) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


# --- left-hand sides -------------------------------------------------------

def _content_weighted(weight: Callable[[int], int], mu: StrictPartition) -> Callable[[StrictPartition], Fraction]:
    """lam -> H_mu / H_lam * (sum_lam weight(c) - sum_mu weight(c))."""
    base = sum(weight(b.content) for b in boxes(mu))
    h_mu = hook_product(mu)

    def g(lam: StrictPartition) -> Fraction:
        return Fraction(h_mu * (sum(weight(b.content) for b in boxes(lam)) - base), hook_product(lam))

    return g


def _normalization(check: IdentityCheck, cache: dict) -> list[Row]:
    rows = []
    for n in range(check.n_min, check.n_max + 1):
        lhs = sum(2 ** (n - lam.length) * count_ssyt(lam) ** 2 for lam in enumerate_strict(n))
        rows.append(Row(n, Fraction(lhs), Fraction(factorial(n))))
    return rows


def _skew_hook(check: IdentityCheck, cache: dict) -> list[Row]:
    g = lambda lam: Fraction(1, hook_product(lam))  # noqa: E731
    rhs = Fraction(1, hook_product(check.mu))
    return [Row(n, telescoped_sum(g, check.mu, n, cache), rhs) for n in range(check.n_min, check.n_max + 1)]


def _content_binomial(check: IdentityCheck, cache: dict) -> list[Row]:
    k = check.k
    g = _content_weighted(lambda c: binom(c + k - 1, 2 * k), StrictPartition())
    return [
        Row(n, telescoped_sum(g, StrictPartition(), n, cache), Fraction(2**k, factorial(k + 1)) * binom(n, k + 1))
        for n in range(check.n_min, check.n_max + 1)
    ]


def _k1_skew(check: IdentityCheck, cache: dict) -> list[Row]:
    mu = check.mu
    g = _content_weighted(lambda c: binom(c, 2), mu)
    return [
        Row(n, telescoped_sum(g, mu, n, cache), Fraction(binom(n, 2) + n * mu.size))
        for n in range(check.n_min, check.n_max + 1)
    ]


def k2_skew_rhs(mu: StrictPartition, n: int) -> Fraction:
    s = mu.size
    return (
        Fraction(2, 3) * binom(n, 3)
        + Fraction(2, 3) * s * binom(n, 2)
        + Fraction(q_k(mu, 2) + s * s - 2 * s, 12) * n
    )


def _k2_skew(check: IdentityCheck, cache: dict) -> list[Row]:
    mu = check.mu
    g = _content_weighted(lambda c: binom(c + 1, 4), mu)
    return [Row(n, telescoped_sum(g, mu, n, cache), k2_skew_rhs(mu, n)) for n in range(check.n_min, check.n_max + 1)]


def _poly_detect(check: IdentityCheck, cache: dict) -> tuple[list[Row], dict[str, object]]:
    spec = PowerSumSpec.product(check.exponents, check.nu)
    values = {n: telescoped_sum(spec, check.mu, n, cache) for n in range(check.fit_max + 1)}
    fit: PolynomialFit = detect_polynomial([values[n] for n in range(check.fit_max + 1)])
    detail: dict[str, object] = {
        "fit": f"0..{check.fit_max}",
        "polynomial": fit.is_polynomial,
        "degree": fit.degree,
        "vanishing_orders": fit.vanishing_orders,
        "binomial_coefficients": [format_rational(c) for c in fit.coefficients],
    }
    rows = []
    for n in range(check.n_min, check.n_max + 1):
        lhs = values[n] if n in values else telescoped_sum(spec, check.mu, n, cache)
        rows.append(Row(n, lhs, fit(n)))
    if not fit.is_polynomial:
        # a non-polynomial sample cannot pass, whatever the rows say
        detail["error"] = "sample is not polynomial"
    return rows, detail


def run_identity(check: IdentityCheck) -> IdentityReport:
    """Evaluate both sides of one identity for every n in the check's range."""
    start = time.perf_counter()
    cache: dict = {}
    detail: dict[str, object] = {}
    error = None
    if check.name == "normalization":
        rows = _normalization(check, cache)
    elif check.name == "skew-hook":
        rows = _skew_hook(check, cache)
    elif check.name == "content-binomial":
        rows = _content_binomial(check, cache)
    elif check.name == "k1-skew":
        rows = _k1_skew(check, cache)
    elif check.name == "k2-skew":
        rows = _k2_skew(check, cache)
    else:
        try:
            rows, detail = _poly_detect(check, cache)
            error = detail.pop("error", None)
        except InconclusiveError as exc:
            rows, error = [], f"inconclusive: {exc}"
    return IdentityReport(check, rows, time.perf_counter() - start, detail, error)


# --- configuration ---------------------------------------------------------

@dataclass
class SuiteConfig:
    checks: list[IdentityCheck]
    seed: int = 0


def parse_range(text: str) -> tuple[int, int]:
    """``0..12`` or a single integer ``7`` (meaning 7..7)."""
    text = text.strip()
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            return int(lo), int(hi)
        value = int(text)
    except ValueError:
        raise ValueError(f"bad range {text!r}; expected A..B") from None
    return value, value


def parse_int_list(text: str) -> list[int]:
    text = text.strip()
    if ".." in text:
        lo, hi = parse_range(text)
        return list(range(lo, hi + 1))
    return [int(tok) for tok in text.split(",") if tok.strip()]


def parse_tuple(text: str) -> tuple[int, ...]:
    text = text.strip()
    if text in ("", "-"):
        return ()
    return tuple(int(tok) for tok in text.split(","))


def parse_partition_list(text: str) -> list[StrictPartition]:
    return [StrictPartition.parse(tok) for tok in text.split(";")]


MU_SET = "-; 1; 3,1; 4,2,1"

DEFAULT_SETTINGS: dict[str, dict[str, str]] = {
    "normalization": {"n": "0..18"},
    "skew-hook": {"n": "0..9", "mu": "-; 1; 2,1; 4,2,1"},
    "content-binomial": {"n": "0..14", "k": "0,1,2,3,4"},
    "k1-skew": {"n": "0..9", "mu": MU_SET},
    "k2-skew": {"n": "0..9", "mu": MU_SET},
    "poly-detect": {"n": "0..15", "mu": "-; 2,1", "r": "1; 2; 1,1", "nu": "-; 1", "fit": str(DEFAULT_FIT_MAX)},
}

GLOBAL_KEYS = ("identities", "n", "n_max", "seed")
IDENTITY_KEYS = ("n", "n_max", "mu", "k", "r", "nu", "fit")


def expand_checks(name: str, settings: dict[str, str]) -> list[IdentityCheck]:
    """One IdentityCheck per combination of the listed parameter values."""
    n_min, n_max = parse_range(settings["n"])
    if "n_max" in settings:
        n_max = int(settings["n_max"])
        n_min = min(n_min, n_max)
    allowed = PARAMETERS[name]
    mus = parse_partition_list(settings["mu"]) if "mu" in allowed else [StrictPartition()]
    ks = parse_int_list(settings["k"]) if "k" in allowed else [0]
    rs = [parse_tuple(t) for t in settings["r"].split(";")] if "exponents" in allowed else [(1,)]
    nus = [parse_tuple(t) for t in settings["nu"].split(";")] if "nu" in allowed else [()]
    fit = int(settings["fit"]) if "fit_max" in allowed else DEFAULT_FIT_MAX
    checks = []
    for mu in mus:
        for k in ks:
            for r in rs:
                for nu in nus:
                    checks.append(IdentityCheck(name, n_min, n_max, mu, k, r, nu, fit))
    return checks


def parse_config(text: str) -> SuiteConfig:
    """Parse the flat ``key = value`` suite format.

    Global keys: identities, n, n_max, seed. Per-identity keys are written
    ``<identity>.<key>`` with key in n, n_max, mu, k, r, nu, fit. Lists of
    partitions and exponent tuples are separated by ``;``. ``#`` starts a comment.
    """
    globals_: dict[str, str] = {}
    local: dict[str, dict[str, str]] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"line {lineno}: expected 'key = value': {raw.strip()!r}")
        key, value = (s.strip() for s in line.split("=", 1))
        if "." in key:
            ident, sub = key.split(".", 1)
            if ident not in IDENTITIES:
                raise ConfigError(f"line {lineno}: unknown identity {ident!r}")
            if sub not in IDENTITY_KEYS:
                raise ConfigError(f"line {lineno}: unknown key {sub!r} for {ident}")
            local.setdefault(ident, {})[sub] = value
        elif key in GLOBAL_KEYS:
            globals_[key] = value
        else:
            raise ConfigError(f"line {lineno}: unknown key {key!r}")
        if key == "identities":
            for ident in (s.strip() for s in value.split(",")):
                if ident not in IDENTITIES:
                    raise ConfigError(f"line {lineno}: unknown identity {ident!r}")

    names = [s.strip() for s in globals_.get("identities", ",".join(IDENTITIES)).split(",") if s.strip()]
    try:
        seed = int(globals_.get("seed", "0"))
        checks = []
        for name in names:
            settings = dict(DEFAULT_SETTINGS[name])
            for key in ("n", "n_max"):
                if key in globals_:
                    settings[key] = globals_[key]
            settings.update(local.get(name, {}))
            checks.extend(expand_checks(name, settings))
    except (ValueError, IdentityError) as exc:
        raise ConfigError(str(exc)) from None
    return SuiteConfig(checks, seed)


def default_config() -> SuiteConfig:
    return parse_config("")


def run_suite(config: SuiteConfig) -> tuple[list[IdentityReport], int]:
    reports = [run_identity(check) for check in config.checks]
    return reports, 0 if all(r.passed for r in reports) else 1


# --- output ----------------------------------------------------------------

def report_to_dict(report: IdentityReport) -> dict[str, object]:
    out: dict[str, object] = {
        "identity": report.check.name,
        "params": {"n": f"{report.check.n_min}..{report.check.n_max}", **report.check.params()},
        "rows": [
            {"n": r.n, "lhs": format_rational(r.lhs), "rhs": format_rational(r.rhs), "pass": r.passed}
            for r in report.rows
        ],
        "pass": report.passed,
    }
    if report.detail:
        out["detail"] = report.detail
    if report.error:
        out["error"] = report.error
    return out


def _param_string(check: IdentityCheck) -> str:
    return " ".join(f"{k}={v}" for k, v in check.params().items())


def render(reports: Iterable[IdentityReport], fmt: str = "text", timing: bool = False) -> str:
    reports = list(reports)
    if fmt == "json":
        lines = []
        for rep in reports:
            d = report_to_dict(rep)
            if timing:
                d["elapsed"] = round(rep.elapsed, 6)
            lines.append(json.dumps(d, sort_keys=False))
        return "\n".join(lines) + ("\n" if lines else "")
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["identity", "params", "n", "lhs", "rhs", "pass"])
        for rep in reports:
            for r in rep.rows:
                writer.writerow(
                    [rep.check.name, _param_string(rep.check), r.n, format_rational(r.lhs),
                     format_rational(r.rhs), "pass" if r.passed else "FAIL"]
                )
        return buf.getvalue()
    if fmt != "text":
        raise ValueError(f"unknown format {fmt!r}")
    out = []
    for rep in reports:
        head = f"{rep.check.name} {_param_string(rep.check)}".rstrip()
        status = "PASS" if rep.passed else "FAIL"
        suffix = f" ({rep.elapsed:.3f}s)" if timing else ""
        out.append(f"[{status}] {head} n={rep.check.n_min}..{rep.check.n_max}{suffix}")
        if rep.detail:
            out.append("  " + " ".join(f"{k}={v}" for k, v in rep.detail.items() if k != "binomial_coefficients"))
        if rep.error:
            out.append(f"  error: {rep.error}")
        for r in rep.rows:
            mark = "ok" if r.passed else "MISMATCH"
            out.append(f"  n={r.n:<3d} lhs={format_rational(r.lhs)}  rhs={format_rational(r.rhs)}  {mark}")
    return "\n".join(out) + ("\n" if out else "")
