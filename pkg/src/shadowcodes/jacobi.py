"""Theta series and numeric Jacobi-form checks for weight enumerators.

For a code of length l over Z_{2^m}, substituting

    theta_mu(tau, z) = sum_{r = mu mod 2^m} exp(2 pi i (tau r^2 / 2^{m+1} + z r))

for X_mu in the complete weight enumerator gives a function of weight l/2 and
index l * 2^(m-1). For Type II codes of length divisible by 8 it should satisfy
the S, T and elliptic transformation laws, which we test numerically.
"""

from __future__ import annotations

import cmath
import math
from collections import Counter
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .cwe import WeightEnumerator
from .zring import RingParams

DEFAULT_RADIUS = 40
DEFAULT_TOL = 1e-6
DEFAULT_POINTS: tuple[tuple[complex, complex], ...] = (
    (2j, 0.1 + 0.2j),
    (1 + 1j, -0.3 + 0.4j),
    (0.5 + 1.5j, 0.25j),
)


class DomainError(ValueError):
    """tau outside the upper half plane, or an unusable truncation radius."""


@dataclass(frozen=True)
class ThetaParams:
    params: RingParams
    mu: int
    radius: int
    tau: complex
    z: complex

    def __post_init__(self) -> None:
        _check_tau(self.tau)
        if self.radius < self.params.modulus:
            raise DomainError(f"radius {self.radius} is below 2^m = {self.params.modulus}")


@dataclass(frozen=True)
class ThetaValue:
    value: complex
    tail_bound: float


def _check_tau(tau: complex) -> None:
    if not complex(tau).imag > 0:
        raise DomainError(f"tau = {tau} is not in the upper half plane")


def _one_sided_tail(start: int, step: int, a: float, b: float) -> float:
    """Bound sum_{t>=0} exp(-a r^2 - b r) for r = start + t*step, start > 0.

    Successive ratios exp(-a(2 r step + step^2) - b step) shrink as r grows,
    so once the first ratio is below 1 a geometric series dominates.
    """
    first = math.exp(min(700.0, -a * start * start - b * start))
    ratio = math.exp(min(700.0, -a * (2 * start * step + step * step) - b * step))
    if ratio >= 1.0:
        return math.inf
    return first / (1.0 - ratio)


def theta(p: ThetaParams) -> ThetaValue:
    """Truncated theta_{2^(m-1), mu}(tau, z) with |r| <= radius, plus a tail bound."""
    q = p.params.modulus
    mu = p.mu % q
    r = np.arange(-p.radius, p.radius + 1)
    r = r[r % q == mu]
    expo = 2j * np.pi * (p.tau * r.astype(float) ** 2 / (2 * q) + p.z * r)
    value = complex(np.exp(expo).sum())
    a = 2 * math.pi * p.tau.imag / (2 * q)
    b = 2 * math.pi * p.z.imag
    # first omitted r on each side (r > R, and -r > R for negative r)
    tail = _one_sided_tail(int(r.max()) + q, q, a, b) + _one_sided_tail(q - int(r.min()), q, a, -b)
    return ThetaValue(value, tail)


def theta_vector(params: RingParams, tau: complex, z: complex, radius: int = DEFAULT_RADIUS) -> tuple[np.ndarray, float]:
    """All theta_mu at one point; returns (values, worst tail bound)."""
    vals = [theta(ThetaParams(params, mu, radius, complex(tau), complex(z))) for mu in range(params.modulus)]
    return np.array([v.value for v in vals]), max(v.tail_bound for v in vals)


def evaluate_candidate(we: WeightEnumerator, tau: complex, z: complex, radius: int = DEFAULT_RADIUS) -> complex:
    """Substitute X_mu := theta_mu(tau, z) into the enumerator."""
    _check_tau(tau)
    values, _ = theta_vector(we.params, tau, z, radius)
    return we.evaluate(values)


@dataclass
class JacobiCheckSpec:
    weight: float
    index: int
    points: Sequence[tuple[complex, complex]] = DEFAULT_POINTS
    tol: float = DEFAULT_TOL
    radius: int = DEFAULT_RADIUS

    @classmethod
    def for_enumerator(cls, we: WeightEnumerator, **kw) -> "JacobiCheckSpec":
        length = we.n
        return cls(weight=length / 2, index=length * (1 << (we.params.m - 1)), **kw)


@dataclass
class ModularityReport:
    spec: JacobiCheckSpec
    residuals: dict[str, list[float]] = field(default_factory=dict)

    def max_residual(self, name: str | None = None) -> float:
        if name is not None:
            return max(self.residuals[name])
        return max(max(v) for v in self.residuals.values())

    @property
    def passed(self) -> bool:
        return self.max_residual() < self.spec.tol

    def to_json(self) -> dict:
        return {
            "weight": self.spec.weight,
            "index": self.spec.index,
            "radius": self.spec.radius,
            "tol": self.spec.tol,
            "points": [[str(t), str(z)] for t, z in self.spec.points],
            "residuals": {k: v for k, v in self.residuals.items()},
            "max_residual": self.max_residual(),
            "passed": self.passed,
        }


def _rel(lhs: complex, rhs: complex) -> float:
    return abs(lhs - rhs) / max(1.0, abs(rhs))


def modularity_check(we: WeightEnumerator, spec: JacobiCheckSpec | None = None) -> ModularityReport:
    """Residuals of the T, S and elliptic (1,0), (0,1) laws at each sample point."""
    spec = spec or JacobiCheckSpec.for_enumerator(we)
    k, u, R = spec.weight, spec.index, spec.radius

    def phi(tau, z):
        return evaluate_candidate(we, tau, z, R)

    report = ModularityReport(spec, {"T": [], "S": [], "elliptic(1,0)": [], "elliptic(0,1)": []})
    for tau, z in spec.points:
        tau, z = complex(tau), complex(z)
        _check_tau(tau)
        base = phi(tau, z)
        report.residuals["T"].append(_rel(phi(tau + 1, z), base))
        s_side = tau ** (-k) * cmath.exp(-2j * math.pi * u * z * z / tau) * phi(-1 / tau, z / tau)
        report.residuals["S"].append(_rel(s_side, base))
        ell = cmath.exp(2j * math.pi * u * (tau + 2 * z)) * phi(tau, z + tau)
        report.residuals["elliptic(1,0)"].append(_rel(ell, base))
        report.residuals["elliptic(0,1)"].append(_rel(phi(tau, z + 1), base))
    return report


@dataclass
class StructuralReport:
    """Exponent bookkeeping on the truncated expansion sum c(v, r) q^v xi^r."""

    terms: int
    non_integral_q: int
    negative_q: int
    outside_cone: int

    @property
    def passed(self) -> bool:
        return self.non_integral_q == 0 and self.negative_q == 0 and self.outside_cone == 0

    def to_json(self) -> dict:
        return {**self.__dict__, "passed": self.passed}


def structural_check(we: WeightEnumerator, radius: int | None = None) -> StructuralReport:
    """Expand the substituted enumerator symbolically with |r| <= radius per coordinate.

    Each monomial is tracked as (sum r^2, sum r); its q-exponent is
    sum r^2 / 2^(m+1). Counts are positive so nothing cancels, and every key
    that appears is a genuine term of the truncated series.
    """
    q = we.params.modulus
    radius = q if radius is None else radius
    u = we.n * (q // 2)
    per_mu = []
    for mu in range(q):
        rs = [r for r in range(-radius, radius + 1) if r % q == mu]
        per_mu.append(Counter({(r * r, r): 1 for r in rs}))

    def mul(a: Counter, b: Counter) -> Counter:
        out: Counter = Counter()
        for (s1, r1), c1 in a.items():
            for (s2, r2), c2 in b.items():
                out[(s1 + s2, r1 + r2)] += c1 * c2
        return out

    powers: dict[tuple[int, int], Counter] = {}

    def power(mu: int, e: int) -> Counter:
        if (mu, e) not in powers:
            acc: Counter = Counter({(0, 0): 1})
            for _ in range(e):
                acc = mul(acc, per_mu[mu])
            powers[(mu, e)] = acc
        return powers[(mu, e)]

    total: Counter = Counter()
    for exp, cnt in we.terms.items():
        acc: Counter = Counter({(0, 0): cnt})
        for mu, e in enumerate(exp):
            if e:
                acc = mul(acc, power(mu, e))
        total.update(acc)
    denom = 2 * q
    non_int = sum(1 for s, _ in total if s % denom)
    negative = sum(1 for s, _ in total if s < 0)
    # r^2 <= 4 u v with v = s / denom, i.e. r^2 * denom <= 4 u s
    cone = sum(1 for s, r in total if r * r * denom > 4 * u * s)
    return StructuralReport(len(total), non_int, negative, cone)
