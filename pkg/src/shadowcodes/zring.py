"""Exact arithmetic over Z_{2^m} and over tuples of Z_{2^m} elements."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

MAX_M = 16


class DimensionError(ValueError):
    """Raised when vectors of different length or modulus are combined."""


@dataclass(frozen=True)
class RingParams:
    m: int

    def __post_init__(self) -> None:
        if not isinstance(self.m, int) or not 1 <= self.m <= MAX_M:
            raise ValueError(f"m must be an integer in [1, {MAX_M}], got {self.m!r}")

    @property
    def modulus(self) -> int:
        return 1 << self.m

    @property
    def half(self) -> int:
        """The element 2^{m-1}."""
        return 1 << (self.m - 1)


@dataclass(frozen=True)
class RingVector:
    params: RingParams
    components: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.components) < 1:
            raise ValueError("a RingVector needs at least one component")
        q = self.params.modulus
        object.__setattr__(self, "components", tuple(int(c) % q for c in self.components))

    @classmethod
    def of(cls, params: RingParams | int, components: Iterable[int]) -> RingVector:
        if isinstance(params, int):
            params = RingParams(params)
        return cls(params, tuple(components))

    @classmethod
    def zero(cls, params: RingParams, n: int) -> RingVector:
        return cls(params, (0,) * n)

    @classmethod
    def parse(cls, text: str, params: RingParams) -> RingVector:
        """Parse the literal syntax ``"1,0,3"``."""
        parts = [p.strip() for p in text.replace(" ", ",").split(",") if p.strip()]
        if not parts:
            raise ValueError(f"empty vector literal {text!r}")
        try:
            return cls(params, tuple(int(p) for p in parts))
        except ValueError as exc:
            raise ValueError(f"bad vector literal {text!r}") from exc

    def __len__(self) -> int:
        return len(self.components)

    def __iter__(self) -> Iterator[int]:
        return iter(self.components)

    def __getitem__(self, i: int) -> int:
        return self.components[i]

    def _check(self, other: RingVector) -> None:
        if self.params != other.params or len(self) != len(other):
            raise DimensionError(
                f"cannot combine length-{len(self)} vector over Z_{self.params.modulus} "
                f"with length-{len(other)} vector over Z_{other.params.modulus}"
            )

    def __add__(self, other: RingVector) -> RingVector:
        self._check(other)
        return RingVector(self.params, tuple(a + b for a, b in zip(self, other)))

    def __sub__(self, other: RingVector) -> RingVector:
        self._check(other)
        return RingVector(self.params, tuple(a - b for a, b in zip(self, other)))

    def __neg__(self) -> RingVector:
        return RingVector(self.params, tuple(-a for a in self))

    def __rmul__(self, k: int) -> RingVector:
        return RingVector(self.params, tuple(k * a for a in self))

    def concat(self, other: RingVector) -> RingVector:
        if self.params != other.params:
            raise DimensionError("cannot concatenate vectors over different rings")
        return RingVector(self.params, self.components + other.components)

    def is_zero(self) -> bool:
        return not any(self.components)

    def __str__(self) -> str:
        return ",".join(str(c) for c in self.components)


def residue(a: int, r: int) -> int:
    """Nonnegative remainder of ``a`` modulo ``r``."""
    if r < 1:
        raise ValueError(f"modulus must be positive, got {r}")
    return a % r


def valuation2(a: int, m: int) -> int:
    """2-adic valuation of ``a`` in Z_{2^m}; the zero element has valuation m."""
    a %= 1 << m
    if a == 0:
        return m
    return (a & -a).bit_length() - 1


def element_weight(a: int, m: int) -> int:
    q = 1 << m
    a %= q
    return min(a * a, (q - a) * (q - a))


def element_order(a: int, m: int) -> int:
    return 1 << (m - valuation2(a, m))


def dot_raw(u: Sequence[int], v: Sequence[int], q: int) -> int:
    return sum(a * b for a, b in zip(u, v)) % q


def dot(u: RingVector, v: RingVector) -> int:
    u._check(v)
    return dot_raw(u.components, v.components, u.params.modulus)


def euclidean_weight(v: RingVector) -> int:
    m = v.params.m
    return sum(element_weight(a, m) for a in v)


def additive_order(v: RingVector) -> int:
    m = v.params.m
    return 1 << (m - min(valuation2(a, m) for a in v))
