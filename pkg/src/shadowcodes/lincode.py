"""Linear codes over Z_{2^m} held in Howell normal form.

A code is stored by its unique Howell basis: rows in echelon order, each
pivot a power of two 2^d, entries above a pivot reduced into [0, 2^d), and
the Howell property (every codeword vanishing on the first j columns lies in
the span of the rows whose pivot is right of j). With that basis each
codeword has exactly one expansion sum(a_i * row_i) with 0 <= a_i < 2^(m-d_i),
which gives the size, membership test and a deterministic enumeration order.
"""

from __future__ import annotations

import enum
import itertools
import os
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Iterator, Sequence

import numpy as np

from .zring import DimensionError, RingParams, RingVector, valuation2

DEFAULT_ENUM_CAP = 1 << 24
ENUM_CAP_ENV = "SHADOWCODES_ENUM_CAP"


def enumeration_cap() -> int:
    raw = os.environ.get(ENUM_CAP_ENV)
    return int(raw) if raw else DEFAULT_ENUM_CAP


class EnumerationTooLarge(RuntimeError):
    def __init__(self, size: int, cap: int):
        super().__init__(f"refusing to enumerate {size} vectors (cap is {cap}; set {ENUM_CAP_ENV})")
        self.size = size
        self.cap = cap


class CodeFormatError(ValueError):
    def __init__(self, lineno: int, msg: str):
        super().__init__(f"line {lineno}: {msg}")
        self.lineno = lineno


class TypeVerdict(str, enum.Enum):
    NOT_SELF_DUAL = "NotSelfDual"
    TYPE_I = "TypeI"
    TYPE_II = "TypeII"


Row = tuple[int, ...]


@dataclass(frozen=True)
class LinearCode:
    params: RingParams
    n: int
    rows: tuple[Row, ...]
    pivots: tuple[tuple[int, int], ...]  # (column, d) with pivot entry 2^d

    @property
    def m(self) -> int:
        return self.params.m

    @property
    def size_exponent(self) -> int:
        return sum(self.m - d for _, d in self.pivots)

    @property
    def size(self) -> int:
        return 1 << self.size_exponent

    @property
    def generators(self) -> list[RingVector]:
        return [RingVector(self.params, r) for r in self.rows]

    @property
    def orders(self) -> list[int]:
        """Range of each expansion coefficient, i.e. 2^(m - d_i)."""
        return [1 << (self.m - d) for _, d in self.pivots]

    def __contains__(self, v: RingVector | Sequence[int]) -> bool:
        return contains(self, v)

    def __iter__(self) -> Iterator[RingVector]:
        return codewords(self)

    def __str__(self) -> str:
        return dumps_code(self)


def _reduce(row: Iterable[int], q: int) -> list[int]:
    return [int(a) % q for a in row]


def howell_rows(rows: Iterable[Sequence[int]], n: int, m: int) -> tuple[list[list[int]], list[tuple[int, int]]]:
    q = 1 << m
    work = [r for r in (_reduce(r, q) for r in rows) if any(r)]
    out: list[list[int]] = []
    pivots: list[tuple[int, int]] = []
    for j in range(n):
        best, best_d = -1, m
        for idx, r in enumerate(work):
            d = valuation2(r[j], m)
            if d < best_d:
                best, best_d = idx, d
        if best < 0:
            continue
        piv = work.pop(best)
        d = best_d
        inv = pow(piv[j] >> d, -1, q)
        piv = [a * inv % q for a in piv]
        rest = []
        for r in work:
            if r[j]:
                f = r[j] >> d
                r = [(a - f * b) % q for a, b in zip(r, piv)]
            if any(r):
                rest.append(r)
        # the annihilator multiple keeps the Howell property
        extra = [(a << (m - d)) % q for a in piv]
        if any(extra):
            rest.append(extra)
        work = rest
        out.append(piv)
        pivots.append((j, d))
    for i, (j, d) in enumerate(pivots):
        piv = out[i]
        for k in range(i):
            f = out[k][j] >> d
            if f:
                out[k] = [(a - f * b) % q for a, b in zip(out[k], piv)]
    return out, pivots


def canonicalize(params: RingParams, raw_generators: Iterable[RingVector | Sequence[int]], n: int | None = None) -> LinearCode:
    """Return the canonical (Howell) form of the code spanned by ``raw_generators``.

    ``n`` is required when the generator list is empty.
    """
    rows = []
    for g in raw_generators:
        if isinstance(g, RingVector):
            if g.params != params:
                raise DimensionError("generator over a different ring")
            g = g.components
        rows.append(tuple(g))
    if n is None:
        if not rows:
            raise ValueError("length n is required for an empty generator list")
        n = len(rows[0])
    for r in rows:
        if len(r) != n:
            raise DimensionError(f"generator of length {len(r)} in a length-{n} code")
    out, pivots = howell_rows(rows, n, params.m)
    return LinearCode(params, n, tuple(tuple(r) for r in out), tuple(pivots))


def zero_code(params: RingParams, n: int) -> LinearCode:
    return canonicalize(params, [], n)


def full_space(params: RingParams, n: int) -> LinearCode:
    return canonicalize(params, [tuple(int(i == j) for j in range(n)) for i in range(n)], n)


def _as_row(code: LinearCode, v: RingVector | Sequence[int]) -> list[int]:
    if isinstance(v, RingVector):
        if v.params != code.params:
            raise DimensionError("vector over a different ring")
        v = v.components
    if len(v) != code.n:
        raise DimensionError(f"vector of length {len(v)} vs code length {code.n}")
    return _reduce(v, code.params.modulus)


def contains(code: LinearCode, v: RingVector | Sequence[int]) -> bool:
    q = code.params.modulus
    r = _as_row(code, v)
    piv = dict(zip((j for j, _ in code.pivots), range(len(code.pivots))))
    for col in range(code.n):
        if not r[col]:
            continue
        i = piv.get(col)
        if i is None:
            return False
        d = code.pivots[i][1]
        if r[col] & ((1 << d) - 1):
            return False
        f = r[col] >> d
        r = [(a - f * b) % q for a, b in zip(r, code.rows[i])]
    return True


def expand(code: LinearCode, coeffs: Sequence[int]) -> Row:
    q = code.params.modulus
    out = [0] * code.n
    for a, row in zip(coeffs, code.rows):
        if a:
            for k, b in enumerate(row):
                out[k] += a * b
    return tuple(x % q for x in out)


def _check_cap(size: int, cap: int | None) -> None:
    cap = enumeration_cap() if cap is None else cap
    if size > cap:
        raise EnumerationTooLarge(size, cap)


def iter_rows(code: LinearCode, cap: int | None = None) -> Iterator[Row]:
    """Codewords as plain tuples, in mixed-radix order (last generator fastest)."""
    _check_cap(code.size, cap)
    for coeffs in itertools.product(*(range(o) for o in code.orders)):
        yield expand(code, coeffs)


def codewords(code: LinearCode, cap: int | None = None) -> Iterator[RingVector]:
    for r in iter_rows(code, cap):
        yield RingVector(code.params, r)


enumerate_code = codewords


def codeword_array(code: LinearCode, cap: int | None = None) -> np.ndarray:
    """All codewords as an int64 array of shape (|C|, n), same order as :func:`codewords`."""
    _check_cap(code.size, cap)
    if not code.rows:
        return np.zeros((1, code.n), dtype=np.int64)
    G = np.array(code.rows, dtype=np.int64)
    coeffs = np.indices(code.orders, dtype=np.int64).reshape(len(code.orders), -1)
    return (coeffs.T @ G) % code.params.modulus


def gram_ok(rows_a: Sequence[Sequence[int]], rows_b: Sequence[Sequence[int]], q: int) -> bool:
    """True when every row of ``rows_a`` is orthogonal to every row of ``rows_b``."""
    if not rows_a or not rows_b:
        return True
    A = np.array(rows_a, dtype=object)
    B = np.array(rows_b, dtype=object)
    return not np.any((A @ B.T) % q)


def is_self_orthogonal(code: LinearCode) -> bool:
    return gram_ok(code.rows, code.rows, code.params.modulus)


def dual(code: LinearCode) -> LinearCode:
    """C^perp, from the Howell form of [G^T | I]: rows with a zero left block span the kernel."""
    n, k, m = code.n, len(code.rows), code.m
    aug = [tuple(code.rows[i][j] for i in range(k)) + tuple(int(i == j) for i in range(n)) for j in range(n)]
    rows, pivots = howell_rows(aug, k + n, m)
    kernel = [r[k:] for r, (col, _) in zip(rows, pivots) if col >= k]
    return canonicalize(code.params, kernel, n)


def augment(code: LinearCode, extra: Iterable[RingVector | Sequence[int]]) -> LinearCode:
    extra_rows = [_as_row(code, v) for v in extra]
    return canonicalize(code.params, list(code.rows) + extra_rows, code.n)


def intersect(a: LinearCode, b: LinearCode) -> LinearCode:
    if a.params != b.params or a.n != b.n:
        raise DimensionError("codes of different shape")
    return dual(canonicalize(a.params, list(dual(a).rows) + list(dual(b).rows), a.n))


def is_self_dual(code: LinearCode) -> bool:
    if (code.m * code.n) % 2:
        return False
    return 2 * code.size_exponent == code.m * code.n and is_self_orthogonal(code)


def norm_mod_2q(row: Sequence[int], m: int) -> int:
    """Sum of squares of the representatives in [0, 2^m), reduced mod 2^(m+1).

    Agrees with the Euclidean weight mod 2^(m+1), and is additive on
    self-orthogonal codes.
    """
    q = 1 << m
    return sum((a % q) ** 2 for a in row) % (2 * q)


def classify(code: LinearCode) -> TypeVerdict:
    if (code.m * code.n) % 2:
        return TypeVerdict.NOT_SELF_DUAL
    if dual(code) != code:
        return TypeVerdict.NOT_SELF_DUAL
    if all(norm_mod_2q(r, code.m) == 0 for r in code.rows):
        return TypeVerdict.TYPE_II
    return TypeVerdict.TYPE_I


# --- text file format -------------------------------------------------------


def dumps_code(code: LinearCode, comment: str | None = None) -> str:
    lines = []
    if comment:
        lines.extend(f"# {c}" for c in comment.splitlines())
    lines += [f"m {code.m}", f"n {code.n}", f"rows {len(code.rows)}"]
    lines += [" ".join(str(a) for a in r) for r in code.rows]
    return "\n".join(lines) + "\n"


def _header(lines: list[tuple[int, str]], pos: int, key: str, last_lineno: int) -> int:
    if pos >= len(lines):
        raise CodeFormatError(last_lineno + 1, f"missing '{key} <int>' header")
    lineno, text = lines[pos]
    parts = text.split()
    if len(parts) != 2 or parts[0] != key:
        raise CodeFormatError(lineno, f"expected '{key} <int>', got {text!r}")
    try:
        return int(parts[1])
    except ValueError:
        raise CodeFormatError(lineno, f"expected '{key} <int>', got {text!r}") from None


def loads_code(text: str) -> LinearCode:
    raw = text.splitlines()
    lines = []
    for lineno, line in enumerate(raw, start=1):
        line = line.split("#", 1)[0].strip()
        if line:
            lines.append((lineno, line))
    last = len(raw)
    m = _header(lines, 0, "m", last)
    try:
        params = RingParams(m)
    except ValueError as exc:
        raise CodeFormatError(lines[0][0], str(exc)) from None
    n = _header(lines, 1, "n", last)
    if n < 1:
        raise CodeFormatError(lines[1][0], "n must be positive")
    nrows = _header(lines, 2, "rows", last)
    body = lines[3:]
    if len(body) != nrows:
        where = body[nrows][0] if len(body) > nrows else last
        raise CodeFormatError(where, f"expected {nrows} rows, found {len(body)}")
    rows = []
    for lineno, line in body:
        try:
            row = [int(x) for x in line.split()]
        except ValueError:
            raise CodeFormatError(lineno, f"non-integer entry in {line!r}") from None
        if len(row) != n:
            raise CodeFormatError(lineno, f"row has {len(row)} entries, expected {n}")
        rows.append(row)
    return canonicalize(params, rows, n)


def read_code(path: str | os.PathLike) -> LinearCode:
    return loads_code(Path(path).read_text(encoding="utf-8"))


def write_code(code: LinearCode, path: str | os.PathLike, comment: str | None = None) -> None:
    Path(path).write_text(dumps_code(code, comment), encoding="utf-8")
