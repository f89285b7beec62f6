"""Index-2 subcodes, shadows and the coset structure of C0^perp / C0.

Both kernels used here (the Euclidean one and the ``u -> u.s`` one) are
kernels of homomorphisms from C onto Z_2, so they are built from generators
alone: generators in the kernel are kept, the others are differenced against
a fixed "odd" generator p, and 2*g_p is added.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .lincode import (
    LinearCode,
    TypeVerdict,
    canonicalize,
    classify,
    codeword_array,
    contains,
    dual,
    iter_rows,
    norm_mod_2q,
)
from .zring import RingVector, dot_raw, element_weight


class NotTypeIError(ValueError):
    pass


class InvalidShadowVector(ValueError):
    pass


class ImageShapeError(ValueError):
    def __init__(self, image: list[int], modulus: int):
        super().__init__(f"image of u -> u.s is {image}, expected [0, {modulus // 2}]")
        self.image = image


class TableViolation(AssertionError):
    pass


class CongruenceViolation(AssertionError):
    pass


class GlueKind(str, enum.Enum):
    KLEIN4 = "Klein4"
    CYCLIC4 = "Cyclic4"


@dataclass(frozen=True)
class TypeIShadow:
    """Decompose with the Euclidean kernel (doubly-even-style subcode)."""

    def __str__(self) -> str:
        return "TypeIShadow"


@dataclass(frozen=True)
class GeneralizedShadow:
    s: tuple[int, ...]

    def __str__(self) -> str:
        return f"GeneralizedShadow({','.join(map(str, self.s))})"


ShadowMode = TypeIShadow | GeneralizedShadow


def _index2_kernel(code: LinearCode, odd: Sequence[bool]) -> LinearCode:
    q = code.params.modulus
    rows = code.rows
    if not any(odd):
        return code
    p = odd.index(True)
    gp = rows[p]
    gens = []
    for i, (g, bit) in enumerate(zip(rows, odd)):
        if i == p:
            continue
        gens.append(tuple((a - b) % q for a, b in zip(g, gp)) if bit else g)
    gens.append(tuple(2 * a % q for a in gp))
    return canonicalize(code.params, gens, code.n)


def euclidean_kernel(code: LinearCode) -> LinearCode:
    """C0 = codewords whose Euclidean weight is divisible by 2^(m+1)."""
    verdict = classify(code)
    if verdict is not TypeVerdict.TYPE_I:
        raise NotTypeIError(f"code is {verdict.value}; a shadow needs a Type I code")
    q = code.params.modulus
    return _index2_kernel(code, [norm_mod_2q(g, code.m) == q for g in code.rows])


def psi_image(code: LinearCode, s: Sequence[int]) -> list[int]:
    """The subgroup of Z_{2^m} generated by the values g.s over the generators."""
    q = code.params.modulus
    vals = [dot_raw(g, s, q) for g in code.rows]
    step = q
    for v in vals:
        if v:
            step = min(step, v & -v)
    return list(range(0, q, step))


def psi_kernel(code: LinearCode, s: RingVector | Sequence[int]) -> LinearCode:
    """ker(u -> u.s) on a self-dual code, when that map has image {0, 2^(m-1)}."""
    s = tuple(s)
    if len(s) != code.n:
        raise InvalidShadowVector(f"s has length {len(s)}, code length is {code.n}")
    if contains(code, s):
        raise InvalidShadowVector("s lies in the code, so u.s vanishes identically")
    q = code.params.modulus
    image = psi_image(code, s)
    if image != [0, q // 2]:
        raise ImageShapeError(image, q)
    return _index2_kernel(code, [dot_raw(g, s, q) != 0 for g in code.rows])


def _first_outside(space: LinearCode, avoid: LinearCode) -> tuple[int, ...]:
    for r in iter_rows(space, cap=float("inf")):
        if not contains(avoid, r):
            return r
    raise ValueError("no element outside the subcode")  # unreachable for proper subgroups


@dataclass(frozen=True)
class CosetDecomposition:
    code: LinearCode
    c0: LinearCode
    c0_dual: LinearCode
    t: tuple[int, ...]
    s: tuple[int, ...]
    glue_kind: GlueKind
    mode: ShadowMode
    swapped: bool = False  # True once s has been replaced by s + t

    @property
    def params(self):
        return self.code.params

    @property
    def n(self) -> int:
        return self.code.n

    @property
    def m(self) -> int:
        return self.code.m

    def representative(self, i: int) -> tuple[int, ...]:
        q = self.params.modulus
        i %= 4
        if i == 0:
            return (0,) * self.n
        if i == 1:
            return self.s
        if i == 2:
            return self.t
        return tuple((a + b) % q for a, b in zip(self.s, self.t))

    def coset_array(self, i: int, cap: int | None = None) -> np.ndarray:
        rep = np.array(self.representative(i), dtype=np.int64)
        return (codeword_array(self.c0, cap) + rep) % self.params.modulus

    def coset_contains(self, i: int, v: Sequence[int]) -> bool:
        q = self.params.modulus
        return contains(self.c0, [(a - b) % q for a, b in zip(v, self.representative(i))])

    def which_coset(self, v: Sequence[int]) -> int | None:
        for i in range(4):
            if self.coset_contains(i, v):
                return i
        return None

    def shadow_array(self, cap: int | None = None) -> np.ndarray:
        return np.vstack([self.coset_array(1, cap), self.coset_array(3, cap)])

    def dots(self) -> tuple[int, int, int]:
        """(s.s, t.s, t.t) mod 2^m."""
        q = self.params.modulus
        return dot_raw(self.s, self.s, q), dot_raw(self.t, self.s, q), dot_raw(self.t, self.t, q)

    def relabeled(self) -> "CosetDecomposition":
        """Swap the roles of C1 and C3 by taking s + t as the shadow representative."""
        return CosetDecomposition(
            self.code, self.c0, self.c0_dual, self.t, self.representative(3),
            self.glue_kind, self.mode, not self.swapped,
        )

    def to_json(self) -> dict:
        return {
            "mode": str(self.mode),
            "c0_rows": [list(r) for r in self.c0.rows],
            "c0_size": self.c0.size,
            "t": list(self.t),
            "s": list(self.s),
            "glue_kind": self.glue_kind.value,
            "shadow_size": 2 * self.c0.size,
            "relabeled": self.swapped,
        }


def decompose(code: LinearCode, mode: ShadowMode | None = None) -> CosetDecomposition:
    mode = TypeIShadow() if mode is None else mode
    if isinstance(mode, TypeIShadow):
        c0 = euclidean_kernel(code)
    elif isinstance(mode, GeneralizedShadow):
        if classify(code) is TypeVerdict.NOT_SELF_DUAL:
            raise InvalidShadowVector("generalized shadows need a self-dual code")
        c0 = psi_kernel(code, mode.s)
    else:
        raise TypeError(f"unknown mode {mode!r}")
    c0_dual = dual(c0)
    t = _first_outside(code, c0)
    if isinstance(mode, TypeIShadow):
        s = _first_outside(c0_dual, code)
    else:
        s = tuple(a % code.params.modulus for a in mode.s)
    q = code.params.modulus
    twice_s = tuple(2 * a % q for a in s)
    if contains(c0, twice_s):
        kind = GlueKind.KLEIN4
    elif contains(code, twice_s):
        kind = GlueKind.CYCLIC4
    else:  # 2s in C1 or C3 would give an element of order 2 outside C; impossible for index 4
        raise AssertionError("2s lies outside C; the glue group is not of order 4")
    return CosetDecomposition(code, c0, c0_dual, t, s, kind, mode)


def find_generalized_s(code: LinearCode, rng, attempts: int = 2000, square: int | None = None) -> tuple[int, ...]:
    """Search C^perp's complement for a vector s with image {0, 2^(m-1)}.

    ``square`` optionally pins s.s (mod 2^m). ``rng`` is a ``random.Random``.
    """
    q = code.params.modulus
    half = q // 2
    for _ in range(attempts):
        s = tuple(rng.randrange(q) for _ in range(code.n))
        if contains(code, s):
            continue
        if psi_image(code, s) != [0, half]:
            continue
        if square is not None and dot_raw(s, s, q) != square % q:
            continue
        return s
    raise InvalidShadowVector("no suitable s found; try another seed or supply --s")


# --- orthogonality tables ---------------------------------------------------

MIXED = "mixed"
EXHAUSTIVE_PAIR_LIMIT = 1 << 22


def expected_table(dec: CosetDecomposition) -> list[list[int]]:
    """Predicted x.y for x in C_i, y in C_j, indexed [i][j] for i, j in 0..3."""
    q = dec.params.modulus
    half = q // 2
    if isinstance(dec.mode, GeneralizedShadow):
        ss = dot_raw(dec.s, dec.s, q)
        if ss == 0:
            variant = "b"
        elif ss == half:
            variant = "a"
        else:
            raise TableViolation(f"s.s = {ss}; no table is stated for this value")
    else:
        n = dec.n
        variant = {2: "a", 0: "b"}.get(n % 4, "c")
    T = [[0] * 4 for _ in range(4)]

    def put(i, j, v):
        T[i][j] = T[j][i] = v % q

    if variant == "a":
        put(1, 1, half); put(1, 2, half); put(1, 3, 0)
        put(2, 2, 0); put(2, 3, half); put(3, 3, half)
    elif variant == "b":
        put(1, 1, 0); put(1, 2, half); put(1, 3, half)
        put(2, 2, 0); put(2, 3, half); put(3, 3, 0)
    else:
        a = dec.n % 4
        # 2^(m-2) a is fractional only for m = 1, where odd n is excluded
        quarter_a = (a << dec.m) >> 2
        put(1, 1, half - quarter_a); put(3, 3, half - quarter_a)
        put(1, 3, -quarter_a)
        put(1, 2, half); put(2, 3, half); put(2, 2, 0)
    return T


@dataclass
class OrthogonalityTable:
    values: list[list[int | str]]
    expected: list[list[int]]
    relabeled: bool = False
    method: str = "exhaustive"
    mismatches: list[tuple[int, int]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.mismatches

    def to_json(self) -> dict:
        return {
            "values": self.values,
            "expected": self.expected,
            "relabeled": self.relabeled,
            "method": self.method,
            "passed": self.passed,
            "mismatches": [list(p) for p in self.mismatches],
        }


def coset_dot_table(dec: CosetDecomposition) -> tuple[list[list[int | str]], str]:
    q = dec.params.modulus
    if dec.c0.size ** 2 <= EXHAUSTIVE_PAIR_LIMIT:
        arrs = [dec.coset_array(i) for i in range(4)]
        vals: list[list[int | str]] = [[0] * 4 for _ in range(4)]
        for i in range(4):
            for j in range(4):
                prods = np.unique((arrs[i] @ arrs[j].T) % q)
                vals[i][j] = int(prods[0]) if len(prods) == 1 else MIXED
        return vals, "exhaustive"
    # x.y = r_i.r_j on every pair because each r_i is orthogonal to C0
    reps = [dec.representative(i) for i in range(4)]
    vals = [[dot_raw(reps[i], reps[j], q) for j in range(4)] for i in range(4)]
    for r in reps:
        if any(dot_raw(r, g, q) for g in dec.c0.rows):
            return [[MIXED] * 4 for _ in range(4)], "generators"
    return vals, "generators"


def _mismatches(vals, expected) -> list[tuple[int, int]]:
    return [(i, j) for i in range(4) for j in range(4) if vals[i][j] != expected[i][j]]


def verify_orthogonality(dec: CosetDecomposition, strict: bool = False) -> OrthogonalityTable:
    """Tabulate x.y over every pair of cosets and compare with the predicted table.

    If only the C1 <-> C3 relabelling makes the table match, the relabelled
    version is reported (``relabeled=True``).
    """
    vals, method = coset_dot_table(dec)
    expected = expected_table(dec)
    bad = _mismatches(vals, expected)
    table = OrthogonalityTable(vals, expected, dec.swapped, method, bad)
    if bad:
        perm = [0, 3, 2, 1]
        swapped_vals = [[vals[perm[i]][perm[j]] for j in range(4)] for i in range(4)]
        if not _mismatches(swapped_vals, expected):
            table = OrthogonalityTable(swapped_vals, expected, not dec.swapped, method, [])
    if strict and not table.passed:
        raise TableViolation(f"coset table {table.values} differs from {expected} at {table.mismatches}")
    return table


# --- shadow weights ---------------------------------------------------------


@dataclass
class ShadowWeightReport:
    modulus: int
    expected_residue: int
    residues: list[int]
    checked: int
    violations: list[tuple[int, ...]]

    @property
    def passed(self) -> bool:
        return not self.violations

    def to_json(self) -> dict:
        return {
            "modulus": self.modulus,
            "expected_residue": self.expected_residue,
            "residues": self.residues,
            "checked": self.checked,
            "violations": [list(v) for v in self.violations[:10]],
            "passed": self.passed,
        }


def shadow_weight_check(dec: CosetDecomposition, strict: bool = False) -> ShadowWeightReport:
    """Check wt_E(x) = 2^(m-2) n mod 2^(m+1) on every shadow vector.

    For m = 1 the target 2^(m-2) n is read as n/2 (an integer, since Type I
    binary codes have even length), i.e. 2 wt(x) = n mod 8.
    """
    if not isinstance(dec.mode, TypeIShadow):
        raise ValueError("the weight congruence concerns Type I shadows")
    m, n = dec.m, dec.n
    mod = 1 << (m + 1)
    target = ((n << m) >> 2) % mod
    shadow = dec.shadow_array()
    q = dec.params.modulus
    sq = np.minimum(shadow, q - shadow) ** 2
    weights = sq.sum(axis=1) % mod
    residues = sorted(int(r) for r in np.unique(weights))
    bad_idx = np.nonzero(weights != target)[0]
    violations = [tuple(int(a) for a in shadow[i]) for i in bad_idx[:100]]
    rep = ShadowWeightReport(mod, target, residues, len(shadow), violations)
    if strict and violations:
        raise CongruenceViolation(f"shadow vector {violations[0]} has weight residue != {target} mod {mod}")
    return rep


def klein_parity_consistent(dec: CosetDecomposition) -> bool:
    """For Type I shadows, Klein4 glue should coincide with even length."""
    return (dec.glue_kind is GlueKind.KLEIN4) == (dec.n % 2 == 0)


def euclidean_weight_row(row: Sequence[int], m: int) -> int:
    return sum(element_weight(a, m) for a in row)
