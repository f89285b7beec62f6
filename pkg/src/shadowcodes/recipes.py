"""Vector tables and printed enumerator formulas for every extension case.

Entries are written with symbolic powers of two that are substituted once m
is known:

    h  = 2^(m/2 - 1)    H = 2^(m/2)     H2 = 2^(m/2 + 1)     (m even)
    a  = 2^((m-1)/2)    A = 2^((m+1)/2)                      (m odd)

A case is keyed by (family, n mod 4, variant) where family is

    "shadow"   shadow of a Type I code,
    "gen0"     generalized shadow with s.s = 0,
    "genhalf"  generalized shadow with s.s = 2^(m-1).

Glue vectors w_p are listed by their first k coordinates; the remaining n
coordinates are zero.

Printed formulas are kept as data: each factor is a linear form in the
summation indices times a scale, so the sum can be evaluated literally,
typos included.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

SCALE_TOKENS = ("h", "H", "H2", "a", "A")


def scale_value(token: str, m: int) -> int:
    if token == "0":
        return 0
    if token in ("h", "H", "H2"):
        if m % 2:
            raise ValueError(f"token {token!r} needs even m")
        e = {"h": m // 2 - 1, "H": m // 2, "H2": m // 2 + 1}[token]
    elif token in ("a", "A"):
        if m % 2 == 0:
            raise ValueError(f"token {token!r} needs odd m")
        e = {"a": (m - 1) // 2, "A": (m + 1) // 2}[token]
    else:
        raise KeyError(token)
    return 1 << e


def instantiate(row: str, m: int) -> tuple[int, ...]:
    q = 1 << m
    return tuple(scale_value(t, m) % q for t in row.split())


@dataclass(frozen=True)
class Branch:
    """One parity branch of a case: vectors plus the printed enumerator."""

    v1: str
    v2: str
    ws: tuple[str, ...]
    factors: tuple[str, ...]  # "expr" or "scale:expr"; "0" is the constant X_0
    ranges: dict  # index name -> scale token of its printed upper bound


def _pairs(k: int, spots: list[tuple[int, ...]], tok: str) -> tuple[str, ...]:
    rows = []
    for spot in spots:
        row = ["0"] * k
        for p in spot:
            row[p - 1] = tok
        rows.append(" ".join(row))
    return tuple(rows)


def _flat(k: int, tok: str, first: str | None = None) -> str:
    row = [tok] * k if first is None else [first] + ["0"] * (k - 1)
    return " ".join(row)


def _prefix(k: int, toks: list[str]) -> str:
    return " ".join(toks + ["0"] * (k - len(toks)))


def _even_ranges(nk: int) -> dict:
    r = {"i": "H2", "j": "H"}
    r.update({f"k{p}": "H" for p in range(1, nk + 1)})
    return r


def _odd_ranges(wide: list[str], narrow: list[str]) -> dict:
    r = {name: "A" for name in wide}
    r.update({name: "a" for name in narrow})
    return r


# --- Type I shadow, n = 2 mod 4 ---------------------------------------------

SHADOW_N2_A_EVEN = Branch("h h", "H 0", (), ("i+2j", "i"), _even_ranges(0))
SHADOW_N2_A_ODD = Branch("a 0", "a a", (), ("i+j", "j"), _odd_ranges(["i", "j"], []))

SHADOW_N2_B_EVEN = Branch(
    _flat(6, "h"), _flat(6, "0", "H"),
    _pairs(6, [(1, 3), (2, 4), (3, 5), (4, 6)], "H"),
    ("i+2j+2k1", "i+2k2", "i+2k1+2k3", "i+2k2+2k4", "i+2k3", "i+2k4"),
    _even_ranges(4),
)
SHADOW_N2_B_ODD = Branch(
    "a 0 a 0 a 0", "a a 0 0 0 0",
    ("a a a a 0 0", "A 0 0 0 0 0", "0 0 a a a a", "0 A 0 0 0 0"),
    ("i+j+k1+2k2", "j+k1+2k4", "i+k1+k3", "k1+k3", "i+k3", "k3"),
    _odd_ranges(["i", "j", "k1", "k3"], ["k2", "k4"]),
)

# --- Type I shadow, n = 0 mod 4 ---------------------------------------------

SHADOW_N0_A_EVEN = Branch(
    "h h h h", "H 0 0 0", ("H H 0 0", "0 0 H H"),
    ("i+2j+2k1", "i+2k1", "i+2k2", "i+2k2"),
    _even_ranges(2),
)
SHADOW_N0_A_ODD = Branch(
    "a 0 a 0", "a a 0 0", ("a a a a", "A 0 0 0"),
    ("i+j+k1+2k2", "j+k1", "i+k1", "k1"),
    _odd_ranges(["i", "j", "k1"], ["k2"]),
)
SHADOW_N0_B_EVEN = Branch(
    _flat(8, "h"), _flat(8, "0", "H"),
    _pairs(8, [(p, p + 2) for p in range(1, 7)], "H"),
    ("i+2j+2k1", "i+2k2", "i+2k1+2k3", "i+2k2+2k4", "i+2k3+2k5", "i+2k4+2k6", "i+2k5", "i+2k6"),
    _even_ranges(6),
)
SHADOW_N0_B_ODD = Branch(
    "a 0 a 0 a 0 a 0", _prefix(8, ["a", "a"]),
    _pairs(8, [(1, 2, 3, 4), (3, 4, 5, 6), (5, 6, 7, 8)], "a") + _pairs(8, [(1,), (2,), (3,)], "A"),
    ("i+j+k1+2k4", "j+k1+2k5", "i+k1+k2+2k6", "k1+k2", "i+k2+k3", "k2+k3", "i+k3", "k3"),
    _odd_ranges(["i", "j", "k1", "k2", "k3"], ["k4", "k5", "k6"]),
)

# --- Type I shadow, odd n (m even only) -------------------------------------

SHADOW_N3_A_EVEN = Branch(
    _flat(5, "h"), _flat(5, "0", "H"),
    _pairs(5, [(1, 2), (2, 3), (3, 4)], "H"),
    ("i+2j+2k1", "i+2k1+2k2", "i+2k2+2k3", "i+2k3", "i"),
    _even_ranges(3),
)
SHADOW_N3_B_EVEN = Branch(
    _flat(9, "h"), _flat(9, "0", "H"),
    _pairs(9, [(p + 1, p + 2) for p in range(1, 8)], "H"),
    ("i+2j", "i+2k1", "i+2k1+2k2", "i+2k2+2k3", "i+2k3+2k4", "i+2k7", "i+2k4+2k5", "i+2k5+2k6", "i+2k6+2k7"),
    _even_ranges(7),
)
SHADOW_N1_A_EVEN = Branch(
    "h h h", "H 0 0", ("H H 0",),
    ("i+2j+2k1", "i+2k1", "i"),
    _even_ranges(1),
)
SHADOW_N1_B_EVEN = Branch(
    _flat(7, "h"), _flat(7, "0", "H"),
    _pairs(7, [(p, p + 1) for p in range(1, 6)], "H"),
    ("i+2j+2k1", "i+2k1+2k2", "i+2k2+2k3", "i+2k3+2k4", "i+2k4+2k5", "i+2k5", "i"),
    _even_ranges(5),
)

# --- generalized shadow, s.s = 0 --------------------------------------------


def _gen0_even(k: int, singles: int) -> Branch:
    ws = _pairs(k, [(1, 2), (2, 3), (3, 4)], "H") + _pairs(k, [(5 + p,) for p in range(singles)], "H")
    factors = ("0", "i+2j+2k1", "i+2k1+2k2", "i+2k2+2k3", "i+2k3") + tuple(
        f"H:k{4 + p}" for p in range(singles)
    )
    return Branch(_prefix(k, ["h"] * 4), _flat(k, "0", "H"), ws, factors, _even_ranges(3 + singles))


GEN0_N2_A_EVEN = _gen0_even(6, 1)
GEN0_N2_A_ODD = Branch(
    "a 0 a 0 0 0", "a a 0 0 0 0",
    ("a a a a 0 0", "0 0 0 0 a a", "A 0 0 0 0 0", "0 A 0 0 0 0"),
    ("i+j+k1+2k3", "j+k1+2k4", "i+k1", "k1", "k2", "k2"),
    _odd_ranges(["i", "j", "k1", "k2"], ["k3", "k4"]),
)
GEN0_N2_B_EVEN = _gen0_even(10, 5)
GEN0_N2_B_ODD = Branch(
    _prefix(10, ["a", "0", "a"]), _prefix(10, ["a", "a"]),
    _pairs(10, [(1, 2, 3, 4), (5, 6), (7, 8), (9, 10)], "a") + _pairs(10, [(1,), (2,), (3,), (4,)], "A"),
    ("i+j+k1+2k5", "j+k1+2k6", "i+k1+2k7", "k1+2k8", "k2", "k2", "k3", "k3", "k4", "k4"),
    # the printed bounds omit i and j; their additive orders are used
    _odd_ranges(["i", "j", "k1", "k2", "k3", "k4"], ["k5", "k6", "k7", "k8"]),
)
GEN0_N3_A_EVEN = _gen0_even(5, 0)
GEN0_N3_B_EVEN = _gen0_even(9, 4)
GEN0_N1_A_EVEN = _gen0_even(7, 2)
GEN0_N1_B_EVEN = _gen0_even(11, 6)

# --- generalized shadow, s.s = 2^(m-1) --------------------------------------


def _genhalf_even(k: int, singles: int, single_scale: str = "H") -> Branch:
    ws = ("H H" + " 0" * (k - 2),) + _pairs(k, [(3 + p,) for p in range(singles)], "H")
    factors = ("0", "i+2j+2k1", "i+2k1") + tuple(f"{single_scale}:k{2 + p}" for p in range(singles))
    return Branch(_prefix(k, ["h", "h"]), _flat(k, "0", "H"), ws, factors, _even_ranges(1 + singles))


GENHALF_N0_A_EVEN = _genhalf_even(4, 1)
GENHALF_N0_A_ODD = Branch(
    "a 0 0 0", "a a 0 0", ("0 0 a a", "A 0 0 0"),
    ("i+j+2k2", "j", "k1", "k1"),
    _odd_ranges(["i", "j", "k1"], ["k2"]),
)
GENHALF_N0_B_EVEN = _genhalf_even(8, 5)
GENHALF_N0_B_ODD = Branch(
    # printed with seven entries for a length-8 vector; padded with one zero
    _prefix(8, ["a"]), _prefix(8, ["a", "a"]),
    _pairs(8, [(3, 4), (5, 6), (7, 8)], "a") + _pairs(8, [(1,), (2,), (3,)], "A"),
    ("i+j+2k4", "j+2k5", "k1+2k6", "k1", "k2", "k2", "k3", "k3"),
    _odd_ranges(["i", "j", "k1", "k2", "k3"], ["k4", "k5", "k6"]),
)
# the printed enumerator scales the two single-entry factors by h, not H
GENHALF_N3_A_EVEN = _genhalf_even(5, 2, single_scale="h")
GENHALF_N3_B_EVEN = _genhalf_even(9, 6)
GENHALF_N1_A_EVEN = _genhalf_even(7, 4)
GENHALF_N1_B_EVEN = _genhalf_even(3, 0)


@dataclass(frozen=True)
class CaseSpec:
    even: Branch | None
    odd: Branch | None
    # n mod 8 at which the result is claimed Type II; None = self-dual claim only
    type_ii_residue: int | None
    # human-readable origin, e.g. "shadow n=2 (4) (a)"
    title: str


CASES: dict[tuple[str, int, str], CaseSpec] = {
    ("shadow", 2, "a"): CaseSpec(SHADOW_N2_A_EVEN, SHADOW_N2_A_ODD, 6, "shadow, n=2 mod 4, k=2"),
    ("shadow", 2, "b"): CaseSpec(SHADOW_N2_B_EVEN, SHADOW_N2_B_ODD, 2, "shadow, n=2 mod 4, k=6"),
    ("shadow", 0, "a"): CaseSpec(SHADOW_N0_A_EVEN, SHADOW_N0_A_ODD, 4, "shadow, n=0 mod 4, k=4"),
    ("shadow", 0, "b"): CaseSpec(SHADOW_N0_B_EVEN, SHADOW_N0_B_ODD, 0, "shadow, n=0 mod 4, k=8"),
    ("shadow", 3, "a"): CaseSpec(SHADOW_N3_A_EVEN, None, 3, "shadow, n=3 mod 4, k=5"),
    ("shadow", 3, "b"): CaseSpec(SHADOW_N3_B_EVEN, None, 7, "shadow, n=3 mod 4, k=9"),
    ("shadow", 1, "a"): CaseSpec(SHADOW_N1_A_EVEN, None, 5, "shadow, n=1 mod 4, k=3"),
    ("shadow", 1, "b"): CaseSpec(SHADOW_N1_B_EVEN, None, 1, "shadow, n=1 mod 4, k=7"),
    ("gen0", 0, "a"): CaseSpec(SHADOW_N0_A_EVEN, SHADOW_N0_A_ODD, None, "s.s=0, n=0 mod 4, k=4"),
    ("gen0", 0, "b"): CaseSpec(SHADOW_N0_B_EVEN, SHADOW_N0_B_ODD, None, "s.s=0, n=0 mod 4, k=8"),
    ("gen0", 2, "a"): CaseSpec(GEN0_N2_A_EVEN, GEN0_N2_A_ODD, None, "s.s=0, n=2 mod 4, k=6"),
    ("gen0", 2, "b"): CaseSpec(GEN0_N2_B_EVEN, GEN0_N2_B_ODD, None, "s.s=0, n=2 mod 4, k=10"),
    ("gen0", 3, "a"): CaseSpec(GEN0_N3_A_EVEN, None, None, "s.s=0, n=3 mod 4, k=5"),
    ("gen0", 3, "b"): CaseSpec(GEN0_N3_B_EVEN, None, None, "s.s=0, n=3 mod 4, k=9"),
    ("gen0", 1, "a"): CaseSpec(GEN0_N1_A_EVEN, None, None, "s.s=0, n=1 mod 4, k=7"),
    ("gen0", 1, "b"): CaseSpec(GEN0_N1_B_EVEN, None, None, "s.s=0, n=1 mod 4, k=11"),
    ("genhalf", 2, "a"): CaseSpec(SHADOW_N2_A_EVEN, SHADOW_N2_A_ODD, None, "s.s=2^(m-1), n=2 mod 4, k=2"),
    ("genhalf", 2, "b"): CaseSpec(SHADOW_N2_B_EVEN, SHADOW_N2_B_ODD, None, "s.s=2^(m-1), n=2 mod 4, k=6"),
    ("genhalf", 0, "a"): CaseSpec(GENHALF_N0_A_EVEN, GENHALF_N0_A_ODD, None, "s.s=2^(m-1), n=0 mod 4, k=4"),
    ("genhalf", 0, "b"): CaseSpec(GENHALF_N0_B_EVEN, GENHALF_N0_B_ODD, None, "s.s=2^(m-1), n=0 mod 4, k=8"),
    ("genhalf", 3, "a"): CaseSpec(GENHALF_N3_A_EVEN, None, None, "s.s=2^(m-1), n=3 mod 4, k=5"),
    ("genhalf", 3, "b"): CaseSpec(GENHALF_N3_B_EVEN, None, None, "s.s=2^(m-1), n=3 mod 4, k=9"),
    ("genhalf", 1, "a"): CaseSpec(GENHALF_N1_A_EVEN, None, None, "s.s=2^(m-1), n=1 mod 4, k=7"),
    ("genhalf", 1, "b"): CaseSpec(GENHALF_N1_B_EVEN, None, None, "s.s=2^(m-1), n=1 mod 4, k=3"),
}


# --- printed-formula parsing ------------------------------------------------

_TERM = re.compile(r"^(\d*)([a-z]\d*)$")


@dataclass(frozen=True)
class PrintedFormula:
    """A printed enumerator: sum over index boxes of prod X_{scale * form}."""

    variables: tuple[str, ...]
    bounds: tuple[int, ...]
    factors: tuple[tuple[int, tuple[int, ...]], ...]  # (scale, coefficient per variable)

    def subscripts(self, point: tuple[int, ...], q: int) -> list[int]:
        return [scale * sum(c * x for c, x in zip(coeffs, point)) % q for scale, coeffs in self.factors]


def parse_linear_form(expr: str, variables: tuple[str, ...]) -> tuple[int, ...]:
    coeffs = [0] * len(variables)
    for term in expr.replace(" ", "").split("+"):
        mt = _TERM.match(term)
        if not mt:
            raise ValueError(f"cannot parse term {term!r} in {expr!r}")
        c, name = mt.groups()
        coeffs[variables.index(name)] += int(c) if c else 1
    return tuple(coeffs)


def printed_formula(branch: Branch, m: int) -> PrintedFormula:
    default_scale = "h" if m % 2 == 0 else "a"
    variables = tuple(branch.ranges)
    bounds = tuple(scale_value(branch.ranges[v], m) for v in variables)
    factors = []
    for f in branch.factors:
        if f == "0":
            factors.append((0, (0,) * len(variables)))
            continue
        scale_tok, _, expr = f.rpartition(":")
        scale = scale_value(scale_tok or default_scale, m)
        factors.append((scale, parse_linear_form(expr, variables)))
    return PrintedFormula(variables, bounds, tuple(factors))
