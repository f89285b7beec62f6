"""Length-extension of self-dual codes through their (generalized) shadows.

Given a decomposition C0^perp = C0 u C1 u C2 u C3 and two short vectors
v1, v2 with the right inner products, the code

    C* = < (v1, C1) u (v2, C2) >

is self-orthogonal of length n + k, and adding a few glue vectors w_p
(zero outside the appended block) can make it self-dual.  The appended
block occupies the first k coordinates.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from . import recipes
from .lincode import (
    LinearCode,
    TypeVerdict,
    augment,
    canonicalize,
    classify,
    codeword_array,
    dual,
    gram_ok,
)
from .shadow import CosetDecomposition, GlueKind, TypeIShadow
from .zring import dot_raw, valuation2


class ImpossibleCase(ValueError):
    """No self-dual code exists (odd n with odd m), so no recipe applies."""


class UnknownCase(ValueError):
    pass


class ConstructionIntegrityError(AssertionError):
    pass


class Claim(str, enum.Enum):
    TYPE_I = "TypeI"
    TYPE_II = "TypeII"
    SELF_DUAL = "SelfDualOnly"


def eta(i: int, j: int, kind: GlueKind) -> int:
    """Index of the coset i*C1 + j*C2 lands in."""
    if kind is GlueKind.KLEIN4:
        return i % 2 + 2 * (j % 2)
    return (i + 2 * j) % 4


def vector_order(v: Sequence[int], m: int) -> int:
    if not any(a % (1 << m) for a in v):
        return 1
    return 1 << (m - min(valuation2(a, m) for a in v))


# --- P1, P2, P3 -------------------------------------------------------------


@dataclass
class P123Report:
    order_v1: int
    order_v2: int
    p1: bool
    p1_witness: tuple[int, int] | None
    p2: bool
    p2_values: dict
    p3: bool | None  # None when skipped (m = 1)

    @property
    def passed(self) -> bool:
        return self.p1 and self.p2 and self.p3 is not False

    def to_json(self) -> dict:
        return {
            "order_v1": self.order_v1,
            "order_v2": self.order_v2,
            "P1": self.p1,
            "P1_witness": list(self.p1_witness) if self.p1_witness else None,
            "P2": self.p2,
            "P2_values": self.p2_values,
            "P3": self.p3,
            "passed": self.passed,
        }


def validate_p123(dec: CosetDecomposition, v1: Sequence[int], v2: Sequence[int]) -> P123Report:
    m, q = dec.m, dec.params.modulus
    if len(v1) != len(v2):
        raise ValueError("v1 and v2 must have the same length")
    o1, o2 = vector_order(v1, m), vector_order(v2, m)
    witness = None
    for alpha in range(o1):
        for beta in range(o2):
            if (alpha or beta) and not any((alpha * a + beta * b) % q for a, b in zip(v1, v2)):
                witness = (alpha, beta)
                break
        if witness:
            break
    ss, ts, tt = dec.dots()
    got = (dot_raw(v1, v1, q), dot_raw(v1, v2, q), dot_raw(v2, v2, q))
    want = ((-ss) % q, (-ts) % q, (-tt) % q)
    p2_values = {
        "v1.v1": got[0], "-s.s": want[0],
        "v1.v2": got[1], "-t.s": want[1],
        "v2.v2": got[2], "-t.t": want[2],
    }
    p3 = None
    if m >= 2:
        need = 2 if dec.glue_kind is GlueKind.KLEIN4 else 4
        p3 = o1 % need == 0 and o2 % 2 == 0
    return P123Report(o1, o2, witness is None, witness, got == want, p2_values, p3)


# --- C* ---------------------------------------------------------------------


@dataclass
class CStar:
    code: LinearCode
    union_size: int
    distinct_size: int
    expected_size: int
    closed: bool  # the translate union equals the span
    self_orthogonal: bool

    @property
    def disjoint(self) -> bool:
        return self.union_size == self.distinct_size

    @property
    def size_ok(self) -> bool:
        return self.code.size == self.expected_size and self.distinct_size == self.expected_size

    @property
    def passed(self) -> bool:
        return self.disjoint and self.size_ok and self.closed and self.self_orthogonal

    def to_json(self) -> dict:
        return {
            "size": self.code.size,
            "expected_size": self.expected_size,
            "translates_total": self.union_size,
            "translates_distinct": self.distinct_size,
            "disjoint": self.disjoint,
            "closed_under_addition": self.closed,
            "self_orthogonal": self.self_orthogonal,
        }


def translate_union(dec: CosetDecomposition, v1: Sequence[int], v2: Sequence[int]) -> np.ndarray:
    """Stack the sets (i v1 + j v2, C_eta(i,j)) for 1 <= i <= o(v1), 1 <= j <= o(v2)."""
    m, q = dec.m, dec.params.modulus
    o1, o2 = vector_order(v1, m), vector_order(v2, m)
    cosets = [dec.coset_array(c) for c in range(4)]
    A1, A2 = np.array(v1, dtype=np.int64), np.array(v2, dtype=np.int64)
    blocks = []
    for i in range(1, o1 + 1):
        for j in range(1, o2 + 1):
            arr = cosets[eta(i, j, dec.glue_kind)]
            prefix = np.broadcast_to((i * A1 + j * A2) % q, (len(arr), len(v1)))
            blocks.append(np.hstack([prefix, arr]))
    return np.vstack(blocks)


def _row_set(arr: np.ndarray) -> np.ndarray:
    return np.unique(arr, axis=0)


def build_cstar(dec: CosetDecomposition, v1: Sequence[int], v2: Sequence[int], strict: bool = False) -> CStar:
    """Assemble C* as an explicit union of translates and check it is a self-orthogonal code."""
    m, q = dec.m, dec.params.modulus
    v1 = tuple(a % q for a in v1)
    v2 = tuple(a % q for a in v2)
    k = len(v1)
    union = translate_union(dec, v1, v2)
    distinct = _row_set(union)
    gens = [v1 + dec.s, v2 + dec.t] + [(0,) * k + r for r in dec.c0.rows]
    span = canonicalize(dec.params, gens, k + dec.n)
    closed = span.size == len(distinct) and np.array_equal(_row_set(codeword_array(span)), distinct)
    o1, o2 = vector_order(v1, m), vector_order(v2, m)
    expected = o1 * o2 * dec.c0.size
    result = CStar(span, len(union), len(distinct), expected, bool(closed), gram_ok(span.rows, span.rows, q))
    if strict and not result.passed:
        raise ConstructionIntegrityError(f"C* failed its checks: {result.to_json()}")
    return result


# --- recipes ----------------------------------------------------------------


@dataclass(frozen=True)
class ConstructionRecipe:
    label: str
    title: str
    m: int
    n: int
    k: int
    v1: tuple[int, ...]
    v2: tuple[int, ...]
    ws: tuple[tuple[int, ...], ...]  # full length n + k
    claim: Claim
    branch: recipes.Branch

    @property
    def expected_length(self) -> int:
        return self.n + self.k

    def printed_formula(self) -> recipes.PrintedFormula:
        return recipes.printed_formula(self.branch, self.m)

    def to_json(self) -> dict:
        return {
            "label": self.label,
            "case": self.title,
            "k": self.k,
            "v1": list(self.v1),
            "v2": list(self.v2),
            "w": [list(w[: self.k]) for w in self.ws],
            "claim": self.claim.value,
        }


def family_of(dec: CosetDecomposition) -> str:
    if isinstance(dec.mode, TypeIShadow):
        return "shadow"
    q = dec.params.modulus
    ss = dot_raw(dec.s, dec.s, q)
    if ss == 0:
        return "gen0"
    if ss == q // 2:
        return "genhalf"
    raise UnknownCase(f"s.s = {ss}; only 0 and {q // 2} have recipes")


def recipe_for(dec: CosetDecomposition, variant: str = "a") -> ConstructionRecipe:
    m, n = dec.m, dec.n
    if n % 2 and m % 2:
        raise ImpossibleCase(f"no self-dual code of odd length {n} exists over Z_{2**m} with m odd")
    if variant not in ("a", "b"):
        raise UnknownCase(f"variant must be 'a' or 'b', got {variant!r}")
    family = family_of(dec)
    key = (family, n % 4, variant)
    spec = recipes.CASES.get(key)
    if spec is None:
        raise UnknownCase(f"no recipe for {key}")
    branch = spec.even if m % 2 == 0 else spec.odd
    if branch is None:
        raise UnknownCase(f"no recipe for {key} with m={m}")
    v1 = recipes.instantiate(branch.v1, m)
    v2 = recipes.instantiate(branch.v2, m)
    k = len(v1)
    ws = tuple(recipes.instantiate(w, m) + (0,) * n for w in branch.ws)
    if spec.type_ii_residue is None:
        claim = Claim.SELF_DUAL
    else:
        claim = Claim.TYPE_II if n % 8 == spec.type_ii_residue else Claim.TYPE_I
    label = f"{family}/n{n % 4}/{variant}"
    return ConstructionRecipe(label, spec.title, m, n, k, v1, v2, ws, claim, branch)


def applicable_variants(dec: CosetDecomposition) -> list[str]:
    try:
        family = family_of(dec)
    except UnknownCase:
        return []
    out = []
    for variant in ("a", "b"):
        spec = recipes.CASES.get((family, dec.n % 4, variant))
        if spec and (spec.even if dec.m % 2 == 0 else spec.odd):
            out.append(variant)
    return out


# --- extension --------------------------------------------------------------


@dataclass
class ExtensionCertificate:
    recipe: ConstructionRecipe
    p123: P123Report
    cstar: CStar | None = None
    code: LinearCode | None = None
    verdict: TypeVerdict | None = None
    checks: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return bool(self.checks) and all(self.checks.values())

    @property
    def failures(self) -> list[str]:
        return [k for k, v in self.checks.items() if not v]

    def to_json(self) -> dict:
        out = {
            "recipe": self.recipe.to_json(),
            "p123": self.p123.to_json(),
            "cstar": self.cstar.to_json() if self.cstar else None,
            "checks": self.checks,
            "passed": self.passed,
        }
        if self.code is not None:
            out["length"] = self.code.n
            out["size_exponent"] = self.code.size_exponent
            out["expected_size_exponent"] = self.recipe.m * (self.recipe.n + self.recipe.k) / 2
            out["verdict"] = self.verdict.value if self.verdict else None
        return out


def claim_holds(claim: Claim, verdict: TypeVerdict) -> bool:
    if claim is Claim.SELF_DUAL:
        return verdict is not TypeVerdict.NOT_SELF_DUAL
    return verdict.value == claim.value


def extend(dec: CosetDecomposition, recipe: ConstructionRecipe) -> ExtensionCertificate:
    if recipe.n != dec.n or recipe.m != dec.m:
        raise ValueError("recipe was instantiated for a different code shape")
    q = dec.params.modulus
    p123 = validate_p123(dec, recipe.v1, recipe.v2)
    cert = ExtensionCertificate(recipe, p123)
    cert.checks["P1"] = p123.p1
    cert.checks["P2"] = p123.p2
    if p123.p3 is not None:
        cert.checks["P3"] = p123.p3
    if not p123.passed:
        return cert
    cstar = build_cstar(dec, recipe.v1, recipe.v2)
    cert.cstar = cstar
    cert.checks["cstar_disjoint_translates"] = cstar.disjoint
    cert.checks["cstar_size"] = cstar.size_ok
    cert.checks["cstar_closed"] = cstar.closed
    cert.checks["cstar_self_orthogonal"] = cstar.self_orthogonal
    ws = [list(w) for w in recipe.ws]
    cert.checks["w_orthogonal"] = gram_ok(ws, ws, q) and gram_ok(ws, cstar.code.rows, q)
    code = augment(cstar.code, ws)
    cert.code = code
    ell = dec.n + recipe.k
    cert.checks["size"] = 2 * code.size_exponent == dec.m * ell
    cert.checks["equals_dual"] = dual(code) == code
    cert.verdict = classify(code)
    cert.checks["claim"] = claim_holds(recipe.claim, cert.verdict)
    return cert


# --- coset sum law ----------------------------------------------------------


@dataclass
class CosetSumReport:
    contained: bool  # every i c1 + j c2 lies in C_eta(i,j)
    full_when_odd: bool  # equality whenever i or j is odd
    strict_even_pairs: list[tuple[int, int]]  # (i, j) both even where the sum set is smaller

    @property
    def passed(self) -> bool:
        return self.contained and self.full_when_odd


def check_coset_sum_law(dec: CosetDecomposition, limit: int = 1 << 20) -> CosetSumReport:
    """Compare i*C1 + j*C2 (elementwise sums) with C_eta(i,j) for 1 <= i, j < 2^m."""
    q = dec.params.modulus
    c1, c2 = dec.coset_array(1), dec.coset_array(2)
    if len(c1) * len(c2) > limit:
        raise ValueError("coset product too large for an exhaustive check")
    contained, full = True, True
    strict = []
    for i in range(1, q):
        for j in range(1, q):
            sums = ((i * c1)[:, None, :] + (j * c2)[None, :, :]).reshape(-1, dec.n) % q
            sums = _row_set(sums)
            target = _row_set(dec.coset_array(eta(i, j, dec.glue_kind)))
            ok_sub = len(np.unique(np.vstack([sums, target]), axis=0)) == len(target)
            contained &= ok_sub
            if len(sums) != len(target):
                if i % 2 or j % 2:
                    full = False
                else:
                    strict.append((i, j))
    return CosetSumReport(contained, full, strict)
