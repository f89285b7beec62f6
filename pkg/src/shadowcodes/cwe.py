"""Complete weight enumerators, by enumeration and by the coset-sum formulas."""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

import numpy as np

from .builder import ConstructionRecipe, eta, vector_order
from .lincode import LinearCode, codeword_array
from .shadow import CosetDecomposition
from .zring import RingParams

Exponent = tuple[int, ...]
FORMULA_POINT_CAP = 1 << 24


@dataclass(frozen=True)
class WeightEnumerator:
    """sum over vectors of prod_mu X_mu^(N_mu), stored as {(N_0, ..., N_{q-1}): count}."""

    params: RingParams
    n: int
    terms: Mapping[Exponent, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        q = self.params.modulus
        clean = {}
        for exp, cnt in self.terms.items():
            exp = tuple(int(e) for e in exp)
            if len(exp) != q or sum(exp) != self.n or min(exp) < 0:
                raise ValueError(f"exponent {exp} is not a composition of {self.n} into {q} parts")
            if cnt:
                clean[exp] = clean.get(exp, 0) + int(cnt)
        object.__setattr__(self, "terms", dict(sorted(clean.items())))

    @property
    def total(self) -> int:
        """Value at X_mu = 1, i.e. the number of vectors counted."""
        return sum(self.terms.values())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, WeightEnumerator):
            return NotImplemented
        return self.params == other.params and self.n == other.n and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.params, self.n, tuple(self.terms.items())))

    def negated(self) -> "WeightEnumerator":
        """Swap X_mu and X_{-mu}."""
        q = self.params.modulus
        perm = [(-mu) % q for mu in range(q)]
        return WeightEnumerator(self.params, self.n, {tuple(e[p] for p in perm): c for e, c in self.terms.items()})

    def evaluate(self, values: Sequence[complex]) -> complex:
        v = np.asarray(values, dtype=complex)
        if v.shape != (self.params.modulus,):
            raise ValueError("need one value per ring element")
        total = 0j
        for exp, cnt in self.terms.items():
            total += cnt * np.prod(v ** np.asarray(exp))
        return complex(total)

    def euclidean_histogram(self) -> dict[int, int]:
        q = self.params.modulus
        w = [min(mu * mu, (q - mu) ** 2) for mu in range(q)]
        hist: Counter = Counter()
        for exp, cnt in self.terms.items():
            hist[sum(a * b for a, b in zip(exp, w))] += cnt
        return dict(sorted(hist.items()))

    def hamming_histogram(self) -> dict[int, int]:
        hist: Counter = Counter()
        for exp, cnt in self.terms.items():
            hist[self.n - exp[0]] += cnt
        return dict(sorted(hist.items()))

    def to_json(self) -> dict:
        return {
            "m": self.params.m,
            "n": self.n,
            "terms": [{"exp": list(e), "count": c} for e, c in self.terms.items()],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json())

    @classmethod
    def from_json(cls, data: dict) -> "WeightEnumerator":
        return cls(RingParams(int(data["m"])), int(data["n"]), {tuple(t["exp"]): int(t["count"]) for t in data["terms"]})

    def __str__(self) -> str:
        parts = []
        for exp, cnt in self.terms.items():
            mono = "*".join(f"X{mu}" + (f"^{e}" if e > 1 else "") for mu, e in enumerate(exp) if e)
            parts.append(mono if cnt == 1 else f"{cnt}*{mono}")
        return " + ".join(parts) if parts else "0"


def compositions(arr: np.ndarray, q: int) -> np.ndarray:
    """Per-row counts of each ring element: shape (rows, q)."""
    arr = np.asarray(arr, dtype=np.int64) % q
    if arr.ndim != 2:
        raise ValueError("expected a 2-D array of vectors")
    rows = np.arange(arr.shape[0])[:, None]
    out = np.zeros((arr.shape[0], q), dtype=np.int64)
    np.add.at(out, (np.broadcast_to(rows, arr.shape), arr), 1)
    return out


def _tally(comp: np.ndarray) -> dict[Exponent, int]:
    if len(comp) == 0:
        return {}
    uniq, counts = np.unique(comp, axis=0, return_counts=True)
    return {tuple(int(x) for x in u): int(c) for u, c in zip(uniq, counts)}


def cwe_direct(vectors: np.ndarray | Iterable[Sequence[int]], params: RingParams, n: int) -> WeightEnumerator:
    arr = np.asarray(vectors if isinstance(vectors, np.ndarray) else list(vectors), dtype=np.int64)
    if arr.size == 0:
        arr = arr.reshape(0, n)
    if arr.shape[1] != n:
        raise ValueError(f"vectors have length {arr.shape[1]}, expected {n}")
    return WeightEnumerator(params, n, _tally(compositions(arr, params.modulus)))


def cwe_of_code(code: LinearCode, cap: int | None = None) -> WeightEnumerator:
    return cwe_direct(codeword_array(code, cap), code.params, code.n)


def coset_enumerators(dec: CosetDecomposition) -> list[WeightEnumerator]:
    """cwe of C0, C1, C2, C3 (indexed by coset label)."""
    return [cwe_direct(dec.coset_array(i), dec.params, dec.n) for i in range(4)]


def _combine(block_comp: np.ndarray, labels: np.ndarray, cosets: list[WeightEnumerator], params, length) -> WeightEnumerator:
    keyed = np.hstack([block_comp, labels[:, None]])
    uniq, counts = np.unique(keyed, axis=0, return_counts=True)
    out: Counter = Counter()
    for row, c in zip(uniq, counts):
        block = row[:-1]
        for exp, cnt in cosets[int(row[-1])].terms.items():
            out[tuple(int(a + b) for a, b in zip(block, exp))] += int(c) * cnt
    return WeightEnumerator(params, length, out)


def _grid(bounds: Sequence[int]) -> np.ndarray:
    total = int(np.prod(bounds, dtype=object))
    if total > FORMULA_POINT_CAP:
        raise ValueError(f"formula sum has {total} index tuples (cap {FORMULA_POINT_CAP})")
    return np.indices(tuple(bounds), dtype=np.int64).reshape(len(bounds), -1) + 1


def cwe_formula(
    dec: CosetDecomposition,
    recipe: ConstructionRecipe,
    source: str = "printed",
    cosets: list[WeightEnumerator] | None = None,
) -> WeightEnumerator:
    """Evaluate the coset-sum expression for the enumerator of the extended code.

    ``source="printed"`` sums the printed monomials over the printed index
    boxes, verbatim. ``source="vectors"`` sums over i <= o(v1), j <= o(v2),
    k_p <= o(w_p) and reads each appended block off i v1 + j v2 + sum k_p w_p.
    """
    q = dec.params.modulus
    cosets = coset_enumerators(dec) if cosets is None else cosets
    length = dec.n + recipe.k
    if source == "printed":
        pf = recipe.printed_formula()
        pts = _grid(pf.bounds)
        coeff = np.array([c for _, c in pf.factors], dtype=np.int64).reshape(len(pf.factors), len(pf.variables))
        scale = np.array([s for s, _ in pf.factors], dtype=np.int64)[:, None]
        blocks = ((coeff @ pts) * scale % q).T
        i_idx, j_idx = pf.variables.index("i"), pf.variables.index("j")
    elif source == "vectors":
        tails = [w[recipe.k:] for w in recipe.ws]
        if any(any(t) for t in tails):
            raise ValueError("glue vectors must vanish on the original coordinates")
        gens = [recipe.v1, recipe.v2] + [w[: recipe.k] for w in recipe.ws]
        bounds = [vector_order(g, dec.m) for g in gens]
        pts = _grid(bounds)
        G = np.array(gens, dtype=np.int64).reshape(len(gens), recipe.k)
        blocks = (pts.T @ G) % q
        i_idx, j_idx = 0, 1
    else:
        raise ValueError(f"unknown formula source {source!r}")
    labels = np.array([eta(int(i), int(j), dec.glue_kind) for i, j in zip(pts[i_idx], pts[j_idx])], dtype=np.int64)
    return _combine(compositions(blocks, q), labels, cosets, dec.params, length)


@dataclass
class CweComparison:
    equal: bool
    only_left: dict[Exponent, int]
    only_right: dict[Exponent, int]

    def __bool__(self) -> bool:
        return self.equal

    def to_json(self, limit: int = 20) -> dict:
        def show(d):
            return [{"exp": list(e), "count": c} for e, c in list(d.items())[:limit]]

        return {
            "equal": self.equal,
            "left_minus_right": show(self.only_left),
            "right_minus_left": show(self.only_right),
            "mismatched_terms": len(self.only_left) + len(self.only_right),
        }


def cwe_equal(a: WeightEnumerator, b: WeightEnumerator) -> CweComparison:
    """Term-by-term comparison; the diff lists count surpluses on each side."""
    if a.params != b.params or a.n != b.n:
        raise ValueError("enumerators over different rings or lengths")
    left, right = {}, {}
    for exp in sorted(set(a.terms) | set(b.terms)):
        d = a.terms.get(exp, 0) - b.terms.get(exp, 0)
        if d > 0:
            left[exp] = d
        elif d < 0:
            right[exp] = -d
    return CweComparison(not left and not right, left, right)


@dataclass
class FormulaCheck:
    label: str
    printed: CweComparison
    vectors: CweComparison

    @property
    def passed(self) -> bool:
        return self.printed.equal or self.vectors.equal

    def to_json(self) -> dict:
        return {
            "label": self.label,
            "printed_matches": self.printed.equal,
            "vector_sum_matches": self.vectors.equal,
            "printed_diff": None if self.printed.equal else self.printed.to_json(),
            "vector_sum_diff": None if self.vectors.equal else self.vectors.to_json(),
            "passed": self.passed,
        }


def check_formula(dec: CosetDecomposition, recipe: ConstructionRecipe, code: LinearCode) -> FormulaCheck:
    """Compare both formula evaluations against direct enumeration of ``code``."""
    direct = cwe_of_code(code)
    cosets = coset_enumerators(dec)
    printed = cwe_equal(cwe_formula(dec, recipe, "printed", cosets), direct)
    vectors = cwe_equal(cwe_formula(dec, recipe, "vectors", cosets), direct)
    return FormulaCheck(recipe.label, printed, vectors)
