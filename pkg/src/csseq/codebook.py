"""Codebook enumeration, sizes, code-rates, and minimum Hamming distance.

Four variants share one parameter grid (permutation pi, cross
coefficients lam, linear coefficients mu, constant mu0):

* c1: the bare length-(2^(m-1) + 2^v) quadruple leader, full grid.
* c2: the zero-padded concatenated codeword, full grid.
* c3: the c2 codeword on the restricted grid (lam = 0, mu_m = 0), all
  admissible permutations.
* c21: the restricted grid with a single fixed permutation (the
  lexicographically first one).

Codewords are emitted in deterministic lexicographic order over
(pi, lam, mu, mu0) and deduplicated; the closed-form counts are
v!(m-1-v)! q^(m+v+1) for c1/c2, v!(m-1-v)! q^m for c3, and q^m for c21.

Code-rate is floor(log_q |C|) over the codeword length, with the
floor-log taken by exact integer comparison.  Distance predictions for
the restricted-grid subcodes (closed forms) sit beside a brute-force
minimum-distance computation for cross-checking.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from decimal import ROUND_HALF_UP, Decimal, localcontext
from fractions import Fraction
from itertools import product
from typing import Iterator, List, Optional, Sequence, Tuple

import numpy as np

from . import _backend
from .construct import BaseParams, concat_cs
from .fileio import csv_text
from .gbf import ConstrainedPermutation, enumerate_constrained_permutations
from .papr import PaprConfig, set_papr
from .seqcore import NULL, QarySequence

VARIANTS = ("c1", "c2", "c3", "c21")

DMIN_CONTEXTS = ("same-perm", "differing-perm", "union")


@dataclass(frozen=True)
class CodebookSpec:
    """Parameters selecting one codebook.

    All variants need m >= 3 and 1 <= v < m-1 (the pair-construction
    range).  b is the null-gap width of the padded variants; c1 has no
    gap and requires b = 0.
    """

    variant: str
    q: int
    m: int
    v: int
    b: int = 0

    def __post_init__(self):
        if self.variant not in VARIANTS:
            raise ValueError(
                f"variant must be one of {VARIANTS}, got {self.variant!r}"
            )
        if self.q < 2 or self.q % 2 != 0:
            raise ValueError(f"q must be even and at least 2, got {self.q}")
        if self.m < 3:
            raise ValueError(f"m must be at least 3, got {self.m}")
        if not 1 <= self.v < self.m - 1:
            raise ValueError(
                f"v must satisfy 1 <= v < m-1, got v={self.v}, m={self.m}"
            )
        if self.b < 0:
            raise ValueError(f"b must be nonnegative, got {self.b}")
        if self.variant == "c1" and self.b != 0:
            raise ValueError("variant c1 has no null gap; b must be 0")

    @property
    def restricted(self) -> bool:
        """True when lam = 0 and mu_m = 0 (variants c3, c21)."""
        return self.variant in ("c3", "c21")

    @property
    def padded(self) -> bool:
        return self.variant != "c1"

    @property
    def length(self) -> int:
        if self.padded:
            return (1 << self.m) + (1 << (self.v + 1)) + self.b
        return (1 << (self.m - 1)) + (1 << self.v)


@dataclass(frozen=True)
class Codebook:
    """Materialized, deduplicated codebook.

    raw_count is the full parameter-grid count; collisions lists
    (first_index, duplicate_index) pairs in enumeration order for any
    parameter tuples that produced an already-seen codeword.
    """

    spec: CodebookSpec
    codewords: Tuple[QarySequence, ...]
    raw_count: int
    collisions: Tuple[Tuple[int, int], ...] = ()

    @property
    def distinct_count(self) -> int:
        return len(self.codewords)

    @property
    def length(self) -> int:
        return len(self.codewords[0]) if self.codewords else self.spec.length

    def __len__(self):
        return len(self.codewords)


def _default_perms(spec: CodebookSpec) -> List[ConstrainedPermutation]:
    perms = list(enumerate_constrained_permutations(spec.m, spec.v))
    if spec.variant == "c21":
        return perms[:1]
    return perms


def iter_codewords(
    spec: CodebookSpec,
    perms: Optional[Sequence[ConstrainedPermutation]] = None,
) -> Iterator[QarySequence]:
    """Yield codewords lazily in lexicographic (pi, lam, mu, mu0) order.

    perms overrides the variant's permutation list (handy for studying
    single-permutation subcodes); each must be valid for (m, v).
    """
    q, m, v, b = spec.q, spec.m, spec.v, spec.b
    if perms is None:
        perms = _default_perms(spec)
    half = q // 2
    L = (1 << (m - 1)) + (1 << v)
    idx = np.arange(1 << m, dtype=np.int64)
    bits = [(idx >> k) & 1 for k in range(m)]
    gap = np.full(b, NULL, dtype=np.int64)
    lam_space: Sequence = (
        [(0,) * v] if spec.restricted else list(product(range(q), repeat=v))
    )
    mu_m_space = (0,) if spec.restricted else tuple(range(q))
    for perm in perms:
        if perm.m != m or perm.v != v:
            raise ValueError(
                f"permutation for (m={perm.m}, v={perm.v}) does not match "
                f"spec (m={m}, v={v})"
            )
        path = np.zeros_like(idx)
        for s in range(1, m - 1):
            path += bits[perm(s) - 1] * bits[perm(s + 1) - 1]
        path *= half
        cross = [bits[perm(s) - 1] * bits[m - 1] for s in range(1, v + 1)]
        offset = (half * (bits[perm(m - 1) - 1]
                          + bits[m - 1] * bits[perm(v) - 1]))[:L]
        for lam in lam_space:
            lam_part = path.copy()
            for c, term in zip(lam, cross):
                if c:
                    lam_part += c * term
            for mu_head in product(range(q), repeat=m - 1):
                head_part = lam_part.copy()
                for c, term in zip(mu_head, bits):
                    if c:
                        head_part += c * term
                for mu_m in mu_m_space:
                    base = head_part + mu_m * bits[m - 1]
                    for mu0 in range(q):
                        plain = (base[:L] + mu0) % q
                        if spec.padded:
                            word = np.concatenate(
                                [plain, gap, (plain + offset) % q]
                            )
                        else:
                            word = plain
                        yield QarySequence(q, word)


def size_formula(spec: CodebookSpec) -> int:
    """Closed-form parameter-grid count."""
    perm_count = math.factorial(spec.v) * math.factorial(spec.m - 1 - spec.v)
    if spec.variant in ("c1", "c2"):
        return perm_count * spec.q ** (spec.m + spec.v + 1)
    if spec.variant == "c3":
        return perm_count * spec.q ** spec.m
    return spec.q ** spec.m


def enumerate_codebook(
    spec: CodebookSpec,
    cap: int = 10**6,
    perms: Optional[Sequence[ConstrainedPermutation]] = None,
) -> Codebook:
    """Materialize and deduplicate the codebook.

    A raw count above cap is an error, never a truncation.
    """
    if perms is None:
        raw = size_formula(spec)
    else:
        per_perm = (
            spec.q ** spec.m if spec.restricted
            else spec.q ** (spec.m + spec.v + 1)
        )
        raw = len(perms) * per_perm
    if raw > cap:
        raise ValueError(
            f"codebook has {raw} raw codewords, above the cap of {cap}"
        )
    seen = {}
    collisions = []
    for i, w in enumerate(iter_codewords(spec, perms)):
        if w in seen:
            collisions.append((seen[w], i))
        else:
            seen[w] = i
    return Codebook(
        spec=spec,
        codewords=tuple(seen.keys()),
        raw_count=raw,
        collisions=tuple(collisions),
    )


def floor_log(q: int, n: int) -> int:
    """Largest t >= 0 with q^t <= n, by exact integer comparison."""
    if q < 2:
        raise ValueError(f"base must be at least 2, got {q}")
    if n < 1:
        raise ValueError(f"argument must be positive, got {n}")
    t = 0
    power = q
    while power <= n:
        t += 1
        power *= q
    return t


def code_rate(spec: CodebookSpec) -> Fraction:
    """floor(log_q |C|) over codeword length, as an exact fraction."""
    return Fraction(floor_log(spec.q, size_formula(spec)), spec.length)


def format_fixed(x, places: int = 4) -> str:
    """Decimal formatting with round-half-up, matching table precision."""
    if isinstance(x, Fraction):
        with localcontext() as ctx:
            ctx.prec = 50
            d = Decimal(x.numerator) / Decimal(x.denominator)
    else:
        d = Decimal(str(x))
    return str(d.quantize(Decimal(1).scaleb(-places), rounding=ROUND_HALF_UP))


def min_hamming_distance(cb: Codebook, max_comparisons: int = 2 * 10**9) -> int:
    """Exact minimum pairwise Hamming distance, brute force over all
    codeword pairs."""
    n = len(cb.codewords)
    if n < 2:
        raise ValueError("minimum distance needs at least 2 codewords")
    work = n * (n - 1) // 2 * cb.length
    if work > max_comparisons:
        raise ValueError(
            f"pairwise scan needs {work} comparisons, above the budget "
            f"of {max_comparisons}"
        )
    mat = np.stack([w.values for w in cb.codewords])
    best, _, _ = _backend.min_hamming(mat)
    return int(best)


def predicted_dmin(spec: CodebookSpec, context: str) -> int:
    """Closed-form minimum-distance predictions.

    For variants c1 and c2 the prediction concerns the restricted-grid
    subcodes (lam = 0, mu_m = 0) drawn from one or two permutations:
    context "same-perm" takes both codewords from one permutation,
    "differing-perm" from two distinct ones.  For c3 the only context
    is "union" (all permutations); for c21 "same-perm" and "union"
    coincide.  Each prediction enforces its own stated (m, v) range.
    """
    if context not in DMIN_CONTEXTS:
        raise ValueError(
            f"context must be one of {DMIN_CONTEXTS}, got {context!r}"
        )
    m, v = spec.m, spec.v
    var = spec.variant
    if var == "c1":
        if context == "union":
            raise ValueError("no union prediction exists for variant c1")
        if not 1 <= v <= m - 2:
            raise ValueError(
                f"c1 predictions need 1 <= v <= m-2, got v={v}, m={m}"
            )
        return 1 << (m - 2) if context == "same-perm" else 1 << (m - 3)
    if var == "c2":
        if context == "same-perm":
            return 1 << (m - 1)
        if context == "differing-perm":
            if not 1 <= v < m - 2:
                raise ValueError(
                    f"the differing-perm prediction needs 1 <= v < m-2, "
                    f"got v={v}, m={m}"
                )
            return 1 << (m - 2)
        raise ValueError("no union prediction exists for variant c2")
    if var == "c3":
        if context != "union":
            raise ValueError("variant c3 only has the union prediction")
        if m == 3:
            return 4
        if not 1 <= v < m - 2:
            raise ValueError(
                f"the union prediction at m > 3 needs 1 <= v < m-2, "
                f"got v={v}, m={m}"
            )
        return 1 << (m - 2)
    # c21
    if context == "differing-perm":
        raise ValueError("variant c21 has a single permutation")
    return 1 << (m - 1)


_TABLE3_COLS = [(3, 1), (4, 1), (4, 2), (5, 1), (5, 2), (5, 3),
                (6, 1), (6, 2), (6, 3), (6, 4)]
_TABLE4_COLS = [(4, 1), (4, 2), (5, 1), (5, 2), (5, 3),
                (6, 1), (6, 2), (6, 3), (6, 4)]
_TABLE6_ROWS = [(3, 1), (4, 1), (5, 1), (5, 2), (6, 1), (6, 2), (6, 3)]


def _papr_row(v_values, b_values, cfg: PaprConfig):
    lengths, paprs = [], []
    for v, b in zip(v_values, b_values):
        cs = concat_cs(BaseParams(q=2, m=7, v=v), b)
        lengths.append(cs.length)
        paprs.append(format_fixed(set_papr(cs, cfg)))
    return lengths, paprs


def render_table(table_id: int, cfg: PaprConfig = PaprConfig()) -> str:
    """Regenerate one of the reference tables as CSV text.

    1: set PAPR for q=2, m=7, b=1, v = 1..5 (columns keyed by length).
    2: set PAPR for q=2, m=7, v=1, b = 0..4.
    3: c2 code-rates, q=2, b = 0..6 by (m, v) columns.
    4: c2 code-rates, v=1, q in {2,4,6,8,10} by (m, b) columns.
    6: c3 length / code-rate / minimum distance rows over b in {0,1,2};
       both length conventions are emitted (see the column names), and
       d_min is computed once per (m, v) since the common null gap adds
       nothing to any pairwise distance.
    """
    if table_id == 1:
        lengths, paprs = _papr_row([1, 2, 3, 4, 5], [1] * 5, cfg)
        return csv_text([["length"] + lengths, ["papr"] + paprs])
    if table_id == 2:
        bs = [0, 1, 2, 3, 4]
        _, paprs = _papr_row([1] * 5, bs, cfg)
        return csv_text([["b"] + bs, ["papr"] + paprs])
    if table_id == 3:
        header = ["b"] + [f"m={m},v={v}" for m, v in _TABLE3_COLS]
        rows = [header]
        for b in range(7):
            cells = [
                format_fixed(code_rate(CodebookSpec("c2", 2, m, v, b)))
                for m, v in _TABLE3_COLS
            ]
            rows.append([b] + cells)
        return csv_text(rows)
    if table_id == 4:
        header = ["q"] + [f"m={m},b={b}" for m, b in _TABLE4_COLS]
        rows = [header]
        for q in (2, 4, 6, 8, 10):
            cells = [
                format_fixed(code_rate(CodebookSpec("c2", q, m, 1, b)))
                for m, b in _TABLE4_COLS
            ]
            rows.append([q] + cells)
        return csv_text(rows)
    if table_id == 6:
        dmin = {}
        for m, v in _TABLE6_ROWS:
            cb = enumerate_codebook(CodebookSpec("c3", 2, m, v, 0))
            dmin[(m, v)] = min_hamming_distance(cb)
        rows = [["b", "m", "v", "length_as_printed", "codeword_length",
                 "code_rate", "d_min"]]
        for b in (0, 1, 2):
            for m, v in _TABLE6_ROWS:
                spec = CodebookSpec("c3", 2, m, v, b)
                printed = (1 << (m - 1)) + (1 << v) + b
                rows.append([
                    b, m, v, printed, spec.length,
                    format_fixed(code_rate(spec)), dmin[(m, v)],
                ])
        return csv_text(rows)
    raise ValueError(f"no table {table_id}; available: 1, 2, 3, 4, 6")
