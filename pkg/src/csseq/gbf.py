"""Generalized Boolean functions: multilinear polynomials over Z_q in m
binary variables.

A function f maps an index i in [0, 2^m) to Z_q through the binary
expansion i = sum_k i_k 2^(k-1), so x_1 reads the least significant bit
and x_m the most significant.  Variables are 1-based throughout the API.

The algebra accepts any modulus q >= 2; evenness is only demanded by the
sequence constructions built on top.  Functions are kept in a canonical
collected form: terms sorted by (degree, variable tuple), zero
coefficients removed, so structural equality coincides with polynomial
equality.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import permutations
from typing import Iterable, Iterator, Optional, Sequence, Tuple

import numpy as np

from .seqcore import QarySequence


class UnsupportedShapeError(ValueError):
    """Raised when a polynomial does not match the shape an operation
    is defined for."""


@dataclass(frozen=True)
class Monomial:
    """A single collected term: coeff times the product of the listed
    variables (empty vars means the constant term)."""

    coeff: int
    vars: Tuple[int, ...]


@dataclass(frozen=True)
class GeneralizedBooleanFunction:
    q: int
    num_vars: int
    terms: Tuple[Monomial, ...]

    def __call__(self, i: int) -> int:
        return evaluate(self, i)

    def __add__(self, other):
        return add(self, other)

    def __str__(self):
        return format_anf(self)


@dataclass(frozen=True)
class ConstrainedPermutation:
    """A bijection pi on {1, ..., m-1} whose first v images form the set
    {1, ..., v}.  images[s-1] holds pi(s)."""

    m: int
    v: int
    images: Tuple[int, ...]

    def __post_init__(self):
        if self.m < 2:
            raise ValueError(f"m must be at least 2, got {self.m}")
        if not 1 <= self.v <= self.m - 1:
            raise ValueError(f"v must satisfy 1 <= v <= m-1, got v={self.v}")
        imgs = tuple(int(x) for x in self.images)
        if sorted(imgs) != list(range(1, self.m)):
            raise ValueError(
                f"images {imgs} do not form a permutation of 1..{self.m - 1}"
            )
        if set(imgs[: self.v]) != set(range(1, self.v + 1)):
            raise ValueError(
                f"first {self.v} images {imgs[: self.v]} must be "
                f"{{1..{self.v}}} as a set"
            )
        object.__setattr__(self, "images", imgs)

    def __call__(self, s: int) -> int:
        if not 1 <= s <= self.m - 1:
            raise ValueError(f"argument {s} outside 1..{self.m - 1}")
        return self.images[s - 1]

    @classmethod
    def identity(cls, m: int, v: int) -> "ConstrainedPermutation":
        return cls(m, v, tuple(range(1, m)))


def _canonical_terms(q: int, m: int, raw: Iterable[Tuple[int, Iterable[int]]]):
    acc = {}
    for coeff, vs in raw:
        key = tuple(sorted(set(int(k) for k in vs)))
        for k in key:
            if not 1 <= k <= m:
                raise ValueError(f"variable index {k} outside 1..{m}")
        acc[key] = (acc.get(key, 0) + int(coeff)) % q
    keys = sorted((k for k, c in acc.items() if c != 0), key=lambda k: (len(k), k))
    return tuple(Monomial(acc[k], k) for k in keys)


def function_from_terms(
    q: int, m: int, terms: Iterable[Tuple[int, Iterable[int]]]
) -> GeneralizedBooleanFunction:
    """Build a function from (coefficient, variable-indices) pairs."""
    if q < 2:
        raise ValueError(f"q must be at least 2, got {q}")
    if m < 1:
        raise ValueError(f"m must be at least 1, got {m}")
    return GeneralizedBooleanFunction(q, m, _canonical_terms(q, m, terms))


def zero_function(q: int, m: int) -> GeneralizedBooleanFunction:
    return function_from_terms(q, m, [])


def add(
    f: GeneralizedBooleanFunction, g: GeneralizedBooleanFunction
) -> GeneralizedBooleanFunction:
    if f.q != g.q or f.num_vars != g.num_vars:
        raise ValueError(
            f"cannot add functions over (q={f.q}, m={f.num_vars}) and "
            f"(q={g.q}, m={g.num_vars})"
        )
    raw = [(t.coeff, t.vars) for t in f.terms] + [(t.coeff, t.vars) for t in g.terms]
    return function_from_terms(f.q, f.num_vars, raw)


def add_term(
    f: GeneralizedBooleanFunction, coeff: int, vs: Iterable[int]
) -> GeneralizedBooleanFunction:
    raw = [(t.coeff, t.vars) for t in f.terms] + [(coeff, tuple(vs))]
    return function_from_terms(f.q, f.num_vars, raw)


def evaluate(f: GeneralizedBooleanFunction, i: int) -> int:
    """Value of f at index i, using the LSB-first binary expansion of i."""
    if not 0 <= i < (1 << f.num_vars):
        raise ValueError(f"index {i} outside [0, 2^{f.num_vars})")
    total = 0
    for t in f.terms:
        if all((i >> (k - 1)) & 1 for k in t.vars):
            total += t.coeff
    return total % f.q


def evaluate_all(f: GeneralizedBooleanFunction) -> np.ndarray:
    """Values of f at every index 0 .. 2^m - 1 as an int64 array."""
    idx = np.arange(1 << f.num_vars, dtype=np.int64)
    acc = np.zeros_like(idx)
    for t in f.terms:
        mask = 0
        for k in t.vars:
            mask |= 1 << (k - 1)
        acc += t.coeff * ((idx & mask) == mask)
    return acc % f.q


def truncated_sequence(f: GeneralizedBooleanFunction, L: int) -> QarySequence:
    """First L entries of the phase-index sequence i -> f(i)."""
    full = 1 << f.num_vars
    if not 1 <= L <= full:
        raise ValueError(f"L must satisfy 1 <= L <= {full}, got {L}")
    return QarySequence(f.q, evaluate_all(f)[:L])


def reduce_for_truncation(
    f: GeneralizedBooleanFunction,
    v: int,
    perm: ConstrainedPermutation,
    L: Optional[int] = None,
) -> GeneralizedBooleanFunction:
    """Drop the x_j x_m cross terms with j > v, which vanish identically
    on indices below 2^(m-1) + 2^v.

    Valid only for polynomials whose terms are constants, single
    variables, path products along perm with coefficient q/2, or
    products x_j x_m.  Anything else raises UnsupportedShapeError.
    """
    m = f.num_vars
    if perm.m != m or perm.v != v:
        raise ValueError(
            f"permutation is for (m={perm.m}, v={perm.v}), "
            f"function has m={m}, v={v}"
        )
    if L is None:
        L = (1 << (m - 1)) + (1 << v)
    if L > (1 << (m - 1)) + (1 << v):
        raise ValueError(
            f"reduction only sound for L <= {(1 << (m - 1)) + (1 << v)}, got {L}"
        )
    if f.q % 2 != 0:
        raise UnsupportedShapeError(f"modulus {f.q} is odd")
    half = f.q // 2
    path = {
        tuple(sorted((perm(s), perm(s + 1)))) for s in range(1, m - 1)
    }
    kept = []
    for t in f.terms:
        if len(t.vars) <= 1:
            kept.append((t.coeff, t.vars))
        elif len(t.vars) == 2 and t.vars[1] == m:
            if t.vars[0] <= v:
                kept.append((t.coeff, t.vars))
            # else: x_j x_m with j > v is zero on [0, L)
        elif len(t.vars) == 2 and t.vars in path and t.coeff == half:
            kept.append((t.coeff, t.vars))
        else:
            raise UnsupportedShapeError(
                f"term {t.coeff}*{t.vars} does not fit the reducible shape"
            )
    return function_from_terms(f.q, m, kept)


def enumerate_constrained_permutations(m: int, v: int) -> Iterator[ConstrainedPermutation]:
    """All v!(m-1-v)! permutations meeting the first-v constraint, in
    lexicographic order of their image tuples."""
    if m < 2:
        raise ValueError(f"m must be at least 2, got {m}")
    if not 1 <= v <= m - 1:
        raise ValueError(f"v must satisfy 1 <= v <= m-1, got v={v}")
    for head in permutations(range(1, v + 1)):
        for tail in permutations(range(v + 1, m)):
            yield ConstrainedPermutation(m, v, head + tail)


_TERM_RE = re.compile(r"^(?:(-?\d+)\s*\*?\s*)?((?:x\d+\s*)+)$|^(-?\d+)$")


def parse_anf(text: str, q: int, m: int) -> GeneralizedBooleanFunction:
    """Parse textual form like "1*x1x2 + 3*x2 + 2" (coefficients reduced
    mod q, variables x1..xm, '+'-separated terms)."""
    body = text.strip()
    if not body:
        raise ValueError("empty polynomial text")
    raw = []
    for piece in body.split("+"):
        piece = piece.strip()
        mt = _TERM_RE.match(piece)
        if mt is None:
            raise ValueError(f"cannot parse term {piece!r}")
        if mt.group(3) is not None:
            raw.append((int(mt.group(3)), ()))
            continue
        coeff = 1 if mt.group(1) is None else int(mt.group(1))
        vs = tuple(int(s) for s in re.findall(r"x(\d+)", mt.group(2)))
        raw.append((coeff, vs))
    return function_from_terms(q, m, raw)


def format_anf(f: GeneralizedBooleanFunction) -> str:
    """Canonical text form; parse_anf(format_anf(f), f.q, f.num_vars)
    reproduces f exactly."""
    if not f.terms:
        return "0"
    ordered = sorted(f.terms, key=lambda t: (-len(t.vars), t.vars))
    parts = []
    for t in ordered:
        if not t.vars:
            parts.append(str(t.coeff))
        else:
            parts.append(f"{t.coeff}*" + "".join(f"x{k}" for k in t.vars))
    return " + ".join(parts)
