"""Sequence-set constructions.

Two layers:

* Algebraic base families: a quadruple of truncated polynomial-phase
  sequences forming a complementary set of length 2^(m-1) + 2^v
  (base_cs), a pair of such quadruples forming a (2, 4, L) mutually
  orthogonal family (mocs_pair), and their zero-padded concatenation
  (concat_cs).

* Zero insertion: pairing up the sets of an (M, N, L) family with b
  NULL entries spliced between the halves yields a (floor(M/2), N,
  2L+b) family (zero_insert_step); iterating the step drives the set
  count down while planting spectral nulls at chosen depths (iterate).

seed_ccc supplies small binary (N, N, N) families to feed the iteration
when more than two starting sets are wanted.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence, Tuple

import numpy as np

from .gbf import (
    ConstrainedPermutation,
    GeneralizedBooleanFunction,
    add_term,
    function_from_terms,
    truncated_sequence,
)
from .seqcore import NULL, ComplementarySet, MocsFamily, QarySequence


@dataclass(frozen=True)
class BaseParams:
    """Free parameters of the base construction.

    lam may be given with v entries or with m-1 entries; trailing
    entries beyond the first v do not affect the truncated sequences
    and are dropped on normalization.
    """

    q: int
    m: int
    v: int
    perm: ConstrainedPermutation
    lam: Tuple[int, ...]
    mu: Tuple[int, ...]
    mu0: int

    def __init__(self, q, m, v, perm=None, lam=None, mu=None, mu0=0):
        if q < 2 or q % 2 != 0:
            raise ValueError(f"q must be even and at least 2, got {q}")
        if m < 2:
            raise ValueError(f"m must be at least 2, got {m}")
        if not 1 <= v <= m - 1:
            raise ValueError(f"v must satisfy 1 <= v <= m-1, got v={v}")
        if perm is None:
            perm = ConstrainedPermutation.identity(m, v)
        if perm.m != m or perm.v != v:
            raise ValueError(
                f"permutation is for (m={perm.m}, v={perm.v}), "
                f"expected (m={m}, v={v})"
            )
        lam = tuple(int(x) % q for x in (lam if lam is not None else ()))
        if len(lam) == m - 1:
            lam = lam[:v]
        elif len(lam) < v:
            lam = lam + (0,) * (v - len(lam))
        elif len(lam) != v:
            raise ValueError(
                f"lam needs {v} (reduced) or {m - 1} (full) entries, "
                f"got {len(lam)}"
            )
        mu = tuple(int(x) % q for x in (mu if mu is not None else ()))
        if len(mu) < m:
            mu = mu + (0,) * (m - len(mu))
        elif len(mu) != m:
            raise ValueError(f"mu needs {m} entries, got {len(mu)}")
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "v", v)
        object.__setattr__(self, "perm", perm)
        object.__setattr__(self, "lam", lam)
        object.__setattr__(self, "mu", mu)
        object.__setattr__(self, "mu0", int(mu0) % q)

    @property
    def length(self) -> int:
        return (1 << (self.m - 1)) + (1 << self.v)


@dataclass(frozen=True)
class ZeroInsertionPlan:
    """Gap widths b_1 .. b_{k-1}, one per insertion step."""

    b_list: Tuple[int, ...]

    def __init__(self, b_list: Iterable[int]):
        bs = tuple(int(b) for b in b_list)
        for b in bs:
            if b < 0:
                raise ValueError(f"gap widths must be nonnegative, got {b}")
        object.__setattr__(self, "b_list", bs)

    def __len__(self):
        return len(self.b_list)

    def __iter__(self):
        return iter(self.b_list)

    def final_length(self, seed_length: int) -> int:
        """2^(k-1) L + sum_i 2^(k-1-i) b_i for a length-L seed."""
        p = len(self.b_list)
        return (seed_length << p) + sum(
            b << (p - 1 - i) for i, b in enumerate(self.b_list)
        )


def base_quadruple(p: BaseParams):
    """The four polynomials g_1 .. g_4 of the base construction."""
    half = p.q // 2
    terms = [(half, (p.perm(s), p.perm(s + 1))) for s in range(1, p.m - 1)]
    terms += [(p.lam[s - 1], (p.perm(s), p.m)) for s in range(1, p.v + 1)]
    terms += [(p.mu[k - 1], (k,)) for k in range(1, p.m + 1)]
    terms += [(p.mu0, ())]
    g1 = function_from_terms(p.q, p.m, terms)
    g2 = add_term(g1, half, (p.m,))
    g3 = add_term(g1, half, (p.perm(1),))
    g4 = add_term(g3, half, (p.m,))
    return g1, g2, g3, g4


def base_cs(p: BaseParams) -> ComplementarySet:
    """Complementary set of four sequences of length 2^(m-1) + 2^v."""
    L = p.length
    return ComplementarySet(
        [truncated_sequence(g, L) for g in base_quadruple(p)]
    )


def _pair_offset(p: BaseParams) -> GeneralizedBooleanFunction:
    # the linear offset must follow the permutation: with a literal
    # x_{m-1} the cross-sum cancellation breaks whenever perm moves m-1
    half = p.q // 2
    return function_from_terms(
        p.q, p.m, [(half, (p.perm(p.m - 1),)), (half, (p.m, p.perm(p.v)))]
    )


def mocs_pair(p: BaseParams) -> MocsFamily:
    """(2, 4, L) mutually orthogonal pair {G, F}; needs m >= 3 and
    1 <= v < m-1."""
    if p.m < 3:
        raise ValueError(f"the pair construction needs m >= 3, got m={p.m}")
    if p.v >= p.m - 1:
        raise ValueError(
            f"the pair construction needs v < m-1, got v={p.v}, m={p.m}"
        )
    L = p.length
    offset = _pair_offset(p)
    gs = base_quadruple(p)
    g_set = ComplementarySet([truncated_sequence(g, L) for g in gs])
    f_set = ComplementarySet([truncated_sequence(g + offset, L) for g in gs])
    return MocsFamily([g_set, f_set])


def zero_insert_step(fam: MocsFamily, b: int) -> MocsFamily:
    """Splice set i and set i + floor(M/2) around b NULL entries.

    Output sets are indexed i = 0 .. floor(M/2) - 1; when M is odd the
    last input set is dropped.  Gives a (floor(M/2), N, 2L+b) family.
    """
    if b < 0:
        raise ValueError(f"gap width must be nonnegative, got {b}")
    M = fam.num_sets
    if M < 2:
        raise ValueError(f"zero insertion needs at least 2 sets, got {M}")
    half_m = M // 2
    gap = np.full(b, NULL, dtype=np.int64)
    q = fam.q
    out = []
    for i in range(half_m):
        members = []
        for left, right in zip(fam[i], fam[i + half_m]):
            members.append(
                QarySequence(
                    q, np.concatenate([left.values, gap, right.values])
                )
            )
        out.append(ComplementarySet(members))
    return MocsFamily(out)


def iterate(fam: MocsFamily, plan: ZeroInsertionPlan) -> MocsFamily:
    """Apply zero_insert_step once per plan entry.

    Needs floor(M / 2^k) >= 1 for a k-step plan.  The result has
    floor(M / 2^k) sets of length plan.final_length(L); a single-set
    result is a plain complementary set.
    """
    k = len(plan)
    if fam.num_sets >> k < 1:
        raise ValueError(
            f"plan with {k} steps needs at least {1 << k} sets, "
            f"family has {fam.num_sets}"
        )
    for b in plan:
        fam = zero_insert_step(fam, b)
    return fam


def concat_cs(p: BaseParams, b: int) -> ComplementarySet:
    """Complementary set of length 2^m + 2^(v+1) + b obtained by joining
    the two sets of mocs_pair(p) around b NULL entries."""
    if b < 0:
        raise ValueError(f"gap width must be nonnegative, got {b}")
    return zero_insert_step(mocs_pair(p), b)[0]


_SEED_SIZES = (2, 4, 8, 16)


def seed_ccc(N: int) -> MocsFamily:
    """Binary (N, N, N) family built from Sylvester-Hadamard rows: set i,
    member j is the row indexed i XOR j.  Not one of the constructions
    above; provided only as iteration feedstock."""
    if N not in _SEED_SIZES:
        raise ValueError(f"supported sizes are {_SEED_SIZES}, got {N}")
    t = np.arange(N, dtype=np.int64)
    rows = {}
    for r in range(N):
        anded = np.bitwise_and(r, t)
        phases = np.zeros(N, dtype=np.int64)
        for bit in range(N.bit_length()):
            phases ^= (anded >> bit) & 1
        rows[r] = phases
    sets = []
    for i in range(N):
        sets.append(
            ComplementarySet(
                [QarySequence(2, rows[i ^ j]) for j in range(N)]
            )
        )
    return MocsFamily(sets)
