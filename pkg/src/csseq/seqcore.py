"""Sequence types, aperiodic correlation, and complementarity checks.

Sequences take values in the q-th roots of unity, stored as integer phase
indices; the marker NULL (-1) denotes an entry whose complex value is
exactly zero (an inserted spectral null).  Correlations are assembled from
integer histograms of phase differences, so for q in {1, 2, 4} every
correlation value is an exact Gaussian integer and zero tests are exact.
For other q the histogram is evaluated in floating point against a
tolerance (default 1e-9 * L).

Shifts follow the aperiodic convention: R_{a,b}(u) = sum_j a(j) b*(j+u)
over the overlapping index range, identically zero for |u| >= L.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Union

import numpy as np

from . import _backend

NULL = -1

# moduli whose roots of unity are Gaussian integers
EXACT_MODULI = (1, 2, 4)

_EXACT_ROOTS = {
    1: np.array([1 + 0j]),
    2: np.array([1 + 0j, -1 + 0j]),
    4: np.array([1 + 0j, 1j, -1 + 0j, -1j]),
}


@dataclass(frozen=True, eq=False)
class QarySequence:
    """Phase-index sequence over Z_q with NULL (-1) marking zeroed entries."""

    q: int
    values: np.ndarray

    def __post_init__(self):
        if self.q < 1:
            raise ValueError(f"q must be a positive integer, got {self.q}")
        arr = np.array(self.values, dtype=np.int64)
        if arr.ndim != 1 or arr.shape[0] < 1:
            raise ValueError("sequence entries must form a nonempty 1-d array")
        bad = (arr < NULL) | (arr >= self.q)
        if bad.any():
            pos = int(np.argmax(bad))
            raise ValueError(
                f"entry {int(arr[pos])} at position {pos} is neither NULL "
                f"nor a phase index in [0, {self.q})"
            )
        arr.flags.writeable = False
        object.__setattr__(self, "values", arr)

    def __len__(self):
        return int(self.values.shape[0])

    def __eq__(self, other):
        if not isinstance(other, QarySequence):
            return NotImplemented
        return self.q == other.q and np.array_equal(self.values, other.values)

    def __hash__(self):
        return hash((self.q, self.values.tobytes()))

    def __repr__(self):
        body = ",".join(str(int(x)) for x in self.values)
        return f"QarySequence(q={self.q}, [{body}])"

    @property
    def null_count(self) -> int:
        return int((self.values == NULL).sum())

    @property
    def energy(self) -> int:
        """Sum of squared entry moduli; equals the non-NULL count."""
        return len(self) - self.null_count


@dataclass(frozen=True, eq=False)
class ComplexSequence:
    """Complex-valued sequence; entries have modulus 0 or 1 when derived
    from a QarySequence."""

    values: np.ndarray

    def __post_init__(self):
        arr = np.array(self.values, dtype=complex)
        if arr.ndim != 1 or arr.shape[0] < 1:
            raise ValueError("sequence entries must form a nonempty 1-d array")
        arr.flags.writeable = False
        object.__setattr__(self, "values", arr)

    def __len__(self):
        return int(self.values.shape[0])

    def __eq__(self, other):
        if not isinstance(other, ComplexSequence):
            return NotImplemented
        return np.array_equal(self.values, other.values)


@dataclass(frozen=True)
class ComplementarySet:
    """Ordered collection of equal-length, equal-q sequences claimed to be
    a complementary set."""

    sequences: tuple

    def __init__(self, sequences: Iterable[QarySequence]):
        seqs = tuple(sequences)
        if not seqs:
            raise ValueError("a complementary set needs at least one sequence")
        q, L = seqs[0].q, len(seqs[0])
        for i, s in enumerate(seqs):
            if not isinstance(s, QarySequence):
                raise TypeError(f"member {i} is not a QarySequence")
            if s.q != q or len(s) != L:
                raise ValueError(
                    f"member {i} has (q={s.q}, L={len(s)}), "
                    f"expected (q={q}, L={L})"
                )
        object.__setattr__(self, "sequences", seqs)

    @property
    def size(self) -> int:
        return len(self.sequences)

    @property
    def length(self) -> int:
        return len(self.sequences[0])

    @property
    def q(self) -> int:
        return self.sequences[0].q

    def __iter__(self):
        return iter(self.sequences)

    def __getitem__(self, i):
        return self.sequences[i]


@dataclass(frozen=True)
class MocsFamily:
    """Ordered family of complementary sets claimed mutually orthogonal."""

    sets: tuple

    def __init__(self, sets: Iterable[ComplementarySet]):
        ss = tuple(sets)
        if not ss:
            raise ValueError("a family needs at least one set")
        n, L, q = ss[0].size, ss[0].length, ss[0].q
        for i, s in enumerate(ss):
            if not isinstance(s, ComplementarySet):
                raise TypeError(f"family member {i} is not a ComplementarySet")
            if s.size != n or s.length != L or s.q != q:
                raise ValueError(
                    f"family member {i} has (N={s.size}, L={s.length}, "
                    f"q={s.q}), expected (N={n}, L={L}, q={q})"
                )
        object.__setattr__(self, "sets", ss)

    @property
    def num_sets(self) -> int:
        return len(self.sets)

    @property
    def set_size(self) -> int:
        return self.sets[0].size

    @property
    def length(self) -> int:
        return self.sets[0].length

    @property
    def q(self) -> int:
        return self.sets[0].q

    def __iter__(self):
        return iter(self.sets)

    def __getitem__(self, i):
        return self.sets[i]


@dataclass(frozen=True)
class CorrelationValue:
    """A correlation result plus an exactness flag.

    When exact is True the real and imaginary parts are exact integers
    (Gaussian-integer arithmetic, q in {1, 2, 4}); otherwise the value
    carries ordinary floating-point rounding.
    """

    value: complex
    exact: bool

    @property
    def magnitude(self) -> float:
        return abs(self.value)

    def as_gaussian_int(self):
        if not self.exact:
            raise ValueError("value was computed on the floating path")
        return int(self.value.real), int(self.value.imag)


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of a complementarity or orthogonality check.

    On failure, (set_a, set_b, shift) locate the first violating
    correlation sum in scan order and magnitude is its modulus.  Set
    indices are 0-based; for a plain set-level check they are None.
    """

    ok: bool
    check: str
    set_a: Optional[int] = None
    set_b: Optional[int] = None
    shift: Optional[int] = None
    magnitude: Optional[float] = None

    def __bool__(self):
        return self.ok

    def __str__(self):
        if self.ok:
            return f"PASS ({self.check})"
        where = f"shift u={self.shift}"
        if self.set_a is not None:
            where = f"sets ({self.set_a},{self.set_b}), {where}"
        return f"FAIL ({self.check}): {where}, |sum|={self.magnitude:.6g}"


def to_complex(seq: QarySequence) -> ComplexSequence:
    """Map phase indices to unit-circle values, NULL to complex zero."""
    roots = _EXACT_ROOTS.get(seq.q)
    if roots is None:
        roots = np.exp(2j * np.pi * np.arange(seq.q) / seq.q)
    out = np.zeros(len(seq), dtype=complex)
    mask = seq.values >= 0
    out[mask] = roots[seq.values[mask]]
    return ComplexSequence(out)


def _hist_value(hist: np.ndarray, q: int) -> CorrelationValue:
    if q == 1:
        return CorrelationValue(complex(int(hist[0]), 0), True)
    if q == 2:
        return CorrelationValue(complex(int(hist[0] - hist[1]), 0), True)
    if q == 4:
        return CorrelationValue(
            complex(int(hist[0] - hist[2]), int(hist[1] - hist[3])), True
        )
    roots = np.exp(2j * np.pi * np.arange(q) / q)
    return CorrelationValue(complex(hist @ roots), False)


def cross_correlation(a: QarySequence, b: QarySequence, u: int) -> CorrelationValue:
    """Aperiodic cross-correlation R_{a,b}(u) = sum_j a(j) b*(j+u)."""
    if a.q != b.q:
        raise ValueError(f"modulus mismatch: {a.q} vs {b.q}")
    if len(a) != len(b):
        raise ValueError(f"length mismatch: {len(a)} vs {len(b)}")
    if abs(u) >= len(a):
        return CorrelationValue(0j, True)
    hist = _backend.corr_hist(a.values, b.values, int(u), a.q)
    return _hist_value(hist, a.q)


def auto_correlation(a: QarySequence, u: int) -> CorrelationValue:
    return cross_correlation(a, a, u)


def correlation_sum(
    set_a: ComplementarySet, set_b: ComplementarySet, u: int
) -> CorrelationValue:
    """Componentwise cross-correlation summed over paired members."""
    if set_a.q != set_b.q:
        raise ValueError(f"modulus mismatch: {set_a.q} vs {set_b.q}")
    if set_a.size != set_b.size or set_a.length != set_b.length:
        raise ValueError(
            f"set shape mismatch: (N={set_a.size}, L={set_a.length}) vs "
            f"(N={set_b.size}, L={set_b.length})"
        )
    q, L = set_a.q, set_a.length
    if abs(u) >= L:
        return CorrelationValue(0j, True)
    hist = np.zeros(q, dtype=np.int64)
    for sa, sb in zip(set_a, set_b):
        hist += _backend.corr_hist(sa.values, sb.values, int(u), q)
    return _hist_value(hist, q)


def _resolve_tol(q: int, L: int, tol: Optional[float]):
    """None means the exact integer zero test (only valid for exact moduli)."""
    if tol is not None:
        if tol < 0:
            raise ValueError("tolerance must be nonnegative")
        return float(tol)
    if q in EXACT_MODULI:
        return None
    return 1e-9 * L


def _table_violations(table: np.ndarray, q: int, tol) -> tuple:
    """Mask of nonzero rows plus per-row magnitudes."""
    if q == 1:
        re = table[:, 0].astype(float)
        im = np.zeros_like(re)
    elif q == 2:
        re = (table[:, 0] - table[:, 1]).astype(float)
        im = np.zeros_like(re)
    elif q == 4:
        re = (table[:, 0] - table[:, 2]).astype(float)
        im = (table[:, 1] - table[:, 3]).astype(float)
    else:
        roots = np.exp(2j * np.pi * np.arange(q) / q)
        vals = table @ roots
        mags = np.abs(vals)
        cutoff = tol if tol is not None else 0.0
        return mags > cutoff, mags
    mags = np.hypot(re, im)
    if tol is None:
        return (re != 0) | (im != 0), mags
    return mags > tol, mags


def _stack(cset: ComplementarySet) -> np.ndarray:
    return np.stack([s.values for s in cset])


def is_complementary_set(
    cset: ComplementarySet, tol: Optional[float] = None
) -> VerificationReport:
    """Check that member autocorrelations sum to zero at every shift u != 0."""
    q, L = cset.q, cset.length
    tol = _resolve_tol(q, L, tol)
    A = _stack(cset)
    table = _backend.corr_table_sum(A, A, q)
    bad, mags = _table_violations(table[L:], q, tol)  # rows u = 1 .. L-1
    if bad.any():
        u = int(np.argmax(bad)) + 1
        return VerificationReport(
            False, "cs", shift=u, magnitude=float(mags[u - 1])
        )
    return VerificationReport(True, "cs")


def is_mocs(fam: MocsFamily, tol: Optional[float] = None) -> VerificationReport:
    """Check every member set is complementary and cross-sums vanish at all
    shifts for every ordered pair of distinct sets (i < k suffices by
    conjugate symmetry)."""
    q, L = fam.q, fam.length
    tol = _resolve_tol(q, L, tol)
    stacks = [_stack(s) for s in fam]
    for i, A in enumerate(stacks):
        table = _backend.corr_table_sum(A, A, q)
        bad, mags = _table_violations(table[L:], q, tol)
        if bad.any():
            u = int(np.argmax(bad)) + 1
            return VerificationReport(
                False, "mocs", set_a=i, set_b=i, shift=u,
                magnitude=float(mags[u - 1]),
            )
    for i in range(len(stacks)):
        for k in range(i + 1, len(stacks)):
            table = _backend.corr_table_sum(stacks[i], stacks[k], q)
            bad, mags = _table_violations(table, q, tol)
            if bad.any():
                t = int(np.argmax(bad))
                return VerificationReport(
                    False, "mocs", set_a=i, set_b=k, shift=t - (L - 1),
                    magnitude=float(mags[t]),
                )
    return VerificationReport(True, "mocs")


def hamming_distance(
    a: Union[QarySequence, ComplexSequence],
    b: Union[QarySequence, ComplexSequence],
) -> int:
    """Number of positions with differing entries (exact comparison)."""
    if isinstance(a, QarySequence) and isinstance(b, QarySequence):
        if a.q != b.q:
            raise ValueError(f"modulus mismatch: {a.q} vs {b.q}")
        if len(a) != len(b):
            raise ValueError(f"length mismatch: {len(a)} vs {len(b)}")
        return int((a.values != b.values).sum())
    if isinstance(a, ComplexSequence) and isinstance(b, ComplexSequence):
        if len(a) != len(b):
            raise ValueError(f"length mismatch: {len(a)} vs {len(b)}")
        return int((a.values != b.values).sum())
    raise TypeError("operands must both be QarySequence or both ComplexSequence")
