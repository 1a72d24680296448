"""Pure numpy correlation and distance kernels.

Reference implementation of the kernel contract shared with the compiled
extension (csseq._ckernels).  Sequences are int64 arrays of phase indices
with -1 marking a zeroed (NULL) entry.  All counting is exact integer
arithmetic; no complex numbers appear here.

Shift convention: row t of a correlation table corresponds to the shift
u = t - (L - 1), so tables cover u = -(L-1) .. L-1.  Entry [t, d] counts
the overlap positions j with (a[j] - b[j+u]) == d mod q, both entries
non-NULL.
"""

import numpy as np


def corr_hist(a, b, u, q):
    """Phase-difference histogram of a against b at a single shift u."""
    L = a.shape[0]
    lo = max(0, -u)
    hi = min(L, L - u)
    if hi <= lo:
        return np.zeros(q, dtype=np.int64)
    x = a[lo:hi]
    y = b[lo + u:hi + u]
    keep = (x >= 0) & (y >= 0)
    d = (x[keep] - y[keep]) % q
    return np.bincount(d, minlength=q).astype(np.int64)


def corr_table(a, b, q):
    """Histograms for every shift at once: int64 array of shape (2L-1, q)."""
    L = a.shape[0]
    table = np.empty((2 * L - 1, q), dtype=np.int64)
    onehot_a = [(a == c).astype(np.int64) for c in range(q)]
    onehot_b = [(b == c).astype(np.int64) for c in range(q)]
    for d in range(q):
        acc = np.zeros(2 * L - 1, dtype=np.int64)
        for c in range(q):
            # sum_j [a[j]==c][b[j+u]==c-d] lands at index u+L-1
            acc += np.convolve(onehot_b[(c - d) % q], onehot_a[c][::-1])
        table[:, d] = acc
    return table


def corr_table_sum(A, B, q):
    """Sum of corr_table over paired rows of the stacks A and B."""
    total = corr_table(A[0], B[0], q)
    for j in range(1, A.shape[0]):
        total += corr_table(A[j], B[j], q)
    return total


def min_hamming(codes):
    """Minimum pairwise Hamming distance over the rows of codes.

    Returns (dmin, i, j) with (i, j) the first pair attaining it in
    row-major pair order.  Requires at least two rows.
    """
    n = codes.shape[0]
    best = codes.shape[1] + 1
    bi = bj = -1
    for i in range(n - 1):
        d = (codes[i + 1:] != codes[i]).sum(axis=1)
        k = int(np.argmin(d))
        if int(d[k]) < best:
            best = int(d[k])
            bi, bj = i, i + 1 + k
            if best == 0:
                break
    return best, bi, bj
