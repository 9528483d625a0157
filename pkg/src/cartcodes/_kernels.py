"""Hot enumeration kernels: codeword scans and rank over F_q.

Each kernel has two implementations: a numba-compiled walk and a blocked
pure-numpy fallback.  Numba is used when importable unless the environment
variable CARTESIAN_NO_NUMBA is set (any value other than "" or "0");
method="numba" / "numpy" / "naive" forces a path explicitly.  All kernels
work on int64 element codes through dense q x q lookup tables, so they are
field-agnostic.
"""

from __future__ import annotations

import os

import numpy as np

try:
    from numba import njit

    HAS_NUMBA = True
except ImportError:  # pragma: no cover - only hit without numba installed
    HAS_NUMBA = False

ENV_NO_NUMBA = "CARTESIAN_NO_NUMBA"


def numba_enabled() -> bool:
    if not HAS_NUMBA:
        return False
    return os.environ.get(ENV_NO_NUMBA, "0") in ("", "0")


def _resolve(method: str) -> str:
    if method == "auto":
        return "numba" if numba_enabled() else "numpy"
    if method == "numba" and not HAS_NUMBA:
        raise RuntimeError("numba is not available; use method='numpy'")
    if method not in ("numba", "numpy", "naive"):
        raise ValueError(f"unknown method {method!r}")
    return method


# ---------------------------------------------------------------------------
# minimum-weight scan over all q^K words m . G
# ---------------------------------------------------------------------------


def scan_min_weight(G, tables, *, target=None, method="auto", block_digits=None) -> int:
    """Minimum positive Hamming weight over all q^K combinations of the rows of G.

    The all-zero word is ignored.  `target` permits early exit once the
    running minimum reaches it (confirm mode); None forces a complete pass.
    `block_digits` tunes the numpy fallback's block size and never changes
    the result.
    """
    G = np.ascontiguousarray(np.asarray(G, dtype=np.int64))
    K, L = G.shape
    q = tables.q
    tgt = -1 if target is None else int(target)
    meth = _resolve(method)
    if meth == "numba":
        scaled = tables.mul[np.arange(q, dtype=np.int64)[None, :, None], G[:, None, :]]
        return int(
            _scan_njit(np.ascontiguousarray(scaled), tables.add, tables.sub, q, q**K, tgt)
        )
    if meth == "numpy":
        return _scan_numpy(G, tables, tgt, block_digits)
    return _scan_naive(G, tables)


if HAS_NUMBA:

    @njit(cache=True)
    def _scan_njit(scaled, addt, subt, q, total, target):
        # scaled[i, c, l] = c * G[i, l]; the message odometer updates the word
        # by swapping one row's contribution per step.
        K = scaled.shape[0]
        L = scaled.shape[2]
        msg = np.zeros(K, dtype=np.int64)
        word = np.zeros(L, dtype=np.int64)
        best = L + 1
        for _ in range(total - 1):
            j = 0
            while msg[j] == q - 1:
                for l in range(L):
                    word[l] = subt[word[l], scaled[j, q - 1, l]]
                msg[j] = 0
                j += 1
            c = msg[j]
            for l in range(L):
                word[l] = addt[subt[word[l], scaled[j, c, l]], scaled[j, c + 1, l]]
            msg[j] = c + 1
            w = 0
            for l in range(L):
                if word[l] != 0:
                    w += 1
            if 0 < w < best:
                best = w
                if target >= 0 and best <= target:
                    break
        return best


def _scan_numpy(G, tables, target, block_digits=None) -> int:
    K, L = G.shape
    q = tables.q
    if block_digits is None:
        block_digits = max(1, int(13 / np.log2(q)))
    j = min(K, block_digits)
    addt, subt, mult = tables.add, tables.sub, tables.mul
    # all combinations of the first j rows, grown one row at a time
    W = np.zeros((1, L), dtype=np.int64)
    for i in range(j):
        scaled = mult[np.arange(q, dtype=np.int64)[:, None], G[i][None, :]]
        W = addt[W[:, None, :], scaled[None, :, :]].reshape(-1, L)
    best = L + 1
    high = G[j:]
    msg = np.zeros(K - j, dtype=np.int64)
    whigh = np.zeros(L, dtype=np.int64)
    for step in range(q ** (K - j)):
        if step > 0:
            i = 0
            while msg[i] == q - 1:
                whigh = subt[whigh, mult[q - 1, high[i]]]
                msg[i] = 0
                i += 1
            c = msg[i]
            whigh = addt[subt[whigh, mult[c, high[i]]], mult[c + 1, high[i]]]
            msg[i] = c + 1
        block = addt[W, whigh[None, :]]
        weights = np.count_nonzero(block, axis=1)
        nz = weights[weights > 0]
        if nz.size:
            m = int(nz.min())
            if m < best:
                best = m
                if target >= 0 and best <= target:
                    break
    return best


def _scan_naive(G, tables, chunk=4096) -> int:
    """Re-encodes every message from scratch; differential reference path."""
    K, L = G.shape
    q = tables.q
    total = q**K
    addt, mult = tables.add, tables.mul
    powers = q ** np.arange(K, dtype=np.int64)
    best = L + 1
    for start in range(1, total, chunk):
        idx = np.arange(start, min(start + chunk, total), dtype=np.int64)
        digits = (idx[:, None] // powers[None, :]) % q
        words = np.zeros((idx.size, L), dtype=np.int64)
        for i in range(K):
            words = addt[words, mult[digits[:, i][:, None], G[i][None, :]]]
        weights = np.count_nonzero(words, axis=1)
        nz = weights[weights > 0]
        if nz.size:
            best = min(best, int(nz.min()))
    return best


# ---------------------------------------------------------------------------
# rank over F_q by Gaussian elimination on codes
# ---------------------------------------------------------------------------


def rank_mod(M, tables, *, method="auto") -> int:
    """Row rank of M over the field described by the tables."""
    M = np.array(M, dtype=np.int64, copy=True)
    if M.size == 0:
        return 0
    meth = _resolve(method)
    if meth == "numba":
        return int(_rank_njit(M, tables.sub, tables.mul, tables.inv))
    return _rank_numpy(M, tables)


if HAS_NUMBA:

    @njit(cache=True)
    def _rank_njit(M, subt, mult, inv):
        rows, cols = M.shape
        r = 0
        for c in range(cols):
            piv = -1
            for i in range(r, rows):
                if M[i, c] != 0:
                    piv = i
                    break
            if piv < 0:
                continue
            if piv != r:
                for l in range(cols):
                    tmp = M[r, l]
                    M[r, l] = M[piv, l]
                    M[piv, l] = tmp
            s = inv[M[r, c]]
            for l in range(c, cols):
                M[r, l] = mult[s, M[r, l]]
            for i in range(r + 1, rows):
                f = M[i, c]
                if f != 0:
                    for l in range(c, cols):
                        M[i, l] = subt[M[i, l], mult[f, M[r, l]]]
            r += 1
            if r == rows:
                break
        return r


def _rank_numpy(M, tables) -> int:
    subt, mult, inv = tables.sub, tables.mul, tables.inv
    rows, cols = M.shape
    r = 0
    for c in range(cols):
        col = M[r:, c]
        nz = np.nonzero(col)[0]
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            M[[r, piv]] = M[[piv, r]]
        M[r] = mult[inv[M[r, c]], M[r]]
        rest = M[r + 1 :]
        f = rest[:, c]
        mask = f != 0
        if mask.any():
            rest[mask] = subt[rest[mask], mult[f[mask][:, None], M[r][None, :]]]
        r += 1
        if r == rows:
            break
    return r
