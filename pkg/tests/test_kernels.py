"""Kernel differential tests: numba vs numpy vs naive, env-flag selection."""

import random

import numpy as np
import pytest

from cartcodes import make_field
from cartcodes import _kernels
from helpers import span_words


def _random_rows(field, k, length, rng):
    return np.array(
        [[rng.randrange(field.q) for _ in range(length)] for _ in range(k)],
        dtype=np.int64,
    )


@pytest.mark.parametrize("p,e", [(2, 1), (3, 1), (5, 1), (2, 2)])
def test_scan_paths_agree(p, e):
    F = make_field(p, e)
    T = F.tables()
    rng = random.Random(100 * p + e)
    for _ in range(5):
        k = rng.randint(1, 4)
        length = rng.randint(1, 9)
        G = _random_rows(F, k, length, rng)
        ref = _kernels.scan_min_weight(G, T, method="naive")
        assert _kernels.scan_min_weight(G, T, method="numpy") == ref
        if _kernels.HAS_NUMBA:
            assert _kernels.scan_min_weight(G, T, method="numba") == ref
        # independent: minimum weight over the explicitly spanned words
        words = span_words(F, G.tolist())
        expected = min(
            (sum(1 for x in w if x) for w in words if any(w)), default=length + 1
        )
        assert ref == expected


def test_scan_partition_independence():
    F = make_field(3)
    T = F.tables()
    rng = random.Random(11)
    G = _random_rows(F, 5, 7, rng)
    results = {
        _kernels.scan_min_weight(G, T, method="numpy", block_digits=b)
        for b in (1, 2, 3, 5, 8)
    }
    assert len(results) == 1


def test_scan_early_exit_matches_full():
    F = make_field(3)
    T = F.tables()
    rng = random.Random(12)
    G = _random_rows(F, 4, 8, rng)
    full = _kernels.scan_min_weight(G, T)
    assert _kernels.scan_min_weight(G, T, target=full) == full


@pytest.mark.parametrize("p,e", [(2, 1), (5, 1), (3, 2)])
def test_rank_paths_agree_with_span_oracle(p, e):
    F = make_field(p, e)
    T = F.tables()
    rng = random.Random(200 * p + e)
    for _ in range(5):
        k = rng.randint(1, 3)
        length = rng.randint(1, 5)
        M = _random_rows(F, k, length, rng)
        r_numpy = _kernels.rank_mod(M, T, method="numpy")
        if _kernels.HAS_NUMBA:
            assert _kernels.rank_mod(M, T, method="numba") == r_numpy
        # span size is q^rank
        assert len(span_words(F, M.tolist())) == F.q**r_numpy


def test_env_flag_selects_numpy(monkeypatch):
    monkeypatch.setenv(_kernels.ENV_NO_NUMBA, "1")
    assert not _kernels.numba_enabled()
    assert _kernels._resolve("auto") == "numpy"
    monkeypatch.setenv(_kernels.ENV_NO_NUMBA, "0")
    assert _kernels.numba_enabled() == _kernels.HAS_NUMBA
    monkeypatch.delenv(_kernels.ENV_NO_NUMBA)
    assert _kernels.numba_enabled() == _kernels.HAS_NUMBA


def test_env_flag_end_to_end(monkeypatch):
    F = make_field(2)
    T = F.tables()
    G = np.array([[1, 1, 1, 1], [0, 1, 0, 1], [0, 0, 1, 1]], dtype=np.int64)
    with_numba = _kernels.scan_min_weight(G, T)
    monkeypatch.setenv(_kernels.ENV_NO_NUMBA, "1")
    assert _kernels.scan_min_weight(G, T) == with_numba == 2


def test_unknown_method_rejected():
    F = make_field(2)
    with pytest.raises(ValueError):
        _kernels.scan_min_weight(np.ones((1, 2), dtype=np.int64), F.tables(), method="bogus")
