"""Exhaustive ground truth: enumerate every table of a tiny type, test each
one exactly, and report the count plus sample witnesses.

The enumeration walks value arrays in odometer order (index 0 varies
fastest).  Each odometer step changes a single table entry, so the 2^n
unreduced spectrum rows are updated incrementally (entry x flips W(y) by
(-1)^(x.y) between the old and new coefficient); a block of the
fastest-varying digits is additionally evaluated as one numpy batch.  All
comparisons happen on exact integers inside a proven int64 envelope, with a
plain per-table fallback outside it.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

import numpy as np

from .gbf import FunctionTable, GbfType, _folded_reduction, is_gbf

DEFAULT_BUDGET = 10**7
_BATCH_TARGET = 4096


@dataclass
class OracleResult:
    gbf_type: GbfType
    total_candidates: int
    gbf_count: int
    witnesses: list = field(default_factory=list)


def _sign_table(rows: int) -> np.ndarray:
    """sgn[x, y] = (-1)^(x.y) over index bits."""
    xs = np.arange(rows)
    parity = (xs[:, None] & xs[None, :])
    parity = np.bitwise_count(parity) if hasattr(np, "bitwise_count") else \
        np.array([[bin(int(v)).count("1") for v in row] for row in parity])
    return np.where(parity & 1, -1, 1).astype(np.int64)


def _decode(index: int, m: int, width: int) -> list[int]:
    digits = []
    for _ in range(width):
        digits.append(index % m)
        index //= m
    return digits


def enumerate_gbfs(t: GbfType, budget: int = DEFAULT_BUDGET,
                   max_witnesses: int = 4) -> OracleResult:
    """Exact census of flat-spectrum tables of type t.

    Refuses when m^(2^n) exceeds the budget, stating the budget required.
    Witnesses are the first ``max_witnesses`` hits in enumeration order and
    are re-verified through the independent per-table test before returning.
    """
    m, n = t.m, t.n
    rows = 1 << n
    total = m ** rows
    if total > budget:
        raise ValueError(
            f"enumeration of {t} has m^(2^n) = {total} candidates, above "
            f"the budget {budget}; pass budget >= {total}")

    try:
        Rf, IDX, phi, rmax = _folded_reduction(m)
        # batched entries are bounded by rows+1 in absolute value
        safe = m * m * (rows + 1) ** 2 * rmax < 2**62
    except OverflowError:
        safe = False
    if not safe:
        return _enumerate_plain(t, total, max_witnesses)

    sgn = _sign_table(rows)

    # batch the b fastest digits; prefix digits advance by odometer
    b = 1
    while b < rows and m ** (b + 1) <= _BATCH_TARGET:
        b += 1
    nb = m ** b
    delta = np.zeros((nb, rows, m), dtype=np.int64)
    for pos in range(b):
        digit = (np.arange(nb) // m ** pos) % m
        for v in range(m):
            delta[digit == v, :, v] += sgn[pos][None, :]

    spectrum = np.zeros((rows, m), dtype=np.int64)
    spectrum[:, 0] = sgn[b:].sum(axis=0)

    want = np.zeros(phi, dtype=np.int64)
    want[0] = rows

    count = 0
    witnesses: list[FunctionTable] = []
    digits = [0] * (rows - b)
    while True:
        cand = spectrum[None, :, :] + delta
        gathered = cand[:, :, IDX]                       # (nb, rows, half, m)
        corr = np.einsum('byki,byi->byk', gathered, cand)
        red = corr @ Rf
        ok = np.all(red == want, axis=(1, 2))
        hits = int(ok.sum())
        if hits:
            count += hits
            if len(witnesses) < max_witnesses:
                for vidx in np.flatnonzero(ok):
                    values = _decode(int(vidx), m, b) + digits
                    witnesses.append(FunctionTable(t, tuple(values)))
                    if len(witnesses) == max_witnesses:
                        break
        # advance the prefix odometer, updating the affected spectrum column
        j = 0
        while j < rows - b:
            pos = b + j
            old = digits[j]
            spectrum[:, old] -= sgn[pos]
            if old + 1 < m:
                digits[j] = old + 1
                spectrum[:, old + 1] += sgn[pos]
                break
            digits[j] = 0
            spectrum[:, 0] += sgn[pos]
            j += 1
        else:
            break

    for w in witnesses:
        if not is_gbf(w):  # pragma: no cover - the two routes agree
            raise AssertionError(f"witness failed independent verification: {w}")
    return OracleResult(t, total, count, witnesses)


def _enumerate_plain(t: GbfType, total: int, max_witnesses: int) -> OracleResult:
    """Reference enumeration, one exact per-table test per candidate."""
    m, n = t.m, t.n
    rows = 1 << n
    count = 0
    witnesses = []
    for index in range(total):
        ft = FunctionTable(t, tuple(_decode(index, m, rows)))
        if is_gbf(ft):
            count += 1
            if len(witnesses) < max_witnesses:
                witnesses.append(ft)
    return OracleResult(t, total, count, witnesses)


def spot_check(t: GbfType, samples: int, seed=0):
    """Seeded random tables with exact verdicts, as (table, flat) pairs.

    When the whole space has at most ``samples`` tables the check degenerates
    to full enumeration in odometer order, so reruns are reproducible either
    way.
    """
    m, n = t.m, t.n
    rows = 1 << n
    total = m ** rows
    out = []
    if total <= samples:
        for index in range(total):
            ft = FunctionTable(t, tuple(_decode(index, m, rows)))
            out.append((ft, is_gbf(ft)))
        return out
    rng = random.Random(seed)
    for _ in range(samples):
        ft = FunctionTable(t, tuple(rng.randrange(m) for _ in range(rows)))
        out.append((ft, is_gbf(ft)))
    return out
