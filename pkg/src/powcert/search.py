"""Exhaustive sweep of a sequence for perfect powers over an index range."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from typing import List, Tuple

from .errors import InvariantFailure
from .power_detect import PowerWitness, find_all_powers
from .recurrence import PowerSumSequence, term

Catalogue = List[Tuple[int, PowerWitness]]

# deg h >= 2 and m >= 2 force deg G_n >= 4.
MIN_SEARCH_DEGREE = 4


def _scan(seq: PowerSumSequence, n: int) -> Catalogue:
    g = term(seq, n)
    if g.is_zero() or g.degree < MIN_SEARCH_DEGREE:
        return []
    out = []
    for w in find_all_powers(g):
        if not w.verifies(g):
            raise InvariantFailure(f"witness (n={n}, m={w.exponent}) failed re-verification")
        out.append((n, w))
    return out


def _scan_chunk(args) -> Catalogue:
    seq, ns = args
    out: Catalogue = []
    for n in ns:
        out.extend(_scan(seq, n))
    return out


def search_powers(seq: PowerSumSequence, n_lo: int, n_hi: int, workers: int = 1) -> Catalogue:
    """All ``(n, witness)`` with ``n_lo <= n <= n_hi``, ordered by ``(n, m)``.

    With ``workers > 1`` indices are dealt round-robin to a process pool; the
    merged result is re-sorted so it does not depend on the worker count.
    """
    if n_lo < 0 or n_hi < n_lo:
        raise ValueError(f"invalid search range [{n_lo}, {n_hi}]")
    ns = list(range(n_lo, n_hi + 1))
    if workers <= 1 or len(ns) < 2:
        found = _scan_chunk((seq, ns))
    else:
        workers = min(workers, len(ns))
        chunks = [(seq, ns[i::workers]) for i in range(workers)]
        found = []
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for part in pool.map(_scan_chunk, chunks):
                found.extend(part)
    found.sort(key=lambda item: (item[0], item[1].exponent))
    return found
