"""Brute-force census of the squaring map ``x -> x*x mod m`` on all residues.

This module never consults the closed forms; it is the reference the
formulas are checked against.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .numcore import mod_mul

DEFAULT_ORACLE_CAP = 2**26
# x*x must fit in uint64 for every residue
_HARD_CAP = 2**32
CAP_ENV_VAR = "SQCYCLES_ORACLE_CAP"

_CHUNK = 1 << 22


class OracleCapError(ValueError):
    """The modulus is too large for full enumeration."""


def oracle_cap() -> int:
    """Current enumeration cap, honouring the ``SQCYCLES_ORACLE_CAP`` override."""
    raw = os.environ.get(CAP_ENV_VAR)
    if not raw:
        return DEFAULT_ORACLE_CAP
    try:
        cap = int(raw)
    except ValueError:
        raise ValueError(f"{CAP_ENV_VAR} must be an integer, got {raw!r}") from None
    if not 1 <= cap <= _HARD_CAP:
        raise ValueError(f"{CAP_ENV_VAR} must lie in [1, {_HARD_CAP}]")
    return cap


def check_cap(m: int, cap: Optional[int] = None) -> None:
    if m < 1:
        raise ValueError("modulus must be >= 1")
    cap = oracle_cap() if cap is None else cap
    if m > cap:
        raise OracleCapError(
            f"modulus {m} exceeds the enumeration cap of {cap} residues"
            f" (set {CAP_ENV_VAR} to raise it)"
        )


@dataclass(frozen=True)
class CycleRecord:
    representative: int
    length: int
    elements: Optional[tuple[int, ...]] = None


@dataclass(frozen=True)
class GraphSummary:
    modulus: int
    cycles: tuple[CycleRecord, ...] = field(repr=False)
    max_length: int
    on_cycle_count: int


def step(x: int, m: int) -> int:
    return mod_mul(x, x, m)


def trajectory(x: int, m: int, max_steps: int) -> list[int]:
    """``[x, x^2, x^4, ...]`` with ``max_steps + 1`` entries."""
    out = [x % m]
    for _ in range(max_steps):
        out.append(step(out[-1], m))
    return out


def cycle_period(x: int, m: int) -> int:
    """Length of the cycle eventually reached from ``x`` (Brent's algorithm)."""
    power = lam = 1
    tortoise = x % m
    hare = step(tortoise, m)
    while tortoise != hare:
        if power == lam:
            tortoise = hare
            power *= 2
            lam = 0
        hare = step(hare, m)
        lam += 1
    return lam


def successor_array(m: int) -> np.ndarray:
    dtype = np.uint32 if m <= 2**32 else np.uint64
    succ = np.empty(m, dtype=dtype)
    for lo in range(0, m, _CHUNK):
        x = np.arange(lo, min(m, lo + _CHUNK), dtype=np.uint64)
        succ[lo : lo + len(x)] = (x * x) % np.uint64(m)
    return succ


def _cycle_labels(succ: np.ndarray):
    """Return (sorted cycle nodes, label per node) where label indexes the cycle minimum."""
    m = len(succ)
    alive = np.ones(m, dtype=bool)
    count = m
    # The image of f^k shrinks until f permutes it; that fixed set is the union of cycles.
    while True:
        nxt = np.zeros(m, dtype=bool)
        nxt[succ[alive]] = True
        c = int(np.count_nonzero(nxt))
        if c == count:
            break
        alive, count = nxt, c
    nodes = np.flatnonzero(alive)
    index = np.empty(m, dtype=np.int64)
    index[nodes] = np.arange(len(nodes))
    perm = index[succ[nodes]]
    del index
    label = np.arange(len(nodes))
    hop = perm
    span = 1
    # min over a window of 2**t successive nodes; windows >= node count cover every cycle
    while span < len(nodes):
        label = np.minimum(label, label[hop])
        hop = hop[hop]
        span *= 2
    return nodes, label


def _walk(rep: int, length: int, succ: np.ndarray) -> tuple[int, ...]:
    elems = [rep]
    x = rep
    for _ in range(length - 1):
        x = int(succ[x])
        elems.append(x)
    return tuple(elems)


def enumerate_cycles(m: int, elements: bool = False, cap: Optional[int] = None) -> GraphSummary:
    """Every cycle of the squaring map modulo ``m``, ordered by representative.

    ``elements=True`` fills in each orbit starting from its smallest member.
    """
    check_cap(m, cap)
    succ = successor_array(m)
    nodes, label = _cycle_labels(succ)
    labels, lengths = np.unique(label, return_counts=True)
    reps = nodes[labels]
    cycles = tuple(
        CycleRecord(int(r), int(n), _walk(int(r), int(n), succ) if elements else None)
        for r, n in zip(reps, lengths)
    )
    return GraphSummary(
        modulus=m,
        cycles=cycles,
        max_length=int(lengths.max()),
        on_cycle_count=int(len(nodes)),
    )


def l_bruteforce(m: int, cap: Optional[int] = None) -> int:
    """Maximum cycle length by full enumeration."""
    check_cap(m, cap)
    nodes, label = _cycle_labels(successor_array(m))
    return int(np.bincount(label).max())


def largest_cycles(m: int, cap: Optional[int] = None) -> list[CycleRecord]:
    check_cap(m, cap)
    succ = successor_array(m)
    nodes, label = _cycle_labels(succ)
    labels, lengths = np.unique(label, return_counts=True)
    top = lengths.max()
    return [
        CycleRecord(int(nodes[lab]), int(top), _walk(int(nodes[lab]), int(top), succ))
        for lab in labels[lengths == top]
    ]
