"""Longest cycles of the squaring map ``x -> x**2 mod m``.

Closed forms live in :mod:`sqcycles.formulas`, the brute-force census in
:mod:`sqcycles.graph`, and table replay and sweeps in :mod:`sqcycles.harness`.
"""

from .formulas import LValue, PrimeClassRecord, Route, l_of, l_prime, l_prime_power, l_prime_square
from .graph import CycleRecord, GraphSummary, cycle_period, enumerate_cycles, l_bruteforce
from .numcore import Factorization, factorize, multiplicative_order

__all__ = [
    "CycleRecord",
    "Factorization",
    "GraphSummary",
    "LValue",
    "PrimeClassRecord",
    "Route",
    "cycle_period",
    "enumerate_cycles",
    "factorize",
    "l_bruteforce",
    "l_of",
    "l_prime",
    "l_prime_power",
    "l_prime_square",
    "multiplicative_order",
]

__version__ = "0.1.0"
