"""Exact witness synthesis from a subset-closed consistency family.

Given the maximal members J_0, ..., J_{m-1} of the family in canonical
order, the skolem witness assigns each index the product of the primes p_n
with the index in J_n (empty product = 1), so a subset shares a prime factor
exactly when it sits inside some member. The boolean witness sets bit n
instead, so a subset has nonzero meet under the same condition.

Only the maximal members are enumerated; the verdict "contained in some
member" is unchanged and the parameters stay small.
"""

from __future__ import annotations

from itertools import count
from typing import Iterator

from .errors import WitnessError
from .oracles import BOOLEAN, SKOLEM, Witness
from .patterns import ConsistencyFamily

_PRIMES = [2, 3]


def primes() -> Iterator[int]:
    """The prime sequence 2, 3, 5, ... (memoized trial division)."""
    for p in _PRIMES:
        yield p
    for n in count(_PRIMES[-1] + 2, 2):
        if all(n % p for p in _PRIMES if p * p <= n):
            _PRIMES.append(n)
            yield n


def nth_prime(n: int) -> int:
    """The (n+1)-st prime, 0-indexed: nth_prime(0) == 2."""
    if n < 0:
        raise ValueError("n must be >= 0")
    gen = primes()
    for _ in range(n):
        next(gen)
    return next(gen)


def synth_skolem(family: ConsistencyFamily) -> Witness:
    if not family.maximal:
        raise WitnessError("cannot synthesize from an empty family")
    gen = primes()
    assigned = {label: 1 for label in family.labels}
    for member in family.maximal:
        p = next(gen)
        for label in member:
            assigned[label] *= p
    return Witness(SKOLEM, tuple(family.labels), assigned)


def synth_boolean(family: ConsistencyFamily) -> Witness:
    if not family.maximal:
        raise WitnessError("cannot synthesize from an empty family")
    width = len(family.maximal)
    assigned = {label: 0 for label in family.labels}
    for n, member in enumerate(family.maximal):
        for label in member:
            assigned[label] |= 1 << n
    return Witness(BOOLEAN, tuple(family.labels), assigned, width=width)
