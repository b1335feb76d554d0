"""Polynomial hashing of rank sets modulo a random prime.

``h_X(S) = sum(X**e for e in S) mod P``.  Powers come from a ``c x gamma``
table with ``gamma = ceil(sigma ** (1/c))`` and ``T[i][j] = X**(i * gamma**j)``,
so ``X**e`` is a product of ``c`` table entries picked by the base-``gamma``
digits of ``e``.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field

from .errors import DuplicateSets, RankOutOfRange, RetryLimitExceeded

MAX_MODULUS = 1 << 62

# deterministic witness set for every n < 3.3e24, which covers 64-bit inputs
_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin for 64-bit integers."""
    if n < 2:
        return False
    for p in _WITNESSES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _WITNESSES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def find_prime(lo: int, hi: int, rng: random.Random | None = None, budget: int = 100_000) -> int:
    """Sample uniform candidates from ``[lo, hi]`` until one is prime."""
    if lo < 2 or hi < lo:
        raise ValueError(f"bad interval [{lo},{hi}]")
    rng = rng or random.Random()
    for _ in range(budget):
        p = rng.randint(lo, hi)
        if is_prime(p):
            return p
    raise RetryLimitExceeded(f"no prime found in [{lo},{hi}] after {budget} candidates")


def _iroot_ceil(x: int, c: int) -> int:
    """Smallest g >= 1 with g**c >= x."""
    if x <= 1:
        return 1
    g = max(1, int(round(x ** (1.0 / c))))
    while g ** c < x:
        g += 1
    while g > 1 and (g - 1) ** c >= x:
        g -= 1
    return g


@dataclass(frozen=True)
class HashParams:
    P: int
    X: int
    sigma: int
    c: int = 1
    attempts: int = 1
    gamma: int = field(init=False)
    table: tuple = field(init=False, repr=False)

    def __post_init__(self):
        gamma = _iroot_ceil(max(self.sigma, 1), self.c)
        P, X = self.P, self.X
        rows = []
        for i in range(gamma):
            rows.append(tuple(pow(X, i * gamma ** j, P) for j in range(self.c)))
        object.__setattr__(self, "gamma", gamma)
        object.__setattr__(self, "table", tuple(rows))


def make_params(P: int, X: int, sigma: int, c: int = 1) -> HashParams:
    return HashParams(P, X % P, sigma, c)


def power(e: int, params: HashParams) -> int:
    """``X**e mod P`` from the digit decomposition of ``e``."""
    if not 0 <= e < params.sigma:
        raise RankOutOfRange(f"rank {e} outside [0,{params.sigma})")
    T, gamma, P = params.table, params.gamma, params.P
    acc = 1
    for j in range(params.c):
        acc = acc * T[e % gamma][j] % P
        e //= gamma
    return acc


def power_table(params: HashParams) -> list:
    """All ``X**e`` for ``e < sigma``."""
    return [power(e, params) for e in range(params.sigma)]


def hash_set(S, params: HashParams) -> int:
    P = params.P
    h = 0
    for e in S:
        h += power(e, params)
    return h % P


def find_injective(collection, sigma: int, rng: random.Random | None = None, c: int = 1,
                   budget: int = 10_000) -> HashParams:
    """Pick ``P`` in ``[m^2 sigma, 2 m^2 sigma]`` and resample ``X`` until the
    ``m`` sets of ``collection`` hash to distinct values.

    The number of ``X`` draws is recorded in ``attempts``.
    """
    sets = [frozenset(s) for s in collection]
    if len(set(sets)) != len(sets):
        raise DuplicateSets("collection contains equal sets")
    for s in sets:
        for e in s:
            if not 0 <= e < sigma:
                raise RankOutOfRange(f"rank {e} outside [0,{sigma})")
    m = len(sets)
    rng = rng or random.Random()
    lo = max(2, m * m * sigma)
    hi = max(lo, 2 * m * m * sigma)
    P = find_prime(lo, hi, rng)
    for attempt in range(1, budget + 1):
        params = HashParams(P, rng.randint(1, P - 1), sigma, c, attempt)
        pw = power_table(params)
        seen = set()
        for s in sets:
            h = sum(pw[e] for e in s) % P
            if h in seen:
                break
            seen.add(h)
        else:
            return params
    raise RetryLimitExceeded(f"no injective X after {budget} draws")
