"""Shared strategies and corpora for the test suite."""
import random

from hypothesis import strategies as st

from tourmod.core import from_adj
from tourmod.generators import random_tournament

@st.composite
def tournaments(draw, min_n=0, max_n=8):
    n = draw(st.integers(min_n, max_n))
    bits = draw(st.lists(st.booleans(), min_size=n * (n - 1) // 2, max_size=n * (n - 1) // 2))
    it = iter(bits)
    coins = {(x, y): next(it) for x in range(n) for y in range(x + 1, n)}
    return from_adj(n, lambda x, y: coins[x, y])


def random_corpus(count, lo, hi, seed=1000):
    """Deterministic corpus: orders cycle through lo..hi."""
    span = hi - lo + 1
    return [random_tournament(lo + i % span, seed + i) for i in range(count)]


def planted(n, seed):
    """Random tournament of order n with planted modules.

    A random quotient on k parts has each part replaced by a random block, so
    every block is a module; blocks of size >= 2 make the result decomposable.
    """
    rng = random.Random(seed)
    k = rng.randint(1, max(1, n - 1))
    part = sorted(rng.randrange(k) for _ in range(n))
    quotient = random_tournament(k, seed)
    inner = random_tournament(n, seed + 1)
    return from_adj(n, lambda x, y: inner.adj(x, y) if part[x] == part[y]
                    else quotient.adj(part[x], part[y]))


def planted_corpus(count, lo, hi, seed=2000):
    span = hi - lo + 1
    return [planted(lo + i % span, seed + i) for i in range(count)]
