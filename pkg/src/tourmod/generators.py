"""Standard tournament families and a seeded random generator."""
from __future__ import annotations

from .core import Tournament, from_adj, invert_arcs

MASK64 = (1 << 64) - 1


def splitmix64(seed: int):
    """SplitMix64 stream: state += 0x9E3779B97F4A7C15, then the usual mix.

    Yields 64-bit unsigned integers; the state is local to the generator.
    """
    state = seed & MASK64
    while True:
        state = (state + 0x9E3779B97F4A7C15) & MASK64
        z = state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        yield z ^ (z >> 31)


def random_tournament(n: int, seed: int) -> Tournament:
    """Orient each pair x < y (row-major order) by the top bit of one draw.

    Top bit 1 means the arc (x, y); 0 means (y, x).
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    stream = splitmix64(seed)
    coins = {}
    for x in range(n):
        for y in range(x + 1, n):
            coins[x, y] = next(stream) >> 63
    return from_adj(n, lambda x, y: coins[x, y])


def transitive(n: int) -> Tournament:
    if n < 0:
        raise ValueError("n must be >= 0")
    return from_adj(n, lambda x, y: True)


def cycle3() -> Tournament:
    return from_adj(3, lambda x, y: (x, y) in {(0, 1), (1, 2)})


def counterexample_tn(n: int) -> Tournament:
    """T_n: vertex n-1 beats everything; on 0..n-2 the transitive order with
    every consecutive arc (i, i+1) reversed."""
    if n < 6:
        raise ValueError(f"T_n is defined for n >= 6, got {n}")
    base = invert_arcs(transitive(n - 1), [(i, i + 1) for i in range(n - 2)])
    # from_adj only asks about x < y, so y == n-1 means the arc (n-1, x).
    return from_adj(n, lambda x, y: y < n - 1 and base.adj(x, y))


def rotational(size: int) -> Tournament:
    """i beats i+1..i+k (mod size), k = (size-1)//2.

    For even size the antipodal pairs {i, i+size/2} point from the smaller
    index to the larger one.
    """
    k = (size - 1) // 2

    def beats(x: int, y: int) -> bool:
        d = (y - x) % size
        if 1 <= d <= k:
            return True
        if size % 2 == 0 and d == size // 2:
            return x < y
        return False

    return from_adj(size, beats)


def fact2_extremal(n: int) -> Tournament:
    """Non-transitive tournament of even order n >= 8 with co-modular index n/2 + 1.

    Vertex 0 is a source, vertex n-1 a sink; the middle vertices form the
    rotational tournament on (n-2)/2 vertices with each vertex doubled into
    a twin pair (2i+1, 2i+2).
    """
    if n % 2 or n < 8:
        raise ValueError(f"fact2_extremal needs even n >= 8, got {n}")
    q = rotational((n - 2) // 2)

    def beats(x: int, y: int) -> bool:
        if x == 0:
            return True
        if y == n - 1:
            return True
        qx, qy = (x - 1) // 2, (y - 1) // 2
        if qx == qy:
            return True
        return bool(q.adj(qx, qy))

    t = from_adj(n, beats)
    # Guard the construction: it must reach the extremal value.
    from .comod import comodular_index
    from .core import is_transitive
    got = comodular_index(t).value
    if got != n // 2 + 1 or is_transitive(t):
        raise AssertionError(f"fact2_extremal({n}) produced co-modular index {got}")
    return t
