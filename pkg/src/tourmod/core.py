"""Tournament values and the arc/subtournament reversal operations.

Vertices are the dense integers ``0..n-1``. Adjacency is kept as one
out-neighbourhood bitmask per vertex, i.e. row ``x`` of the bit matrix has
bit ``y`` set iff the arc ``(x, y)`` is present.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple

from .config import LIMITS


class TournamentError(ValueError):
    """Invalid tournament data (missing, duplicate or contradictory pairs)."""


class CapExceeded(RuntimeError):
    """A configured resource cap would be exceeded."""


class Arc(NamedTuple):
    tail: int
    head: int

    @property
    def reverse(self) -> "Arc":
        return Arc(self.head, self.tail)

    @property
    def vertices(self) -> frozenset[int]:
        return frozenset((self.tail, self.head))


# --- bitmask helpers -------------------------------------------------------

def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def members(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_set(mask: int) -> frozenset[int]:
    return frozenset(members(mask))


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def set_key(vs: Iterable[int]) -> tuple[int, tuple[int, ...]]:
    """Sort key for vertex sets: size first, then sorted members."""
    t = tuple(sorted(vs))
    return (len(t), t)


# --- the value type --------------------------------------------------------

@dataclass(frozen=True)
class Tournament:
    n: int
    out: tuple[int, ...]

    def __post_init__(self):
        if self.n < 0:
            raise TournamentError("negative order")
        if self.n > LIMITS.max_order:
            raise CapExceeded(f"order {self.n} exceeds cap {LIMITS.max_order}")
        if len(self.out) != self.n:
            raise TournamentError(f"expected {self.n} rows, got {len(self.out)}")
        full = self.full
        for x, row in enumerate(self.out):
            if row & ~full:
                raise TournamentError(f"row {x} references a vertex >= {self.n}")
            if row >> x & 1:
                raise TournamentError(f"self-loop at vertex {x}")
        for x in range(self.n):
            for y in range(x + 1, self.n):
                a, b = self.out[x] >> y & 1, self.out[y] >> x & 1
                if a == b:
                    what = "missing" if a == 0 else "contradictory"
                    raise TournamentError(f"{what} pair ({x},{y})")

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    @property
    def vertices(self) -> range:
        return range(self.n)

    def adj(self, x: int, y: int) -> int:
        """1 if the arc (x, y) is present, else 0. Undefined for x == y."""
        return self.out[x] >> y & 1

    def arcs(self) -> list[Arc]:
        return [Arc(x, y) for x in range(self.n) for y in members(self.out[x])]

    def scores(self) -> list[int]:
        return [popcount(r) for r in self.out]

    def rows(self) -> list[str]:
        return ["".join(str(self.adj(x, y)) if x != y else "0"
                        for y in range(self.n)) for x in range(self.n)]

    def __repr__(self) -> str:
        return f"Tournament(n={self.n}, rows={self.rows()})"


def _from_out_unchecked(out: Iterable[int]) -> Tournament:
    # Skips validation; callers guarantee antisymmetry (used on hot paths).
    out = tuple(out)
    t = object.__new__(Tournament)
    object.__setattr__(t, "n", len(out))
    object.__setattr__(t, "out", out)
    return t


def make_tournament(n: int, arcs: Iterable[tuple[int, int]]) -> Tournament:
    out = [0] * n
    seen: dict[frozenset[int], tuple[int, int]] = {}
    for x, y in arcs:
        if x == y:
            raise TournamentError(f"self-loop ({x},{y})")
        if not (0 <= x < n and 0 <= y < n):
            raise TournamentError(f"arc ({x},{y}) out of range for n={n}")
        key = frozenset((x, y))
        if key in seen:
            kind = "duplicate" if seen[key] == (x, y) else "contradictory"
            raise TournamentError(f"{kind} pair ({min(x, y)},{max(x, y)})")
        seen[key] = (x, y)
        out[x] |= 1 << y
    for x in range(n):
        for y in range(x + 1, n):
            if frozenset((x, y)) not in seen:
                raise TournamentError(f"missing pair ({x},{y})")
    return Tournament(n, tuple(out))


def from_rows(rows: Iterable[Iterable[int]]) -> Tournament:
    """Build from a 0/1 adjacency matrix (row x, column y = adj(x, y))."""
    out = []
    for row in rows:
        out.append(mask_of(y for y, bit in enumerate(row) if int(bit)))
    return Tournament(len(out), tuple(out))


def from_adj(n: int, adj) -> Tournament:
    """Build from a predicate ``adj(x, y)`` queried for x < y only."""
    out = [0] * n
    for x in range(n):
        for y in range(x + 1, n):
            if adj(x, y):
                out[x] |= 1 << y
            else:
                out[y] |= 1 << x
    return _from_out_unchecked(out)


def invert_arcs(t: Tournament, arcs: Iterable[tuple[int, int]]) -> Tournament:
    out = list(t.out)
    for x, y in arcs:
        if x == y or not (0 <= x < t.n and 0 <= y < t.n) or not t.adj(x, y):
            raise TournamentError(f"({x},{y}) is not an arc of the tournament")
        out[x] ^= 1 << y
        out[y] ^= 1 << x
    return _from_out_unchecked(out)


def invert_mask(t: Tournament, xmask: int) -> Tournament:
    out = list(t.out)
    for x in members(xmask):
        out[x] ^= xmask & ~(1 << x)
    return _from_out_unchecked(out)


def invert_vertices(t: Tournament, vertices: Iterable[int]) -> Tournament:
    """Reverse every arc of the subtournament induced on ``vertices``."""
    xmask = mask_of(vertices)
    if xmask & ~t.full:
        raise TournamentError(f"vertex set out of range for n={t.n}")
    return invert_mask(t, xmask)


def dual(t: Tournament) -> Tournament:
    return invert_mask(t, t.full)


def subtournament(t: Tournament, vertices: Iterable[int]) -> tuple[Tournament, dict[int, int]]:
    """Induced subtournament with order-preserving relabeling.

    Returns the tournament and the map from original vertex to new index.
    """
    keep = sorted(set(vertices))
    if keep and (keep[0] < 0 or keep[-1] >= t.n):
        raise TournamentError(f"vertex set out of range for n={t.n}")
    index = {v: i for i, v in enumerate(keep)}
    out = []
    for v in keep:
        row = 0
        for w in members(t.out[v]):
            if w in index:
                row |= 1 << index[w]
        out.append(row)
    return _from_out_unchecked(out), index


def delete_vertex(t: Tournament, x: int) -> Tournament:
    return subtournament(t, (v for v in t.vertices if v != x))[0]


def is_transitive(t: Tournament) -> bool:
    # Scores of a transitive tournament are exactly 0..n-1.
    return sorted(t.scores()) == list(range(t.n))


def is_transitive_relation(t: Tournament) -> bool:
    """Direct check of transitivity of the arc relation."""
    for x in range(t.n):
        for y in members(t.out[x]):
            if t.out[y] & ~t.out[x] & ~(1 << x):
                return False
    return True


def is_transitive_even(t: Tournament) -> bool:
    return t.n % 2 == 0 and is_transitive(t)


def relabel(t: Tournament, perm: list[int]) -> Tournament:
    """Tournament with vertex v renamed to perm[v]."""
    out = [0] * t.n
    for x in range(t.n):
        row = 0
        for y in members(t.out[x]):
            row |= 1 << perm[y]
        out[perm[x]] = row
    return _from_out_unchecked(out)
