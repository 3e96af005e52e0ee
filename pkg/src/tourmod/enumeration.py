"""Tournaments up to isomorphism, and the sweeps that tabulate the indices.

Canonical code
--------------
Vertices are first coloured by iterated score refinement (a colour is the
previous colour plus the multiset of out-neighbour colours); the colour
classes are ordered by their signatures, which is isomorphism invariant.
Among the relabelings that list vertices class by class, the code is the
lexicographically least bit string

    adj(p0,p1), adj(p0,p2), adj(p1,p2), adj(p0,p3), ...

(column by column of the upper triangle). Because column k depends only on
the first k+1 vertices, the least prefix at every length is found by keeping
just the partial orderings that achieve it.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import permutations
from math import factorial
from typing import Callable, Iterator, Optional

from .comod import comodular_index
from .config import LIMITS
from .core import CapExceeded, Tournament, _from_out_unchecked, is_transitive, is_transitive_even
from .indices import (ConstructionFailure, brute_delta, brute_delta_prime, ceil_half,
                      delta_prime)


def _refine(out: tuple[int, ...]) -> list[int]:
    n = len(out)
    colour = [bin(r).count("1") for r in out]
    ncls = len(set(colour))
    while True:
        sigs = [(colour[v], tuple(sorted(colour[w] for w in range(n) if out[v] >> w & 1)))
                for v in range(n)]
        ranks = {s: i for i, s in enumerate(sorted(set(sigs)))}
        colour = [ranks[s] for s in sigs]
        if len(ranks) == ncls:
            return colour
        ncls = len(ranks)


def _canonical_order(out: tuple[int, ...]) -> list[int]:
    n = len(out)
    if n == 0:
        return []
    colour = _refine(out)
    slots = sorted(colour)                     # colour required at each position
    # Partial orderings with the least prefix so far.
    level: list[tuple[int, ...]] = [()]
    for k in range(n):
        want = slots[k]
        best = None
        nxt: list[tuple[int, ...]] = []
        for seq in level:
            used = set(seq)
            for w in range(n):
                if w in used or colour[w] != want:
                    continue
                col = 0
                for p in seq:
                    col = col << 1 | (out[p] >> w & 1)
                if best is None or col < best:
                    best, nxt = col, [seq + (w,)]
                elif col == best:
                    nxt.append(seq + (w,))
        level = nxt
    return list(level[0])


@dataclass(frozen=True, order=True)
class CanonicalCode:
    n: int
    bits: int        # bit string read most-significant first, C(n,2) bits

    def to_bytes(self) -> bytes:
        nbits = self.n * (self.n - 1) // 2
        return bytes([self.n]) + self.bits.to_bytes((nbits + 7) // 8 or 1, "big")

    def hex(self) -> str:
        return self.to_bytes().hex()

    @classmethod
    def from_hex(cls, s: str) -> "CanonicalCode":
        raw = bytes.fromhex(s)
        return cls(raw[0], int.from_bytes(raw[1:], "big"))

    def tournament(self) -> Tournament:
        out = [0] * self.n
        pos = self.n * (self.n - 1) // 2
        for j in range(1, self.n):
            for i in range(j):
                pos -= 1
                if self.bits >> pos & 1:
                    out[i] |= 1 << j
                else:
                    out[j] |= 1 << i
        return _from_out_unchecked(out)


def _encode(out: tuple[int, ...], order: list[int]) -> int:
    bits = 0
    for j in range(1, len(order)):
        w = order[j]
        for i in range(j):
            bits = bits << 1 | (out[order[i]] >> w & 1)
    return bits


def canonical_code(t: Tournament, cap: int | None = None) -> CanonicalCode:
    cap = LIMITS.canon_cap if cap is None else cap
    if t.n > cap:
        raise CapExceeded(f"canonical_code: order {t.n} exceeds cap {cap}")
    return CanonicalCode(t.n, _encode(t.out, _canonical_order(t.out)))


def canonical_form(t: Tournament) -> Tournament:
    return canonical_code(t).tournament()


@lru_cache(maxsize=16)
def _classes(n: int) -> tuple[CanonicalCode, ...]:
    if n <= 1:
        return (CanonicalCode(n, 0),)
    found: set[CanonicalCode] = set()
    for code in _classes(n - 1):
        base = code.tournament().out
        new = n - 1
        for beaten in range(1 << new):
            out = [row | (1 << new if not beaten >> v & 1 else 0) for v, row in enumerate(base)]
            out.append(beaten)
            found.add(CanonicalCode(n, _encode(tuple(out), _canonical_order(tuple(out)))))
    return tuple(sorted(found))


def class_codes(n: int, allow_9: bool = False) -> tuple[CanonicalCode, ...]:
    limit = 9 if allow_9 else 8
    if n > limit or n > LIMITS.canon_cap:
        raise CapExceeded(f"enumeration of order {n} exceeds cap {limit}")
    return _classes(n)


def all_tournaments(n: int, allow_9: bool = False) -> Iterator[Tournament]:
    """One canonical representative per isomorphism class, in code order."""
    for code in class_codes(n, allow_9):
        yield code.tournament()


def automorphism_count(t: Tournament) -> int:
    """Brute force over all n! permutations; for small orders only."""
    base = t.out
    count = 0
    for perm in permutations(range(t.n)):
        if all(((base[x] >> y & 1) == (base[perm[x]] >> perm[y] & 1))
               for x in range(t.n) for y in range(x + 1, t.n)):
            count += 1
    return count


def labelled_count(n: int) -> int:
    """Orbit-counting check: sum of n!/|Aut| over the classes of order n."""
    return sum(factorial(n) // automorphism_count(t) for t in all_tournaments(n))


# --- verification tables ---------------------------------------------------

@dataclass
class TableRow:
    n: int
    Delta_n: int
    delta_n: int
    delta_prime_n: int
    class_counts: int
    Delta_n_nontransitive: int = 0
    mismatches: list[dict] = field(default_factory=list)

    @property
    def expected(self) -> dict:
        return {
            "Delta_n": -(-(self.n + 1) // 2),
            "delta_n": -(-(self.n + 1) // 4),
            "delta_prime_n": 3 if self.n == 6 else -(-(self.n + 1) // 2),
        }

    def as_record(self) -> dict:
        return {"record": "table_row", "n": self.n, "Delta_n": self.Delta_n,
                "delta_n": self.delta_n, "delta_prime_n": self.delta_prime_n,
                "class_counts": self.class_counts,
                "Delta_n_nontransitive": self.Delta_n_nontransitive,
                "mismatches": len(self.mismatches)}


def table_row(n: int, brute_check_max: int = 6,
              progress: Optional[Callable[[int, int], None]] = None) -> TableRow:
    codes = class_codes(n, allow_9=True)
    big = small = dprime = big_nontrans = 0
    mismatches: list[dict] = []
    for i, code in enumerate(codes):
        t = code.tournament()
        d = comodular_index(t).value
        big = max(big, d)
        small = max(small, ceil_half(d))
        if not is_transitive(t):
            big_nontrans = max(big_nontrans, d)
        if n <= brute_check_max:
            bd = brute_delta(t, cap=brute_check_max)
            if bd != ceil_half(d):
                mismatches.append({"n": n, "code": code.hex(), "check": "delta",
                                   "formula": ceil_half(d), "brute": bd})
        if not is_transitive_even(t):
            try:
                rep = delta_prime(t)
            except ConstructionFailure as exc:
                mismatches.append({"n": n, "code": code.hex(), "check": "delta_prime",
                                   "error": str(exc)})
                continue
            dprime = max(dprime, rep.delta_prime)
            if rep.delta_prime != d:
                mismatches.append({"n": n, "code": code.hex(), "check": "delta_prime=Delta",
                                   "delta_prime": rep.delta_prime, "Delta": d})
        if progress:
            progress(i + 1, len(codes))
    row = TableRow(n, big, small, dprime, len(codes), big_nontrans)
    exp = row.expected
    for key, want in exp.items():
        got = getattr(row, key)
        if got != want:
            mismatches.append({"n": n, "check": key, "expected": want, "got": got})
    row.mismatches = mismatches
    return row


def verify_tables(n_max: int, allow_9: bool = False,
                  progress: Optional[Callable[[int, int], None]] = None) -> list[TableRow]:
    if n_max > (9 if allow_9 else 8):
        raise CapExceeded(f"verify_tables: n_max {n_max} exceeds cap")
    return [table_row(n, progress=progress) for n in range(5, n_max + 1)]
