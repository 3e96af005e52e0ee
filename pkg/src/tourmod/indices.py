"""The decomposability indices and their witnesses.

``delta_prime`` follows the constructive route (tr(T) transversal when the
co-modular index is at least 3, a short search when it is 2); the
``brute_*`` functions are exhaustive oracles for small orders.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Optional

from .comod import comodular_index
from .config import LIMITS
from .core import Arc, CapExceeded, Tournament, is_transitive_even, mask_of, members, to_set
from .modtree import indecomposable_out
from .transversal import build_transversal, check_tr_membership, enumerate_tr

INDECOMPOSABLE_INPUT = "indecomposable-input"
THEOREM8 = "theorem8-construction"
DELTA2_SEARCH = "delta2-search"
BRUTE_FORCE = "brute-force"
TRANSITIVE_EVEN = "transitive-even"


class OutOfScope(ValueError):
    """Input outside the hypothesis of the constructive results."""


class NotApplicable(ValueError):
    pass


class ConstructionFailure(AssertionError):
    """The constructive path produced a decomposable reversal (a library bug)."""


def ceil_half(k: int) -> int:
    return -(-k // 2)


def _inverted_out(t: Tournament, xmask: int) -> tuple[int, ...]:
    out = list(t.out)
    for x in members(xmask):
        out[x] ^= xmask & ~(1 << x)
    return tuple(out)


def reversal_is_indecomposable(t: Tournament, xmask: int) -> bool:
    return indecomposable_out(_inverted_out(t, xmask))


@dataclass(frozen=True)
class IndexReport:
    """Indices of one tournament. ``delta_prime is None`` means impossible."""
    delta_prime: Optional[int]
    delta: int
    Delta: int
    witness_X: Optional[frozenset[int]]
    witness_R: Optional[frozenset[int]]
    method: str
    witness_arcs: Optional[tuple[Arc, ...]] = None

    @property
    def impossible(self) -> bool:
        return self.delta_prime is None


def delta_prime(t: Tournament) -> IndexReport:
    if t.n <= 4:
        raise OutOfScope(f"order {t.n} < 5: use brute_delta_prime")
    big_delta = comodular_index(t).value
    small = ceil_half(big_delta)
    if is_transitive_even(t):
        return IndexReport(None, small, big_delta, None, None, TRANSITIVE_EVEN)
    if indecomposable_out(t.out):
        return IndexReport(0, 0, 0, frozenset(), frozenset(), INDECOMPOSABLE_INPUT)
    r = build_transversal(t)
    if big_delta >= 3:
        if not reversal_is_indecomposable(t, mask_of(r)):
            raise ConstructionFailure(f"Inv(T, {sorted(r)}) is decomposable for {t!r}")
        return IndexReport(big_delta, small, big_delta, r, r, THEOREM8)
    # Delta == 2: tr(T) first, then every remaining pair.
    tried = set()
    for x in enumerate_tr(t):
        tried.add(x)
        if reversal_is_indecomposable(t, mask_of(x)):
            return IndexReport(2, small, big_delta, x, r, DELTA2_SEARCH)
    for pair in combinations(range(t.n), 2):
        x = frozenset(pair)
        if x not in tried and reversal_is_indecomposable(t, mask_of(x)):
            return IndexReport(2, small, big_delta, x, r, DELTA2_SEARCH)
    raise ConstructionFailure(f"no 2-subset reversal is indecomposable for {t!r}")


@dataclass(frozen=True)
class DeltaResult:
    value: int
    witness: Optional[tuple[Arc, ...]]   # None: not computed (budget or not requested)


def delta(t: Tournament, witness: bool = False, budget: int | None = None) -> DeltaResult:
    """Arc index from the closed form ceil(Delta/2), optionally with an arc witness."""
    if t.n < 5:
        raise OutOfScope(f"order {t.n} < 5")
    value = ceil_half(comodular_index(t).value)
    if not witness:
        return DeltaResult(value, None)
    budget = LIMITS.delta_witness_budget if budget is None else budget
    arcs = t.arcs()
    tried = 0
    for b in combinations(arcs, value):
        tried += 1
        if tried > budget:
            return DeltaResult(value, None)
        out = list(t.out)
        for x, y in b:
            out[x] ^= 1 << y
            out[y] ^= 1 << x
        if indecomposable_out(tuple(out)):
            return DeltaResult(value, tuple(b))
    raise ConstructionFailure(f"no {value}-arc reversal is indecomposable for {t!r}")


def brute_delta_prime_witness(t: Tournament, cap: int | None = None) -> Optional[frozenset[int]]:
    """Lexicographically first smallest X with Inv(T, X) indecomposable, or None."""
    cap = LIMITS.brute_vertex_cap if cap is None else cap
    if t.n > cap:
        raise CapExceeded(f"brute_delta_prime: order {t.n} exceeds cap {cap}")
    for k in range(t.n + 1):
        for combo in combinations(range(t.n), k):
            if reversal_is_indecomposable(t, mask_of(combo)):
                return frozenset(combo)
    return None


def brute_delta_prime(t: Tournament, cap: int | None = None) -> Optional[int]:
    """Exhaustive subtournament index; None when no subset works."""
    x = brute_delta_prime_witness(t, cap)
    return None if x is None else len(x)


def brute_delta(t: Tournament, cap: int | None = None) -> int:
    """Exhaustive arc index: fewest arcs whose reversal is indecomposable."""
    cap = LIMITS.brute_arc_cap if cap is None else cap
    if t.n > cap:
        raise CapExceeded(f"brute_delta: order {t.n} exceeds cap {cap}")
    arcs = t.arcs()
    for k in range(len(arcs) + 1):
        for b in combinations(arcs, k):
            out = list(t.out)
            for x, y in b:
                out[x] ^= 1 << y
                out[y] ^= 1 << x
            if indecomposable_out(tuple(out)):
                return k
    raise NotApplicable(f"no arc set makes the order-{t.n} tournament indecomposable")


def verify_theorem8(t: Tournament) -> tuple[bool, Optional[frozenset[int]]]:
    """Check every R in tr(T) gives an indecomposable reversal.

    Returns (True, None) or (False, offending R).
    """
    if comodular_index(t).value < 3:
        raise NotApplicable("co-modular index below 3")
    for r in enumerate_tr(t):
        if not reversal_is_indecomposable(t, mask_of(r)):
            return False, r
    return True, None


def class_r_membership(t: Tournament) -> bool:
    """True iff some R in tr(T) leaves Inv(T, R) decomposable."""
    if indecomposable_out(t.out):
        return False
    return any(not reversal_is_indecomposable(t, mask_of(r)) for r in enumerate_tr(t))


def lemma6_holds(t: Tournament, x) -> bool:
    """|X| = Delta(T) and Inv(T, X) indecomposable imply X is in tr(T)."""
    xm = mask_of(x)
    if len(to_set(xm)) != comodular_index(t).value or not reversal_is_indecomposable(t, xm):
        return True
    return check_tr_membership(t, x).in_tr

