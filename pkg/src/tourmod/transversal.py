"""Exact minimum transversals of mc(T) that strictly bipartite the family
of nontrivial modules, and the set tr(T) of all of them.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from math import comb
from typing import Iterable

from .comod import comodular_index, minimal_comodules, overlap, transversal_number
from .config import LIMITS
from .core import CapExceeded, Tournament, is_transitive_even, mask_of, members, popcount, to_set
from .modtree import (TransitiveComponent, indecomposable_out, nontrivial_module_masks,
                      transitive_components)


class TransversalError(ValueError):
    pass


class IndecomposableInput(TransversalError):
    pass


class TransitiveEvenInput(TransversalError):
    pass


def _singleton_in_mc(t: Tournament, v: int) -> bool:
    return (1 << v) in minimal_comodules(t).masks


def r_of_component(t: Tournament, c: TransitiveComponent) -> frozenset[int]:
    v, m = c.order, len(c)
    if m < 2:
        raise ValueError("r(C) needs a transitive component of size >= 2")
    first, last = _singleton_in_mc(t, v[0]), _singleton_in_mc(t, v[m - 1])
    if first and last and m % 2 == 0:
        raise TransitiveEvenInput("transitive of even order")
    if first:
        return frozenset(v[i] for i in range(0, m, 2))
    if last:
        return frozenset(v[m - i] for i in range(1, m + 1, 2))
    return frozenset(v[i] for i in range(1, m, 2))


def build_transversal(t: Tournament) -> frozenset[int]:
    """R = R0 | R1: smallest vertex of every non-twin minimal co-module, plus
    r(C) over the transitive components of size >= 2."""
    if indecomposable_out(t.out):
        raise IndecomposableInput("tournament is indecomposable")
    if is_transitive_even(t):
        raise TransitiveEvenInput("transitive of even order")
    fam = minimal_comodules(t)
    r = set()
    for e in fam.elements:
        if popcount(e.mask) != 2 or not e.is_module:
            r.add(min(members(e.mask)))
    for comp in transitive_components(t):
        if len(comp) >= 2:
            r |= r_of_component(t, comp)
    return frozenset(r)


@dataclass(frozen=True)
class TransversalReport:
    R: frozenset[int]
    is_transversal: bool
    is_exact: bool
    is_minimum: bool
    strictly_bipartite: bool

    @property
    def in_tr(self) -> bool:
        return self.is_transversal and self.is_exact and self.is_minimum and self.strictly_bipartite


def _report(t: Tournament, r: int, mc: tuple[int, ...], mods: tuple[int, ...],
            tau: int) -> TransversalReport:
    hits = [popcount(r & m) for m in mc]
    is_tv = all(hits)
    exact = is_tv and all(h == 1 for h in hits)
    minimum = is_tv and popcount(r) == tau
    strict = all(overlap(r, m) for m in mods)
    return TransversalReport(to_set(r), is_tv, exact, minimum, strict)


def check_tr_membership(t: Tournament, r: Iterable[int]) -> TransversalReport:
    rm = mask_of(r)
    return _report(t, rm, minimal_comodules(t).masks, nontrivial_module_masks(t),
                   transversal_number(t).value)


@lru_cache(maxsize=2048)
def _enumerate_tr(t: Tournament, cap: int) -> tuple[frozenset[int], ...]:
    fam = minimal_comodules(t)
    mc = fam.masks
    mods = nontrivial_module_masks(t)
    size = comodular_index(t).value
    pool = list(members(fam.union))
    if comb(len(pool), size) > cap:
        raise CapExceeded(f"tr search over C({len(pool)},{size}) subsets exceeds cap {cap}")
    tau = transversal_number(t).value
    found = []
    for combo in combinations(pool, size):
        r = mask_of(combo)
        if _report(t, r, mc, mods, tau).in_tr:
            found.append(r)
    return tuple(to_set(r) for r in found)


def enumerate_tr(t: Tournament, cap: int | None = None) -> list[frozenset[int]]:
    """All members of tr(T), in lexicographic order of sorted members."""
    return list(_enumerate_tr(t, LIMITS.tr_cap if cap is None else cap))
