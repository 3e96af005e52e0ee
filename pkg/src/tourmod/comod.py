"""Co-modules: the minimal co-module family mc(T), overlap degrees, the
chains C(k) along transitive components, and the matching/transversal
numbers of mc(T).
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .core import Tournament, mask_of, members, popcount, set_key, to_set
from .modtree import TransitiveComponent, nontrivial_module_masks, transitive_components

MODULE, COMPLEMENT, BOTH = "module", "complement", "both"


def overlap(a: int, b: int) -> bool:
    return bool(a & b) and bool(a & ~b) and bool(b & ~a)


@dataclass(frozen=True)
class CoModule:
    mask: int
    witness: str     # MODULE, COMPLEMENT or BOTH

    @property
    def members(self) -> frozenset[int]:
        return to_set(self.mask)

    @property
    def is_module(self) -> bool:
        return self.witness in (MODULE, BOTH)

    def __len__(self) -> int:
        return popcount(self.mask)


@dataclass(frozen=True)
class CoModuleFamily:
    elements: tuple[CoModule, ...]
    degrees: tuple[int, ...]

    @property
    def masks(self) -> tuple[int, ...]:
        return tuple(e.mask for e in self.elements)

    @property
    def sets(self) -> list[frozenset[int]]:
        return [e.members for e in self.elements]

    @property
    def plus(self) -> list[CoModule]:
        """mc+: elements that are themselves nontrivial modules."""
        return [e for e in self.elements if e.is_module]

    @property
    def minus(self) -> list[CoModule]:
        return [e for e in self.elements if not e.is_module]

    @property
    def union(self) -> int:
        u = 0
        for e in self.elements:
            u |= e.mask
        return u

    def index(self, m: Iterable[int] | int) -> int:
        mask = m if isinstance(m, int) else mask_of(m)
        for i, e in enumerate(self.elements):
            if e.mask == mask:
                return i
        raise KeyError(f"{sorted(members(mask))} is not a minimal co-module")

    def __len__(self) -> int:
        return len(self.elements)


@lru_cache(maxsize=8192)
def minimal_comodules(t: Tournament) -> CoModuleFamily:
    mods = nontrivial_module_masks(t)
    modset = set(mods)
    full = t.full
    minimal = [m for m in mods if not any(o != m and o & m == o for o in mods)]
    maximal = [m for m in mods if not any(o != m and o & m == m for o in mods)]
    cands = set(minimal) | {full & ~m for m in maximal}
    mins = [c for c in cands if not any(o != c and o & c == o for o in cands)]
    mins.sort(key=lambda m: set_key(members(m)))
    elems = []
    for m in mins:
        a, b = m in modset, (full & ~m) in modset
        elems.append(CoModule(m, BOTH if a and b else MODULE if a else COMPLEMENT))
    degrees = tuple(sum(overlap(e.mask, f.mask) for f in elems) for e in elems)
    return CoModuleFamily(tuple(elems), degrees)


def overlap_degree(family: CoModuleFamily, m) -> int:
    mask = m.mask if isinstance(m, CoModule) else m
    return family.degrees[family.index(mask)]


def _singleton_comodule(t: Tournament, v: int) -> bool:
    rest = t.full & ~(1 << v)
    return popcount(rest) >= 2 and rest in set(nontrivial_module_masks(t))


def chain_elements(t: Tournament, c: TransitiveComponent) -> list[frozenset[int]]:
    """C(0), ..., C(m-2) for a transitive component v_0 -> ... -> v_{m-1}."""
    return [to_set(x) for x in chain_masks(t, c)]


def chain_masks(t: Tournament, c: TransitiveComponent) -> list[int]:
    v = c.order
    m = len(v)
    if t.n < 3:
        raise ValueError("chain elements need a tournament of order >= 3")
    if m < 2:
        raise ValueError("chain elements need a transitive component of size >= 2")
    out = []
    for k in range(m - 1):
        if k == 0 and _singleton_comodule(t, v[0]):
            out.append(1 << v[0])
        elif k == m - 2 and _singleton_comodule(t, v[m - 1]):
            out.append(1 << v[m - 1])
        else:
            out.append(1 << v[k] | 1 << v[k + 1])
    return out


# --- matching and transversal numbers --------------------------------------

@dataclass(frozen=True)
class IndexValue:
    value: int
    witness: tuple[frozenset[int], ...]


@lru_cache(maxsize=8192)
def comodular_index(t: Tournament) -> IndexValue:
    """Largest pairwise-disjoint subfamily of mc(T), with a witness.

    Non-twin minimal co-modules meet no other element, so they are all
    taken; twins live on the chains of transitive components, where a
    left-to-right greedy is an optimal interval schedule.
    """
    if t.n < 3:
        return IndexValue(0, ())    # orders <= 2 have no co-modules
    fam = minimal_comodules(t)
    chosen = [e.mask for e in fam.elements if popcount(e.mask) != 2 or not e.is_module]
    for comp in transitive_components(t):
        if len(comp) < 2:
            continue
        used = 0
        for x in chain_masks(t, comp):
            if x & used == 0:
                used |= x
                if x not in chosen:
                    chosen.append(x)
    chosen.sort(key=lambda m: set_key(members(m)))
    return IndexValue(len(chosen), tuple(to_set(m) for m in chosen))


def max_matching(family: Sequence[int]) -> list[int]:
    """Exact maximum set packing of a family of bitmasks (branch and bound)."""
    fam = sorted(set(family), key=lambda m: (popcount(m), m))
    best: list[int] = []

    def go(i: int, used: int, picked: list[int]):
        nonlocal best
        if len(picked) + (len(fam) - i) <= len(best):
            return
        if i == len(fam):
            best = list(picked)
            return
        m = fam[i]
        if m & used == 0:
            picked.append(m)
            go(i + 1, used | m, picked)
            picked.pop()
        go(i + 1, used, picked)

    go(0, 0, [])
    return best


def min_transversal(family: Sequence[int]) -> int:
    """Exact minimum hitting set of a family of nonempty bitmasks."""
    fam = sorted(set(family), key=lambda m: (popcount(m), m))
    if any(m == 0 for m in fam):
        raise ValueError("cannot hit an empty set")
    best = [None]

    def lower_bound(unhit: list[int]) -> int:
        used, lb = 0, 0
        for m in unhit:
            if m & used == 0:
                used |= m
                lb += 1
        return lb

    def go(hit: int, size: int):
        unhit = [m for m in fam if m & hit == 0]
        if not unhit:
            if best[0] is None or size < popcount(best[0]):
                best[0] = hit
            return
        if best[0] is not None and size + lower_bound(unhit) >= popcount(best[0]):
            return
        for v in members(unhit[0]):
            go(hit | 1 << v, size + 1)

    go(0, 0)
    return best[0]


@lru_cache(maxsize=8192)
def transversal_number(t: Tournament) -> IndexValue:
    """tau(mc(T)) with one minimum transversal as witness (a 1-tuple)."""
    hit = min_transversal(minimal_comodules(t).masks)
    return IndexValue(popcount(hit), (to_set(hit),))
