"""Modules of a tournament: closure, modular decomposition tree, enumeration.

Internally vertex sets are int bitmasks; the public functions return
frozensets.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable

from .core import Tournament, mask_of, members, popcount, set_key, to_set

LEAF, PRIME, LINEAR = "leaf", "prime", "linear"


# --- mask-level primitives -------------------------------------------------

def splitters(out: tuple[int, ...], full: int, m: int) -> int:
    """Vertices outside m that do not relate uniformly to m."""
    s = 0
    rest = full & ~m
    while rest:
        low = rest & -rest
        rest ^= low
        o = out[low.bit_length() - 1] & m
        if o and o != m:
            s |= low
    return s


def is_module_mask(out: tuple[int, ...], full: int, m: int) -> bool:
    return splitters(out, full, m) == 0


def closure_mask(out: tuple[int, ...], full: int, m: int) -> int:
    while True:
        s = splitters(out, full, m)
        if not s:
            return m
        m |= s


def indecomposable_out(out: tuple[int, ...]) -> bool:
    n = len(out)
    if n <= 2:
        return True
    full = (1 << n) - 1
    for x in range(n):
        bx = 1 << x
        for y in range(x + 1, n):
            if closure_mask(out, full, bx | 1 << y) != full:
                return False
    return True


# --- public API ------------------------------------------------------------

def is_module(t: Tournament, m: Iterable[int]) -> bool:
    return is_module_mask(t.out, t.full, mask_of(m))


def module_closure(t: Tournament, s: Iterable[int]) -> frozenset[int]:
    """Smallest module of ``t`` containing the nonempty set ``s``."""
    sm = mask_of(s)
    if not sm:
        raise ValueError("module_closure needs a nonempty seed")
    return to_set(closure_mask(t.out, t.full, sm))


def is_indecomposable(t: Tournament) -> bool:
    """Orders 0, 1 and 2 count as indecomposable."""
    return indecomposable_out(t.out)


@dataclass(frozen=True)
class MDNode:
    kind: str
    mask: int
    children: tuple["MDNode", ...] = field(default=())

    @property
    def vertices(self) -> frozenset[int]:
        return to_set(self.mask)

    def walk(self):
        yield self
        for c in self.children:
            yield from c.walk()

    def pretty(self, indent: int = 0) -> str:
        pad = "  " * indent
        if self.kind == LEAF:
            return f"{pad}leaf {next(members(self.mask))}"
        lines = [f"{pad}{self.kind} {sorted(self.vertices)}"]
        lines += [c.pretty(indent + 1) for c in self.children]
        return "\n".join(lines)


def _strong_components(out: tuple[int, ...], s: int) -> list[int]:
    """Strong components of T[s], listed from the dominating one down."""
    # In a tournament the condensation is transitive: sort by score inside s,
    # then cut wherever every earlier vertex beats every later one.
    verts = sorted(members(s), key=lambda v: -popcount(out[v] & s))
    comps, cur, seen = [], 0, 0
    for v in verts:
        cur |= 1 << v
        seen |= 1 << v
        rest = s & ~seen
        if all(out[u] & rest == rest for u in members(seen)):
            comps.append(cur)
            cur = 0
    return comps


def _build(out: tuple[int, ...], s: int) -> MDNode:
    if s & (s - 1) == 0:
        return MDNode(LEAF, s)
    comps = _strong_components(out, s)
    if len(comps) > 1:
        return MDNode(LINEAR, s, tuple(_build(out, c) for c in comps))
    # Strongly connected: the quotient is prime and the maximal proper
    # modules partition s. x and y share a child iff their closure is proper.
    parts: list[int] = []
    left = s
    while left:
        x = (left & -left).bit_length() - 1
        part = 1 << x
        for y in members(left & ~part):
            if closure_mask(out, s, (1 << x) | (1 << y)) != s:
                part |= 1 << y
        parts.append(part)
        left &= ~part
    if len(parts) < 3:
        raise AssertionError("prime node with fewer than three children")
    return MDNode(PRIME, s, tuple(_build(out, p) for p in parts))


@lru_cache(maxsize=8192)
def md_tree(t: Tournament) -> MDNode:
    if t.n < 1:
        raise ValueError("md_tree needs at least one vertex")
    return _build(t.out, t.full)


@lru_cache(maxsize=8192)
def nontrivial_module_masks(t: Tournament) -> tuple[int, ...]:
    if t.n < 3:
        return ()
    root = md_tree(t)
    found: set[int] = set()
    for node in root.walk():
        if node is not root and node.kind != LEAF:
            found.add(node.mask)
        if node.kind == LINEAR:
            kids = [c.mask for c in node.children]
            for i in range(len(kids)):
                acc = kids[i]
                for j in range(i + 1, len(kids)):
                    acc |= kids[j]
                    if acc != t.full:
                        found.add(acc)
    return tuple(sorted(found, key=lambda m: set_key(members(m))))


def all_nontrivial_modules(t: Tournament) -> list[frozenset[int]]:
    """All modules with 2 <= |M| <= n-1, sorted by (size, members)."""
    return [to_set(m) for m in nontrivial_module_masks(t)]


def twins(t: Tournament) -> list[frozenset[int]]:
    return [to_set(m) for m in nontrivial_module_masks(t) if popcount(m) == 2]


@dataclass(frozen=True)
class TransitiveComponent:
    order: tuple[int, ...]    # v_0 beats v_1 beats ... (transitive order)

    @property
    def vertices(self) -> frozenset[int]:
        return frozenset(self.order)

    @property
    def mask(self) -> int:
        return mask_of(self.order)

    def __len__(self) -> int:
        return len(self.order)


@lru_cache(maxsize=8192)
def transitive_components(t: Tournament) -> tuple[TransitiveComponent, ...]:
    """Maximal transitive modules, each in its internal order, sorted by min vertex."""
    if t.n == 0:
        return ()
    comps: list[tuple[int, ...]] = []
    covered = 0
    # Transitive modules of size >= 2 are runs of consecutive leaf children
    # of a linear node; the maximal runs are the components.
    for node in md_tree(t).walk():
        if node.kind != LINEAR:
            continue
        run: list[int] = []
        for c in list(node.children) + [None]:
            if c is not None and c.kind == LEAF:
                run.append(c.mask.bit_length() - 1)
                continue
            if len(run) >= 2:
                comps.append(tuple(run))
                covered |= mask_of(run)
            run = []
    for v in members(t.full & ~covered):
        comps.append((v,))
    comps.sort(key=min)
    return tuple(TransitiveComponent(c) for c in comps)
