"""Batch sweeps over isomorphism classes; each returns mismatch records."""
from __future__ import annotations

from typing import Callable, Iterator

from .comod import comodular_index, max_matching, minimal_comodules, transversal_number
from .core import Tournament, is_transitive_even, mask_of
from .enumeration import CanonicalCode, class_codes, verify_tables
from .generators import random_tournament
from .indices import (brute_delta, brute_delta_prime, ceil_half, delta_prime,
                      reversal_is_indecomposable, verify_theorem8)
from .modtree import indecomposable_out
from .transversal import build_transversal, check_tr_membership

THEOREMS = ("theorem3", "theorem6", "theorem8", "theorem9", "koenig", "tables")


def _classes(lo: int, hi: int, allow_9: bool) -> Iterator[tuple[int, CanonicalCode, Tournament]]:
    for n in range(lo, hi + 1):
        for code in class_codes(n, allow_9):
            yield n, code, code.tournament()


def _miss(theorem: str, n: int, code: CanonicalCode | None, **detail) -> dict:
    rec = {"record": "mismatch", "theorem": theorem, "n": n,
           "code": code.hex() if code is not None else None}
    rec.update(detail)
    return rec


def sweep_theorem3(n_max: int, samples: int = 100, seed: int = 0, allow_9: bool = False) -> list[dict]:
    """delta(T) = ceil(Delta/2) = brute force: exhaustive for n <= 6, sampled at 7."""
    out = []
    for n, code, t in _classes(5, min(n_max, 6), allow_9):
        want = ceil_half(comodular_index(t).value)
        got = brute_delta(t)
        if got != want:
            out.append(_miss("theorem3", n, code, formula=want, brute=got))
    if n_max >= 7:
        for i in range(samples):
            t = random_tournament(7, seed + i)
            want = ceil_half(comodular_index(t).value)
            got = brute_delta(t)
            if got != want:
                out.append(_miss("theorem3", 7, None, seed=seed + i, formula=want, brute=got))
    return out


def sweep_theorem6(n_max: int, allow_9: bool = False) -> list[dict]:
    out = []
    for n, code, t in _classes(3, n_max, allow_9):
        if indecomposable_out(t.out) or is_transitive_even(t):
            continue
        r = build_transversal(t)
        rep = check_tr_membership(t, r)
        if not rep.in_tr or len(r) != comodular_index(t).value:
            out.append(_miss("theorem6", n, code, R=sorted(r)))
    return out


def sweep_theorem8(n_max: int, allow_9: bool = False) -> list[dict]:
    out = []
    for n, code, t in _classes(3, n_max, allow_9):
        if is_transitive_even(t) or comodular_index(t).value < 3:
            continue
        ok, bad = verify_theorem8(t)
        if not ok:
            out.append(_miss("theorem8", n, code, R=sorted(bad)))
    return out


def sweep_theorem9(n_max: int, brute_max: int = 7, allow_9: bool = False) -> list[dict]:
    out = []
    for n, code, t in _classes(5, n_max, allow_9):
        if is_transitive_even(t):
            if n <= brute_max and brute_delta_prime(t) is not None:
                out.append(_miss("theorem9", n, code, detail="transitive-even reversible"))
            continue
        rep = delta_prime(t)
        big = comodular_index(t).value
        bad = rep.delta_prime != big
        if not reversal_is_indecomposable(t, mask_of(rep.witness_X)):
            bad = True
        brute = brute_delta_prime(t) if n <= brute_max else rep.delta_prime
        if brute != big or bad:
            out.append(_miss("theorem9", n, code, delta_prime=rep.delta_prime, Delta=big,
                             brute=brute))
    return out


def sweep_koenig(n_max: int, allow_9: bool = False) -> list[dict]:
    out = []
    for n, code, t in _classes(1, n_max, allow_9):
        nu = comodular_index(t).value
        nu_exact = len(max_matching(minimal_comodules(t).masks))
        tau = transversal_number(t).value
        if not nu == nu_exact == tau:
            out.append(_miss("koenig", n, code, nu=nu, nu_exact=nu_exact, tau=tau))
    return out


def run(theorems: list[str], n_max: int, allow_9: bool = False,
        progress: Callable[[str], None] | None = None) -> tuple[list[dict], list[dict]]:
    """Returns (table rows as records, mismatch records)."""
    rows: list[dict] = []
    misses: list[dict] = []
    for name in theorems:
        if progress:
            progress(name)
        if name == "theorem3":
            misses += sweep_theorem3(n_max, allow_9=allow_9)
        elif name == "theorem6":
            misses += sweep_theorem6(n_max, allow_9)
        elif name == "theorem8":
            misses += sweep_theorem8(n_max, allow_9)
        elif name == "theorem9":
            misses += sweep_theorem9(n_max, allow_9=allow_9)
        elif name == "koenig":
            misses += sweep_koenig(n_max, allow_9)
        elif name == "tables":
            for row in verify_tables(n_max, allow_9):
                rows.append(row.as_record())
                misses += [dict({"record": "mismatch", "theorem": "tables"}, **m)
                           for m in row.mismatches]
        else:
            raise ValueError(f"unknown sweep {name!r}")
    return rows, misses
