#!/usr/bin/env python3
"""Count, per order, the tournaments with Delta = 2 and those in class R.

Class R: some R in tr(T) leaves Inv(T, R) decomposable. Also reports how the
Delta = 2 search found its witness (first tr(T) member vs. a plain pair).
"""
import argparse
from collections import Counter

from tourmod.comod import comodular_index
from tourmod.core import mask_of
from tourmod.enumeration import all_tournaments
from tourmod.indices import class_r_membership, delta_prime, reversal_is_indecomposable
from tourmod.transversal import enumerate_tr


def survey(n):
    c = Counter()
    for t in all_tournaments(n):
        c["classes"] += 1
        if comodular_index(t).value != 2:
            continue
        c["Delta=2"] += 1
        if class_r_membership(t):
            c["class R"] += 1
        members = enumerate_tr(t)
        good = [r for r in members if reversal_is_indecomposable(t, mask_of(r))]
        if good:
            c["witness in tr(T)"] += 1
        if n >= 5:
            rep = delta_prime(t)
            c[f"delta'={rep.delta_prime}"] += 1
    return c


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--n-min", type=int, default=4)
    p.add_argument("--n-max", type=int, default=7)
    args = p.parse_args(argv)
    for n in range(args.n_min, args.n_max + 1):
        c = survey(n)
        print(f"n={n}: " + ", ".join(f"{k}: {v}" for k, v in sorted(c.items())))


if __name__ == "__main__":
    main()
