#!/usr/bin/env python3
"""Show that a member of tr(T) need not make Inv(T, R) indecomposable.

For each order n >= 6 the generated tournament T_n has Delta = 2; reversing
{1, n-1} keeps {0, n-1} a module.
"""
import argparse

from tourmod.generators import counterexample_tn
from tourmod.core import invert_vertices
from tourmod.modtree import all_nontrivial_modules
from tourmod.transversal import enumerate_tr


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--n-max", type=int, default=10)
    args = p.parse_args(argv)
    for n in range(6, args.n_max + 1):
        t = counterexample_tn(n)
        tr = enumerate_tr(t)
        inv = invert_vertices(t, {1, n - 1})
        print(f"n={n}: |tr(T)|={len(tr)}  modules of Inv(T,{{1,{n - 1}}}): "
              + " ".join("{" + ",".join(map(str, sorted(m))) + "}"
                         for m in all_nontrivial_modules(inv)))


if __name__ == "__main__":
    main()
