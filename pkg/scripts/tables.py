#!/usr/bin/env python3
"""Reproduce the extremal values Delta(n), delta(n), delta'(n) by exhaustive sweep.

    python scripts/tables.py --n-max 8
    python scripts/tables.py --n-max 9 --allow-9 --jsonl tables.jsonl
"""
import argparse
import json
import sys
import time

from tourmod.enumeration import table_row


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--n-max", type=int, default=8)
    p.add_argument("--allow-9", action="store_true")
    p.add_argument("--jsonl", help="also write one table_row record per line here")
    args = p.parse_args(argv)
    if args.n_max > (9 if args.allow_9 else 8):
        p.error("order 9 needs --allow-9; larger orders are not supported")

    sink = open(args.jsonl, "w") if args.jsonl else None
    print(f"{'n':>3} {'classes':>8} {'Delta':>6} {'delta':>6} {'delta_p':>8} {'expected':>12} {'secs':>7}")
    failed = False
    for n in range(5, args.n_max + 1):
        start = time.perf_counter()

        def progress(done, total):
            if total > 5000 and done % 2000 == 0:
                print(f"  n={n}: {done}/{total}", file=sys.stderr)

        row = table_row(n, progress=progress)
        exp = row.expected
        want = f"{exp['Delta_n']}/{exp['delta_n']}/{exp['delta_prime_n']}"
        print(f"{n:>3} {row.class_counts:>8} {row.Delta_n:>6} {row.delta_n:>6} "
              f"{row.delta_prime_n:>8} {want:>12} {time.perf_counter() - start:>7.1f}")
        for m in row.mismatches:
            print("  MISMATCH", json.dumps(m, sort_keys=True))
        failed |= bool(row.mismatches)
        if sink:
            sink.write(json.dumps(row.as_record(), sort_keys=True) + "\n")
    if sink:
        sink.close()
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
