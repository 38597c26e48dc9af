"""Benchmark comparing the pure and compiled kernel backends.

Run as `python -m raagdecomp.bench`; `--quick` shrinks the workload for a
fast sanity pass. Workloads are seeded, so runs are reproducible.
"""

import argparse
import random
import time

from . import _pykernel

try:
    from . import _kernel
except ImportError:
    _kernel = None


def _random_masks(rng: random.Random, n: int, p: float):
    masks = [0] * n
    order = list(range(n))
    rng.shuffle(order)
    for k in range(1, n):
        a, b = order[k], order[rng.randrange(k)]
        masks[a] |= 1 << b
        masks[b] |= 1 << a
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < p:
                masks[i] |= 1 << j
                masks[j] |= 1 << i
    return tuple(masks)


def _random_word(rng: random.Random, n: int, length: int) -> bytes:
    return bytes(rng.randrange(2 * n) for _ in range(length))


def _time(fn, calls, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        for args in calls:
            fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def _row(name: str, calls, repeat: int):
    pure = _time(getattr(_pykernel, name), calls, repeat)
    if _kernel is None:
        print("%-18s pure %8.4fs   compiled unavailable" % (name, pure))
        return
    comp = _time(getattr(_kernel, name), calls, repeat)
    for args in calls:
        if getattr(_pykernel, name)(*args) != getattr(_kernel, name)(*args):
            raise AssertionError("backends disagree on %s%r" % (name, args))
    print("%-18s pure %8.4fs   compiled %8.4fs   speedup %5.1fx"
          % (name, pure, comp, pure / comp if comp else float("inf")))


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(prog="python -m raagdecomp.bench")
    parser.add_argument("--quick", action="store_true")
    parser.add_argument("--seed", type=int, default=20240801)
    args = parser.parse_args(argv)

    rng = random.Random(args.seed)
    n = 12
    masks = _random_masks(rng, n, 0.35)
    words = 16 if args.quick else 64
    length = 120 if args.quick else 400
    repeat = 2 if args.quick else 5

    canon_calls = [(_random_word(rng, n, length), masks) for _ in range(words)]
    short = [(_random_word(rng, n, 10), masks, 500_000)
             for _ in range(6 if args.quick else 20)]
    pairs = []
    for k in range(6 if args.quick else 20):
        w = _random_word(rng, n, 9)
        # alternate equal pairs (meet early) with unequal ones (full sweep)
        other = (_pykernel.canonicalize(w, masks) if k % 2
                 else bytes(reversed(w)))
        pairs.append((w, other, masks, 500_000))

    print("kernel backends: pure=%s compiled=%s"
          % (_pykernel.__name__, _kernel.__name__ if _kernel else "missing"))
    print("graph: %d generators; canonicalize words: %d x length %d"
          % (n, words, length))
    _row("canonicalize", canon_calls, repeat)
    _row("closure_canonical", short, 1 if args.quick else 2)
    _row("closure_equal", pairs, 1 if args.quick else 2)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
