"""Time token-level Levenshtein on the compiled kernel and the pure-Python fallback.

    python benchmarks/bench_editdist.py [--repeat N] [--sizes 50,200,800]
"""
import argparse
import random
import sys
import timeit

from javamorph.metrics import editdist


def token_pair(n: int, rng: random.Random) -> tuple[list[str], list[str]]:
    vocab = ["int", "x", "y", "=", "+", "-", "(", ")", ";", "{", "}", "return", "if", "0", "1"]
    a = [rng.choice(vocab) for _ in range(n)]
    b = list(a)
    for _ in range(max(1, n // 10)):
        i = rng.randrange(len(b))
        b[i] = rng.choice(vocab)
    return a, b


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--sizes", default="50,200,800")
    args = ap.parse_args(argv)

    backends = ["python"] + (["cython"] if editdist.BACKEND == "cython" else [])
    if len(backends) == 1:
        print("compiled kernel not built; timing the fallback only", file=sys.stderr)
    rng = random.Random(0)
    print(f"{'tokens':>7} " + " ".join(f"{b + ' ms':>12}" for b in backends) + f" {'speedup':>8}")
    for n in (int(s) for s in args.sizes.split(",")):
        a, b = token_pair(n, rng)
        want = editdist.levenshtein(a, b, backend="python")
        times = {}
        for backend in backends:
            assert editdist.levenshtein(a, b, backend=backend) == want
            runs = timeit.repeat(lambda: editdist.levenshtein(a, b, backend=backend),
                                 number=1, repeat=args.repeat)
            times[backend] = min(runs) * 1000
        speed = f"{times['python'] / times['cython']:>7.1f}x" if "cython" in times else f"{'-':>8}"
        print(f"{n:>7} " + " ".join(f"{times[b]:>12.3f}" for b in backends) + f" {speed}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
