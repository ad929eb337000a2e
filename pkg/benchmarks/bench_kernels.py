"""Time the compiled and pure-Python inversion histograms on the same shapes.

    python benchmarks/bench_kernels.py [--repeat N] [shape ...]
"""

import argparse
import time

from springer_betti import _pykernels
from springer_betti.partitions import multinomial, parse_partition, springer_dimension

try:
    from springer_betti import _ckernels
except ImportError:
    _ckernels = None

DEFAULT_SHAPES = ["3,3,2", "4,2,2", "3,2,2,1", "3,3,2,1", "3,3,3"]


def best_of(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - start)
    return best, result


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("shapes", nargs="*", default=DEFAULT_SHAPES)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)

    if _ckernels is None:
        print("compiled extension not built; timing the pure-Python kernel only")
    print(f"{'shape':<10}{'tableaux':>10}{'python s':>11}{'cython s':>11}{'speedup':>9}")
    for text in args.shapes:
        shape = parse_partition(text)
        parts, dim = shape.parts, springer_dimension(shape)
        py_t, py_h = best_of(lambda: _pykernels.inversion_histogram(parts, dim), args.repeat)
        if _ckernels is None:
            print(f"{text:<10}{multinomial(shape):>10}{py_t:>11.4f}{'-':>11}{'-':>9}")
            continue
        c_t, c_h = best_of(lambda: _ckernels.inversion_histogram(parts, dim), args.repeat)
        if list(c_h) != list(py_h):
            raise SystemExit(f"kernels disagree on {text}: {list(c_h)} vs {list(py_h)}")
        print(f"{text:<10}{multinomial(shape):>10}{py_t:>11.4f}{c_t:>11.4f}{py_t / c_t:>8.1f}x")


if __name__ == "__main__":
    main()
