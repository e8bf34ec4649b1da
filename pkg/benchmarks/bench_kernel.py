"""Benchmark the compiled escape-time kernel against the pure-Python twin.

Runs the same grid classification through both backends, checks the
outputs are identical, and reports wall-clock times and the speedup.

    python3 benchmarks/bench_kernel.py
    python3 benchmarks/bench_kernel.py --size 96x96 --lambda 7.0 --repeat 3
"""

import argparse
import re
import sys
import time
from array import array

from pentalab import _kernel_py
from pentalab.moduli import circle_reference_data
from pentalab.julia import DEFAULT_WINDOW
from pentalab.scalars import PHI


def parse_size(text):
    m = re.fullmatch(r"(\d+)x(\d+)", text)
    if m is None:
        raise argparse.ArgumentTypeError(f"--size must look like 64x64, got {text!r}")
    return int(m.group(1)), int(m.group(2))


def parse_lam(text):
    if text == "inf":
        return 0.0, True
    if text == "phi":
        return float(PHI), False
    return float(text), False


def run(mod, width, height, lam, lam_is_inf, max_iter):
    refmat, ref5 = circle_reference_data()
    n = width * height
    status = bytearray(n)
    steps = array("i", bytes(4 * n))
    x0, x1, y0, y1 = DEFAULT_WINDOW
    t0 = time.perf_counter()
    mod.classify_grid(
        x0, x1, y0, y1, width, height,
        lam, lam_is_inf, max_iter, 1e-6, 1e-10,
        refmat, ref5, status, steps,
    )
    elapsed = time.perf_counter() - t0
    return elapsed, bytes(status), list(steps)


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--size", type=parse_size, default=(48, 48))
    parser.add_argument("--lambda", dest="lam", type=parse_lam, default=(0.2, False))
    parser.add_argument("--max-iter", type=int, default=30)
    parser.add_argument("--repeat", type=int, default=1, help="best of N runs")
    args = parser.parse_args(argv)

    try:
        from pentalab import _kernel
    except ImportError:
        print("compiled kernel unavailable; build the extension first", file=sys.stderr)
        return 1

    width, height = args.size
    lam, lam_is_inf = args.lam
    label = "inf" if lam_is_inf else repr(lam)
    print(f"grid {width}x{height}, lambda={label}, max_iter={args.max_iter}")

    best = {}
    buffers = {}
    for name, mod in (("compiled", _kernel), ("python", _kernel_py)):
        for _ in range(args.repeat):
            elapsed, status, steps = run(
                mod, width, height, lam, lam_is_inf, args.max_iter
            )
            if name not in best or elapsed < best[name]:
                best[name] = elapsed
                buffers[name] = (status, steps)
        print(f"{name:9s} {best[name]:9.4f} s")

    identical = buffers["compiled"] == buffers["python"]
    print(f"speedup   {best['python'] / best['compiled']:9.1f} x")
    print(f"identical {identical}")
    return 0 if identical else 1


if __name__ == "__main__":
    sys.exit(main())
