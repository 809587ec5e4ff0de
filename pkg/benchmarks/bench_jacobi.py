"""Compare the compiled Jacobi kernel against the pure-Python fallback.

Times full Hermitian eigendecompositions across a range of dimensions and
an end-to-end numerical radius solve, printing one row per case with the
speedup.  The two kernels run the identical algorithm, so the eigenvalues
are also cross-checked.

Usage: python benchmarks/bench_jacobi.py [--dims 4,8,16,32] [--repeat 5]
"""

import argparse
import time

import numpy as np

from numrad import backend, radius
from numrad import _jacobi_py

try:
    from numrad import _jacobi as _compiled
except ImportError:
    _compiled = None


def random_hermitian(rng, n):
    a = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    return (a + a.conj().T) / 2.0


def time_kernel(kernel, h, repeat):
    best = np.inf
    values = None
    for _ in range(repeat):
        start = time.perf_counter()
        values, _ = backend.jacobi_eigh(h, kernel=kernel)
        best = min(best, time.perf_counter() - start)
    return best, values


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--dims", default="4,8,16,32,48")
    parser.add_argument("--repeat", type=int, default=5)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    if _compiled is None:
        print("compiled kernel unavailable; nothing to compare")
        return

    rng = np.random.default_rng(args.seed)
    dims = [int(d) for d in args.dims.split(",")]

    print(f"{'n':>4} {'compiled':>12} {'python':>12} {'speedup':>9} {'max |dlam|':>12}")
    for n in dims:
        h = random_hermitian(rng, n)
        t_c, v_c = time_kernel(_compiled, h, args.repeat)
        t_p, v_p = time_kernel(_jacobi_py, h, args.repeat)
        dev = float(np.max(np.abs(v_c - v_p)))
        print(f"{n:>4} {t_c * 1e3:>10.3f}ms {t_p * 1e3:>10.3f}ms "
              f"{t_p / t_c:>8.1f}x {dev:>12.2e}")

    # End-to-end: one numerical radius solve per kernel at n = 8.
    c = rng.standard_normal((8, 8)) + 1j * rng.standard_normal((8, 8))
    for name, kernel in (("compiled", _compiled), ("python", _jacobi_py)):
        backend._impl, saved = kernel, backend._impl
        try:
            start = time.perf_counter()
            value = radius.numerical_radius(c).value
            elapsed = time.perf_counter() - start
        finally:
            backend._impl = saved
        print(f"numerical_radius(n=8) [{name}]: {elapsed:.3f}s  value {value:.9f}")


if __name__ == "__main__":
    main()
