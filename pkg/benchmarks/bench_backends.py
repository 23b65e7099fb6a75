"""Time the compiled kernels against the numpy fallback.

    python benchmarks/bench_backends.py [--repeat 5] [--dims 2 4 8 16]

Each row is the best of ``--repeat`` runs, in milliseconds. "radius" is
one full numerical-radius search: a 720-point half-grid sweep followed by
three golden-section refinements.
"""

import argparse
import timeit

import numpy as np

from numrad import config
from numrad._backend import available

TOL, SWEEPS = config.EIG_TOL, config.EIG_MAX_SWEEPS


def radius(kern, A):
    thetas = 2 * np.pi * np.arange(config.RADIUS_GRID // 2) / config.RADIUS_GRID
    lmax, lmin, *_ = kern.sweep(A, thetas, TOL, SWEEPS, False)
    lam = np.concatenate([lmax, -lmin])
    step = 2 * np.pi / config.RADIUS_GRID
    for k in np.argsort(-lam)[:3]:
        t = k * step
        kern.golden(A, t - step, t + step, config.GOLDEN_WIDTH, 0, True, TOL, SWEEPS)


def cases(n, rng):
    G = (rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))) / np.sqrt(2)
    H = np.ascontiguousarray((G + G.conj().T) / 2)
    A = np.ascontiguousarray(G)
    thetas = np.linspace(0, np.pi, 360, endpoint=False)
    return {
        "eigh": lambda k: k.eigh(H, TOL, SWEEPS, True),
        "sweep x360": lambda k: k.sweep(A, thetas, TOL, SWEEPS, False),
        "golden": lambda k: k.golden(A, 0.0, 0.05, config.GOLDEN_WIDTH, 0, True, TOL, SWEEPS),
        "radius": lambda k: radius(k, A),
    }


def best_ms(fn, repeat):
    number, total = 1, 0.0
    while total < 0.05:  # pick a loop count that runs for at least 50 ms
        total = timeit.timeit(fn, number=number)
        if total < 0.05:
            number *= 4
    return 1e3 * min(timeit.repeat(fn, number=number, repeat=repeat)) / number


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--dims", type=int, nargs="+", default=[2, 4, 8, 16])
    args = ap.parse_args()

    backends = available()
    if "compiled" not in backends:
        print("compiled kernels not built; run `python setup.py build_ext --inplace` first")
    names = sorted(backends)  # compiled first when present
    rng = np.random.default_rng(0)
    header = f"{'n':>3}  {'kernel':<11}" + "".join(f"{name + ' ms':>14}" for name in names)
    if len(names) == 2:
        header += f"{'speedup':>10}"
    print(header)
    for n in args.dims:
        for label, fn in cases(n, rng).items():
            times = [best_ms(lambda f=fn, k=backends[name]: f(k), args.repeat) for name in names]
            row = f"{n:>3}  {label:<11}" + "".join(f"{t:>14.4f}" for t in times)
            if len(times) == 2:
                row += f"{times[1] / times[0]:>9.1f}x"
            print(row, flush=True)


if __name__ == "__main__":
    main()
