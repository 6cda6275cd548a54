"""Compare the compiled and pure-Python prime-field kernels.

    python benchmarks/bench_kernels.py [--repeat N]

Times each kernel on random inputs with both backends, then an end-to-end
radical computation for ``F_2[S_4]`` with the backend swapped in place.
"""
from __future__ import annotations

import argparse
import random
import timeit
from contextlib import contextmanager

from joinring import kernels
from joinring import _kernels_py as py
from joinring.fields import Field
from joinring.groupring import radical_basis_group_algebra
from joinring.groups import symmetric

try:
    from joinring import _kernels_c as cy
except ImportError:
    cy = None

NAMES = ("matmul_mod", "convolve_mod", "row_reduce_mod")


@contextmanager
def backend(mod):
    saved = {n: getattr(kernels, n) for n in NAMES}
    try:
        for n in NAMES:
            setattr(kernels, n, getattr(mod, n))
        yield
    finally:
        for n, f in saved.items():
            setattr(kernels, n, f)


def cases(rng: random.Random):
    p = 101
    a = [[rng.randrange(p) for _ in range(60)] for _ in range(60)]
    b = [[rng.randrange(p) for _ in range(60)] for _ in range(60)]
    g = symmetric(5)
    x = [rng.randrange(p) for _ in range(g.order)]
    y = [rng.randrange(p) for _ in range(g.order)]
    m = [[rng.randrange(p) for _ in range(80)] for _ in range(80)]
    return {
        "matmul_mod 60x60": lambda k: k.matmul_mod(a, b, p),
        "convolve_mod S5": lambda k: k.convolve_mod(g.table, x, y, p),
        "row_reduce_mod 80x80": lambda k: k.row_reduce_mod(m, p),
    }


def best(fn, repeat: int) -> float:
    return min(timeit.repeat(fn, number=1, repeat=repeat))


def main(argv=None) -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args(argv)
    if cy is None:
        print("compiled kernels not built; only the Python backend is available")
    mods = [("python", py)] + ([("cython", cy)] if cy else [])
    print(f"{'case':<24}" + "".join(f"{n:>12}" for n, _ in mods) + ("     speedup" if cy else ""))
    rows = list(cases(random.Random(0)).items())
    s4 = symmetric(4)
    f2 = Field.prime(2)

    def radical(mod):
        with backend(mod):
            return radical_basis_group_algebra(s4, f2)

    rows.append(("radical F2[S4]", radical))
    for name, fn in rows:
        times = [best(lambda m=m: fn(m), args.repeat) for _, m in mods]
        line = f"{name:<24}" + "".join(f"{t * 1e3:>10.2f}ms" for t in times)
        if cy:
            line += f"{times[0] / times[1]:>11.1f}x"
        print(line)


if __name__ == "__main__":
    main()
