"""
Compare the compiled and numpy kernel backends on full-size (N = 20) workloads.

    python benchmarks/bench_kernels.py [--repeat 3]
"""

import argparse
import time

import numpy as np

from lrcoherence import BlockSpec, CouplingModel
from lrcoherence import kernels
from lrcoherence._pykernels import difference_patterns
from lrcoherence.coherence import _inside_outside_couplings, single_spin_frequencies_brute
from lrcoherence.model import energies


def workloads():
    m20 = CouplingModel(20, 1.0, 3.0)
    omega = single_spin_frequencies_brute(m20, 10)
    t_single = np.linspace(0, 10, 50)

    block = BlockSpec.centered(20, 10)
    _, j_out = _inside_outside_couplings(CouplingModel(20, 1.0, 1.0), block)
    patterns, counts = difference_patterns(10)
    fields = np.ascontiguousarray(patterns @ j_out.T)
    j_out_c = np.ascontiguousarray(j_out)
    t_block = np.linspace(0, 40, 400)

    weights = np.ascontiguousarray(np.delete(CouplingModel(24, 1.0, 1.0).couplings[11], 11))

    m12 = CouplingModel(12, 1.0, 1.0)
    outside = np.arange(1 << 8)
    words = (np.arange(1 << 4)[:, None] << 4) | ((outside & 0xF) | ((outside >> 4) << 8))[None, :]
    e = energies(m12, words)

    return {
        "phase_sum_modulus  N=20 brute, 50 t": lambda k: k.phase_sum_modulus(omega, t_single),
        "pattern_coherence  N_I=10, 400 t": lambda k: k.pattern_coherence(fields, counts, t_block),
        "block_pattern_sum  N_I=10, 400 t": lambda k: k.block_pattern_sum(j_out_c, t_block),
        "enumerate_freqs    N=24": lambda k: k.enumerate_frequencies(weights),
        "density_matrix_sum N=12, N_I=4": lambda k: k.density_matrix_sum(e, 0.7),
    }


def main():
    parser = argparse.ArgumentParser(description=__doc__.strip().splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    backends = kernels.available_backends()
    print(f"backends: {', '.join(backends)} (default: {kernels.BACKEND})")
    print(f"{'kernel':40s}" + "".join(f"{b:>12s}" for b in backends) + "     speedup")
    for name, fn in workloads().items():
        best = {}
        for b in backends:
            k = kernels.get_backend(b)
            times = []
            for _ in range(args.repeat):
                start = time.perf_counter()
                fn(k)
                times.append(time.perf_counter() - start)
            best[b] = min(times)
        line = f"{name:40s}" + "".join(f"{best[b]:11.3f}s" for b in backends)
        if "cython" in best:
            line += f"  {best['python'] / best['cython']:9.2f}x"
        print(line)


if __name__ == "__main__":
    main()
