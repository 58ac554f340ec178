"""Kernel backend selection.

The compiled Cython kernels are used when the extension was built;
otherwise the numpy fallback is selected. Set MMDNMF_FORCE_PYTHON=1 to
force the fallback (used by the benchmark and the cross-backend tests).
"""

import os

from . import _kernels_py

if os.environ.get("MMDNMF_FORCE_PYTHON", "") == "1":
    kernels = _kernels_py
else:
    try:
        from . import _kernels_cy as kernels  # type: ignore[no-redef]
    except ImportError:
        kernels = _kernels_py

KERNEL_BACKEND = "compiled" if kernels.COMPILED else "python"

pair_sq_distances = kernels.pair_sq_distances
# the gram-form numpy implementation is BLAS-backed and beats the compiled
# double loop at every benchmarked size (see benchmarks/bench_kernels.py)
sq_distance_matrix = _kernels_py.sq_distance_matrix
