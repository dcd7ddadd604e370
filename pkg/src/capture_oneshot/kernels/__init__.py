"""Numeric hot-path kernels with two interchangeable backends.

The default backend JIT-compiles the inner loops with numba (row-blocked
im2col fused with BLAS matmuls); a pure-numpy fallback implements the
same contracts. Selection is controlled by the environment variable
``CAPTURE_ONESHOT_BACKEND``:

* ``auto`` (default) - numba if it imports, else numpy
* ``numba``          - require numba, fail loudly if unavailable
* ``numpy``          - force the fallback

When the numba backend is active, BLAS pools are pinned to one thread
(numba's ``prange`` owns the parallelism; nested BLAS threading
oversubscribes the cores and is several times slower).

Both backends expose:

* ``conv3x3(x, w, b)`` / ``conv3x3_grad_input`` / ``conv3x3_grad_weight``
  - 3x3, stride-1, zero-pad-1 convolution on NHWC tensors
* ``maxpool2`` / ``maxpool2_grad`` - 2x2 max pooling with argmax record
* ``leaky_relu`` / ``leaky_relu_grad``
* ``conv2d_replicate`` - small-kernel 2-D image convolution with
  edge-replicate padding and float64 accumulation (blur primitives)
"""

from __future__ import annotations

import os
from types import ModuleType

BACKEND_ENV = "CAPTURE_ONESHOT_BACKEND"

_blas_limiter = None  # keeps the threadpoolctl limit alive for the process


def _load_numba_backend() -> ModuleType:
    global _blas_limiter
    from . import _numba as mod

    if _blas_limiter is None:
        import threadpoolctl

        _blas_limiter = threadpoolctl.threadpool_limits(limits=1, user_api="blas")
    return mod


def get_backend(name: str) -> ModuleType:
    """Load a backend module by name ('numba' or 'numpy')."""
    if name == "numba":
        return _load_numba_backend()
    if name == "numpy":
        from . import _numpy as mod

        return mod
    raise ValueError(f"unknown kernel backend {name!r}")


def _select() -> tuple[str, ModuleType]:
    requested = os.environ.get(BACKEND_ENV, "auto").strip().lower()
    if requested in ("numba", "numpy"):
        return requested, get_backend(requested)
    if requested != "auto":
        raise ValueError(
            f"{BACKEND_ENV} must be 'auto', 'numba' or 'numpy', got {requested!r}"
        )
    try:
        return "numba", _load_numba_backend()
    except ImportError:
        return "numpy", get_backend("numpy")


_name, _impl = _select()

conv3x3 = _impl.conv3x3
conv3x3_grad_input = _impl.conv3x3_grad_input
conv3x3_grad_weight = _impl.conv3x3_grad_weight
maxpool2 = _impl.maxpool2
maxpool2_grad = _impl.maxpool2_grad
leaky_relu = _impl.leaky_relu
leaky_relu_grad = _impl.leaky_relu_grad
conv2d_replicate = _impl.conv2d_replicate


def backend_name() -> str:
    """Name of the backend selected at import time."""
    return _name
