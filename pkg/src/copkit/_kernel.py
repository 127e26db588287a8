"""Kernel selection: compiled extension when built, pure Python otherwise.

The active kernel is chosen once at import (override with the
``COPKIT_KERNEL`` environment variable, value ``python`` or ``compiled``)
and can be switched at runtime with :func:`use_kernel`, which the
kernel-comparison benchmark relies on. Both kernels are semantically
identical; the test suite runs against every available one.
"""

import os

from . import _pykernel

try:
    from . import _ckernel
except ImportError:
    _ckernel = None

_KERNELS = {"python": _pykernel}
if _ckernel is not None:
    _KERNELS["compiled"] = _ckernel

# Rebound by use_kernel(); callers go through module attributes so the
# switch takes effect everywhere at once.
effective_ordinals = _pykernel.effective_ordinals
run_chain = _pykernel.run_chain
_active = "python"


def available_kernels():
    return sorted(_KERNELS)


def active_kernel():
    return _active


def use_kernel(name):
    """Select the kernel by name; returns the previously active name."""
    global effective_ordinals, run_chain, _active
    if name == "auto":
        name = "compiled" if _ckernel is not None else "python"
    if name not in _KERNELS:
        raise ValueError(
            f"unknown kernel {name!r}; available: {', '.join(available_kernels())}"
        )
    previous = _active
    mod = _KERNELS[name]
    effective_ordinals = mod.effective_ordinals
    run_chain = mod.run_chain
    _active = name
    return previous


use_kernel(os.environ.get("COPKIT_KERNEL", "").strip() or "auto")
