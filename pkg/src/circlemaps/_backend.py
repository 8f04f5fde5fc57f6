"""Kernel selection.

The compiled kernel is used when it imports; ``CIRCLEMAPS_KERNEL=python``
forces the pure-Python fallback.
"""
import os

from . import _kernel_py

python_kernel = _kernel_py
compiled_kernel = None

try:
    from . import _kernel as compiled_kernel
except ImportError:
    compiled_kernel = None

if os.environ.get("CIRCLEMAPS_KERNEL", "").lower() == "python" or compiled_kernel is None:
    kernel = python_kernel
else:
    kernel = compiled_kernel

BACKEND = kernel.BACKEND


def use(name):
    """Switch the active kernel (``"python"`` or ``"compiled"``)."""
    global kernel, BACKEND
    if name == "python":
        kernel = python_kernel
    elif name == "compiled":
        if compiled_kernel is None:
            raise RuntimeError("compiled kernel is not built")
        kernel = compiled_kernel
    else:
        raise ValueError("unknown kernel %r" % name)
    BACKEND = kernel.BACKEND
    return kernel


def active():
    return kernel
