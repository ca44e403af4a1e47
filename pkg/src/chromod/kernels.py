"""Backend selection for the enumeration kernels.

The compiled extension ``chromod._kernels`` is used when it imports;
otherwise, or when the environment variable ``CHROMOD_PURE_PYTHON`` is set
to a non-empty value, the pure-Python module is used.  ``BACKEND`` names the
active choice.
"""

import os

from . import _kernels_py as python_impl

compiled_impl = None
if not os.environ.get("CHROMOD_PURE_PYTHON"):
    try:
        from . import _kernels as compiled_impl  # type: ignore[no-redef]
    except ImportError:  # extension not built
        compiled_impl = None

_active = compiled_impl or python_impl
BACKEND = "compiled" if compiled_impl is not None else "python"

coloring_counts = _active.coloring_counts
rook_counts = _active.rook_counts
