"""Pick the compiled kernel when it is importable, else the Python one.

Set ``COHZETA_PURE_PYTHON=1`` to force the fallback.
"""

import os

if os.environ.get("COHZETA_PURE_PYTHON"):
    from . import _kernel_py as kernel
else:
    try:
        from . import _kernel as kernel
    except ImportError:
        from . import _kernel_py as kernel

BACKEND = kernel.BACKEND
