"""Select the GF(p) kernel backend at import time.

The compiled extension is used when it was built; otherwise (or when the
``MSCALG_PURE_PYTHON`` environment variable is set) the pure-Python twin is
used.  Both expose the same functions with identical output order.
"""

from __future__ import annotations

import os

from . import _kernels_py

if os.environ.get("MSCALG_PURE_PYTHON"):
    _impl = _kernels_py
else:
    try:
        from . import _kernels as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = _kernels_py

BACKEND = "python" if _impl is _kernels_py else "compiled"

scan_isomorphisms = _impl.scan_isomorphisms
orbit_codes = _impl.orbit_codes
change_basis_mod = _impl.change_basis_mod
derivation_rank = _impl.derivation_rank
rank_mod = _impl.rank_mod
closure_dim = _impl.closure_dim
proper_closure_line = _impl.proper_closure_line
encode = _impl.encode
census = _impl.census
classify = _impl.classify
decode = _kernels_py.decode
