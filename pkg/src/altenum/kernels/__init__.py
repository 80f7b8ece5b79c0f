"""Hot kernels for the brute-force oracle.

The compiled extension ``_ckernels`` is used when it imports; otherwise the
pure-Python ``_pykernels`` twin is selected. ``use_backend`` switches at run
time (tests exercise both).
"""

from altenum.kernels import _pykernels

try:
    from altenum.kernels import _ckernels
except ImportError:  # extension not built
    _ckernels = None

_BACKENDS = {"python": _pykernels}
if _ckernels is not None:
    _BACKENDS["cython"] = _ckernels

_active = _ckernels if _ckernels is not None else _pykernels


def available_backends():
    return sorted(_BACKENDS)


def backend_name():
    return "cython" if _active is _ckernels and _ckernels is not None else "python"


def use_backend(name):
    """Select ``"python"`` or ``"cython"``; returns the previous backend name."""
    global _active
    if name not in _BACKENDS:
        raise ValueError(f"kernel backend {name!r} unavailable (have {available_backends()})")
    prev = backend_name()
    _active = _BACKENDS[name]
    return prev


def rref_mod_p(a, ncols, p):
    return _active.rref_mod_p(a, ncols, p)


def rank_mod_p(a, ncols, p):
    return _active.rank_mod_p(a, ncols, p)


def graph_census(n, lo, hi):
    return _active.graph_census(n, lo, hi)


def colored_pairs(n, c, lo, hi):
    return _active.colored_pairs(n, c, lo, hi)
