"""Stray-field design toolkit for spin qubits beside a ferromagnetic
nanostripe.

The compiled extension carries the whole API; this package re-exports it.
When the extension is importable only from the build tree (development
runs with PYTHONPATH pointing at the CMake output directory), fall back
to the top-level module name.
"""

try:
    from ._stripefield import *  # noqa: F401,F403
    from ._stripefield import __doc__, __version__  # noqa: F401
except ImportError:  # pragma: no cover - build-tree layout
    from _stripefield import *  # noqa: F401,F403
    from _stripefield import __doc__, __version__  # noqa: F401
