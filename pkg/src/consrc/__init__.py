"""Equivalent-current inverse source toolbox.

Reconstructs tangential surface currents on a sphere from field samples on
an exterior measurement sphere, comparing the Moore-Penrose pseudoinverse
against a constraint-blended generalized pseudoinverse that injects known
solution/right-hand-side pairs.

Submodules are imported lazily so the ``consrc`` CLI can cap BLAS thread
counts before numpy is loaded.
"""

__version__ = "0.1.0"

_SUBMODULES = (
    "linalg",
    "pinv",
    "kernels",
    "geometry",
    "modes",
    "scenario",
    "config",
    "experiments",
    "cli",
)


def __getattr__(name):
    if name in _SUBMODULES:
        import importlib

        return importlib.import_module(f".{name}", __name__)
    raise AttributeError(f"module {__name__!r} has no attribute {name!r}")
