"""Python bindings for the tbench simulation workbench."""

try:
    # Installed wheel: the extension lives inside the package.
    from ._tbench import *  # noqa: F401,F403
    from ._tbench import __version__  # noqa: F401
except ImportError:
    # Development tree: the extension sits on PYTHONPATH (build directory).
    from _tbench import *  # noqa: F401,F403
    from _tbench import __version__  # noqa: F401
