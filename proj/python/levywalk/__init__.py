"""Quantum walk under Levy-timed projective measurements."""

try:
    from ._core import *  # noqa: F401,F403
except ImportError:  # in-tree test runs put the module directly on sys.path
    from _core import *  # noqa: F401,F403

__version__ = "0.1.0"
