"""Exact computations with integral symplectic involutions and period matrices."""

try:
    from .ppav_core import *  # noqa: F401,F403  (installed layout)
except ImportError:
    from ppav_core import *  # noqa: F401,F403  (in-tree build on PYTHONPATH)
