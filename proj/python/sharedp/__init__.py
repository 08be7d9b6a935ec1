"""Batch k-vertex-disjoint-paths engine."""

try:
    from sharedp._sharedp import *  # noqa: F401,F403  (installed wheel layout)
except ImportError:
    from _sharedp import *  # noqa: F401,F403  (in-tree cmake build)
