"""Irreducible components of point varieties of quantum polynomial algebras."""

try:
    from ._qpoints import *  # noqa: F401,F403  (installed layout)
except ImportError:  # build-tree layout: extension next to the build products
    from _qpoints import *  # noqa: F401,F403
