"""Exact-arithmetic toolkit for determinantal cubic surfaces, double-six line
configurations and their invariant quadric, rank-2 monad bundles on the plane,
and logarithmic bundles of line arrangements."""

__version__ = "0.1.0"
