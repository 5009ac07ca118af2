"""Exact computations around secant varieties of Grassmannians and spinor varieties."""

__version__ = "0.1.0"
