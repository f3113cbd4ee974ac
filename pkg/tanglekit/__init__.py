"""tanglekit - rational tangle calculus and tangle-equation solving."""

__version__ = "0.1.0"
