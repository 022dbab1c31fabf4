"""Synergistic planar maxima and convex hulls.

Algorithms that adapt both to the order of their input (smooth runs,
simple subchains) and to its structure (output size, certificate shape),
together with certificate checkers, brute-force oracles and a
comparison-counting benchmark harness.
"""

__version__ = "0.1.0"
