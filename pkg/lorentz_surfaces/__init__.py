"""
Minimal Lorentz surfaces

Weierstrass-type representations of null curves and minimal Lorentz surfaces in
R31 and R42, the correspondence between R42 surfaces and pairs of R31 surfaces,
and verification suites for their invariants.
"""

__version__ = "1.0.0"
