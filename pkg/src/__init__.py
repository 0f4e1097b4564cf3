"""
springeriso: Springer isomorphisms, good primes and small-field verification suites.
"""

__version__ = "0.1.0"
