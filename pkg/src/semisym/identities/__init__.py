"""Identities satisfied by the interpolation polynomials, and suites that check them."""
