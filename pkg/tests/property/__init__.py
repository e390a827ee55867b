"""
Property-based tests for the exact algebra.

Hypothesis draws small rational elements and checks the identities every
computation relies on: antisymmetry, Jacobi, grading, the BCH group law and
d∘d = 0.
"""
