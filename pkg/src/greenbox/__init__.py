"""
greenbox: exact cell theory for based algebras.

Computes Green-style cell structures (left/right/two-sided cells, egg-box
layouts, idempotent cells), Gram and sandwich matrices, and simple-module
data for ten families of diagram monoid algebras and for dihedral Hecke
algebras with their Kazhdan-Lusztig bases.  All arithmetic is exact:
arbitrary-precision integers and rationals, polynomials in the loop
parameter, Laurent polynomials in the quantum parameter, and small number
fields.
"""

__version__ = "0.1.0"
