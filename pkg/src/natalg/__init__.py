"""Exact-arithmetic kernel for two convolution structures on the nonnegative
integers, the additive (Cauchy) one and the divisor (Dirichlet) one, together
with the layers built on top of them: arithmetic-function series, monomial
symmetric functions with a twisted circle product, bosonic normal ordering with
Stirling numbers, and Witt-vector / lambda-ring calculus.

All scalars are exact rationals; there is not a single float in the package.
"""

__version__ = "0.1.0"
