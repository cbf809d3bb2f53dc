"""Tour of the complex Gamma-family engine.

Run:  python3 demos/gamma_functions.py
"""

import cmath
import math

from complexorder import beta, gamma, gamma_ratio, log_gamma

# Gamma at a complex point, and the classics
print("Gamma(1+1i)  =", gamma(1 + 1j))
print("Gamma(1/2)   =", gamma(0.5 + 0j), " (sqrt(pi) =", math.sqrt(math.pi), ")")
print("Gamma(5)     =", gamma(5 + 0j), " (= 4!)")

# The recurrence Gamma(z+1) = z Gamma(z) holds across the complex plane
z = -2.3 + 1.7j
print("\nrecurrence residual at", z, ":", abs(gamma(z + 1) - z * gamma(z)))

# log_gamma is the principal branch: its imaginary part keeps growing where
# a naive log(gamma(z)) would wrap into (-pi, pi].
w = 2 + 20j
print("\nlog_gamma(2+20i)      =", log_gamma(w))
print("log(gamma(2+20i))     =", cmath.log(gamma(w)), " (wrapped imaginary part)")
print("exp(log_gamma) agrees =", abs(cmath.exp(log_gamma(w)) - gamma(w)) / abs(gamma(w)))

# Quotients are formed in log space, and a denominator pole gives exactly 0;
# this is the mechanism that kills polynomials under repeated derivatives.
print("\nGamma(2)/Gamma(3)  =", gamma_ratio(2 + 0j, 3 + 0j))
print("Gamma(2)/Gamma(0)  =", gamma_ratio(2 + 0j, 0j), " (reciprocal pole -> 0)")

# Beta function with complex arguments: B(s, 1) = 1/s
s = 0.5 + 0.5j
print("\nB(0.5+0.5i, 1) =", beta(s, 1 + 0j), " vs 1/s =", 1 / s)
print("B(0.5+0.5i, 2) =", beta(s, 2 + 0j))
