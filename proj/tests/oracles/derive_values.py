"""Independent brute-force derivations of the frozen values used in the unit tests.

Uses only fractions + sympy; shares no code with the C++ library.
Run: python3 tests/oracles/derive_values.py
"""
from fractions import Fraction as F
from math import gcd, floor
import cmath
import sympy
from sympy import cyclotomic_poly, symbols, Poly, rem, expand

x = symbols("x")


def b1(q):
    q = F(q)
    if q.denominator == 1:
        return F(0)
    return q - floor(q) - F(1, 2)


def cyc_reduce(m, by_power):
    """Reduce sum by_power[k] * x^k modulo Phi_m, return power-basis coefficients."""
    phi = Poly(cyclotomic_poly(m, x), x)
    p = Poly(sum(sympy.Rational(c.numerator, c.denominator) * x**k for k, c in by_power.items()), x)
    r = p.rem(phi)
    deg = phi.degree()
    coeffs = [F(0)] * deg
    for (k,), c in r.terms():
        coeffs[k] = F(int(sympy.fraction(c)[0]), int(sympy.fraction(c)[1]))
    return coeffs


def chi3(n):  # quadratic mod 3
    n %= 3
    return {0: 0, 1: 1, 2: -1}[n]


def chi4(n):  # odd quadratic mod 4
    n %= 4
    return {0: 0, 1: 1, 2: 0, 3: -1}[n]


def dedekind(chi1, q1, chi2, a, c):
    """Double sum S(gamma) for real-valued characters (conj = identity)."""
    s = F(0)
    for j in range(c):
        for n in range(q1):
            s += chi2(j) * chi1(n) * b1(F(j, c)) * b1(F(n, q1) + F(a * j, c))
    return s


print("Phi_6 =", Poly(cyclotomic_poly(6, x), x).all_coeffs()[::-1])
print("zeta_12^14 =", cyc_reduce(12, {14: F(1)}))
# (1+z5)(1+z5^4) = 1 + z5 + z5^4 + z5^5 = 2 + z5 + z5^4
print("(1+z5)(1+z5^4) =", cyc_reduce(5, {0: F(2), 1: F(1), 4: F(1)}))
print("tau(chi3) =", cyc_reduce(3, {n: F(chi3(n)) for n in range(3)}))
print("tau(chi4) =", cyc_reduce(4, {n: F(chi4(n)) for n in range(4)}))
print("b1_chi(chi3,0) =", sum(chi3(n) * b1(F(n, 3)) for n in range(1, 3)))
print("b1_chi(chi4,0) =", sum(chi4(n) * b1(F(n, 4)) for n in range(1, 4)))
# theta limit -sum_{j mod c} chi(j) B1(j/c) zeta_c^{a l j}, in Q(zeta_lcm(2, c)).
# c = q is excluded: l = 0 mod c/q = 1 always.
def theta(a, c, l):
    L = c if c % 2 == 0 else 2 * c
    out = {}
    for j in range(c):
        e = (a * l * j % c) * (L // c)
        out[e] = out.get(e, 0) - chi3(j) * b1(F(j, c))
    return L, cyc_reduce(L, out)
print("theta_limit(chi3,1,9,1) =", theta(1, 9, 1))
print("theta_limit(chi3,5,6,1) =", theta(5, 6, 1))

S = dedekind(chi3, 3, chi3, 1, 9)
print("S_{chi3,chi3}((1,0;9,1)) =", S)
S2 = dedekind(chi3, 3, chi3, 5, 9)
print("S_{chi3,chi3}((5,1;9,2)) =", S2)
S3 = dedekind(chi3, 3, chi4, 1, 12)
print("S_{chi3,chi4}((1,0;12,1)) =", S3)
S4 = dedekind(chi4, 4, chi3, 5, 24)
print("S_{chi4,chi3}((5,*;24,5)) =", S4)

# coefficient c_n = sum_{ab=n} chi1(a) chi2(b) b  for (chi3, chi3)
def coeff(n):
    return sum(chi3(a) * chi3(n // a) * (n // a) for a in range(1, n + 1) if n % a == 0)
print("c_2, c_5, c_10 (chi3,chi3) =", coeff(2), coeff(5), coeff(10))

# unit group checks
print("order of 2 mod 9:", [pow(2, k, 9) for k in range(1, 7)])
# numeric check of S via the Fourier series of f at the balanced point
def f_val(z, M):
    tot = 0
    for n in range(1, M + 1):
        cn = sum(chi3(a) * chi3(n // a) * (n // a) for a in range(1, n + 1) if n % a == 0)
        tot += cn / n * cmath.exp(2j * cmath.pi * n * z)
    return tot
a, b, c, d = 1, 0, 9, 1
z = complex(-d / c, 1 / c)
gz = (a * z + b) / (c * z + d)
phi = f_val(gz, 200) - f_val(z, 200)
tau = complex(0, 3 ** 0.5)  # tau(chi3) = i sqrt 3, chi3 real so conj chi = chi
print("s_numeric((1,0;9,1)) =", tau / (cmath.pi * 1j) * phi, "exact", float(S))
a, b, c, d = 5, 1, 9, 2
z = complex(-d / c, 1 / c)
gz = (a * z + b) / (c * z + d)
psi = chi3(d) * chi3(d)
phi = f_val(gz, 200) - psi * f_val(z, 200)
print("s_numeric((5,1;9,2)) =", tau / (cmath.pi * 1j) * phi, "exact", float(S2))
