"""Homogeneous binary forms over F_p.

A form of degree n is stored as its n+1 coefficients in the fixed basis
s^n, s^(n-1) t, ..., t^n (descending powers of s).  The index of a
coefficient equals the exponent of t, so products are plain convolutions
of coefficient sequences.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class BinaryForm:
    degree: int
    coeffs: tuple[int, ...]
    p: int

    def __post_init__(self) -> None:
        if self.degree < 0:
            raise ValueError("degree must be nonnegative")
        if len(self.coeffs) != self.degree + 1:
            raise ValueError("coefficient count must be degree + 1")

    @classmethod
    def make(cls, coeffs, p: int) -> BinaryForm:
        c = tuple(int(x) % p for x in coeffs)
        return cls(len(c) - 1, c, p)

    @classmethod
    def zero(cls, degree: int, p: int) -> BinaryForm:
        return cls(degree, (0,) * (degree + 1), p)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def is_constant(self) -> bool:
        return self.degree == 0

    def array(self) -> np.ndarray:
        return np.array(self.coeffs, dtype=np.int64)

    def evaluate(self, s: int, t: int) -> int:
        n, p = self.degree, self.p
        acc = 0
        for i, c in enumerate(self.coeffs):
            acc = (acc + c * pow(s, n - i, p) % p * pow(t, i, p)) % p
        return acc

    def __add__(self, other: BinaryForm) -> BinaryForm:
        _check_pair(self, other)
        return BinaryForm.make((a + b for a, b in zip(self.coeffs, other.coeffs)), self.p)

    def __sub__(self, other: BinaryForm) -> BinaryForm:
        _check_pair(self, other)
        return BinaryForm.make((a - b for a, b in zip(self.coeffs, other.coeffs)), self.p)

    def __mul__(self, other: BinaryForm) -> BinaryForm:
        return multiply(self, other)

    def scale(self, c: int) -> BinaryForm:
        return BinaryForm.make((c * a for a in self.coeffs), self.p)


def _check_pair(f: BinaryForm, g: BinaryForm) -> None:
    if f.p != g.p:
        raise ValueError("forms live over different primes")
    if f.degree != g.degree:
        raise ValueError("degree mismatch")


def conv(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    """Coefficient convolution mod p (low-level workhorse)."""
    return np.convolve(a, b) % p


def multiply(f: BinaryForm, g: BinaryForm) -> BinaryForm:
    if f.p != g.p:
        raise ValueError("forms live over different primes")
    return BinaryForm.make(conv(f.array(), g.array(), f.p), f.p)


def derivative(f: BinaryForm, var: str) -> BinaryForm:
    """Partial derivative with respect to 's' or 't'.

    Degree drops by one; the degree-0 input returns the zero form of
    degree 0 by convention.  Satisfies the Euler identity
    s*ds(f) + t*dt(f) = deg(f) * f.
    """
    if var not in ("s", "t"):
        raise ValueError("var must be 's' or 't'")
    n, p = f.degree, f.p
    if n == 0:
        return BinaryForm.zero(0, p)
    if var == "s":
        out = [(n - i) * f.coeffs[i] for i in range(n)]
    else:
        out = [(i + 1) * f.coeffs[i + 1] for i in range(n)]
    return BinaryForm.make(out, p)


def _t_valuation(f: BinaryForm) -> int:
    for i, c in enumerate(f.coeffs):
        if c != 0:
            return i
    raise ValueError("zero form has no t-valuation")


def _poly_mod(a: list[int], b: list[int], p: int) -> list[int]:
    # univariate remainder, coefficients descending, b nonempty with b[0] != 0
    a = list(a)
    binv = pow(b[0], p - 2, p)
    while len(a) >= len(b) and any(a):
        if a[0] == 0:
            a.pop(0)
            continue
        f = a[0] * binv % p
        for i in range(len(b)):
            a[i] = (a[i] - f * b[i]) % p
        a.pop(0)
    while a and a[0] == 0:
        a.pop(0)
    return a


def _poly_gcd(a: list[int], b: list[int], p: int) -> list[int]:
    while b:
        a, b = b, _poly_mod(a, b, p)
    return [c * pow(a[0], p - 2, p) % p for c in a]


def gcd(f: BinaryForm, g: BinaryForm) -> BinaryForm:
    """Monic gcd of two binary forms.

    Euclid on the dehomogenizations (t = 1) after factoring out the
    common t-power; undefined when both inputs vanish.
    """
    if f.p != g.p:
        raise ValueError("forms live over different primes")
    p = f.p
    if f.is_zero() and g.is_zero():
        raise ValueError("undefined gcd of two zero forms")
    if f.is_zero():
        return _monic(g)
    if g.is_zero():
        return _monic(f)
    vf, vg = _t_valuation(f), _t_valuation(g)
    v = min(vf, vg)
    # strip the t-power; what remains has nonzero leading s-coefficient
    uf = list(f.coeffs[vf:])
    ug = list(g.coeffs[vg:])
    w = _poly_gcd(uf, ug, p)
    return BinaryForm.make([0] * v + w, p)


def gcd_list(forms: list[BinaryForm]) -> BinaryForm:
    """Monic gcd of a list of forms (ignoring zero entries)."""
    nonzero = [f for f in forms if not f.is_zero()]
    if not nonzero:
        raise ValueError("undefined gcd of all-zero list")
    acc = _monic(nonzero[0])
    for f in nonzero[1:]:
        if acc.is_constant():
            break
        acc = gcd(acc, f)
    return acc


def divides(g: BinaryForm, f: BinaryForm) -> bool:
    """Exact divisibility test (g nonzero)."""
    if g.is_zero():
        raise ValueError("division by zero form")
    if f.is_zero():
        return True
    p = f.p
    vg, vf = _t_valuation(g), _t_valuation(f)
    if vg > vf:
        return False
    if g.degree > f.degree:
        return False
    rem = _poly_mod(list(f.coeffs[vf:]), list(g.coeffs[vg:]), p)
    return not rem


def _monic(f: BinaryForm) -> BinaryForm:
    lead = next(c for c in f.coeffs if c != 0)
    return f.scale(pow(lead, f.p - 2, f.p))
