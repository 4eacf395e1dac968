"""Prime-field configuration and modular arithmetic helpers.

All computations in this package happen over a single prime field F_p.
The default p = 32003 is large enough that random specializations of
generic properties fail with probability on the order of d/p, yet small
enough that every product of two reduced residues fits in an int64.
"""

from __future__ import annotations

from dataclasses import dataclass

DEFAULT_PRIME = 32003

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


class FieldError(ValueError):
    """Raised when a field configuration or characteristic guard fails."""


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, valid for all n < 3.3e24."""
    if n < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % q == 0:
            return n == q
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class FieldConfig:
    """The prime field F_p all coefficients live in.

    p must be a prime > 5; degree-dependent guards (p > 5d, p not
    dividing d) are checked by :meth:`require_degree` where the curve
    degree is known.  They protect the Euler identities
    sum x_i dF/dx_i = 5F and s df/ds + t df/dt = d f, which the bundle
    presentations rely on.
    """

    p: int = DEFAULT_PRIME

    def __post_init__(self) -> None:
        if self.p <= 5:
            raise FieldError(f"prime modulus must exceed 5, got {self.p}")
        if not is_prime(self.p):
            raise FieldError(f"{self.p} is not prime")

    def require_degree(self, d: int) -> None:
        """Check the characteristic guards for curves of degree d."""
        if d < 1:
            raise FieldError(f"degree must be positive, got {d}")
        if self.p <= 5 * d:
            raise FieldError(f"prime {self.p} too small for degree {d} (need p > 5d)")
        if d % self.p == 0:
            raise FieldError(f"prime {self.p} divides curve degree {d}")

    def inv(self, a: int) -> int:
        a %= self.p
        if a == 0:
            raise ZeroDivisionError("inverse of zero in F_p")
        return pow(a, self.p - 2, self.p)
