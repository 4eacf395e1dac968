"""Splitting types of bundles restricted to a rational curve.

Every section space is presented as a kernel or quotient of spaces of
binary-form tuples, so only H^1 vanishing for P^1 line bundles of degree
>= -1 is ever used; that is why all twists are required to be >= 0.

Covered bundles: the twisted cotangent restriction Omega^1_{P^4}(1)|C,
the normal bundle N_{C/P^4}, and the normal bundle N_{C/F} inside a
quintic threefold F through C, with the balancedness test
h^0(N_{C/F}) = 0  <=>  splitting (-1, -1).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .cohomology import QuinticForm, composed_monomials, monomial_exponents
from .curves import RationalCurveMap, validate
from .forms import BinaryForm, conv, derivative, gcd_list
from .linalg import ConsistencyError, rank


@dataclass(frozen=True)
class SplittingType:
    """Multiset of line-bundle degrees, descending."""

    parts: tuple[int, ...]

    def __post_init__(self) -> None:
        if tuple(sorted(self.parts, reverse=True)) != self.parts:
            raise ValueError("parts must be listed in descending order")

    @property
    def rank(self) -> int:
        return len(self.parts)

    @property
    def total(self) -> int:
        return sum(self.parts)

    def h0_at(self, m: int) -> int:
        return sum(max(0, a + m + 1) for a in self.parts)


def _require_twist(m: int) -> None:
    if m < 0:
        raise ValueError("twists m < 0 are not supported (decided at m >= 0)")


def _require_smooth_model(c: RationalCurveMap) -> None:
    if validate(c).verdict != "smooth-model":
        raise ValueError("presentation invalid: curve is not a smooth model")


def cotangent_kernel_dim(c: RationalCurveMap, m: int) -> int:
    """h^0 of f*Omega^1_{P^4}(1) twisted by O_{P^1}(m).

    Kernel dimension of (g0..g4) |-> sum g_i f_i with deg g_i = m,
    from the pulled-back, twisted Euler sequence.
    """
    _require_twist(m)
    p = c.p
    rows = c.d + m + 1
    mat = np.zeros((rows, 5 * (m + 1)), dtype=np.int64)
    for i, f in enumerate(c.forms):
        a = f.array()
        for j in range(m + 1):
            mat[j : j + c.d + 1, i * (m + 1) + j] = a
    return 5 * (m + 1) - rank(mat, p)


def cotangent_splitting(c: RationalCurveMap) -> SplittingType:
    """Splitting type of Omega^1_{P^4}(1)|C (rank 4, determinant degree -d).

    All parts are <= 0 (the bundle injects into O_C^5), so the part
    with value -m is the second difference of the h^0 sequence at m.
    """
    d = c.d
    hs = []
    parts: list[int] = []
    m = 0
    while len(parts) < 4:
        if m > d + 2:
            raise ConsistencyError("cotangent splitting decode ran past the degree bound")
        hs.append(cotangent_kernel_dim(c, m))
        h2 = hs[m]
        h1 = hs[m - 1] if m >= 1 else 0
        h0 = hs[m - 2] if m >= 2 else 0
        count = h2 - 2 * h1 + h0
        if count < 0 or len(parts) + count > 4:
            raise ConsistencyError("cotangent splitting decode inconsistent")
        parts.extend([-m] * count)
        m += 1
    st = SplittingType(tuple(parts))
    if st.total != -d:
        raise ConsistencyError(f"cotangent splitting sums to {st.total}, expected {-d}")
    return st


def generic_cotangent_splitting(d: int) -> SplittingType:
    """The generic type O(-n-1)^m + O(-n)^(4-m) where d = 4n + m."""
    n, m = divmod(d, 4)
    return SplittingType((-n,) * (4 - m) + (-n - 1,) * m)


def _normal_relation_matrix(c: RationalCurveMap, m: int) -> np.ndarray:
    """Rows spanning the relation subspace of the N_{C/P^4}(m) presentation.

    Inside the 5(d+m+1)-dimensional space of 5-tuples of degree-(d+m)
    forms: the tuples (g f_0, ..., g f_4) with deg g = m, and the tuples
    (A ds f_i + B dt f_i) with deg A = deg B = m + 1.  Their span has
    dimension (m+1) + (m+3) for a smooth-model curve.
    """
    p = c.p
    d = c.d
    width = d + m + 1
    rows = []

    def tuple_row(forms_arrays):
        row = np.zeros(5 * width, dtype=np.int64)
        for i, a in enumerate(forms_arrays):
            row[i * width : i * width + a.size] = a
        return row

    farrs = [f.array() for f in c.forms]
    dsarrs = [derivative(f, "s").array() for f in c.forms]
    dtarrs = [derivative(f, "t").array() for f in c.forms]

    for j in range(m + 1):
        g = np.zeros(m + 1, dtype=np.int64)
        g[j] = 1
        rows.append(tuple_row([conv(g, a, p) for a in farrs]))
    for j in range(m + 2):
        a_mono = np.zeros(m + 2, dtype=np.int64)
        a_mono[j] = 1
        if d >= 1:
            rows.append(tuple_row([conv(a_mono, a, p) for a in dsarrs]))
            rows.append(tuple_row([conv(a_mono, a, p) for a in dtarrs]))
    return np.array(rows, dtype=np.int64)


def normal_h0(c: RationalCurveMap, m: int) -> int:
    """h^0 of N_{C/P^4} twisted by O_{P^1}(m); equals 5d+1 at m = 0."""
    _require_twist(m)
    _require_smooth_model(c)
    width = c.d + m + 1
    return 5 * width - rank(_normal_relation_matrix(c, m), c.p)


def _balanced_parts(total: int, count: int) -> tuple[int, ...]:
    q, r = divmod(total, count)
    return (q + 1,) * r + (q,) * (count - r)


def normal_splitting(c: RationalCurveMap) -> SplittingType:
    """Splitting type of N_{C/P^4} (rank 3, determinant degree 5d-2).

    Every part is >= -1 for a smooth-model curve, so the h^0 data at
    m >= 0 is linear and determines the parts only up to rearranging the
    total; the most balanced representative consistent with the measured
    sequence is returned, after verifying h^0 at m = 0, 1, 2.
    """
    d = c.d
    total = 5 * d - 2
    st = SplittingType(_balanced_parts(total, 3))
    for m in (0, 1, 2):
        measured = normal_h0(c, m)
        if measured != st.h0_at(m):
            raise ConsistencyError(
                f"normal bundle h0 at twist {m} is {measured}, expected {st.h0_at(m)}"
            )
    return st


def gradient_restriction(c: RationalCurveMap, F: QuinticForm) -> list[BinaryForm]:
    """The five compositions (dF/dx_i)(f), each a binary form of degree 4d."""
    p = c.p
    quintic_exps = monomial_exponents(5, 5)
    quartic_exps = monomial_exponents(5, 4)
    quartic_index = {e: i for i, e in enumerate(quartic_exps)}
    partials = np.zeros((5, len(quartic_exps)), dtype=np.int64)
    for coeff, e in zip(F.coeffs, quintic_exps):
        if coeff == 0:
            continue
        for i in range(5):
            if e[i]:
                down = list(e)
                down[i] -= 1
                partials[i, quartic_index[tuple(down)]] += e[i] * coeff
    partials %= p
    mono4 = composed_monomials(c, 4)
    return [BinaryForm.make((partials[i] @ mono4) % p, p) for i in range(5)]


def _require_containment(c: RationalCurveMap, F: QuinticForm) -> None:
    if not F.restrict_to(c).is_zero():
        raise ValueError("curve not on F")


def smooth_along(c: RationalCurveMap, F: QuinticForm) -> bool:
    """True iff F is smooth at every point of the curve.

    Tested exactly: the restricted gradient components must have no
    common zero on P^1, i.e. their gcd is a nonzero constant.
    """
    _require_containment(c, F)
    grads = gradient_restriction(c, F)
    if all(g.is_zero() for g in grads):
        return False
    return gcd_list(grads).is_constant()


def _gradient_multiplication_matrix(c: RationalCurveMap, F: QuinticForm, m: int) -> np.ndarray:
    """Matrix of (g_i) |-> sum g_i (dF/dx_i)(f), degree d+m to degree 5d+m."""
    p = c.p
    d = c.d
    width = d + m + 1
    grads = gradient_restriction(c, F)
    mat = np.zeros((5 * d + m + 1, 5 * width), dtype=np.int64)
    for i, g in enumerate(grads):
        a = g.array()
        for j in range(width):
            mat[j : j + a.size, i * width + j] = a
    return mat


def normal_in_F_h0(c: RationalCurveMap, F: QuinticForm, m: int) -> int:
    """h^0 of N_{C/F} twisted by O_{P^1}(m).

    N_{C/F} is the kernel of N_{C/P^4} -> N_{F/P^4}|C; on section
    representatives the map is multiplication by the restricted
    gradient.  Both relation families of the N_{C/P^4} presentation map
    to zero exactly (Euler identity and chain rule applied to F(f) = 0),
    so h^0 = nullity(gradient map) - rank(relations).
    """
    _require_twist(m)
    _require_smooth_model(c)
    _require_containment(c, F)
    if not smooth_along(c, F):
        raise ValueError("F is not smooth along the curve")
    width = c.d + m + 1
    grad_rank = rank(_gradient_multiplication_matrix(c, F, m), c.p)
    rel_rank = rank(_normal_relation_matrix(c, m), c.p)
    h0 = 5 * width - grad_rank - rel_rank
    if h0 < 0:
        raise ConsistencyError("negative section count in N_{C/F} presentation")
    return h0


def normal_in_F_splitting(c: RationalCurveMap, F: QuinticForm) -> SplittingType:
    """Splitting O(a) + O(b) of N_{C/F}, with a + b = -2 always."""
    h0 = normal_in_F_h0(c, F, 0)
    if h0 == 0:
        st = SplittingType((-1, -1))
    else:
        a = h0 - 1
        st = SplittingType((a, -2 - a))
    for m in (1, 2):
        measured = normal_in_F_h0(c, F, m)
        if measured != st.h0_at(m):
            raise ConsistencyError(
                f"N_C/F h0 at twist {m} is {measured}, expected {st.h0_at(m)} for {st.parts}"
            )
    return st


def is_balanced(c: RationalCurveMap, F: QuinticForm) -> bool:
    """Balancedness test: h^0(N_{C/F}) = 0, i.e. splitting (-1, -1)."""
    return normal_in_F_h0(c, F, 0) == 0
