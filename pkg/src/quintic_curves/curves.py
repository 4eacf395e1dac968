"""Parametrized rational curves of degree d in P^4 and their samplers.

A curve is a 5-tuple of degree-d binary forms over F_p, up to scalar.
"Smooth model" is operationalized as: base-point-free, unramified, and
probabilistically injective (no exact resultant test; the failure
probability over p = 32003 is on the order of d^2 * trials / p).
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from functools import lru_cache

from .field import FieldConfig
from .forms import BinaryForm, derivative, gcd_list, multiply

SAMPLING_CAP = 100
DEFAULT_INJECTIVITY_TRIALS = 32


class SamplingError(RuntimeError):
    """Rejection sampling failed repeatedly; the prime is probably too small."""


@dataclass(frozen=True)
class RationalCurveMap:
    """A map P^1 -> P^4 given by five degree-d forms."""

    d: int
    forms: tuple[BinaryForm, ...]
    field: FieldConfig

    def __post_init__(self) -> None:
        if len(self.forms) != 5:
            raise ValueError("a curve needs exactly 5 coordinate forms")
        for f in self.forms:
            if f.degree != self.d:
                raise ValueError("all coordinate forms must have degree d")
            if f.p != self.field.p:
                raise ValueError("form prime disagrees with field")
        if all(f.is_zero() for f in self.forms):
            raise ValueError("all five forms vanish")
        self.field.require_degree(self.d)

    @property
    def p(self) -> int:
        return self.field.p

    def evaluate(self, s: int, t: int) -> list[int]:
        return [f.evaluate(s, t) for f in self.forms]


@dataclass(frozen=True)
class ValidationReport:
    base_point_free: bool
    unramified: bool
    injective_probabilistic: bool
    trials: int
    verdict: str  # smooth-model | degenerate-model | rejected


def _rng(*key) -> random.Random:
    # string-seeded Random is platform-stable (seeded via SHA-512)
    return random.Random("|".join(str(k) for k in key))


def _parameter_point(rng: random.Random, p: int) -> tuple[int, int]:
    # uniform over the p+1 points of P^1(F_p)
    a = rng.randrange(p + 1)
    return (1, 0) if a == p else (a, 1)


@lru_cache(maxsize=4096)
def validate(c: RationalCurveMap, trials: int = DEFAULT_INJECTIVITY_TRIALS) -> ValidationReport:
    """Smooth-model test: base-point-free + unramified + injective.

    Injectivity is sampled at `trials` random pairs of distinct
    parameter points; unramifiedness is exact, via the gcd of the ten
    2x2 minors of the (ds f_i, dt f_i) Jacobian.
    """
    p = c.p
    if all(f.is_zero() for f in c.forms):
        return ValidationReport(False, False, False, trials, "rejected")

    bpf = gcd_list(list(c.forms)).is_constant()

    ds = [derivative(f, "s") for f in c.forms]
    dt = [derivative(f, "t") for f in c.forms]
    minors = []
    for i in range(5):
        for j in range(i + 1, 5):
            m = multiply(ds[i], dt[j]) - multiply(ds[j], dt[i])
            if not m.is_zero():
                minors.append(m)
    unramified = bool(minors) and gcd_list(minors).is_constant()

    rng = _rng("inj", c.p, c.d, *(f.coeffs for f in c.forms))
    injective = True
    for _ in range(trials):
        pt1 = _parameter_point(rng, p)
        pt2 = _parameter_point(rng, p)
        if pt1 == pt2:
            continue
        u = c.evaluate(*pt1)
        v = c.evaluate(*pt2)
        if all(x == 0 for x in u) or all(x == 0 for x in v):
            injective = False
            break
        if all((u[i] * v[j] - u[j] * v[i]) % p == 0 for i in range(5) for j in range(i + 1, 5)):
            injective = False
            break

    verdict = "smooth-model" if (bpf and unramified and injective) else "degenerate-model"
    return ValidationReport(bpf, unramified, injective, trials, verdict)


def _random_form(rng: random.Random, degree: int, p: int) -> BinaryForm:
    return BinaryForm.make([rng.randrange(p) for _ in range(degree + 1)], p)


def _sample(build, what: str) -> RationalCurveMap:
    for _ in range(SAMPLING_CAP):
        c = build()
        if c is not None and validate(c).verdict == "smooth-model":
            return c
    raise SamplingError(f"sampling failure for {what}: {SAMPLING_CAP} consecutive rejections")


def random_curve(d: int, field: FieldConfig, seed: int) -> RationalCurveMap:
    """Uniform random smooth-model curve of degree d (rejection sampling)."""
    field.require_degree(d)
    rng = _rng("random_curve", field.p, d, seed)

    def build():
        forms = tuple(_random_form(rng, d, field.p) for _ in range(5))
        if all(f.is_zero() for f in forms):
            return None
        return RationalCurveMap(d, forms, field)

    return _sample(build, f"random_curve(d={d})")


def rational_normal_curve(d: int, field: FieldConfig) -> RationalCurveMap:
    """The standard curve (s^d : s^(d-1) t : ... : t^d), zero-padded to P^4."""
    if not 1 <= d <= 4:
        raise ValueError("rational normal curves in P^4 exist only for 1 <= d <= 4")
    field.require_degree(d)
    p = field.p
    forms = []
    for i in range(5):
        if i <= d:
            coeffs = [0] * (d + 1)
            coeffs[i] = 1
            forms.append(BinaryForm.make(coeffs, p))
        else:
            forms.append(BinaryForm.zero(d, p))
    return RationalCurveMap(d, tuple(forms), field)


def line(field: FieldConfig) -> RationalCurveMap:
    return rational_normal_curve(1, field)


def curve_in_hyperplane(d: int, field: FieldConfig, seed: int) -> RationalCurveMap:
    """Random smooth-model curve with x4 = 0, spanning that hyperplane."""
    if d < 3:
        raise ValueError("a curve spanning a hyperplane needs degree >= 3")
    field.require_degree(d)
    rng = _rng("curve_in_hyperplane", field.p, d, seed)

    def build():
        forms = [_random_form(rng, d, field.p) for _ in range(4)]
        forms.append(BinaryForm.zero(d, field.p))
        c = RationalCurveMap(d, tuple(forms), field)
        # first four forms must be linearly independent (span exactly x4 = 0)
        from .linalg import rank  # local import to avoid a cycle at module load

        m = [[f.coeffs[i] for f in forms[:4]] for i in range(d + 1)]
        if rank(m, field.p) != 4:
            return None
        return c

    return _sample(build, f"curve_in_hyperplane(d={d})")


def curve_on_quadric(d: int, field: FieldConfig, seed: int) -> RationalCurveMap:
    """Random degree-d curve on the quadric x0 x3 - x1 x2 = 0 in x4 = 0.

    With g, h random of degree d-1 the map is (s g, s h, t g, t h, 0),
    of bidegree (1, d-1) on P^1 x P^1; the quadric identity
    (s g)(t h) - (s h)(t g) = 0 holds exactly for every output.
    """
    if d < 2:
        raise ValueError("curve_on_quadric needs degree >= 2")
    field.require_degree(d)
    p = field.p
    rng = _rng("curve_on_quadric", p, d, seed)
    s = BinaryForm.make([1, 0], p)
    t = BinaryForm.make([0, 1], p)

    def build():
        g = _random_form(rng, d - 1, p)
        h = _random_form(rng, d - 1, p)
        if g.is_zero() or h.is_zero():
            return None
        forms = (
            multiply(s, g),
            multiply(s, h),
            multiply(t, g),
            multiply(t, h),
            BinaryForm.zero(d, p),
        )
        return RationalCurveMap(d, forms, field)

    return _sample(build, f"curve_on_quadric(d={d})")


def curve_to_json(c: RationalCurveMap) -> str:
    obj = {"p": c.p, "d": c.d, "forms": [list(f.coeffs) for f in c.forms]}
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def curve_from_json(text: str) -> RationalCurveMap:
    obj = json.loads(text)
    field = FieldConfig(int(obj["p"]))
    d = int(obj["d"])
    forms = tuple(BinaryForm.make(cs, field.p) for cs in obj["forms"])
    return RationalCurveMap(d, forms, field)
