"""Exact arithmetic on strongly regular graph parameter sets.

Everything here works with Python integers and :class:`fractions.Fraction`;
irrational eigenvalues of conference graphs are kept symbolically as
``(a + b*sqrt(D)) / 2``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational

from .errors import InfeasibleParameters


def _sign_surd(a: int, b: int, d: int) -> int:
    """Sign of ``a + b*sqrt(d)`` for integers, ``d >= 0``."""
    if b == 0 or d == 0:
        return (a > 0) - (a < 0)
    sb = 1 if b > 0 else -1
    if a == 0 or (a > 0) == (b > 0):
        return sb
    # opposite signs: compare a^2 with b^2 d
    lhs, rhs = a * a, b * b * d
    if lhs == rhs:
        return 0
    return (1 if a > 0 else -1) if lhs > rhs else sb


@dataclass(frozen=True)
class QuadraticNumber:
    """The real number ``(a + b*sqrt(d)) / 2`` with integer ``a``, ``b``, ``d``.

    When ``d`` is a perfect square the value is folded into ``a`` so that
    rational values always have ``b == 0``.
    """

    a: int
    b: int
    d: int

    def __post_init__(self):
        if self.d < 0:
            raise ValueError("negative radicand")
        root = math.isqrt(self.d)
        if self.b != 0 and root * root == self.d:
            object.__setattr__(self, "a", self.a + self.b * root)
            object.__setattr__(self, "b", 0)
        if self.b == 0:
            object.__setattr__(self, "d", 0)

    @classmethod
    def rational(cls, x) -> "QuadraticNumber":
        x = Fraction(x)
        if (2 * x).denominator != 1:
            raise ValueError(f"{x} is not a half-integer")
        return cls(int(2 * x), 0, 0)

    @property
    def is_rational(self) -> bool:
        return self.b == 0

    def as_fraction(self) -> Fraction:
        if self.b:
            raise ValueError(f"{self} is irrational")
        return Fraction(self.a, 2)

    def _coerce(self, other) -> "QuadraticNumber":
        if isinstance(other, QuadraticNumber):
            return other
        if isinstance(other, (int, Rational)):
            return QuadraticNumber.rational(other)
        return NotImplemented

    def _common(self, other: "QuadraticNumber") -> int:
        if self.b and other.b and self.d != other.d:
            raise ValueError("mixed radicands")
        return self.d or other.d

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return QuadraticNumber(self.a + other.a, self.b + other.b, self._common(other))

    __radd__ = __add__

    def __neg__(self):
        return QuadraticNumber(-self.a, -self.b, self.d)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def sign(self) -> int:
        return _sign_surd(self.a, self.b, self.d)

    def _cmp(self, other) -> int:
        other = self._coerce(other)
        if other is NotImplemented:
            raise TypeError
        return (self - other).sign()

    def __eq__(self, other):
        if isinstance(other, float):
            return float(self) == other
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.a == other.a and self.b == other.b and self.d == other.d

    def __hash__(self):
        if self.b == 0:
            return hash(Fraction(self.a, 2))
        return hash((self.a, self.b, self.d))

    def __lt__(self, other):
        return self._cmp(other) < 0

    def __le__(self, other):
        return self._cmp(other) <= 0

    def __gt__(self, other):
        return self._cmp(other) > 0

    def __ge__(self, other):
        return self._cmp(other) >= 0

    def __float__(self):
        return (self.a + self.b * math.sqrt(self.d)) / 2

    def __str__(self):
        if self.b == 0:
            return str(Fraction(self.a, 2))
        sgn = "+" if self.b > 0 else "-"
        coef = "" if abs(self.b) == 1 else f"{abs(self.b)}*"
        return f"({self.a} {sgn} {coef}sqrt({self.d}))/2"


@dataclass(frozen=True)
class SrgParams:
    v: int
    k: int
    lam: int
    mu: int

    def __iter__(self):
        return iter((self.v, self.k, self.lam, self.mu))

    def __str__(self):
        return f"({self.v},{self.k},{self.lam},{self.mu})"

    @classmethod
    def parse(cls, text: str) -> "SrgParams":
        parts = [int(x) for x in text.replace("(", "").replace(")", "").split(",")]
        if len(parts) != 4:
            raise ValueError(f"expected four comma-separated integers, got {text!r}")
        return cls(*parts)


@dataclass(frozen=True)
class FeasibilityReport:
    params: SrgParams
    violations: tuple[str, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self):
        return self.ok


@dataclass(frozen=True)
class Spectrum:
    discriminant: int
    r: QuadraticNumber
    s: QuadraticNumber
    f: int
    g: int
    integral: bool


@dataclass(frozen=True)
class SliceCounts:
    n1: int
    n2: int
    n3: int
    local_lambda: int

    def __getitem__(self, depth: int) -> int:
        return (self.n1, self.n2, self.n3)[depth - 1]


def _multiplicity_violation(v: int, k: int, lam: int, mu: int) -> str | None:
    disc = (lam - mu) ** 2 + 4 * (k - mu)
    if disc <= 0:
        return f"multiplicity: discriminant {disc} is not positive"
    num = 2 * k + (v - 1) * (lam - mu)
    root = math.isqrt(disc)
    if root * root == disc:
        twice_f = (v - 1) * root - num
        if twice_f % (2 * root):
            return f"multiplicity: f = ({v - 1} - {num}/{root})/2 is not an integer"
        f = twice_f // (2 * root)
        g = v - 1 - f
        if f <= 0 or g <= 0:
            return f"multiplicity: f={f}, g={g} not both positive"
        return None
    if num == 0 and (v - 1) % 2 == 0:
        return None
    return (
        f"multiplicity: discriminant {disc} is not a perfect square and the "
        "conference condition 2k+(v-1)(lambda-mu)=0 with v-1 even fails"
    )


def check_feasible(params: SrgParams) -> FeasibilityReport:
    """Collect every violated feasibility condition (empty means feasible)."""
    v, k, lam, mu = params
    violations: list[str] = []
    for name, val in zip(("v", "k", "lambda", "mu"), params):
        if not isinstance(val, int) or isinstance(val, bool) or val < 0:
            violations.append(f"domain: {name}={val!r} is not a nonnegative integer")
    if violations:
        return FeasibilityReport(params, tuple(violations))
    if mu <= 0:
        violations.append("domain: mu must be positive")
    if not 0 < k < v - 1:
        violations.append(f"degree: need 0 < k < v-1, got k={k}, v={v}")
    lhs, rhs = (v - k - 1) * mu, k * (k - lam - 1)
    if lhs != rhs:
        violations.append(f"parameter-identity: (v-k-1)*mu = {lhs} != k*(k-lambda-1) = {rhs}")
    if lam >= k and k > 0:
        violations.append(f"domain: lambda={lam} must be < k={k}")
    if mu > k:
        violations.append(f"domain: mu={mu} must be <= k={k}")
    if not violations:
        msg = _multiplicity_violation(v, k, lam, mu)
        if msg:
            violations.append(msg)
    return FeasibilityReport(params, tuple(violations))


def _require_feasible(params: SrgParams) -> None:
    report = check_feasible(params)
    if not report.ok:
        raise InfeasibleParameters(
            f"{params} is infeasible: " + "; ".join(report.violations),
            violations=report.violations,
        )


def spectrum(params: SrgParams) -> Spectrum:
    _require_feasible(params)
    v, k, lam, mu = params
    disc = (lam - mu) ** 2 + 4 * (k - mu)
    r = QuadraticNumber(lam - mu, 1, disc)
    s = QuadraticNumber(lam - mu, -1, disc)
    root = math.isqrt(disc)
    integral = root * root == disc
    if integral:
        f = ((v - 1) * root - (2 * k + (v - 1) * (lam - mu))) // (2 * root)
    else:
        f = (v - 1) // 2
    return Spectrum(disc, r, s, f, v - 1 - f, integral)


def complement_params(params: SrgParams) -> SrgParams:
    _require_feasible(params)
    v, k, lam, mu = params
    comp = SrgParams(v, v - k - 1, v - 2 * k + mu - 2, v - 2 * k + lam)
    _require_feasible(comp)
    return comp


def slice_counts(params: SrgParams, local_lambda: int) -> SliceCounts:
    """Sizes of the common non-neighbourhoods of a vertex, an edge and a triangle.

    ``local_lambda`` is the lambda-parameter of the first subconstituent, i.e.
    the number of common neighbours of a triangle.
    """
    _require_feasible(params)
    v, k, lam, mu = params
    if not 0 <= local_lambda < k:
        raise InfeasibleParameters(f"local_lambda={local_lambda} must lie in [0, k={k})")
    n1 = v - k - 1
    n2 = v - 2 * k + lam
    n3 = v - 3 * k + 3 * lam - local_lambda
    if n3 < 0:
        raise InfeasibleParameters(f"triangle slice count {n3} is negative for local_lambda={local_lambda}")
    return SliceCounts(n1, n2, n3, local_lambda)
