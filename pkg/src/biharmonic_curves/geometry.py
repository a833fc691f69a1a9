"""Implicit surfaces with exact value, gradient and Hessian.

Points and directions are plain ``numpy`` arrays of shape ``(3,)``; matrices
are ``(3, 3)`` arrays. Every surface family differentiates itself
analytically, so downstream curvature formulas are exact up to rounding.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Mapping

import numpy as np

from .config import TOL
from .errors import AxisPointError, DomainError

Exponent = tuple[int, int, int]


def as_point(p) -> np.ndarray:
    arr = np.asarray(p, dtype=float).reshape(3)
    if not np.all(np.isfinite(arr)):
        raise DomainError(f"point must be finite, got {arr}")
    return arr


def normalize(v: np.ndarray) -> np.ndarray:
    n = float(np.linalg.norm(v))
    if n == 0.0:
        raise DomainError("cannot normalize the zero vector")
    return v / n


def _symmetric(xx, yy, zz, xy, xz, yz) -> np.ndarray:
    return np.array([[xx, xy, xz], [xy, yy, yz], [xz, yz, zz]], dtype=float)


def cofactor(m) -> np.ndarray:
    """Cofactor matrix of a 3x3 matrix.

    Satisfies ``m @ cofactor(m).T == det(m) * I``.
    """
    m = np.asarray(m, dtype=float)
    c = np.empty((3, 3))
    for i in range(3):
        i1, i2 = (i + 1) % 3, (i + 2) % 3
        for j in range(3):
            j1, j2 = (j + 1) % 3, (j + 2) % 3
            # cyclic index choice makes the sign (-1)**(i+j) automatic
            c[i, j] = m[i1, j1] * m[i2, j2] - m[i1, j2] * m[i2, j1]
    return c


class Surface:
    """Base class: a surface given as the zero set of ``value``."""

    def value(self, p: np.ndarray) -> float:
        raise NotImplementedError

    def gradient(self, p: np.ndarray) -> np.ndarray:
        raise NotImplementedError

    def hessian(self, p: np.ndarray) -> np.ndarray:
        raise NotImplementedError

    def scaled(self, factor: float) -> "Scaled":
        return Scaled(self, float(factor))


def evaluate(s: Surface, p) -> float:
    return float(s.value(as_point(p)))


def gradient(s: Surface, p) -> np.ndarray:
    return s.gradient(as_point(p))


def hessian(s: Surface, p) -> np.ndarray:
    return s.hessian(as_point(p))


@dataclass(frozen=True)
class Scaled(Surface):
    """``factor * base``; same zero set, used for invariance checks."""

    base: Surface
    factor: float

    def value(self, p):
        return self.factor * self.base.value(p)

    def gradient(self, p):
        return self.factor * self.base.gradient(p)

    def hessian(self, p):
        return self.factor * self.base.hessian(p)


def _check_positive(**kw):
    for name, v in kw.items():
        if not (math.isfinite(v) and v > 0):
            raise DomainError(f"{name} must be a positive finite length, got {v}")


def _check_sign(**kw):
    for name, v in kw.items():
        if v not in (1, -1):
            raise DomainError(f"{name} must be +1 or -1, got {v}")


@dataclass(frozen=True)
class QuadricCenter(Surface):
    """x^2/a^2 + xi y^2/b^2 + zeta z^2/c^2 - 1."""

    a: float
    b: float
    c: float
    xi: int = 1
    zeta: int = 1

    def __post_init__(self):
        _check_positive(a=self.a, b=self.b, c=self.c)
        _check_sign(xi=self.xi, zeta=self.zeta)

    @property
    def diag(self) -> np.ndarray:
        return np.array([1.0 / self.a**2, self.xi / self.b**2, self.zeta / self.c**2])

    @property
    def is_sphere(self) -> bool:
        return self.xi == self.zeta == 1 and self.a == self.b == self.c

    def value(self, p):
        x, y, z = p
        return (
            x * x / self.a**2 + self.xi * y * y / self.b**2 + self.zeta * z * z / self.c**2 - 1.0
        )

    def gradient(self, p):
        return 2.0 * self.diag * p

    def hessian(self, p):
        return np.diag(2.0 * self.diag)

    def as_polynomial(self) -> "Polynomial":
        return Polynomial.from_terms(
            {
                (2, 0, 0): 1.0 / self.a**2,
                (0, 2, 0): self.xi / self.b**2,
                (0, 0, 2): self.zeta / self.c**2,
                (0, 0, 0): -1.0,
            }
        )


def sphere(r: float = 1.0) -> QuadricCenter:
    return QuadricCenter(r, r, r, 1, 1)


@dataclass(frozen=True)
class QuadricParaboloid(Surface):
    """x^2/a^2 + eta y^2/b^2 - 2 z."""

    a: float
    b: float
    eta: int = 1

    def __post_init__(self):
        _check_positive(a=self.a, b=self.b)
        _check_sign(eta=self.eta)

    def value(self, p):
        x, y, z = p
        return x * x / self.a**2 + self.eta * y * y / self.b**2 - 2.0 * z

    def gradient(self, p):
        x, y, _ = p
        return np.array([2.0 * x / self.a**2, 2.0 * self.eta * y / self.b**2, -2.0])

    def hessian(self, p):
        return np.diag([2.0 / self.a**2, 2.0 * self.eta / self.b**2, 0.0])

    def as_polynomial(self) -> "Polynomial":
        return Polynomial.from_terms(
            {(2, 0, 0): 1.0 / self.a**2, (0, 2, 0): self.eta / self.b**2, (0, 0, 1): -2.0}
        )


@dataclass(frozen=True)
class CandidateEllipsoid(Surface):
    """x^2/a^4 + y^2/b^4 + z^2/c^4 - d^2: level set of the quadric's Gauss curvature."""

    a: float
    b: float
    c: float
    d: float

    def __post_init__(self):
        _check_positive(a=self.a, b=self.b, c=self.c)
        if not math.isfinite(self.d):
            raise DomainError("d must be finite")

    @property
    def d_sq(self) -> float:
        return self.d * self.d

    @property
    def diag(self) -> np.ndarray:
        return np.array([1.0 / self.a**4, 1.0 / self.b**4, 1.0 / self.c**4])

    def value(self, p):
        return float(self.diag @ (p * p)) - self.d_sq

    def gradient(self, p):
        return 2.0 * self.diag * p

    def hessian(self, p):
        return np.diag(2.0 * self.diag)


@dataclass(frozen=True)
class CandidateCylinder(Surface):
    """x^2/a^4 + y^2/b^4 - e^2 + 1."""

    a: float
    b: float
    e: float

    def __post_init__(self):
        _check_positive(a=self.a, b=self.b)
        if not math.isfinite(self.e):
            raise DomainError("e must be finite")

    @property
    def e_sq(self) -> float:
        return self.e * self.e

    def value(self, p):
        x, y, _ = p
        return x * x / self.a**4 + y * y / self.b**4 - self.e_sq + 1.0

    def gradient(self, p):
        x, y, _ = p
        return np.array([2.0 * x / self.a**4, 2.0 * y / self.b**4, 0.0])

    def hessian(self, p):
        return np.diag([2.0 / self.a**4, 2.0 / self.b**4, 0.0])


@dataclass(frozen=True)
class SuperquadricRevolution(Surface):
    """z^(2n)/c^2 + (x^2 + y^2)^n - 1."""

    n: int
    c: float

    def __post_init__(self):
        if int(self.n) != self.n or self.n < 1:
            raise DomainError(f"n must be an integer >= 1, got {self.n}")
        _check_positive(c=self.c)

    def value(self, p):
        x, y, z = p
        n = self.n
        return z ** (2 * n) / self.c**2 + (x * x + y * y) ** n - 1.0

    def gradient(self, p):
        x, y, z = p
        n = self.n
        r2 = x * x + y * y
        g = 2 * n * r2 ** (n - 1)
        return np.array([g * x, g * y, 2 * n * z ** (2 * n - 1) / self.c**2])

    def hessian(self, p):
        x, y, z = p
        n = self.n
        r2 = x * x + y * y
        first = 2 * n * r2 ** (n - 1)
        second = 4 * n * (n - 1) * r2 ** (n - 2) if n >= 2 else 0.0
        zz = 2 * n * (2 * n - 1) * z ** (2 * n - 2) / self.c**2
        return _symmetric(
            first + second * x * x, first + second * y * y, zz, second * x * y, 0.0, 0.0
        )


@dataclass(frozen=True)
class PlaneZ(Surface):
    """z - d."""

    d: float

    def value(self, p):
        return p[2] - self.d

    def gradient(self, p):
        return np.array([0.0, 0.0, 1.0])

    def hessian(self, p):
        return np.zeros((3, 3))


@dataclass(frozen=True)
class RevolutionGraph(Surface):
    """z - f(rho), rho = sqrt(x^2 + y^2), with caller-supplied f, f', f''.

    The axis rho = 0 is excluded.
    """

    f: Callable[[float], float]
    fprime: Callable[[float], float]
    fsecond: Callable[[float], float]
    name: str = field(default="graph", compare=False)

    def _rho(self, p) -> float:
        rho = math.hypot(p[0], p[1])
        if rho == 0.0:
            raise AxisPointError("revolution graph is not evaluated on its axis (x = y = 0)")
        return rho

    def value(self, p):
        return p[2] - self.f(self._rho(p))

    def gradient(self, p):
        rho = self._rho(p)
        fp = self.fprime(rho)
        return np.array([-fp * p[0] / rho, -fp * p[1] / rho, 1.0])

    def hessian(self, p):
        x, y = p[0], p[1]
        rho = self._rho(p)
        fp, fpp = self.fprime(rho), self.fsecond(rho)
        # d2 f(rho)/dxi dxj = f'' xi xj / rho^2 + f' (delta_ij / rho - xi xj / rho^3)
        a = fpp / rho**2 - fp / rho**3
        return -_symmetric(a * x * x + fp / rho, a * y * y + fp / rho, 0.0, a * x * y, 0.0, 0.0)


def _monomial(p, e: Exponent) -> float:
    return p[0] ** e[0] * p[1] ** e[1] * p[2] ** e[2]


def _derive(terms, axis: int):
    out: dict[Exponent, float] = {}
    for e, coef in terms:
        if e[axis] == 0:
            continue
        ne = list(e)
        ne[axis] -= 1
        key = tuple(ne)
        out[key] = out.get(key, 0.0) + coef * e[axis]
    return tuple(sorted(out.items()))


@dataclass(frozen=True)
class Polynomial(Surface):
    """Trivariate polynomial as a sorted tuple of ``((i, j, k), coefficient)``.

    Derivatives are formal coefficient differentiation, computed once.
    """

    terms: tuple[tuple[Exponent, float], ...]
    max_degree: int = TOL.polynomial_max_degree
    _d1: tuple = field(init=False, repr=False, compare=False)
    _d2: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        for e, _ in self.terms:
            if len(e) != 3 or any(int(k) != k or k < 0 for k in e):
                raise DomainError(f"bad exponent {e}")
            if sum(e) > self.max_degree:
                raise DomainError(f"term {e} exceeds the degree cap {self.max_degree}")
        d1 = tuple(_derive(self.terms, i) for i in range(3))
        d2 = tuple(tuple(_derive(d1[i], j) for j in range(3)) for i in range(3))
        object.__setattr__(self, "_d1", d1)
        object.__setattr__(self, "_d2", d2)

    @classmethod
    def from_terms(cls, terms: Mapping[Exponent, float], max_degree: int | None = None):
        cleaned = {tuple(int(k) for k in e): float(c) for e, c in terms.items() if c != 0}
        kw = {} if max_degree is None else {"max_degree": max_degree}
        return cls(tuple(sorted(cleaned.items())), **kw)

    @property
    def degree(self) -> int:
        return max((sum(e) for e, _ in self.terms), default=0)

    @staticmethod
    def _eval(terms, p) -> float:
        return float(sum(c * _monomial(p, e) for e, c in terms))

    def value(self, p):
        return self._eval(self.terms, p)

    def gradient(self, p):
        return np.array([self._eval(t, p) for t in self._d1])

    def hessian(self, p):
        h = np.empty((3, 3))
        for i in range(3):
            for j in range(i, 3):
                h[i, j] = h[j, i] = self._eval(self._d2[i][j], p)
        return h
