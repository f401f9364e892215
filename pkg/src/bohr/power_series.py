"""Truncated power series with complex coefficients.

A :class:`Series` holds the coefficients c_0..c_N of a power series about 0,
truncated at an explicit order N.  Every operation returns the exact
degree-<=N truncation of the corresponding operation on the infinite series
(up to floating-point rounding), so truncations can be chained freely.
"""

from __future__ import annotations

from dataclasses import dataclass
from numbers import Number

import numpy as np

__all__ = [
    "Series",
    "SeriesOverflowError",
    "multiply",
    "compose",
    "derivative",
    "antiderivative_zero",
    "scale_and_add",
    "reciprocal",
    "log_series",
    "exp_series",
    "power",
    "DEFAULT_ORDER",
    "PROPERTY_ORDER",
]

DEFAULT_ORDER = 2048
PROPERTY_ORDER = 256


class SeriesOverflowError(ArithmeticError):
    """A coefficient became NaN or infinite."""

    def __init__(self, degree: int, value: complex):
        super().__init__(f"non-finite coefficient {value!r} at degree {degree}")
        self.degree = degree
        self.value = value


def _checked(coeffs: np.ndarray) -> np.ndarray:
    finite = np.isfinite(coeffs)
    if not finite.all():
        degree = int(np.argmin(finite))
        raise SeriesOverflowError(degree, complex(coeffs[degree]))
    return coeffs


@dataclass(frozen=True, eq=False)
class Series:
    coeffs: np.ndarray

    # let numpy scalars defer to the operators below
    __array_ufunc__ = None

    def __post_init__(self):
        c = np.array(self.coeffs, dtype=np.complex128, copy=True).ravel()
        if c.size == 0:
            raise ValueError("a series needs at least the constant coefficient")
        _checked(c)
        c.setflags(write=False)
        object.__setattr__(self, "coeffs", c)

    # construction helpers

    @classmethod
    def zeros(cls, order: int) -> Series:
        return cls(np.zeros(order + 1))

    @classmethod
    def constant(cls, value: complex, order: int) -> Series:
        c = np.zeros(order + 1, dtype=np.complex128)
        c[0] = value
        return cls(c)

    @classmethod
    def identity(cls, order: int) -> Series:
        """The series z."""
        c = np.zeros(order + 1, dtype=np.complex128)
        if order >= 1:
            c[1] = 1.0
        return cls(c)

    @classmethod
    def geometric(cls, order: int, ratio: complex = 1.0) -> Series:
        """1/(1 - ratio*z), i.e. coefficients ratio**n."""
        return cls(np.asarray(ratio, dtype=np.complex128) ** np.arange(order + 1))

    @property
    def order(self) -> int:
        return self.coeffs.size - 1

    def __len__(self):
        return self.coeffs.size

    def __getitem__(self, n):
        return self.coeffs[n]

    def __repr__(self):
        head = ", ".join(f"{c:.6g}" for c in self.coeffs[:6])
        more = ", ..." if self.order >= 6 else ""
        return f"Series([{head}{more}], order={self.order})"

    def padded(self, order: int) -> Series:
        """Re-truncate (or zero-pad) to the given order."""
        if order == self.order:
            return self
        c = np.zeros(order + 1, dtype=np.complex128)
        m = min(order, self.order) + 1
        c[:m] = self.coeffs[:m]
        return Series(c)

    def magnitudes(self) -> np.ndarray:
        return np.abs(self.coeffs)

    def __call__(self, z):
        """Evaluate the truncated polynomial at z (scalar or array)."""
        return np.polynomial.polynomial.polyval(z, self.coeffs)

    def circle_values(self, r: float, samples: int) -> np.ndarray:
        """Values of the truncated polynomial at r*exp(2*pi*i*j/samples).

        Coefficients are folded modulo ``samples`` and summed with one FFT,
        so the cost is O(N + M log M) instead of O(N*M).
        """
        weighted = self.coeffs * (r ** np.arange(self.coeffs.size))
        pad = (-weighted.size) % samples
        folded = np.concatenate([weighted, np.zeros(pad)]).reshape(-1, samples).sum(axis=0)
        return np.fft.ifft(folded) * samples

    # arithmetic sugar; the module-level functions are the primary API

    def __add__(self, other):
        if isinstance(other, Series):
            return scale_and_add(self, 1.0, other, 1.0)
        if isinstance(other, Number):
            c = self.coeffs.copy()
            c[0] += other
            return Series(c)
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return Series(-self.coeffs)

    def __sub__(self, other):
        if isinstance(other, Series):
            return scale_and_add(self, 1.0, other, -1.0)
        if isinstance(other, Number):
            return self + (-other)
        return NotImplemented

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Series):
            return multiply(self, other)
        if isinstance(other, Number):
            return Series(_checked(self.coeffs * other))
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, Number):
            return self * (1.0 / other)
        return NotImplemented


def _common(a: Series, b: Series) -> tuple[np.ndarray, np.ndarray, int]:
    n = max(a.order, b.order)
    return a.padded(n).coeffs, b.padded(n).coeffs, n


def multiply(a: Series, b: Series) -> Series:
    """Cauchy product truncated at the common order."""
    x, y, n = _common(a, b)
    with np.errstate(over="ignore", invalid="ignore"):
        prod = np.convolve(x, y)[: n + 1]
    return Series(_checked(prod))


def scale_and_add(a: Series, alpha: complex, b: Series, beta: complex) -> Series:
    """alpha*a + beta*b, termwise."""
    x, y, _ = _common(a, b)
    with np.errstate(over="ignore", invalid="ignore"):
        out = alpha * x + beta * y
    return Series(_checked(out))


def derivative(a: Series) -> Series:
    """Termwise derivative, re-padded with a zero so the order is unchanged."""
    c = np.zeros_like(a.coeffs)
    c[:-1] = a.coeffs[1:] * np.arange(1, a.coeffs.size)
    return Series(c)


def antiderivative_zero(a: Series) -> Series:
    """The antiderivative vanishing at 0; the top input coefficient is dropped."""
    c = np.zeros_like(a.coeffs)
    c[1:] = a.coeffs[:-1] / np.arange(1, a.coeffs.size)
    return Series(c)


def reciprocal(a: Series) -> Series:
    """Truncation of 1/a(z); requires a(0) != 0."""
    c = a.coeffs
    if c[0] == 0:
        raise ValueError("reciprocal needs a nonzero constant term")
    n = a.order
    out = np.zeros(n + 1, dtype=np.complex128)
    inv0 = 1.0 / c[0]
    out[0] = inv0
    with np.errstate(over="ignore", invalid="ignore"):
        for m in range(1, n + 1):
            # c[1..m] against out[m-1..0]
            out[m] = -inv0 * np.dot(c[1 : m + 1], out[m - 1 :: -1])
    return Series(_checked(out))


def compose(phi: Series, omega: Series) -> Series:
    """Truncation of phi(omega(z)) by nested (Horner) evaluation.

    omega must vanish at 0.  The partial Horner accumulator for phi_j is only
    ever used after multiplication by omega**j, so it is carried to degree N-j.
    """
    if omega.coeffs[0] != 0:
        raise ValueError("compose needs omega(0) == 0 exactly")
    p, w, n = _common(phi, omega)
    acc = np.array([p[n]], dtype=np.complex128)
    with np.errstate(over="ignore", invalid="ignore"):
        for j in range(n - 1, -1, -1):
            keep = n - j + 1
            nxt = np.zeros(keep, dtype=np.complex128)
            nxt[1:] = np.convolve(w[1:keep], acc)[: keep - 1]
            nxt[0] += p[j]
            acc = nxt
    return Series(_checked(acc))


def log_series(a: Series) -> Series:
    """Principal log of a(z), built as log a(0) + integral of a'/a."""
    c0 = a.coeffs[0]
    if c0 == 0:
        raise ValueError("log needs a nonzero constant term")
    ratio = multiply(derivative(a), reciprocal(a))
    out = antiderivative_zero(ratio).coeffs.copy()
    out[0] = np.log(c0)
    return Series(out)


def exp_series(a: Series) -> Series:
    """exp(a(z)) for a(0) == 0, via n*e_n = sum_k k*a_k*e_{n-k}."""
    c = a.coeffs
    if c[0] != 0:
        raise ValueError("exp_series expects a(0) == 0")
    n = a.order
    ka = c * np.arange(n + 1)
    out = np.zeros(n + 1, dtype=np.complex128)
    out[0] = 1.0
    with np.errstate(over="ignore", invalid="ignore"):
        for m in range(1, n + 1):
            out[m] = np.dot(ka[1 : m + 1], out[m - 1 :: -1]) / m
    return Series(_checked(out))


def power(a: Series, alpha: float) -> Series:
    """a(z)**alpha (principal branch at a(0)) by the J.C.P. Miller recurrence."""
    c = a.coeffs
    c0 = c[0]
    if c0 == 0:
        raise ValueError("power needs a nonzero constant term")
    n = a.order
    out = np.zeros(n + 1, dtype=np.complex128)
    out[0] = np.exp(alpha * np.log(c0))
    k = np.arange(n + 1)
    with np.errstate(over="ignore", invalid="ignore"):
        for m in range(1, n + 1):
            w = ((alpha + 1.0) * k[1 : m + 1] - m) * c[1 : m + 1]
            out[m] = np.dot(w, out[m - 1 :: -1]) / (m * c0)
    return Series(_checked(out))
