"""Truncated power series over exact rationals, and the mirror-curve data.

Two carriers:

* :class:`Series1`: a univariate series known through a fixed order N,
  i.e. ``c_0 + c_1 t + ... + c_N t^N + O(t^(N+1))``.
* :class:`Series2`: a bivariate series truncated by *total* degree N.

All coefficients are ``fractions.Fraction``; there is no floating point
and no rounding.  Instances are immutable, every operation returns a new
series, so concurrent use is safe.

Truncation bookkeeping: binary operations carry the minimum of the input
orders; ``compose(f, g)`` with val(g) >= 1 carries
``min(f.order * val(g), g.order)``.  Constructing a series with an
``order`` longer than the coefficient list claims the padded entries are
exact zeros; that is the caller's assertion, used for polynomials.

On top of the engine: Lagrange inversion of ``x = t / f(t)``, the
generalized Lambert curve ``x^r = y exp(-r y)`` solved as a series
``y(x)``, the rational parametrization ``x(z) = z exp(-z^r)`` of that
curve, and the genus-0 one- and two-point generating functions in the
``z`` coordinate, both as closed forms and as sums over exact counts.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Iterable

from .core import HurwitzIndex, MemoTable, arrowed_hurwitz

__all__ = [
    "Series1",
    "Series2",
    "divided_difference",
    "f01_closed_in_z",
    "f01_from_counts",
    "f01_in_x",
    "f02_closed_in_z",
    "f02_from_counts",
    "f02_pde_residual",
    "lagrange_invert",
    "lambert_functional_residual",
    "spectral_curve_y_of_x",
    "spectral_ode_residual",
    "w01_coefficients",
    "x_of_z",
]

_ZERO = Fraction(0)
_ONE = Fraction(1)


def _frac(value) -> Fraction:
    return value if isinstance(value, Fraction) else Fraction(value)


class Series1:
    """Univariate truncated power series with exact rational coefficients."""

    __slots__ = ("_c", "_var")

    def __init__(self, coeffs: Iterable, order: int | None = None, var: str = "t"):
        c = [_frac(v) for v in coeffs]
        if order is None:
            if not c:
                raise ValueError("empty coefficient list needs an explicit order")
            order = len(c) - 1
        if order < 0:
            raise ValueError("order must be non-negative")
        if len(c) < order + 1:
            c.extend([_ZERO] * (order + 1 - len(c)))
        self._c = tuple(c[: order + 1])
        self._var = var

    # -- basics ---------------------------------------------------------

    @property
    def order(self) -> int:
        return len(self._c) - 1

    @property
    def var(self) -> str:
        return self._var

    @property
    def coefficients(self) -> tuple[Fraction, ...]:
        return self._c

    def coefficient(self, k: int) -> Fraction:
        if k < 0:
            raise IndexError("negative exponent")
        if k > self.order:
            raise IndexError(f"coefficient {k} beyond truncation order {self.order}")
        return self._c[k]

    __getitem__ = coefficient

    def is_zero(self) -> bool:
        return all(v == 0 for v in self._c)

    def valuation(self) -> int | None:
        """Index of the first non-zero coefficient, or None for the 0 series."""
        for k, v in enumerate(self._c):
            if v:
                return k
        return None

    def truncated(self, order: int) -> "Series1":
        if order > self.order:
            raise ValueError("cannot extend a truncated series")
        return Series1(self._c[: order + 1], order, self._var)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Series1):
            return NotImplemented
        return self._c == other._c

    def __hash__(self):
        return hash(self._c)

    def __repr__(self) -> str:
        terms = []
        for k, v in enumerate(self._c):
            if v:
                terms.append(f"{v}*{self._var}^{k}" if k else f"{v}")
        body = " + ".join(terms) if terms else "0"
        return f"<{body} + O({self._var}^{self.order + 1})>"

    def _check_var(self, other: "Series1") -> None:
        if self._var != other._var:
            raise ValueError(f"variable mismatch: {self._var} vs {other._var}")

    # -- ring operations --------------------------------------------------

    def __add__(self, other):
        if isinstance(other, Series1):
            self._check_var(other)
            n = min(self.order, other.order)
            return Series1(
                [self._c[k] + other._c[k] for k in range(n + 1)], n, self._var
            )
        c = list(self._c)
        c[0] += _frac(other)
        return Series1(c, self.order, self._var)

    __radd__ = __add__

    def __neg__(self):
        return Series1([-v for v in self._c], self.order, self._var)

    def __sub__(self, other):
        return self + (-other if isinstance(other, Series1) else -_frac(other))

    def __rsub__(self, other):
        return (-self) + _frac(other)

    def __mul__(self, other):
        if isinstance(other, Series1):
            self._check_var(other)
            n = min(self.order, other.order)
            out = [_ZERO] * (n + 1)
            for i, a in Series1._nonzero(self._c, n):
                for j, b in Series1._nonzero(other._c, n - i):
                    out[i + j] += a * b
            return Series1(out, n, self._var)
        scale = _frac(other)
        return Series1([scale * v for v in self._c], self.order, self._var)

    __rmul__ = __mul__

    @staticmethod
    def _nonzero(coeffs, limit):
        for k in range(limit + 1):
            v = coeffs[k]
            if v:
                yield k, v

    def __truediv__(self, other):
        if isinstance(other, Series1):
            return self * other.inverse()
        scale = _frac(other)
        return Series1([v / scale for v in self._c], self.order, self._var)

    def inverse(self) -> "Series1":
        """Multiplicative inverse; requires a non-zero constant term."""
        c0 = self._c[0]
        if c0 == 0:
            raise ZeroDivisionError("series has zero constant term")
        n = self.order
        inv = [_ZERO] * (n + 1)
        inv[0] = 1 / c0
        for m in range(1, n + 1):
            acc = _ZERO
            for k in range(1, m + 1):
                if self._c[k]:
                    acc += self._c[k] * inv[m - k]
            inv[m] = -acc / c0
        return Series1(inv, n, self._var)

    def pow(self, exponent: int) -> "Series1":
        if exponent < 0:
            raise ValueError("negative exponents: use inverse() first")
        result = Series1([_ONE], self.order, self._var)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    # -- calculus ---------------------------------------------------------

    def derivative(self) -> "Series1":
        if self.order == 0:
            return Series1([_ZERO], 0, self._var)
        return Series1(
            [k * self._c[k] for k in range(1, self.order + 1)],
            self.order - 1,
            self._var,
        )

    def euler(self) -> "Series1":
        """Apply t d/dt; preserves the truncation order."""
        return Series1(
            [k * v for k, v in enumerate(self._c)], self.order, self._var
        )

    def shifted(self, k: int) -> "Series1":
        """Multiply by t^k; the order grows by k."""
        if k < 0:
            raise ValueError("shift must be non-negative")
        return Series1((_ZERO,) * k + self._c, self.order + k, self._var)

    def compose(self, inner: "Series1") -> "Series1":
        """self(inner); requires inner constant term 0.

        The result carries order min(self.order * val(inner), inner.order)
        and lives in the inner series' variable.
        """
        if inner._c[0] != 0:
            raise ValueError("composition needs inner constant term 0")
        val = inner.valuation()
        if val is None:
            return Series1([self._c[0]], inner.order, inner._var)
        result_order = min(self.order * val, inner.order)
        if result_order < 0:
            result_order = 0
        g = inner if inner.order == result_order else Series1(
            inner._c[: result_order + 1], result_order, inner._var
        )
        acc = Series1([self._c[self.order]], result_order, inner._var)
        for k in range(self.order - 1, -1, -1):
            acc = acc * g + self._c[k]
        return acc

    def log(self) -> "Series1":
        """log of a series with constant term 1."""
        if self._c[0] != 1:
            raise ValueError("log needs constant term 1")
        u = self - _ONE
        acc = Series1([_ZERO], self.order, self._var)
        power = Series1([_ONE], self.order, self._var)
        sign = 1
        for k in range(1, self.order + 1):
            power = power * u
            if power.is_zero():
                break
            acc = acc + power * Fraction(sign, k)
            sign = -sign
        return acc

    def exp(self) -> "Series1":
        """exp of a series with constant term 0."""
        if self._c[0] != 0:
            raise ValueError("exp needs constant term 0")
        acc = Series1([_ONE], self.order, self._var)
        power = Series1([_ONE], self.order, self._var)
        for k in range(1, self.order + 1):
            power = power * self
            if power.is_zero():
                break
            acc = acc + power * Fraction(1, factorial(k))
        return acc

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, order: int, var: str = "t") -> "Series1":
        return cls([_ZERO], order, var)

    @classmethod
    def one(cls, order: int, var: str = "t") -> "Series1":
        return cls([_ONE], order, var)

    @classmethod
    def identity(cls, order: int, var: str = "t") -> "Series1":
        return cls.monomial(1, 1, order, var)

    @classmethod
    def monomial(cls, coeff, k: int, order: int, var: str = "t") -> "Series1":
        if k > order:
            raise ValueError("monomial degree beyond order")
        c = [_ZERO] * (order + 1)
        c[k] = _frac(coeff)
        return cls(c, order, var)


class Series2:
    """Bivariate power series truncated by total degree."""

    __slots__ = ("_c", "_order", "_vars")

    def __init__(self, coeffs, order: int, vars: tuple[str, str] = ("z1", "z2")):
        """``coeffs`` is a mapping (i, j) -> value; entries beyond the
        total-degree truncation are rejected."""
        if order < 0:
            raise ValueError("order must be non-negative")
        rows = [[_ZERO] * (order - i + 1) for i in range(order + 1)]
        for (i, j), v in dict(coeffs).items():
            if i < 0 or j < 0:
                raise ValueError("negative exponents")
            if i + j > order:
                raise ValueError("coefficient beyond total-degree truncation")
            rows[i][j] = _frac(v)
        self._c = tuple(tuple(row) for row in rows)
        self._order = order
        self._vars = vars

    @property
    def order(self) -> int:
        return self._order

    @property
    def vars(self) -> tuple[str, str]:
        return self._vars

    def coefficient(self, i: int, j: int) -> Fraction:
        if i < 0 or j < 0:
            raise IndexError("negative exponent")
        if i + j > self._order:
            raise IndexError(
                f"coefficient ({i},{j}) beyond total-degree truncation {self._order}"
            )
        return self._c[i][j]

    def terms(self):
        """Yield ((i, j), coefficient) for the non-zero entries, sorted."""
        for i in range(self._order + 1):
            for j in range(self._order - i + 1):
                if self._c[i][j]:
                    yield (i, j), self._c[i][j]

    def is_zero(self) -> bool:
        return all(v == 0 for row in self._c for v in row)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Series2):
            return NotImplemented
        return self._order == other._order and self._c == other._c

    def __hash__(self):
        return hash((self._order, self._c))

    def __repr__(self) -> str:
        z1, z2 = self._vars
        parts = [f"{v}*{z1}^{i}*{z2}^{j}" for (i, j), v in self.terms()]
        body = " + ".join(parts) if parts else "0"
        return f"<{body} + O(total deg {self._order + 1})>"

    def _check(self, other: "Series2") -> None:
        if self._vars != other._vars:
            raise ValueError("variable mismatch")

    def _binary_order(self, other: "Series2") -> int:
        return min(self._order, other._order)

    def __add__(self, other):
        if isinstance(other, Series2):
            self._check(other)
            n = self._binary_order(other)
            data = {
                (i, j): self._c[i][j] + other._c[i][j]
                for i in range(n + 1)
                for j in range(n - i + 1)
            }
            return Series2(data, n, self._vars)
        data = {(i, j): v for (i, j), v in self.terms()}
        data[(0, 0)] = self._c[0][0] + _frac(other)
        return Series2(data, self._order, self._vars)

    __radd__ = __add__

    def __neg__(self):
        return Series2({ij: -v for ij, v in self.terms()}, self._order, self._vars)

    def __sub__(self, other):
        return self + (-other if isinstance(other, Series2) else -_frac(other))

    def __rsub__(self, other):
        return (-self) + _frac(other)

    def __mul__(self, other):
        if isinstance(other, Series2):
            self._check(other)
            n = self._binary_order(other)
            rows = [[_ZERO] * (n - i + 1) for i in range(n + 1)]
            left = [(ij, v) for ij, v in self.terms() if sum(ij) <= n]
            right = [(ij, v) for ij, v in other.terms() if sum(ij) <= n]
            for (i1, j1), a in left:
                for (i2, j2), b in right:
                    i, j = i1 + i2, j1 + j2
                    if i + j <= n:
                        rows[i][j] += a * b
            data = {
                (i, j): rows[i][j]
                for i in range(n + 1)
                for j in range(n - i + 1)
                if rows[i][j]
            }
            return Series2(data, n, self._vars)
        scale = _frac(other)
        return Series2(
            {ij: scale * v for ij, v in self.terms()}, self._order, self._vars
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, Series2):
            return self * other.inverse()
        scale = _frac(other)
        return Series2(
            {ij: v / scale for ij, v in self.terms()}, self._order, self._vars
        )

    def inverse(self) -> "Series2":
        c00 = self._c[0][0]
        if c00 == 0:
            raise ZeroDivisionError("series has zero constant term")
        u = Series2._one(self._order, self._vars) - self / c00
        acc = Series2._one(self._order, self._vars)
        power = Series2._one(self._order, self._vars)
        for _ in range(self._order):
            power = power * u
            if power.is_zero():
                break
            acc = acc + power
        return acc / c00

    def log(self) -> "Series2":
        if self._c[0][0] != 1:
            raise ValueError("log needs constant term 1")
        u = self - _ONE
        acc = Series2.zero(self._order, self._vars)
        power = Series2._one(self._order, self._vars)
        sign = 1
        for k in range(1, self._order + 1):
            power = power * u
            if power.is_zero():
                break
            acc = acc + power * Fraction(sign, k)
            sign = -sign
        return acc

    def euler(self) -> "Series2":
        """Apply z1 d/dz1 + z2 d/dz2 (scales each term by its total degree)."""
        return Series2(
            {ij: sum(ij) * v for ij, v in self.terms()}, self._order, self._vars
        )

    def transposed(self) -> "Series2":
        return Series2(
            {(j, i): v for (i, j), v in self.terms()}, self._order, self._vars
        )

    def is_symmetric(self) -> bool:
        return self == self.transposed()

    def at_z2_zero(self) -> Series1:
        """Restrict to z2 = 0; a series in z1, full to the same order."""
        return Series1(
            [self._c[i][0] for i in range(self._order + 1)],
            self._order,
            self._vars[0],
        )

    def at_z1_zero(self) -> Series1:
        return Series1(
            [self._c[0][j] for j in range(self._order + 1)],
            self._order,
            self._vars[1],
        )

    @classmethod
    def zero(cls, order: int, vars: tuple[str, str] = ("z1", "z2")) -> "Series2":
        return cls({}, order, vars)

    @classmethod
    def _one(cls, order: int, vars: tuple[str, str]) -> "Series2":
        return cls({(0, 0): _ONE}, order, vars)

    @classmethod
    def monomial(
        cls, coeff, i: int, j: int, order: int, vars: tuple[str, str] = ("z1", "z2")
    ) -> "Series2":
        return cls({(i, j): _frac(coeff)}, order, vars)

    @classmethod
    def outer(
        cls,
        a: Series1,
        b: Series1,
        order: int,
        vars: tuple[str, str] = ("z1", "z2"),
    ) -> "Series2":
        """The product a(z1) * b(z2) truncated by total degree.

        Honesty check: every coefficient with i + j <= order must be
        derivable from the known parts of a and b, which requires
        order <= min(a.order + val(b), b.order + val(a)).
        """
        va = a.valuation()
        vb = b.valuation()
        if va is None or vb is None:
            return cls.zero(order, vars)
        if order > min(a.order + vb, b.order + va):
            raise ValueError("outer product order exceeds the inputs' knowledge")
        data = {}
        for i in range(va, min(a.order, order) + 1):
            ai = a.coefficient(i)
            if not ai:
                continue
            for j in range(vb, min(b.order, order - i) + 1):
                bj = b.coefficient(j)
                if bj:
                    data[(i, j)] = ai * bj
        return cls(data, order, vars)


def divided_difference(
    f: Series1, vars: tuple[str, str] = ("z1", "z2")
) -> Series2:
    """(f(z1) - f(z2)) / (z1 - z2) as a bivariate series.

    Uses z1^n - z2^n = (z1 - z2) * h_{n-1}(z1, z2) with h the complete
    homogeneous sum, so the (i, j) coefficient is just the (i + j + 1)
    coefficient of f.  The result is known through total degree
    f.order - 1 and is symmetric by construction.
    """
    if f.order < 1:
        raise ValueError("need at least order 1 to take a divided difference")
    n = f.order - 1
    data = {}
    for i in range(n + 1):
        for j in range(n - i + 1):
            v = f.coefficient(i + j + 1)
            if v:
                data[(i, j)] = v
    return Series2(data, n, vars)


# ---------------------------------------------------------------------------
# Lagrange inversion and the generalized Lambert curve
# ---------------------------------------------------------------------------


def lagrange_invert(f: Series1, order: int) -> Series1:
    """Invert x = t / f(t) near 0, for f(0) != 0.

    The inverse is t(x) = sum_{k>=1} [t^(k-1)] f(t)^k * x^k / k.  Needs f
    known through order ``order - 1``.
    """
    if order < 1:
        raise ValueError("order must be at least 1")
    if f.coefficient(0) == 0:
        raise ValueError("f must have a non-zero constant term")
    if f.order < order - 1:
        raise ValueError(
            f"f is only known through order {f.order}; need {order - 1}"
        )
    work = f.truncated(order - 1) if f.order > order - 1 else f
    coeffs = [_ZERO] * (order + 1)
    power = Series1.one(order - 1, f.var)
    for k in range(1, order + 1):
        power = power * work
        coeffs[k] = power.coefficient(k - 1) / k
    return Series1(coeffs, order, "x")


def spectral_curve_y_of_x(r: int, order: int) -> Series1:
    """Series solution y(x) of x^r = y exp(-r y) with y = x^r + higher.

    Substituting w = x^r turns the curve into w = y / exp(r y), which is
    inverted by Lagrange inversion; the x-coefficient at degree r*k is
    (r k)^(k-1) / k!, and every degree not divisible by r carries 0.
    """
    if r < 1:
        raise ValueError("r must be positive")
    if order < r:
        raise ValueError("order must be at least r")
    k_max = order // r
    exp_ry = Series1(
        [Fraction(r**k, factorial(k)) for k in range(k_max)],
        max(k_max - 1, 0),
        "y",
    )
    in_w = lagrange_invert(exp_ry, k_max)
    coeffs = [_ZERO] * (order + 1)
    for k in range(1, k_max + 1):
        coeffs[r * k] = in_w.coefficient(k)
    return Series1(coeffs, order, "x")


def x_of_z(r: int, order: int) -> Series1:
    """The curve parametrization x(z) = z exp(-z^r), truncated at ``order``."""
    if r < 1:
        raise ValueError("r must be positive")
    if order < 1:
        raise ValueError("order must be at least 1")
    coeffs = [_ZERO] * (order + 1)
    k = 0
    while 1 + r * k <= order:
        coeffs[1 + r * k] = Fraction((-1) ** k, factorial(k))
        k += 1
    return Series1(coeffs, order, "z")


def w01_coefficients(r: int, order: int) -> list[tuple[int, Fraction]]:
    """Non-zero coefficients of y(x), read as the density against dlog x.

    The one-form y(x) dx/x has the same coefficient data as the curve
    series itself; this is the labeled dump used by the CLI.
    """
    y = spectral_curve_y_of_x(r, order)
    return [(d, c) for d, c in enumerate(y.coefficients) if c]


def spectral_ode_residual(r: int, order: int) -> Series1:
    """Residual of x y'(x) (1 - r y) - r y for the curve series; zero if exact.

    At r = 1 this is the same identity as dx/dy = x (1 - y)/y for the
    classical Lambert curve.
    """
    y = spectral_curve_y_of_x(r, order)
    return y.euler() * (1 - r * y) - r * y


def lambert_functional_residual(r: int, order: int) -> Series1:
    """Residual of y exp(-r y) - x^r after substituting the curve series."""
    y = spectral_curve_y_of_x(r, order)
    return y * ((-r) * y).exp() - Series1.monomial(1, r, order, "x")


# ---------------------------------------------------------------------------
# Unstable free energies
# ---------------------------------------------------------------------------


def _one_part_counts(r: int, order: int, memo: MemoTable) -> list[Fraction]:
    return [
        arrowed_hurwitz(HurwitzIndex(r, 0, (d,)), memo) for d in range(1, order + 1)
    ]


def f01_closed_in_z(r: int, order: int) -> Series1:
    """Closed form of the one-point genus-0 energy on the curve:
    (1/r) z^r - (1/2) z^(2r)."""
    if order < r:
        raise ValueError("order must be at least r")
    coeffs = [_ZERO] * (order + 1)
    coeffs[r] = Fraction(1, r)
    if 2 * r <= order:
        coeffs[2 * r] = Fraction(-1, 2)
    return Series1(coeffs, order, "z")


def f01_from_counts(
    r: int, order: int, memo: MemoTable | None = None
) -> Series1:
    """The one-point genus-0 energy sum_d (count(d)/d) x^d, pulled back to z."""
    memo = memo or MemoTable()
    counts = _one_part_counts(r, order, memo)
    in_x = Series1(
        [_ZERO] + [counts[d - 1] / d for d in range(1, order + 1)], order, "x"
    )
    return in_x.compose(x_of_z(r, order))


def f01_in_x(r: int, order: int, memo: MemoTable | None = None) -> Series1:
    """sum_d (count(d)/d) x^d; its Euler derivative x d/dx recovers y(x)."""
    memo = memo or MemoTable()
    counts = _one_part_counts(r, order, memo)
    return Series1(
        [_ZERO] + [counts[d - 1] / d for d in range(1, order + 1)], order, "x"
    )


def f02_closed_in_z(r: int, total_order: int) -> Series2:
    """Closed form of the two-point genus-0 energy on the curve.

    Computed as -log DD(x)(z1, z2) - z1^r - z2^r where DD is the divided
    difference of x(z); DD(x) has constant term 1, so the log needs no
    branch choice.
    """
    if total_order < max(2, r):
        raise ValueError("total order must be at least max(2, r)")
    kernel = divided_difference(x_of_z(r, total_order + 1))
    out = -kernel.log()
    out = out - Series2.monomial(1, r, 0, total_order)
    out = out - Series2.monomial(1, 0, r, total_order)
    return out


def f02_from_counts(
    r: int, total_order: int, memo: MemoTable | None = None
) -> Series2:
    """The two-point genus-0 energy as a sum over exact counts:
    sum (count(mu1, mu2) / (mu1 mu2)) x(z1)^mu1 x(z2)^mu2."""
    if total_order < 2:
        raise ValueError("total order must be at least 2")
    memo = memo or MemoTable()
    x = x_of_z(r, total_order - 1)
    powers: dict[int, Series1] = {1: x}
    for mu in range(2, total_order):
        powers[mu] = powers[mu - 1] * x
    acc = Series2.zero(total_order)
    for mu1 in range(1, total_order):
        for mu2 in range(1, total_order - mu1 + 1):
            count = arrowed_hurwitz(HurwitzIndex(r, 0, (mu1, mu2)), memo)
            if not count:
                continue
            weight = count / (mu1 * mu2)
            acc = acc + Series2.outer(powers[mu1], powers[mu2], total_order) * weight
    return acc


def f02_pde_residual(r: int, total_order: int) -> Series2:
    """Residual of the first-order PDE satisfied by the two-point energy.

    Checks (1/r)(z1 d1 + z2 d2) F = DD(x(z) z^r) / DD(x(z)) - z1^r - z2^r
    with F the closed form; exact zero when the identity holds.
    """
    if total_order < max(2, r):
        raise ValueError("total order must be at least max(2, r)")
    f02 = f02_closed_in_z(r, total_order)
    lhs = f02.euler() / r
    g = x_of_z(r, total_order + 1 - r).shifted(r)
    rhs = divided_difference(g) / divided_difference(x_of_z(r, total_order + 1))
    rhs = rhs - Series2.monomial(1, r, 0, total_order)
    rhs = rhs - Series2.monomial(1, 0, r, total_order)
    return lhs - rhs
