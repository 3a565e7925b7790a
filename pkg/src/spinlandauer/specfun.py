"""Numerically stable special functions for spin-model thermodynamics.

All functions take and return plain floats and are pure, so they are safe
under arbitrary concurrent use. Arguments are dimensionless throughout
(the canonical argument is the reduced field x = beta*m*J).
"""

import math

from scipy import special as _sp

__all__ = [
    "langevin",
    "brillouin",
    "log_sinh_ratio",
    "bessel_i",
    "bessel_ratio",
    "log_gamma",
    "sphere_area",
    "log_sphere_area",
]

# Switch to odd Taylor series below this |x| to avoid the coth(x) - 1/x
# cancellation.
_SERIES_CUTOFF = 1e-3

# coth(y) = 1 exactly in double precision beyond here.
_COTH_SATURATION = 20.0

_LENTZ_TOL = 1e-14
_LENTZ_MAX_ITER = 10_000
_LENTZ_TINY = 1e-300


def _x_coth(y: float) -> float:
    """y*coth(y), even in y, finite at y=0 (value 1)."""
    y = abs(y)
    if y < 1e-2:
        y2 = y * y
        return 1.0 + y2 / 3.0 - y2 * y2 / 45.0 + 2.0 * y2 * y2 * y2 / 945.0
    if y >= _COTH_SATURATION:
        return y
    # coth(y) = 1 + 2/(e^{2y} - 1), stable for moderate y
    return y * (1.0 + 2.0 / math.expm1(2.0 * y))


def _log_sinhc(y: float) -> float:
    """ln(sinh(y)/y) for y >= 0, without overflow for large y."""
    if y < 1e-2:
        y2 = y * y
        return y2 / 6.0 - y2 * y2 / 180.0 + y2 * y2 * y2 / 2835.0
    if y < 350.0:
        return math.log(math.sinh(y) / y)
    # ln sinh(y) = y - ln 2 + ln(1 - e^{-2y}); e^{-2y} underflows to 0 past y ~ 370
    return y - math.log(2.0 * y) + math.log1p(-math.exp(-2.0 * y))


def langevin(x: float) -> float:
    """Langevin function L(x) = coth(x) - 1/x.

    Odd in x, L(0) = 0 (removable singularity), range (-1, 1).
    Classical-spin alignment response to a reduced field x.
    """
    if math.isnan(x) or math.isinf(x):
        raise ValueError(f"langevin: argument must be finite, got {x}")
    ax = abs(x)
    if ax < _SERIES_CUTOFF:
        x2 = x * x
        return x / 3.0 - x * x2 / 45.0 + 2.0 * x * x2 * x2 / 945.0
    val = (_x_coth(ax) - 1.0) / ax
    return val if x > 0 else -val


def brillouin(s: float, x: float) -> float:
    """Brillouin function B_s(x) for spin magnitude s > 0.

    B_s(x) = (2s+1)/(2s) coth((2s+1)x/(2s)) - 1/(2s) coth(x/(2s))

    Odd in x, B_s(0) = 0, range (-1, 1), monotone increasing.
    B_{1/2}(x) = tanh(x); B_s -> langevin as s -> infinity.
    """
    if s <= 0:
        raise ValueError(f"brillouin: spin magnitude must be > 0, got {s}")
    if math.isnan(x) or math.isinf(x):
        raise ValueError(f"brillouin: argument must be finite, got {x}")
    a = (2.0 * s + 1.0) / (2.0 * s)
    b = 1.0 / (2.0 * s)
    ax = abs(x)
    if ax < _SERIES_CUTOFF:
        # c*coth(c x) = 1/x + c^2 x/3 - c^4 x^3/45 + 2 c^6 x^5/945; the 1/x cancels
        a2, b2 = a * a, b * b
        x2 = x * x
        return (
            (a2 - b2) * x / 3.0
            - (a2 * a2 - b2 * b2) * x * x2 / 45.0
            + 2.0 * (a2 * a2 * a2 - b2 * b2 * b2) * x * x2 * x2 / 945.0
        )
    val = (_x_coth(a * ax) - _x_coth(b * ax)) / ax
    return val if x > 0 else -val


def log_sinh_ratio(s: float, x: float) -> float:
    """ln[ sinh((1 + 1/(2s)) x) / sinh(x/(2s)) ] for x >= 0.

    Split as ln(2s+1) + ln sinhc((1+1/(2s))x) - ln sinhc(x/(2s)), with
    ln sinhc(y) = y - ln(2y) + ln(1 - e^{-2y}) for large y, so nothing
    overflows for arbitrarily large x. The x -> 0 limit is ln(2s+1), the
    state-counting entropy of a spin s.
    """
    if s <= 0:
        raise ValueError(f"log_sinh_ratio: spin magnitude must be > 0, got {s}")
    if x < 0 or math.isnan(x) or math.isinf(x):
        raise ValueError(f"log_sinh_ratio: argument must be finite and >= 0, got {x}")
    a = 1.0 + 1.0 / (2.0 * s)
    b = 1.0 / (2.0 * s)
    # sinh(ax)/sinh(bx) = (a/b) * sinhc(ax)/sinhc(bx) and a/b = 2s+1
    return math.log(2.0 * s + 1.0) + _log_sinhc(a * x) - _log_sinhc(b * x)


def bessel_i(nu: float, x: float, scaled: bool = False) -> float:
    """Modified Bessel function of the first kind I_nu(x), nu >= 0, x >= 0.

    With ``scaled=True`` returns e^{-x} I_nu(x), which stays finite for
    any x. The unscaled value overflows for x beyond ~700; callers that
    need larger arguments must request the scaled form.
    """
    if nu < 0:
        raise ValueError(f"bessel_i: order must be >= 0, got {nu}")
    if x < 0 or math.isnan(x):
        raise ValueError(f"bessel_i: argument must be >= 0, got {x}")
    if scaled:
        return float(_sp.ive(nu, x))
    val = float(_sp.iv(nu, x))
    if math.isinf(val):
        raise OverflowError(
            f"bessel_i: I_{nu}({x}) overflows double precision; request scaled=True"
        )
    return val


def bessel_ratio(nu: float, x: float) -> float:
    """Ratio I_{nu+1}(x) / I_nu(x) for nu >= 0, x >= 0.

    Evaluated by the Gauss continued fraction

        r = x / (2(nu+1) + x^2 / (2(nu+2) + x^2 / ...))

    with the modified Lentz algorithm, so the (overflowing) numerator and
    denominator are never formed separately. Value in [0, 1); behaves as
    x/(2 nu + 2) for small x and tends to 1 for large x.
    """
    if nu < 0:
        raise ValueError(f"bessel_ratio: order must be >= 0, got {nu}")
    if x < 0 or math.isnan(x) or math.isinf(x):
        raise ValueError(f"bessel_ratio: argument must be finite and >= 0, got {x}")
    if x == 0.0:
        return 0.0
    f = _LENTZ_TINY
    c = f
    d = 0.0
    for j in range(1, _LENTZ_MAX_ITER + 1):
        a = x if j == 1 else x * x
        b = 2.0 * (nu + j)
        d = b + a * d
        if d == 0.0:
            d = _LENTZ_TINY
        c = b + a / c
        if c == 0.0:
            c = _LENTZ_TINY
        d = 1.0 / d
        delta = c * d
        f *= delta
        if abs(delta - 1.0) < _LENTZ_TOL:
            return f
    raise ArithmeticError(
        f"bessel_ratio: continued fraction did not converge for nu={nu}, x={x}"
    )


def log_gamma(x: float) -> float:
    """ln Gamma(x) for x > 0."""
    if x <= 0:
        raise ValueError(f"log_gamma: argument must be > 0, got {x}")
    return math.lgamma(x)


def log_sphere_area(n: int) -> float:
    """ln of the surface area of the unit (n-1)-sphere, n >= 2."""
    if n != int(n) or n < 2:
        raise ValueError(f"log_sphere_area: dimension must be an integer >= 2, got {n}")
    return math.log(2.0) + 0.5 * n * math.log(math.pi) - math.lgamma(0.5 * n)


def sphere_area(n: int) -> float:
    """Surface area S_{n-1} = 2 pi^{n/2} / Gamma(n/2) of the unit sphere in n dimensions."""
    if n != int(n) or n < 2:
        raise ValueError(f"sphere_area: dimension must be an integer >= 2, got {n}")
    if n <= 300:
        return 2.0 * math.pi ** (0.5 * n) / math.gamma(0.5 * n)
    return math.exp(log_sphere_area(n))
