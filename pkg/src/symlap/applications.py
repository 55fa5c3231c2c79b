"""Two worked problems with closed-form solutions and residual checks.

Heat problem: u_xx = u_t on the real line with u(x, 0) = sign(x) and
u(0, t) = 0.  The solution is u(x, t) = erf(x / (2*sqrt(t))) (written
piecewise as erf / -erf of the mirrored argument; both branches agree
because erf is odd).  Checks: the finite-difference residual of the PDE
vanishes at second order in the step, and the transformed equation
s^2*G + cs^2*Gm = G_t + Gm_t holds for the half-line transforms of the
solution, with G + Gm -> 1/s - 1/cs as t -> 0+.

ODE problem: y'' + y = f where f(t) = exp(t) for t >= 0 and 1 for
t < 0, with y(0) = 0.  The solution is (exp(t) - cos t - sin t)/2 on
t >= 0 and 1 - cos t on t < 0; it is C^1 at zero and satisfies the
equation exactly on both branches.
"""

from __future__ import annotations

import math

import numpy as np

from .core import ExponentialOrderBound, conjugate
from .errors import DivergenceError
from .quadrature import half_line_integral

_TWO_OVER_SQRT_PI = 2.0 / math.sqrt(math.pi)


def erf(x: float) -> float:
    """Error function to about 1e-15 absolute.

    Maclaurin series for |x| <= 3; the Laplace continued fraction of the
    complementary function beyond, evaluated by the modified Lentz
    scheme.  Odd, saturates to +-1.
    """
    x = float(x)
    if x == 0.0:
        return 0.0
    ax = abs(x)
    if ax <= 3.0:
        return math.copysign(_erf_series(ax), x)
    if ax >= 7.0:
        return math.copysign(1.0, x)
    return math.copysign(1.0 - _erfc_cf(ax), x)


def _erf_series(x: float) -> float:
    # sum over n of (-1)^n x^(2n+1) / (n! (2n+1)), times 2/sqrt(pi)
    term = x
    total = x
    n = 0
    while True:
        n += 1
        term *= -x * x / n
        inc = term / (2 * n + 1)
        total += inc
        if abs(inc) < 1e-17 * abs(total) + 5e-324:
            break
        if n > 500:  # series converges long before this for |x| <= 3
            break
    return _TWO_OVER_SQRT_PI * total


def _erfc_cf(x: float) -> float:
    # erfc(x) = exp(-x^2)/sqrt(pi) / (x + (1/2)/(x + 1/(x + (3/2)/(x + ...))))
    tiny = 1e-300
    b = x
    c = 1.0 / tiny
    d = 1.0 / b
    h = d
    for k in range(1, 200):
        a = k / 2.0
        d = 1.0 / (b + a * d) if (b + a * d) != 0 else 1.0 / tiny
        c = b + a / c if c != 0 else tiny
        delta = c * d
        h *= delta
        if abs(delta - 1.0) < 1e-16:
            break
    return math.exp(-x * x) / math.sqrt(math.pi) * h


def heat_solution(x: float, t: float) -> float:
    """The closed-form solution erf(x / (2*sqrt(t))), written per branch.

    Raises ValueError for t <= 0.
    """
    if t <= 0:
        raise ValueError(f"t must be positive, got {t}")
    arg = x / (2.0 * math.sqrt(t))
    if x >= 0:
        return erf(arg)
    return -erf(-arg)


def heat_residual(x: float, t: float, h: float) -> float:
    """|centered u_xx - centered u_t| at step h; O(h^2) for the true
    solution.  Needs x != 0 (the formula is smooth off the t-axis) and
    t > h so the time stencil stays in the domain."""
    if h <= 0:
        raise ValueError("h must be positive")
    if x == 0:
        raise ValueError("residual stencil needs x != 0")
    if t <= h:
        raise ValueError("need t > h for the time stencil")
    u_xx = (heat_solution(x + h, t) - 2.0 * heat_solution(x, t)
            + heat_solution(x - h, t)) / (h * h)
    u_t = (heat_solution(x, t + h) - heat_solution(x, t - h)) / (2.0 * h)
    return abs(u_xx - u_t)


def heat_transform_pair(s: complex, t: float, tol: float):
    """Half-line transforms (G, Gm) of the solution at time t.

    G(s, t) transforms x -> u(x, t) on x >= 0 at s; Gm transforms
    x -> u(-x, t) on x >= 0 at conj(s).
    """
    s = complex(s)
    if s.real <= 0:
        raise DivergenceError("heat transforms need Re s > 0")
    if t <= 0:
        raise ValueError("t must be positive")
    root = 2.0 * math.sqrt(t)
    u_vec = np.vectorize(lambda v: erf(v / root))
    bound = ExponentialOrderBound(1.0, 0.0)
    cs = conjugate(s)
    g = half_line_integral(
        lambda x: np.exp(-s * x) * u_vec(x), bound, s.real, tol,
        osc=abs(s.imag)).value
    gm = half_line_integral(
        lambda x: np.exp(-cs * x) * (-u_vec(x)), bound, cs.real, tol,
        osc=abs(cs.imag)).value
    return g, gm


def heat_transform_identity(s: complex, t: float, tol: float,
                            h_t: float = 3e-4) -> float:
    """|s^2*G + cs^2*Gm - (G_t + Gm_t)| with time derivatives by central
    difference at step h_t.  The identity is exact for the solution, so
    the returned value reflects only discretization."""
    s = complex(s)
    quad_tol = min(tol / 50.0, 1e-9)
    g, gm = heat_transform_pair(s, t, quad_tol)
    gp, gmp = heat_transform_pair(s, t + h_t, quad_tol)
    gq, gmq = heat_transform_pair(s, t - h_t, quad_tol)
    g_dot = (gp - gq) / (2.0 * h_t)
    gm_dot = (gmp - gmq) / (2.0 * h_t)
    cs = conjugate(s)
    return abs(s * s * g + cs * cs * gm - g_dot - gm_dot)


def _ode_terms_right(t: float):
    e, c, s = math.exp(t), math.cos(t), math.sin(t)
    y = (0.5 * e, -0.5 * c, -0.5 * s)
    yp = (0.5 * e, 0.5 * s, -0.5 * c)
    ypp = (0.5 * e, 0.5 * c, 0.5 * s)
    return y, yp, ypp, e


def _ode_terms_left(t: float):
    c, s = math.cos(t), math.sin(t)
    y = (1.0, -c)
    yp = (s,)
    ypp = (c,)
    return y, yp, ypp, 1.0


def ode_solution(t: float) -> float:
    """(exp(t) - cos t - sin t)/2 for t >= 0, 1 - cos t for t < 0."""
    terms = _ode_terms_right(t)[0] if t >= 0 else _ode_terms_left(t)[0]
    return math.fsum(terms)


def ode_derivative1(t: float) -> float:
    terms = _ode_terms_right(t)[1] if t >= 0 else _ode_terms_left(t)[1]
    return math.fsum(terms)


def ode_derivative2(t: float) -> float:
    terms = _ode_terms_right(t)[2] if t >= 0 else _ode_terms_left(t)[2]
    return math.fsum(terms)


def ode_boundary_values():
    """One-sided limits (y(0+), y'(0+)), (y(0-), y'(0-)) from the two
    branch formulas."""
    yr, ypr, _, _ = _ode_terms_right(0.0)
    yl, ypl, _, _ = _ode_terms_left(0.0)
    return ((math.fsum(yr), math.fsum(ypr)),
            (math.fsum(yl), math.fsum(ypl)))


def ode_residual(t: float) -> float:
    """|y''(t) + y(t) - f(t)| from the analytic branch formulas.

    The constituent terms are summed exactly (math.fsum), so the result
    reports the algebraic identity itself rather than the cancellation
    noise of adding two large halves of exp(t)."""
    y, _, ypp, f = _ode_terms_right(t) if t >= 0 else _ode_terms_left(t)
    return abs(math.fsum([*ypp, *y, -f]))


def ode_transform_check(s: complex, tol: float) -> float:
    """Worst gap between the quadrature transforms of the solution and
    the closed forms 1/(2(s-1)) - s/(2(s^2+1)) - 1/(2(s^2+1)) on the
    positive side and 1/cs - cs/(cs^2+1) on the negative side."""
    s = complex(s)
    if s.real <= 1:
        raise DivergenceError(
            f"the exp(t) branch needs Re s > 1, got {s.real}")
    quad_tol = min(tol / 10.0, 1e-9)
    cs = conjugate(s)

    def y_pos(t):
        return (np.exp(t) - np.cos(t) - np.sin(t)) / 2.0

    def y_mirrored(t):
        # y(-t) for t > 0, from the t < 0 branch
        return 1.0 - np.cos(t)

    pos = half_line_integral(
        lambda t: np.exp(-s * t) * y_pos(t),
        ExponentialOrderBound(1.5, 1.0), s.real, quad_tol,
        osc=abs(s.imag) + 1.0).value
    neg = half_line_integral(
        lambda t: np.exp(-cs * t) * y_mirrored(t),
        ExponentialOrderBound(2.0, 0.0), cs.real, quad_tol,
        osc=abs(cs.imag) + 1.0).value
    closed_pos = (0.5 / (s - 1.0) - 0.5 * s / (s * s + 1.0)
                  - 0.5 / (s * s + 1.0))
    closed_neg = 1.0 / cs - cs / (cs * cs + 1.0)
    return max(abs(pos - closed_pos), abs(neg - closed_neg))
