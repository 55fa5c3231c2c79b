"""Forward symmetric Laplace transform and its reduction special cases.

The transform of a signal f at the point (x1, x2, y) is

    integral over R of exp((-x1*H(t) + x2*H(-t) - i*y)*t) * f(t) dt

which splits into two one-sided Laplace integrals: the positive piece at
s1 = x1 + i*y and (after t -> -t) the reflected negative piece at
conj(s2) = x2 - i*y.  One half-line quadrature engine therefore serves
both sides; the requested tolerance is split evenly between them.
"""

from __future__ import annotations

import numpy as np

from .core import PiecewiseSignal, SLPoint, TransformSample
from .errors import DivergenceError
from .quadrature import half_line_integral


def _side_integral(piece, bound, x: float, y_eff: float, tol: float,
                   osc: float, tail_cut, label: str):
    if x <= bound.a and tail_cut is None:
        raise DivergenceError(
            f"{label} half-line diverges: damping x={x} must exceed the "
            f"growth rate a={bound.a} of the signal on that side")

    def integrand(u):
        return np.exp(-(x + 1j * y_eff) * u) * np.asarray(piece(u),
                                                          dtype=complex)

    return half_line_integral(integrand, bound, x, tol,
                              osc=osc, tail_cut=tail_cut)


def sl_forward(f: PiecewiseSignal, p: SLPoint, tol: float) -> TransformSample:
    """Evaluate the transform of f at p to absolute tolerance tol.

    Raises DivergenceError naming the offending half-line when x1 or x2
    does not dominate the growth rate of its piece.
    """
    osc = abs(p.y) + f.osc_hint
    pos = _side_integral(f.pos, f.bound_for("pos", p.x1), p.x1, p.y,
                         tol / 2.0, osc, f.tail_cut, "positive")
    neg = _side_integral(lambda u: f.neg(-u), f.bound_for("neg", p.x2),
                         p.x2, -p.y, tol / 2.0, osc, f.tail_cut, "negative")
    return TransformSample(p, pos.value + neg.value,
                           pos.abs_error_estimate + neg.abs_error_estimate)


def sl_forward_symmetric(f: PiecewiseSignal, s: complex,
                         tol: float) -> TransformSample:
    """Transform at equal damping x1 = x2 = Re(s), oscillation Im(s).

    This is the form that reduces to the classical one-sided Laplace
    transform when f vanishes on t < 0.
    """
    s = complex(s)
    return sl_forward(f, SLPoint(s.real, s.real, s.imag), tol)


def fourier_reduction(f: PiecewiseSignal, y: float,
                      tol: float) -> TransformSample:
    """Transform at x1 = x2 = 0, i.e. the Fourier transform of f.

    Requires certified absolute integrability: either both envelopes
    decay (a < 0 on each side) or the signal carries a tail_cut.
    """
    integrable = ((f.bound_pos.a < 0 and f.bound_neg.a < 0)
                  or f.tail_cut is not None)
    if not integrable:
        raise DivergenceError(
            f"signal {f.name!r} is not certified absolutely integrable; "
            "the Fourier reduction x1 = x2 = 0 needs decaying envelopes "
            "or an explicit tail_cut")
    return sl_forward(f, SLPoint(0.0, 0.0, y), tol)
