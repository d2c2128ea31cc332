"""Riemann zeta evaluation, Riemann-Siegel theta and Z, and zero counting on the critical line.

Two independent evaluators are provided. :func:`zeta_integral` integrates the
sawtooth representation ``s/(s-1) - s * int_1^inf ({x}) x^(-s-1) dx`` piece by
piece between integer breakpoints; :func:`zeta_em` is an Euler-Maclaurin
summation used for everything on the critical line.
"""
from __future__ import annotations

import json
import math
import warnings
from dataclasses import asdict, dataclass, field

import numpy as np

from .errors import ConvergenceError, DomainError

_EPS = np.finfo(float).eps

# B_2j / (2j)!
_EM_COEFFS = (1 / 12, -1 / 720, 1 / 30240)
_EM_NEXT = -1 / 1209600

INTEGRAL_MAX_X = 10**8
_CHUNK = 1 << 20


@dataclass(frozen=True)
class ZEvaluation:
    t: float
    z: float
    imag_residual: float
    error_estimate: float

    def to_json(self) -> str:
        return json.dumps(asdict(self), separators=(",", ":"))


@dataclass
class ZeroCountReport:
    T: float
    sign_changes: int
    argument_estimate: float
    grid_step: float
    refined: bool
    argument_count: float | None = None
    zeros: list[float] = field(default_factory=list)
    unresolved: int = 0

    def to_json(self) -> str:
        return json.dumps(asdict(self), separators=(",", ":"))


def zeta_integral(s: complex, tolerance: float = 1e-8) -> complex:
    """Sawtooth-integral evaluation for Re(s) > 0, s != 1.

    Each piece int_k^{k+1} (x - k) x^(-s-1) dx is integrated in closed form.
    The tail beyond X contributes X^(-s)/2 from the mean of the sawtooth plus
    a remainder bounded by |s||s+1| / (8 (Re s + 1) X^(Re s + 1)), and X is
    the least integer that brings this bound under ``tolerance``.
    """
    s = complex(s)
    sigma = s.real
    if sigma <= 0:
        raise DomainError("zeta_integral needs Re(s) > 0")
    if s == 1:
        raise DomainError("pole at s = 1")
    c = abs(s) * abs(s + 1) / (8 * (sigma + 1))
    X = max(2, math.ceil((c / tolerance) ** (1 / (sigma + 1))))
    if X > INTEGRAL_MAX_X:
        raise ConvergenceError(f"tolerance {tolerance:g} needs X = {X} > {INTEGRAL_MAX_X}")
    total = 0j
    for start in range(1, X, _CHUNK):
        k = np.arange(start, min(start + _CHUNK, X), dtype=float)
        L = np.log1p(1 / k)
        bracket = np.expm1((1 - s) * L) / (1 - s) + np.expm1(-s * L) / s
        total += np.sum(np.exp((1 - s) * np.log(k)) * bracket)
    return s / (s - 1) - s * total - X ** (-s) / 2


def _em_cutoff(t_abs: float) -> int:
    return max(20, math.ceil(2 * t_abs))


def _check_em_domain(s: np.ndarray) -> None:
    if np.any(s.real <= 0) or np.any(s.real > 2) or np.any(np.abs(s.imag) > 500):
        raise DomainError("zeta_em needs 0 < Re(s) <= 2 and |Im(s)| <= 500")
    if np.any(s == 1):
        raise DomainError("pole at s = 1")


def zeta_em_with_error(s, K: int | None = None) -> tuple[np.ndarray, np.ndarray]:
    """Vectorised Euler-Maclaurin zeta and an error estimate per point."""
    s = np.atleast_1d(np.asarray(s, dtype=complex))
    _check_em_domain(s)
    if K is None:
        K = _em_cutoff(float(np.max(np.abs(s.imag))))
    logk = np.log(np.arange(1, K, dtype=float))
    vals = np.empty(s.shape, dtype=complex)
    mags = np.empty(s.shape, dtype=float)
    step = max(1, (1 << 22) // K)
    for a in range(0, len(s), step):
        ss = s[a : a + step]
        terms = np.exp(-np.outer(ss, logk))
        vals[a : a + step] = terms.sum(axis=1)
        mags[a : a + step] = np.abs(terms).sum(axis=1)
    lnK = math.log(K)
    vals += np.exp((1 - s) * lnK) / (s - 1) + np.exp(-s * lnK) / 2
    rising = s.copy()
    for j, coeff in enumerate(_EM_COEFFS):
        if j:
            rising = rising * (s + 2 * j - 1) * (s + 2 * j)
        vals += coeff * rising * np.exp(-(s + 2 * j + 1) * lnK)
    rising = rising * (s + 5) * (s + 6)
    nxt = np.abs(_EM_NEXT * rising * np.exp(-(s + 7) * lnK))
    truncation = nxt * np.abs(s + 7) / (s.real + 7)
    rounding = 8 * _EPS * mags * math.sqrt(K)
    return vals, truncation + rounding


def zeta_em(s) -> complex | np.ndarray:
    vals, _ = zeta_em_with_error(s)
    return complex(vals[0]) if np.ndim(s) == 0 else vals


EXPANSION_MIN_T = 10.0
_STIRLING_SHIFT = 8
# B_2j / (2j (2j - 1))
_STIRLING = (1 / 12, -1 / 360, 1 / 1260, -1 / 1680, 1 / 1188)


def _theta_expansion(t):
    return (t / 2 * np.log(t / (2 * np.pi)) - t / 2 - np.pi / 8
            + 1 / (48 * t) + 7 / (5760 * t**3) + 31 / (80640 * t**5) + 127 / (430080 * t**7))


def _theta_shifted_stirling(t):
    # arg Gamma(z) on the continuous branch: Stirling at z + 8, then undo the shift
    z = 0.25 + 0.5j * t
    w = z + _STIRLING_SHIFT
    lg = (w - 0.5) * np.log(w) - w + 0.5 * np.log(2 * np.pi)
    wp = w
    for c in _STIRLING:
        lg = lg + c / wp
        wp = wp * w * w
    for k in range(_STIRLING_SHIFT):
        lg = lg - np.log(z + k)
    return lg.imag - t / 2 * np.log(np.pi)


def _theta_raw(t):
    t = np.asarray(t, dtype=float)
    return np.where(t >= EXPANSION_MIN_T, _theta_expansion(t), _theta_shifted_stirling(t))


def theta_remainder(t):
    """Bound on the truncation error of :func:`theta` at t."""
    t = np.asarray(t, dtype=float)
    expansion = 511 / (1216512 * t**9)
    stirling = 691 / (360360 * np.abs(0.25 + 0.5j * t + _STIRLING_SHIFT) ** 11)
    return np.where(t >= EXPANSION_MIN_T, expansion, stirling)


def theta(t):
    """Riemann-Siegel theta, defined here for t >= 2.

    For t >= 10 the asymptotic expansion through t^-7 is used (remainder
    below 1e-14). Below that the expansion loses accuracy (about 1e-3 at
    t = 2), so arg Gamma(1/4 + it/2) is taken from Stirling's series after
    shifting the argument by 8.
    """
    arr = np.asarray(t, dtype=float)
    if np.any(arr < 2):
        raise DomainError("theta is defined here for t >= 2")
    out = _theta_raw(arr)
    return float(out) if np.ndim(t) == 0 else out


def z_values(ts) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Z(t), its imaginary residual, and an error estimate, for an array of t."""
    ts = np.asarray(ts, dtype=float)
    if np.any(ts < 2) or np.any(ts > 500):
        raise DomainError("z_function needs 2 <= t <= 500")
    zeta, err = zeta_em_with_error(0.5 + 1j * ts)
    th = _theta_raw(ts)
    w = zeta * np.exp(1j * th)
    mag = np.abs(zeta)
    err = err + mag * (theta_remainder(ts) + 4 * _EPS * np.abs(th))
    return w.real, w.imag, err


def z_function(t: float) -> ZEvaluation:
    z, im, err = z_values(np.array([t]))
    return ZEvaluation(float(t), float(z[0]), float(im[0]), float(err[0]))


def argument_count(T: float, points: int = 801) -> float:
    """theta(T)/pi + 1 + S(T): the zero count in 0 < Im(s) < T of the critical strip.

    S(T) = arg zeta(1/2 + iT) / pi, with the argument carried continuously
    from 2 + iT (where Re zeta > 0) along the horizontal segment to 1/2 + iT.
    """
    for _ in range(6):
        sigma = np.linspace(2.0, 0.5, points)
        vals = zeta_em(sigma + 1j * T)
        if np.min(np.abs(vals)) < 1e-12:
            raise ConvergenceError(f"T={T} is numerically a zero ordinate")
        phase = np.unwrap(np.angle(vals))
        if np.max(np.abs(np.diff(phase))) < np.pi / 8:
            break
        points = 2 * points - 1
    else:
        raise ConvergenceError("argument tracking did not resolve")
    return theta(T) / np.pi + 1 + phase[-1] / np.pi


def _refine_interval(a, za, ea, b, zb, eb, depth, out):
    """Halve [a, b] while an endpoint value is indistinguishable from zero."""
    if depth == 0 or (abs(za) >= 10 * ea and abs(zb) >= 10 * eb):
        out.append((b, zb))
        return
    m = 0.5 * (a + b)
    zm = z_function(m)
    _refine_interval(a, za, ea, m, zm.z, zm.error_estimate, depth - 1, out)
    _refine_interval(m, zm.z, zm.error_estimate, b, zb, eb, depth - 1, out)


def _bisect(a, za, b, tol, max_iter):
    for _ in range(max_iter):
        if b - a <= tol:
            return 0.5 * (a + b), True
        m = 0.5 * (a + b)
        zm = z_function(m).z
        if zm == 0:
            return m, True
        if (zm > 0) == (za > 0):
            a, za = m, zm
        else:
            b = m
    return 0.5 * (a + b), b - a <= tol


def scan_sign_changes(lo: float, hi: float, step: float = 0.05, tol: float = 1e-6,
                      max_iter: int = 200, max_depth: int = 6):
    """Zeros of Z located on [lo, hi]: (zero list, unresolved count, refined flag)."""
    n = max(1, math.ceil((hi - lo) / step - 1e-9))
    ts = np.append(lo + step * np.arange(n), hi)
    z, _, err = z_values(ts)
    samples = [(ts[0], z[0])]
    refined = False
    for k in range(n):
        near_zero = abs(z[k]) < 10 * err[k] or abs(z[k + 1]) < 10 * err[k + 1]
        if near_zero:
            refined = True
            _refine_interval(ts[k], z[k], err[k], ts[k + 1], z[k + 1], err[k + 1], max_depth, samples)
        else:
            samples.append((ts[k + 1], z[k + 1]))
    signed = [(t, v) for t, v in samples if v != 0]
    zeros, unresolved = [], 0
    for (a, za), (b, zb) in zip(signed, signed[1:]):
        if (za > 0) != (zb > 0):
            root, ok = _bisect(a, za, b, tol, max_iter)
            zeros.append(float(root))
            unresolved += not ok
    if unresolved:
        warnings.warn(f"{unresolved} bracket(s) not refined to {tol:g}", RuntimeWarning, stacklevel=2)
    return zeros, unresolved, refined


def count_sign_changes(T: float, initial_step: float = 0.05) -> ZeroCountReport:
    """Count sign changes of Z on [2, T] and compare with the theta(T)/pi + 1 main term."""
    if not 10 <= T <= 500:
        raise DomainError("count_sign_changes needs 10 <= T <= 500")
    if not 0 < initial_step <= 0.25:
        raise DomainError("initial_step must be in (0, 0.25]")
    zeros, unresolved, refined = scan_sign_changes(2.0, float(T), initial_step)
    return ZeroCountReport(
        T=float(T),
        sign_changes=len(zeros),
        argument_estimate=theta(T) / math.pi + 1,
        grid_step=float(initial_step),
        refined=refined,
        argument_count=float(argument_count(T)),
        zeros=zeros,
        unresolved=unresolved,
    )


def z_samples_csv(lo: float, hi: float, step: float) -> str:
    n = max(1, math.ceil((hi - lo) / step - 1e-9))
    ts = np.append(lo + step * np.arange(n), hi)
    z, _, _ = z_values(ts)
    rows = ["t,Z(t)"] + [f"{t!r},{v!r}" for t, v in zip(ts.tolist(), z.tolist())]
    return "\n".join(rows) + "\n"
