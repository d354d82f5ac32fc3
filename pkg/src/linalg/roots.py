"""Roots of characteristic polynomials.

Degrees 1-3 use closed forms; higher degrees use Aberth-Ehrlich simultaneous
iteration. Real roots are polished with a few guarded Newton steps, and
conjugate pairs that sit within ``merge_tol`` of the real axis are merged into
a real double root (the closed forms split exact double roots by roughly
sqrt(machine epsilon)).
"""
import logging
import math

import numpy as np

from ..exceptions.custom_exceptions import RootFindingFailure
from ..models.matrix import Polynomial

logger = logging.getLogger(__name__)

_SQRT3_HALF = math.sqrt(3.0) / 2.0

def polynomial_roots(p: Polynomial, max_iter: int = 500,
                     merge_tol: float = 1e-7) -> np.ndarray:
    """All complex roots of p, with multiplicity"""
    trimmed = p.trimmed()
    coeffs = np.array(trimmed.coeffs, dtype=np.float64)
    degree = len(coeffs) - 1
    if degree == 0:
        return np.zeros(0, dtype=np.complex128)

    monic = coeffs / coeffs[-1]
    if degree == 1:
        roots = np.array([-monic[0]], dtype=np.complex128)
    elif degree == 2:
        roots = _quadratic(monic[1], monic[0])
    elif degree == 3:
        roots = _cubic(monic[2], monic[1], monic[0])
    else:
        roots = _aberth(monic, max_iter)

    roots = _merge_near_real_pairs(roots, merge_tol)
    return _polish_real(monic, roots)

def is_real_root(z: complex, tol: float) -> bool:
    """|Im z| <= tol * (1 + |z|)"""
    return abs(z.imag) <= tol * (1.0 + abs(z))

def _quadratic(b: float, c: float) -> np.ndarray:
    disc = b * b - 4.0 * c
    if disc >= 0.0:
        s = math.sqrt(disc)
        q = -0.5 * (b + math.copysign(s, b))
        if q == 0.0:
            return np.array([0.0, 0.0], dtype=np.complex128)
        return np.array([q, c / q], dtype=np.complex128)
    re = -0.5 * b
    im = 0.5 * math.sqrt(-disc)
    return np.array([complex(re, im), complex(re, -im)])

def _cubic(a: float, b: float, c: float) -> np.ndarray:
    """x^3 + a x^2 + b x + c"""
    shift = a / 3.0
    p = b - a * a / 3.0
    q = 2.0 * a ** 3 / 27.0 - a * b / 3.0 + c
    delta = (q / 2.0) ** 2 + (p / 3.0) ** 3

    if p == 0.0 and q == 0.0:
        ys = [0.0, 0.0, 0.0]
        return np.array([y - shift for y in ys], dtype=np.complex128)

    if delta > 0.0:
        sd = math.sqrt(delta)
        # take the cube root of the larger-magnitude term to avoid cancellation
        big = -q / 2.0 - math.copysign(sd, q) if q != 0.0 else sd
        u = float(np.cbrt(big))
        v = -p / (3.0 * u) if u != 0.0 else 0.0
        y1 = u + v
        re = -0.5 * (u + v)
        im = _SQRT3_HALF * (u - v)
        return np.array([y1 - shift, complex(re - shift, im), complex(re - shift, -im)])

    r = 2.0 * math.sqrt(-p / 3.0)
    arg = (3.0 * q / (2.0 * p)) * math.sqrt(-3.0 / p)
    phi = math.acos(max(-1.0, min(1.0, arg))) / 3.0
    ys = [r * math.cos(phi - 2.0 * math.pi * k / 3.0) for k in range(3)]
    return np.array([y - shift for y in ys], dtype=np.complex128)

def _aberth(monic: np.ndarray, max_iter: int) -> np.ndarray:
    degree = len(monic) - 1
    high_first = monic[::-1]
    deriv = np.polyder(high_first)
    abs_coeffs = np.abs(high_first)

    center = -monic[-2] / degree
    radius = 1.0 + float(np.max(np.abs(monic[:-1])))
    angles = 2.0 * np.pi * np.arange(degree) / degree + 0.4
    z = center + radius * np.exp(1j * angles)

    for _ in range(max_iter):
        pz = np.polyval(high_first, z)
        dpz = np.polyval(deriv, z)
        dpz = np.where(dpz == 0, 1e-300, dpz)
        ratio = pz / dpz

        diff = z[:, None] - z[None, :]
        np.fill_diagonal(diff, 1.0)
        inv = 1.0 / diff
        np.fill_diagonal(inv, 0.0)
        correction = ratio / (1.0 - ratio * inv.sum(axis=1))
        z = z - correction

        small_step = np.abs(correction) <= 1e-14 * (1.0 + np.abs(z))
        backward = np.abs(np.polyval(high_first, z)) <= 16 * np.finfo(float).eps * np.polyval(abs_coeffs, np.abs(z))
        if np.all(small_step | backward):
            return z

    logger.error(f"Aberth iteration did not converge in {max_iter} steps (degree {degree})")
    raise RootFindingFailure(f"Root finder did not converge in {max_iter} iterations")

def _merge_near_real_pairs(roots: np.ndarray, merge_tol: float) -> np.ndarray:
    roots = np.array(roots, dtype=np.complex128)
    used = np.zeros(len(roots), dtype=bool)
    for i, zi in enumerate(roots):
        if used[i] or zi.imag == 0.0 or abs(zi.imag) > merge_tol * (1.0 + abs(zi)):
            continue
        for j in range(i + 1, len(roots)):
            zj = roots[j]
            if used[j]:
                continue
            if abs(zj - np.conj(zi)) <= merge_tol * (1.0 + abs(zi)):
                mean = 0.5 * (zi.real + zj.real)
                roots[i] = roots[j] = complex(mean, 0.0)
                used[i] = used[j] = True
                break
    return roots

def _polish_real(monic: np.ndarray, roots: np.ndarray, steps: int = 3) -> np.ndarray:
    high_first = monic[::-1]
    deriv = np.polyder(high_first)
    polished = roots.copy()
    for i, z in enumerate(roots):
        if z.imag != 0.0:
            continue
        x = z.real
        fx = np.polyval(high_first, x)
        for _ in range(steps):
            dfx = np.polyval(deriv, x)
            if dfx == 0.0 or fx == 0.0:
                break
            candidate = x - fx / dfx
            fc = np.polyval(high_first, candidate)
            if abs(fc) >= abs(fx):
                break
            x, fx = candidate, fc
        polished[i] = complex(x, 0.0)
    return polished
