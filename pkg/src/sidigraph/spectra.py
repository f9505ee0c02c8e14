"""Spectra of signed digraphs: characteristic polynomial, eigenvalues, energies.

The numeric pipeline is adjacency matrix -> monic characteristic polynomial
(trace recursion) -> simultaneous root iteration (Aberth-Ehrlich).  Single
signed cycles bypass it: their eigenvalues are the n-th roots of +1 or -1
and are produced analytically.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .graphs import SignedDigraph, adjacency_matrix, strong_components

MAX_DIMENSION = 512  # keeps double-precision trace recursion trustworthy

# A root is accepted when |p(z)| <= RESIDUAL_TOL * (1 + |z|)^degree.
RESIDUAL_TOL = 1e-10


@dataclass(frozen=True)
class Polynomial:
    """Real polynomial; coefficients ascending, coeffs[k] multiplies x^k."""

    coeffs: tuple[float, ...]

    def __post_init__(self) -> None:
        if len(self.coeffs) < 1:
            raise ValueError("a polynomial needs at least one coefficient")
        object.__setattr__(self, "coeffs", tuple(float(c) for c in self.coeffs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, z: complex) -> complex:
        result: complex = 0.0
        for c in reversed(self.coeffs):
            result = result * z + c
        return result


@dataclass(frozen=True)
class ComplexSpectrum:
    """Multiset of complex eigenvalues, one per matrix row."""

    values: tuple[complex, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "values", tuple(complex(z) for z in self.values))


class RootFindingError(RuntimeError):
    """Root iteration did not reach the residual contract; carries diagnostics."""

    def __init__(self, message: str, roots: tuple[complex, ...], residuals: tuple[float, ...], iterations: int):
        super().__init__(message)
        self.roots = roots
        self.residuals = residuals
        self.iterations = iterations


def char_poly(matrix: np.ndarray) -> Polynomial:
    """Monic characteristic polynomial det(xI - A) via trace recursion.

    The Faddeev-LeVerrier recursion needs only matrix products and traces,
    which stay exact for the small-integer matrices produced by signed
    digraphs (coefficient accuracy is far below 1e-9 for n <= 64).
    """
    a = np.asarray(matrix, dtype=np.float64)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"matrix must be square, got shape {a.shape}")
    n = a.shape[0]
    if n > MAX_DIMENSION:
        raise ValueError(f"matrix dimension {n} exceeds supported maximum {MAX_DIMENSION}")
    descending = [1.0]
    m = np.eye(n)
    for k in range(1, n + 1):
        am = a @ m
        ck = -am.trace() / k
        descending.append(ck)
        m = am + ck * np.eye(n)
    return Polynomial(tuple(reversed(descending)))


def _horner(coeffs: np.ndarray, z: np.ndarray) -> np.ndarray:
    result = np.full_like(z, coeffs[-1])
    for c in coeffs[-2::-1]:
        result = result * z + c
    return result


def _aberth(coeffs: np.ndarray, max_iterations: int) -> tuple[np.ndarray, int]:
    """Aberth-Ehrlich iteration for a monic polynomial with nonzero constant term.

    Starts from a deterministic ring of points (radius from the Cauchy
    coefficient bound, fixed angular offset) and iterates until every
    residual |p(z)| reaches the double-precision evaluation noise floor,
    which is the best any polishing can do.
    """
    degree = len(coeffs) - 1
    c = coeffs.astype(np.complex128)
    dc = c[1:] * np.arange(1, degree + 1)
    abs_c = np.abs(c)
    eps = np.finfo(np.float64).eps

    radius = 1.0 + float(np.max(abs_c[:-1]))
    angles = 2.0 * np.pi * np.arange(degree) / degree + 0.4
    z = radius * np.exp(1j * angles)

    iterations = 0
    for iterations in range(1, max_iterations + 1):
        p = _horner(c, z)
        noise_floor = 4.0 * degree * eps * _horner(abs_c, np.abs(z)).real
        active = np.abs(p) > noise_floor
        if not active.any():
            break
        dp = _horner(dc, z)
        dp = np.where(dp == 0, eps, dp)
        w = p / dp
        diff = z[:, None] - z[None, :]
        np.fill_diagonal(diff, np.inf)
        s = (1.0 / diff).sum(axis=1)
        s = np.where(np.isfinite(s), s, 0.0)
        denom = 1.0 - w * s
        denom = np.where(denom == 0, 1.0, denom)
        z = np.where(active, z - w / denom, z)
    return z, iterations


def poly_roots(p: Polynomial, max_iterations: int = 1000) -> ComplexSpectrum:
    """All complex roots of a monic polynomial, with multiplicity.

    Roots at zero are deflated exactly (leading near-zero coefficients);
    the rest come from the Aberth-Ehrlich iteration.  Every returned root
    satisfies |p(z)| <= 1e-10 * (1 + |z|)^degree, otherwise a
    RootFindingError with partial diagnostics is raised.
    """
    if p.degree < 1:
        raise ValueError("polynomial must have degree >= 1")
    coeffs = np.asarray(p.coeffs, dtype=np.float64)
    if abs(coeffs[-1] - 1.0) > 1e-9:
        raise ValueError(f"polynomial must be monic, leading coefficient {coeffs[-1]}")

    scale = float(np.max(np.abs(coeffs)))
    n_zero = 0
    while n_zero < p.degree and abs(coeffs[n_zero]) <= 1e-12 * scale:
        n_zero += 1
    reduced = coeffs[n_zero:]

    iterations = 0
    if len(reduced) == 1:
        nonzero = np.empty(0, dtype=np.complex128)
    elif len(reduced) == 2:
        nonzero = np.array([-reduced[0] / reduced[1]], dtype=np.complex128)
    else:
        nonzero, iterations = _aberth(reduced, max_iterations)

    roots = np.concatenate([np.zeros(n_zero, dtype=np.complex128), nonzero])
    residuals = np.abs(_horner(coeffs.astype(np.complex128), roots))
    bounds = RESIDUAL_TOL * (1.0 + np.abs(roots)) ** p.degree
    if np.any(residuals > bounds):
        worst = int(np.argmax(residuals / bounds))
        raise RootFindingError(
            f"root iteration stalled after {iterations} iterations: "
            f"|p({roots[worst]:.6g})| = {residuals[worst]:.3g} exceeds "
            f"{bounds[worst]:.3g}",
            roots=tuple(roots.tolist()),
            residuals=tuple(residuals.tolist()),
            iterations=iterations,
        )
    return ComplexSpectrum(tuple(roots.tolist()))


def cycle_eigenvalues(length: int, sign: int) -> ComplexSpectrum:
    """Analytic spectrum of a signed cycle: the n-th roots of its sign."""
    if sign == 1:
        angles = (2.0 * math.pi * k / length for k in range(length))
    elif sign == -1:
        angles = ((2.0 * k + 1.0) * math.pi / length for k in range(length))
    else:
        raise ValueError(f"sign must be +1 or -1, got {sign!r}")
    return ComplexSpectrum(tuple(cmath.rect(1.0, a) for a in angles))


def _as_single_cycle(g: SignedDigraph) -> tuple[int, int] | None:
    """(length, sign) if g is exactly one directed cycle, else None."""
    n = g.n_vertices
    if n < 2 or g.n_arcs != n:
        return None
    succ: dict[int, int] = {}
    sign = 1
    for tail, head, s in g.arcs:
        if tail in succ:
            return None
        succ[tail] = head
        sign *= s
    # every vertex has out-degree 1; a single orbit from 0 must cover all n
    seen = {0}
    v = succ.get(0, -1)
    while v not in (-1, 0):
        if v in seen:
            return None
        seen.add(v)
        v = succ.get(v, -1)
    if v != 0 or len(seen) != n:
        return None
    return n, sign


def eigenvalues(g: SignedDigraph, *, use_cycle_fast_path: bool = True) -> ComplexSpectrum:
    """Eigenvalues of the adjacency matrix of g.

    Single signed cycles are answered analytically unless the fast path is
    disabled (useful when the numeric route itself is under test).
    """
    if use_cycle_fast_path:
        cycle = _as_single_cycle(g)
        if cycle is not None:
            return cycle_eigenvalues(*cycle)
    return poly_roots(char_poly(adjacency_matrix(g)))


def _spectrum_values(s: ComplexSpectrum | Iterable[complex]) -> tuple[complex, ...]:
    if isinstance(s, ComplexSpectrum):
        return s.values
    return tuple(complex(z) for z in s)


def energy(s: ComplexSpectrum | Iterable[complex]) -> float:
    """Sum of absolute real parts of the eigenvalues."""
    return math.fsum(abs(z.real) for z in _spectrum_values(s))


def iota_energy(s: ComplexSpectrum | Iterable[complex]) -> float:
    """Sum of absolute imaginary parts of the eigenvalues."""
    return math.fsum(abs(z.imag) for z in _spectrum_values(s))


def iota_energy_of_graph(g: SignedDigraph) -> float:
    """Iota energy of g, summed over its strong components.

    Singleton components contribute nothing; cycle components use the
    analytic spectrum; anything else goes through the numeric pipeline.
    """
    total = 0.0
    for component in strong_components(g):
        if component.n_vertices == 1:
            continue
        total += iota_energy(eigenvalues(component))
    return total
