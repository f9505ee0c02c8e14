"""Independent brute-force oracles used to freeze expected values.

Nothing here shares code with the package paths under test: the
characteristic polynomial comes from exact cofactor expansion over integer
polynomials, component partitions from a reachability matrix, pair families
from a direct double loop.
"""
from __future__ import annotations

import math
from fractions import Fraction


def _poly_mul(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        for j, bj in enumerate(b):
            out[i + j] += ai * bj
    return out


def _poly_add(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    out = [Fraction(0)] * max(len(a), len(b))
    for i, ai in enumerate(a):
        out[i] += ai
    for j, bj in enumerate(b):
        out[j] += bj
    return out


def _det_poly(m: list[list[list[Fraction]]]) -> list[Fraction]:
    """Determinant of a matrix of integer polynomials by first-row cofactors."""
    size = len(m)
    if size == 1:
        return m[0][0]
    total: list[Fraction] = [Fraction(0)]
    for col in range(size):
        entry = m[0][col]
        if all(c == 0 for c in entry):
            continue
        minor = [[row[c] for c in range(size) if c != col] for row in m[1:]]
        term = _poly_mul(entry, _det_poly(minor))
        if col % 2 == 1:
            term = [-c for c in term]
        total = _poly_add(total, term)
    return total


def cofactor_char_poly(matrix) -> list[float]:
    """Coefficients of det(xI - A), ascending, via exact cofactor expansion."""
    size = len(matrix)
    m: list[list[list[Fraction]]] = []
    for i in range(size):
        row = []
        for j in range(size):
            constant = Fraction(-int(matrix[i][j]))
            row.append([constant, Fraction(1)] if i == j else [constant])
        m.append(row)
    coeffs = _det_poly(m)
    coeffs = coeffs + [Fraction(0)] * (size + 1 - len(coeffs))
    return [float(c) for c in coeffs]


def reachability_components(n_vertices: int, arcs) -> list[frozenset[int]]:
    """SCC partition from the boolean reachability closure, sorted by min id."""
    reach = [[i == j for j in range(n_vertices)] for i in range(n_vertices)]
    for tail, head, _sign in arcs:
        reach[tail][head] = True
    for k in range(n_vertices):
        for i in range(n_vertices):
            if reach[i][k]:
                for j in range(n_vertices):
                    if reach[k][j]:
                        reach[i][j] = True
    components = []
    assigned = set()
    for v in range(n_vertices):
        if v in assigned:
            continue
        comp = frozenset(
            w for w in range(n_vertices) if reach[v][w] and reach[w][v]
        )
        assigned |= comp
        components.append(comp)
    return sorted(components, key=min)


def brute_force_sign_pairs(budget_n: int, mixed: bool) -> set[tuple[int, int, int, int]]:
    """All (len1, sign1, len2, sign2) pair keys in canonical order, by direct loop."""
    found = set()
    for l1 in range(2, budget_n + 1, 2):
        for l2 in range(2, budget_n + 1, 2):
            if l1 + l2 > budget_n:
                continue
            sign_combos = [(-1, 1), (1, -1)] if mixed else [(1, 1), (-1, -1)]
            for s1, s2 in sign_combos:
                a, b = sorted([(l1, 0 if s1 == -1 else 1), (l2, 0 if s2 == -1 else 1)])
                found.add((a[0], -1 if a[1] == 0 else 1, b[0], -1 if b[1] == 0 else 1))
    return found


def match_multisets(actual, expected, tol: float) -> float:
    """Greedy nearest matching of two complex multisets; returns worst distance.

    Raises if sizes differ or a match exceeds tol; with well-separated sets
    (spacing >> tol) greedy matching is exact.
    """
    actual = list(actual)
    expected = list(expected)
    assert len(actual) == len(expected), (len(actual), len(expected))
    worst = 0.0
    remaining = list(expected)
    for z in actual:
        best_index = min(range(len(remaining)), key=lambda i: abs(z - remaining[i]))
        distance = abs(z - remaining.pop(best_index))
        worst = max(worst, distance)
        assert distance <= tol, f"no partner within {tol} for {z} (nearest {distance})"
    return worst


def abs_sin_sum_iota(n: int, sign: int) -> float:
    """Iota energy of a signed cycle as an explicit |sin| sum over angles."""
    if sign == 1:
        return math.fsum(abs(math.sin(2.0 * k * math.pi / n)) for k in range(n))
    return math.fsum(abs(math.sin((2.0 * k + 1.0) * math.pi / n)) for k in range(n))


def abs_cos_sum_energy(n: int, sign: int) -> float:
    """Energy of a signed cycle as an explicit |cos| sum over angles."""
    if sign == 1:
        return math.fsum(abs(math.cos(2.0 * k * math.pi / n)) for k in range(n))
    return math.fsum(abs(math.cos((2.0 * k + 1.0) * math.pi / n)) for k in range(n))
